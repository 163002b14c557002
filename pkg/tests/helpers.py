"""Shared generators and brute-force checks for the test suite."""

import random
from itertools import combinations

from gmpy2 import mpq

from properunit.core import Graph, Interval, Representation

DENOMS = (1, 2, 3, 4, 6)


def rand_rational(rng, lo, hi):
    q = rng.choice(DENOMS)
    return mpq(rng.randint(lo * q, hi * q), q)


def random_rep(rng, n):
    """Arbitrary representation with rational endpoints; ties are common."""
    ivs = []
    for _ in range(n):
        left = rand_rational(rng, 0, 3 * n)
        kind = rng.random()
        if kind < 0.1:
            length = mpq(0)
        elif kind < 0.6:
            length = rand_rational(rng, 0, 3)
        else:
            length = rand_rational(rng, 0, 2 * n)
        ivs.append(Interval(left, left + length))
    return Representation(ivs)


def random_nested_clawfree_rep(rng, n):
    """Claw-free representation with nestings.

    Start from a unit representation, then shuffle which vertex owns each
    endpoint inside every maximal run of same-side endpoints.  That keeps
    the left/right interleaving, hence the graph, but creates containment.
    """
    lefts = sorted({rand_rational(rng, 0, max(2, n // 2)) for _ in range(n)})
    while len(lefts) < n:
        lefts.append(lefts[-1] + mpq(1, 7))
    events = []
    for v, x in enumerate(lefts[:n]):
        events.append((x, 0, v))
        events.append((x + 1 + mpq(1, 97), 1, v))
    events.sort()
    if len({e[0] for e in events}) != len(events):
        return Representation((x, x + 1) for x in lefts[:n])
    runs = []
    for ev in events:
        if runs and runs[-1][0][1] == ev[1]:
            runs[-1].append(ev)
        else:
            runs.append([ev])
    left = [None] * n
    right = [None] * n
    for run in runs:
        owners = [v for _, _, v in run]
        rng.shuffle(owners)
        for (value, side, _), v in zip(run, owners):
            (left if side == 0 else right)[v] = value
    perm = list(range(n))
    rng.shuffle(perm)
    return Representation(Interval(left[perm[i]], right[perm[i]]) for i in range(n))


def corpus(size=10_000, seed=20240601, max_n=12):
    """Deterministic mixed corpus of representations (n <= max_n)."""
    rng = random.Random(seed)
    out = []
    for i in range(size):
        n = rng.randint(1, max_n)
        if i % 3 == 0:
            out.append(random_nested_clawfree_rep(rng, n))
        elif i % 3 == 1:
            out.append(random_rep(rng, rng.randint(1, 6)))
        else:
            out.append(random_rep(rng, n))
    return out


def brute_claws(g):
    """Every induced claw as (center, leaves), by checking all quadruples."""
    found = []
    for c in range(g.n):
        others = [v for v in range(g.n) if v != c]
        for leaves in combinations(others, 3):
            if all(g.adjacent(c, x) for x in leaves) and not any(
                g.adjacent(x, y) for x, y in combinations(leaves, 2)
            ):
                found.append((c, leaves))
    return found


def pointwise_intersection_graph(rep):
    """Adjacency by testing shared points: endpoints of either interval."""
    n = len(rep)
    edges = []
    for u, v in combinations(range(n), 2):
        a, b = rep[u], rep[v]
        pts = [a.left, a.right, b.left, b.right]
        if any(a.left <= p <= a.right and b.left <= p <= b.right for p in pts):
            edges.append((u, v))
    return Graph(n, edges)

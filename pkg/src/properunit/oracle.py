"""Brute-force ground truth for small graphs and posets.

Nothing here calls the transformations or the claw finder.  These routines
are exponential on purpose and guarded by caps; the caps default from the
``PROPERUNIT_ORACLE_CAP`` environment variable where one applies.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterator

from .core import Graph, Interval, Rational, Representation, _bits
from .orders import Poset

GRAPH_CAP = 8
UNIT_CAP = 7
POSET_CAP = 6


class CapExceeded(ValueError):
    pass


def default_cap(fallback: int) -> int:
    raw = os.environ.get("PROPERUNIT_ORACLE_CAP")
    return int(raw) if raw else fallback


def _check_cap(n, cap, fallback, what):
    limit = default_cap(fallback) if cap is None else cap
    if n > limit:
        raise CapExceeded(f"{what}: n={n} exceeds cap {limit}")


# -- enumeration ------------------------------------------------------------

def enumerate_graphs(n: int, cap: int | None = None) -> Iterator[Graph]:
    """All ``2**C(n,2)`` labelled graphs on ``n`` vertices, by ascending edge bitmask.

    Bit ``i`` of the mask is the ``i``-th pair of ``combinations(range(n), 2)``.
    """
    _check_cap(n, cap, GRAPH_CAP, "enumerate_graphs")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask, pairs)


def graph_from_mask(n: int, mask: int, pairs=None) -> Graph:
    if pairs is None:
        pairs = list(combinations(range(n), 2))
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    g = Graph.__new__(Graph)
    g.n = n
    g.adj = tuple(adj)
    return g


def enumerate_posets(n: int, cap: int | None = None) -> Iterator[Poset]:
    """All labelled strict partial orders on ``0..n-1``.

    Built by inserting element ``n-1`` into every poset on ``n-1`` elements
    with every admissible (down-set, up-set) pair.
    """
    _check_cap(n, cap, POSET_CAP, "enumerate_posets")
    for down in _poset_downs(n):
        p = Poset.__new__(Poset)
        p._set(n, list(down))
        yield p


def _poset_downs(n):
    if n == 0:
        yield ()
        return
    for down in _poset_downs(n - 1):
        m = n - 1
        up = [0] * m
        for y in range(m):
            for x in _bits(down[y]):
                up[x] |= 1 << y
        for dmask in range(1 << m):
            # dmask must be closed downward
            if any(dmask >> x & 1 and down[x] & ~dmask for x in range(m)):
                continue
            for umask in range(1 << m):
                if umask & dmask:
                    continue
                if any(umask >> y & 1 and up[y] & ~umask for y in range(m)):
                    continue
                # everything below the new element is below everything above it
                if any(umask >> y & 1 and dmask & ~down[y] for y in range(m)):
                    continue
                new_down = [down[y] | (1 << m if umask >> y & 1 else 0) for y in range(m)]
                new_down.append(dmask)
                yield tuple(new_down)


def enumerate_relations_naive(n: int) -> Iterator[Poset]:
    """Filter every relation on ``n`` elements for irreflexivity and transitivity (tiny n)."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    for mask in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((x, z) not in rel for x, y in rel for y2, z in rel if y == y2 and x != z):
            continue
        if any((y, x) in rel for x, y in rel):
            continue
        yield Poset(n, rel)


# -- interval recognition by clique orderings -------------------------------

def maximal_cliques(g: Graph, vertices: int | None = None) -> list[int]:
    """Maximal cliques (as bitmasks) of the subgraph induced on ``vertices``."""
    adj = g.adj
    if vertices is None:
        vertices = (1 << g.n) - 1
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: bin(adj[u] & p).count("1"))
        for v in _bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, vertices, 0)
    return sorted(out)


def _clique_path(cliques):
    """An ordering of connected-component cliques in which every vertex's cliques are consecutive."""
    k = len(cliques)
    order = []
    used = [False] * k

    def place(prev, closed, remaining):
        if len(order) == k:
            return True
        for i in range(k):
            if used[i]:
                continue
            c = cliques[i]
            if c & closed:
                continue
            if prev and not c & prev:
                continue
            rest = remaining & ~(1 << i)
            newly_closed = prev & ~c
            if newly_closed and any(cliques[j] & newly_closed for j in _bits(rest)):
                continue
            used[i] = True
            order.append(c)
            if place(c, closed | newly_closed, rest):
                return True
            order.pop()
            used[i] = False
        return False

    return order if place(0, 0, (1 << k) - 1) else None


def interval_rep_brute(g: Graph, cap: int | None = None) -> Representation | None:
    """Interval representation from a consecutive arrangement of maximal cliques.

    Each vertex gets ``[first clique index, last clique index]``.  Components
    are arranged independently and laid out one after another.
    """
    _check_cap(g.n, cap, GRAPH_CAP, "interval_rep_brute")
    first = [None] * g.n
    last = [None] * g.n
    offset = 0
    for comp in g.components():
        mask = 0
        for v in comp:
            mask |= 1 << v
        order = _clique_path(maximal_cliques(g, mask))
        if order is None:
            return None
        for i, c in enumerate(order, start=offset):
            for v in _bits(c):
                if first[v] is None:
                    first[v] = i
                last[v] = i
        offset += len(order)
    return Representation(Interval(first[v], last[v]) for v in range(g.n))


# -- difference constraints -------------------------------------------------

def solve_difference_constraints(nvars, constraints):
    """Solve ``x[v] - x[u] <= c`` (or ``< c`` when strict) exactly.

    ``constraints`` holds ``(u, v, c, strict)``.  Strictness is carried as a
    symbolic ``-delta`` in lexicographic weights ``(c, -k)``; Bellman-Ford
    finds potentials ``p + q*delta`` and a concrete ``delta > 0`` is chosen
    afterwards.  Returns a list of Rationals or ``None`` when some cycle has
    negative weight, or zero weight through a strict edge.
    """
    edges = [(u, v, (c, -1 if strict else 0)) for u, v, c, strict in constraints]
    dist = [(0, 0)] * nvars
    for _ in range(nvars + 1):
        changed = False
        for u, v, (c, k) in edges:
            du = dist[u]
            cand = (du[0] + c, du[1] + k)
            if cand < dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            break
    else:
        return None

    delta = Rational(1)
    for u, v, (c, k) in edges:
        slack = dist[u][0] + c - dist[v][0]
        coeff = dist[v][1] - dist[u][1] - k
        if coeff > 0:
            delta = min(delta, Rational(slack) / coeff)
    delta /= 2
    x = [p + q * delta for p, q in dist]
    for u, v, c, strict in constraints:
        diff = x[v] - x[u]
        assert diff < c if strict else diff <= c
    return x


def _umbrella_orders(g, comp):
    """Orderings of a connected component that survive the necessary pairwise tests.

    With left ends sorted and unit lengths, ``u`` before ``w`` before ``v``
    and ``u ~ v`` force ``w ~ u`` and ``w ~ v``.  So a prefix may be extended
    by ``v`` only if the placed neighbours of ``v`` are the last few placed
    vertices and pairwise adjacent, and ``v`` is adjacent to every placed
    vertex that still has a neighbour waiting to be placed.
    """
    adj = g.adj
    size = len(comp)
    order = []

    def extend(placed):
        if len(order) == size:
            yield list(order)
            return
        for v in comp:
            bit = 1 << v
            if placed & bit:
                continue
            if order:
                nb = adj[v] & placed
                if not nb >> order[-1] & 1:
                    continue
                waiting = ~placed & ~bit
                if any(adj[u] & waiting and not nb >> u & 1 for u in order):
                    continue
                cnt = bin(nb).count("1")
                tail = order[-cnt:]
                if any(not nb >> t & 1 for t in tail):
                    continue
                if any(adj[t] & nb != nb & ~(1 << t) for t in tail):
                    continue
            # later neighbours of v all start within distance 1 of it
            later = adj[v] & ~placed
            if any(adj[w] & later != later & ~(1 << w) for w in _bits(later)):
                continue
            order.append(v)
            yield from extend(placed | bit)
            order.pop()

    yield from extend(0)


def _unit_constraints(g, order):
    pos = {v: i for i, v in enumerate(order)}
    cons = []
    for i in range(len(order) - 1):
        cons.append((pos[order[i + 1]], pos[order[i]], 0, False))
    for i, j in combinations(range(len(order)), 2):
        u, v = order[i], order[j]
        if g.adjacent(u, v):
            cons.append((i, j, 1, False))
        else:
            cons.append((j, i, -1, True))
    return cons


def unit_rep_feasible(g: Graph, cap: int | None = None) -> Representation | None:
    """Unit representation of ``g`` found by ordering search plus difference constraints.

    For an ordering of left ends ``x_v``: consecutive ends are non-decreasing,
    adjacent pairs differ by at most 1, non-adjacent pairs by more than 1.
    Components are solved separately and placed more than 1 apart.
    """
    _check_cap(g.n, cap, UNIT_CAP, "unit_rep_feasible")
    left = [None] * g.n
    base = Rational(0)
    for comp in g.components():
        for order in _umbrella_orders(g, comp):
            x = solve_difference_constraints(len(order), _unit_constraints(g, order))
            if x is not None:
                break
        else:
            return None
        lo = min(x)
        for v, xv in zip(order, x):
            left[v] = base + xv - lo
        base += max(x) - lo + 2
    return Representation(Interval(l, l + 1) for l in left)


def value_function_feasible(p: Poset) -> tuple[Rational, ...] | None:
    """Values ``f`` with ``x < y`` iff ``f(y) - f(x) > 1``, or ``None``."""
    cons = []
    for x, y in combinations(range(p.n), 2):
        if p.lt(x, y):
            cons.append((y, x, -1, True))
        elif p.lt(y, x):
            cons.append((x, y, -1, True))
        else:
            cons.append((x, y, 1, False))
            cons.append((y, x, 1, False))
    x = solve_difference_constraints(p.n, cons)
    return None if x is None else tuple(x)


# -- interval orders by exhaustive left-end search ---------------------------

def interval_rep_of_poset(p: Poset, cap: int | None = None) -> Representation | None:
    """Interval representation of ``p`` found by exhaustive search, or ``None``.

    Only the relative order of left ends matters, so they range over
    ``0..n-1``.  For fixed left ends each right end is forced into a window:
    at least its own left end and every left end it must meet, and below
    every left end of its successors.
    """
    _check_cap(p.n, cap, POSET_CAP, "interval_rep_of_poset")
    n = p.n
    left = [0] * n

    def rights():
        out = []
        for x in range(n):
            lo = left[x]
            hi = None
            for y in range(n):
                if y == x:
                    continue
                if p.lt(x, y):
                    hi = left[y] if hi is None else min(hi, left[y])
                else:
                    lo = max(lo, left[y])
            if hi is not None and lo >= hi:
                return None
            out.append(lo)
        return out

    def assign(i):
        if i == n:
            return rights()
        for value in range(n):
            # x < y needs left[x] < left[y]
            if any(p.lt(j, i) and left[j] >= value or p.lt(i, j) and value >= left[j] for j in range(i)):
                continue
            left[i] = value
            found = assign(i + 1)
            if found is not None:
                return found
        return None

    right = assign(0)
    if right is None:
        return None
    return Representation(Interval(l, r) for l, r in zip(left, right))

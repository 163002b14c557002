"""Exact interval representations, their intersection graphs, and claw detection.

Every endpoint is a :data:`Rational` (``gmpy2.mpq``: arbitrary precision,
always in lowest terms).  Floats are rejected at the boundary so that unit
length can be tested with ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Sequence

from gmpy2 import mpq

Rational = mpq


def as_rational(value) -> Rational:
    """Coerce ``value`` to an exact :data:`Rational`.

    Integers, ``fractions.Fraction`` and strings such as ``"3/4"`` are
    accepted.  Floats are refused: a float endpoint has already lost
    exactness.
    """
    if type(value) is mpq:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not endpoints")
    if isinstance(value, (int, _RationalABC, str)):
        return mpq(value)
    raise TypeError(f"endpoint must be an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[left, right]``; zero length allowed."""

    left: Rational
    right: Rational

    def __post_init__(self):
        left = as_rational(self.left)
        right = as_rational(self.right)
        if left > right:
            raise ValueError(f"interval [{left}, {right}] has left > right")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def length(self) -> Rational:
        return self.right - self.left

    def intersects(self, other: "Interval") -> bool:
        return max(self.left, other.left) <= min(self.right, other.right)

    def properly_contains(self, other: "Interval") -> bool:
        sl, sr, ol, orr = self.left, self.right, other.left, other.right
        return sl <= ol and orr <= sr and (sl != ol or sr != orr)

    def __iter__(self):
        yield self.left
        yield self.right

    def __str__(self):
        return f"[{self.left}, {self.right}]"


class Representation(Sequence):
    """Assignment of one :class:`Interval` to each vertex ``0..n-1``."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable = ()):
        ivs = []
        for iv in intervals:
            if not isinstance(iv, Interval):
                iv = Interval(*iv)
            ivs.append(iv)
        self.intervals = tuple(ivs)

    @classmethod
    def from_pairs(cls, pairs) -> "Representation":
        return cls(Interval(l, r) for l, r in pairs)

    def __len__(self):
        return len(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __eq__(self, other):
        if isinstance(other, Representation):
            return self.intervals == other.intervals
        return NotImplemented

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        body = ", ".join(str(iv) for iv in self.intervals)
        return f"Representation({{{body}}})"

    def pairs(self) -> list[tuple[Rational, Rational]]:
        return [(iv.left, iv.right) for iv in self.intervals]

    def endpoints(self) -> list[Rational]:
        out = []
        for iv in self.intervals:
            out.append(iv.left)
            out.append(iv.right)
        return out

    def in_general_position(self) -> bool:
        """True when all ``2n`` endpoint values are pairwise distinct."""
        pts = self.endpoints()
        return len(set(pts)) == len(pts)

    def replace(self, vertex: int, interval: Interval) -> "Representation":
        ivs = list(self.intervals)
        ivs[vertex] = interval
        return Representation(ivs)


class Graph:
    """Finite simple undirected graph on ``0..n-1``.

    Adjacency is stored as one bitmask per vertex; ``adj[v] >> u & 1`` is the
    edge test.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        for v, mask in enumerate(g.adj):
            if mask >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if mask >> g.n:
                raise ValueError(f"neighbour of {v} out of range")
            for u in _bits(mask):
                if not g.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """``K_{1,leaves}`` with centre 0."""
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_adjacency([full & ~m & ~(1 << v) for v, m in enumerate(self.adj)])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            ((index[u], index[v]) for u, v in combinations(vertices, 2) if self.adjacent(u, v)),
        )

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits_slow(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_BITS_TABLE = [_bits_slow(m) for m in range(1 << 10)]


def _bits(mask: int) -> tuple[int, ...]:
    """Set bit positions of ``mask`` in ascending order."""
    if mask < 1024:
        return _BITS_TABLE[mask]
    return _bits_slow(mask)


@dataclass(frozen=True)
class ClawWitness:
    """Induced ``K_{1,3}``: ``center`` adjacent to three pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, int, int]

    def __post_init__(self):
        leaves = tuple(sorted(self.leaves))
        if len(leaves) != 3 or len(set(leaves)) != 3:
            raise ValueError("a claw has exactly three distinct leaves")
        if self.center in leaves:
            raise ValueError("the centre cannot be a leaf")
        object.__setattr__(self, "leaves", leaves)

    def verify(self, g: Graph) -> bool:
        c = self.center
        if not all(g.adjacent(c, leaf) for leaf in self.leaves):
            return False
        return not any(g.adjacent(u, v) for u, v in combinations(self.leaves, 2))

    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    def __str__(self):
        return f"center {self.center} leaves {' '.join(map(str, self.leaves))}"


def intersection_graph(rep: Representation) -> Graph:
    """Graph with ``u ~ v`` iff the closed intervals of ``u`` and ``v`` share a point."""
    ivs = rep.intervals
    n = len(ivs)
    adj = [0] * n
    for u in range(n):
        lu, ru = ivs[u].left, ivs[u].right
        for v in range(u + 1, n):
            iv = ivs[v]
            if iv.left <= ru and lu <= iv.right:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    g = Graph.__new__(Graph)
    g.n = n
    g.adj = tuple(adj)
    return g


def is_proper(rep: Representation) -> bool:
    """No interval properly contains another; equal intervals are allowed."""
    ivs = rep.intervals
    for u, v in combinations(range(len(ivs)), 2):
        if ivs[u].properly_contains(ivs[v]) or ivs[v].properly_contains(ivs[u]):
            return False
    return True


def is_unit(rep: Representation) -> bool:
    return all(iv.right - iv.left == 1 for iv in rep.intervals)


def find_claw(g: Graph) -> ClawWitness | None:
    """Lexicographically least induced claw ``(center, sorted leaves)``, or None."""
    adj = g.adj
    for c in range(g.n):
        nbrs = list(_bits(adj[c]))
        if len(nbrs) < 3:
            continue
        for i, x in enumerate(nbrs):
            rest = nbrs[i + 1:]
            ax = adj[x]
            for j, y in enumerate(rest):
                if ax >> y & 1:
                    continue
                free = adj[x] | adj[y]
                for z in rest[j + 1:]:
                    if not free >> z & 1:
                        return ClawWitness(c, (x, y, z))
    return None


def canonicalize(rep: Representation) -> Representation:
    """Relabel endpoints to ``0..2n-1`` without changing the intersection graph.

    Ties are broken left-before-right (touching intervals keep touching),
    then by vertex id.  The result is in general position.
    """
    events = []
    for v, iv in enumerate(rep.intervals):
        events.append((iv.left, 0, v))
        events.append((iv.right, 1, v))
    events.sort()
    left = [0] * len(rep)
    right = [0] * len(rep)
    for rank, (_, side, v) in enumerate(events):
        if side == 0:
            left[v] = rank
        else:
            right[v] = rank
    out = Representation(Interval(mpq(l), mpq(r)) for l, r in zip(left, right))
    assert intersection_graph(out) == intersection_graph(rep)
    return out

"""Interval orders and semiorders, via the graph-side construction.

A semiorder is certified by a value function ``f`` with ``x < y`` iff
``f(y) - f(x) > 1``; the failures are certified by an induced ``2+2`` (not an
interval order) or an induced ``1+3`` (interval order, not a semiorder).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import Graph, Interval, Rational, Representation, intersection_graph, _bits
from .transform import ClawObstruction, Obstruction, to_unit


class CycleError(ValueError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        path = " < ".join(map(str, self.cycle + self.cycle[:1]))
        super().__init__(f"relation has a cycle: {path}")


class Poset:
    """Strict partial order on ``0..n-1``.

    ``down[x]`` is the bitmask of elements below ``x``; ``up[x]`` of those above.
    """

    __slots__ = ("n", "down", "up")

    def __init__(self, n: int, less: Iterable[tuple[int, int]] = ()):
        down = [0] * n
        for x, y in less:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair ({x}, {y}) out of range for n={n}")
            if x == y:
                raise ValueError(f"relation is not irreflexive at {x}")
            down[y] |= 1 << x
        for y in range(n):
            for x in _bits(down[y]):
                if down[x] & ~down[y]:
                    z = _bits(down[x] & ~down[y])[0]
                    raise ValueError(f"relation is not transitive: {z} < {x} < {y}")
        self._set(n, down)

    def _set(self, n, down):
        up = [0] * n
        for y in range(n):
            for x in _bits(down[y]):
                up[x] |= 1 << y
        self.n = n
        self.down = tuple(down)
        self.up = tuple(up)

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Transitive closure of ``pairs``; raises :class:`CycleError` on a cycle."""
        succ = [set() for _ in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair ({x}, {y}) out of range for n={n}")
            succ[x].add(y)
        state = [0] * n
        stack_path = []

        def visit(v):
            state[v] = 1
            stack_path.append(v)
            for w in sorted(succ[v]):
                if state[w] == 1:
                    raise CycleError(stack_path[stack_path.index(w):])
                if state[w] == 0:
                    visit(w)
            stack_path.pop()
            state[v] = 2

        for v in range(n):
            if state[v] == 0:
                visit(v)

        below = [0] * n
        for x in range(n):
            seen = 0
            todo = list(succ[x])
            while todo:
                y = todo.pop()
                if seen >> y & 1:
                    continue
                seen |= 1 << y
                todo.extend(succ[y])
            for y in _bits(seen):
                below[y] |= 1 << x
        p = cls.__new__(cls)
        p._set(n, below)
        return p

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(n, ((i, j) for i, j in combinations(range(n), 2)))

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n)

    @classmethod
    def one_plus_three(cls) -> "Poset":
        return cls(4, [(0, 1), (1, 2), (0, 2)])

    @classmethod
    def two_plus_two(cls) -> "Poset":
        return cls(4, [(0, 1), (2, 3)])

    def lt(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.lt(x, y) or self.lt(y, x)

    def incomparable(self, x: int, y: int) -> bool:
        return not self.comparable(x, y)

    def relations(self) -> list[tuple[int, int]]:
        return [(x, y) for y in range(self.n) for x in _bits(self.down[y])]

    def is_linear(self) -> bool:
        return all(self.comparable(x, y) for x, y in combinations(range(self.n), 2))

    def __eq__(self, other):
        if isinstance(other, Poset):
            return self.n == other.n and self.down == other.down
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.down))

    def __repr__(self):
        return f"Poset(n={self.n}, less={sorted(self.relations())})"


@dataclass(frozen=True)
class OnePlusThreeWitness:
    chain: tuple[int, int, int]
    isolated: int

    def verify(self, p: Poset) -> bool:
        a, b, c = self.chain
        return (
            p.lt(a, b)
            and p.lt(b, c)
            and all(p.incomparable(self.isolated, z) for z in self.chain)
        )

    def __str__(self):
        a, b, c = self.chain
        return f"chain {a} < {b} < {c}, isolated {self.isolated}"


@dataclass(frozen=True)
class TwoPlusTwoWitness:
    first: tuple[int, int]
    second: tuple[int, int]

    def verify(self, p: Poset) -> bool:
        (x, y), (z, w) = self.first, self.second
        return (
            p.lt(x, y)
            and p.lt(z, w)
            and all(p.incomparable(u, v) for u in (x, y) for v in (z, w))
        )

    def __str__(self):
        (x, y), (z, w) = self.first, self.second
        return f"{x} < {y} and {z} < {w}, otherwise incomparable"


@dataclass(frozen=True)
class ValueFunction:
    values: tuple[Rational, ...]

    def __getitem__(self, x):
        return self.values[x]

    def verify(self, p: Poset) -> bool:
        """Check ``x < y  <=>  f(y) - f(x) > 1`` over all ordered pairs."""
        f = self.values
        if len(f) != p.n:
            return False
        return all(
            p.lt(x, y) == (f[y] - f[x] > 1)
            for x in range(p.n)
            for y in range(p.n)
            if x != y
        )

    def __str__(self):
        return ", ".join(str(v) for v in self.values)


class NotIntervalOrder(Obstruction):
    def __init__(self, witness: TwoPlusTwoWitness):
        super().__init__(witness, f"not an interval order; 2+2 witness: {witness}")


class NotSemiorder(Obstruction):
    def __init__(self, witness: OnePlusThreeWitness):
        super().__init__(witness, f"not a semiorder; 1+3 witness: {witness}")


def interval_order_of(rep: Representation) -> Poset:
    """``x < y`` iff the interval of ``x`` ends strictly before that of ``y`` starts."""
    ivs = rep.intervals
    n = len(ivs)
    down = [0] * n
    for x in range(n):
        rx = ivs[x].right
        for y in range(n):
            if rx < ivs[y].left:
                down[y] |= 1 << x
    p = Poset.__new__(Poset)
    p._set(n, down)
    return p


def incomparability_graph(p: Poset) -> Graph:
    full = (1 << p.n) - 1
    return Graph.from_adjacency(
        [full & ~(p.down[v] | p.up[v] | 1 << v) for v in range(p.n)]
    )


def find_one_plus_three(p: Poset) -> OnePlusThreeWitness | None:
    """Lexicographically least ``(a, b, c, d)`` with ``a<b<c`` and ``d`` incomparable to all three."""
    full = (1 << p.n) - 1
    for a in range(p.n):
        for b in _bits(p.up[a]):
            for c in _bits(p.up[b]):
                comp = 0
                for z in (a, b, c):
                    comp |= p.down[z] | p.up[z] | 1 << z
                free = full & ~comp
                if free:
                    d = _bits(free)[0]
                    return OnePlusThreeWitness((a, b, c), d)
    return None


def find_two_plus_two(p: Poset) -> TwoPlusTwoWitness | None:
    for x in range(p.n):
        for y in _bits(p.up[x]):
            for z in range(p.n):
                if not (p.incomparable(x, z) and p.incomparable(y, z)):
                    continue
                for w in _bits(p.up[z]):
                    if p.incomparable(x, w) and p.incomparable(y, w):
                        return TwoPlusTwoWitness((x, y), (z, w))
    return None


def check_semiorder_axioms(p: Poset) -> bool:
    """No induced ``2+2`` and no induced ``1+3``."""
    return find_two_plus_two(p) is None and find_one_plus_three(p) is None


def interval_representation(p: Poset) -> Representation:
    """Interval representation of an interval order from its chain of down-sets.

    In an interval order the strict down-sets are totally ordered by
    inclusion.  With ``D_0 < ... < D_k`` the distinct down-sets, ``x`` gets
    ``[2*i, 2*m - 1]`` where ``D_i`` is its own down-set and ``D_m`` the
    first one containing ``x`` (``m = k + 1`` if none does).

    Raises :class:`NotIntervalOrder` if two down-sets are incomparable.
    """
    downs = sorted(set(p.down), key=lambda m: (bin(m).count("1"), m))
    for lo, hi in zip(downs, downs[1:]):
        if lo & ~hi:
            witness = find_two_plus_two(p)
            assert witness is not None
            raise NotIntervalOrder(witness)
    index = {m: i for i, m in enumerate(downs)}
    k = len(downs) - 1
    ivs = []
    for x in range(p.n):
        first = next((i for i, m in enumerate(downs) if m >> x & 1), k + 1)
        ivs.append(Interval(2 * index[p.down[x]], 2 * first - 1))
    rep = Representation(ivs)
    assert interval_order_of(rep) == p
    return rep


def _claw_to_one_plus_three(p: Poset, claw) -> OnePlusThreeWitness:
    a, b, c = sorted(claw.leaves, key=lambda v: bin(p.down[v]).count("1"))
    witness = OnePlusThreeWitness((a, b, c), claw.center)
    assert witness.verify(p)
    return witness


def unit_representation(p: Poset) -> Representation:
    """Unit interval representation whose interval order is exactly ``p``.

    Raises :class:`NotIntervalOrder` or :class:`NotSemiorder`.
    """
    rep = interval_representation(p)
    g = incomparability_graph(p)
    assert intersection_graph(rep) == g
    try:
        unit = to_unit(g, rep)
    except ClawObstruction as exc:
        # leaves of a claw in the incomparability graph are pairwise comparable
        raise NotSemiorder(_claw_to_one_plus_three(p, exc.witness)) from None
    assert interval_order_of(unit) == p
    return unit


def semiorder_values(p: Poset) -> ValueFunction:
    """Value function of ``p``: the left endpoints of a unit representation."""
    unit = unit_representation(p)
    f = ValueFunction(tuple(iv.left for iv in unit))
    assert f.verify(p)
    return f


class OrderClass(enum.Enum):
    LINEAR_ORDER = "linear order"
    SEMIORDER = "semiorder"
    INTERVAL_ORDER = "interval order"
    POSET = "poset"


@dataclass(frozen=True)
class Classification:
    """Finest class of a poset together with its certificates.

    Semiorders (and linear orders) carry ``values`` and a unit
    ``representation``; interval orders carry ``representation`` and
    ``one_plus_three``; the rest carry ``two_plus_two``.
    """

    label: OrderClass
    values: ValueFunction | None = None
    representation: Representation | None = None
    one_plus_three: OnePlusThreeWitness | None = None
    two_plus_two: TwoPlusTwoWitness | None = None

    @property
    def is_semiorder(self) -> bool:
        return self.label in (OrderClass.LINEAR_ORDER, OrderClass.SEMIORDER)

    @property
    def is_interval_order(self) -> bool:
        return self.label is not OrderClass.POSET

    def verify(self, p: Poset) -> bool:
        if self.is_semiorder:
            ok = self.values.verify(p) and interval_order_of(self.representation) == p
            return ok and (self.label is not OrderClass.LINEAR_ORDER or p.is_linear())
        if self.label is OrderClass.INTERVAL_ORDER:
            return self.one_plus_three.verify(p) and interval_order_of(self.representation) == p
        return self.two_plus_two.verify(p)


def classify(p: Poset) -> Classification:
    try:
        rep = interval_representation(p)
    except NotIntervalOrder as exc:
        return Classification(OrderClass.POSET, two_plus_two=exc.witness)
    try:
        unit = unit_representation(p)
    except NotSemiorder as exc:
        return Classification(OrderClass.INTERVAL_ORDER, representation=rep, one_plus_three=exc.witness)
    values = ValueFunction(tuple(iv.left for iv in unit))
    label = OrderClass.LINEAR_ORDER if p.is_linear() else OrderClass.SEMIORDER
    return Classification(label, values=values, representation=unit)

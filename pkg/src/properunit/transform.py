"""Interval representation -> proper representation -> unit representation.

``properize`` removes nestings one at a time by stretching the inner interval
past an end of the outer one; it gives up with a claw certificate exactly
when neither end can be crossed.  ``unitize`` sweeps a proper representation
left to right and rescales each interval to length one with a piecewise
affine map of the whole line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import (
    ClawWitness,
    Graph,
    Interval,
    Rational,
    Representation,
    canonicalize,
    intersection_graph,
    is_proper,
    is_unit,
)

LEFT = "left"
RIGHT = "right"


class Obstruction(Exception):
    """A mathematical obstruction; ``witness`` is the certificate."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or str(witness))


class ClawObstruction(Obstruction):
    """The graph has an induced ``K_{1,3}``, so no proper/unit representation exists."""

    def __init__(self, witness: ClawWitness):
        super().__init__(witness, f"induced claw: {witness}")


class NotProperError(ValueError):
    pass


@dataclass(frozen=True)
class ProperizeStep:
    vertex: int
    container: int
    direction: str
    old: Interval
    new: Interval

    def __str__(self):
        return (
            f"extend {self.vertex} {self.direction} past {self.container}: "
            f"{self.old} -> {self.new}"
        )


@dataclass(frozen=True)
class ProperizeTrace:
    initial: Representation
    final: Representation
    steps: tuple[ProperizeStep, ...] = ()

    def representations(self) -> Iterator[Representation]:
        """Replay: the working representation before the first step and after each one."""
        cur = self.initial
        yield cur
        for step in self.steps:
            cur = cur.replace(step.vertex, step.new)
            yield cur


@dataclass(frozen=True)
class SweepState:
    """One pivot of the unit sweep.

    ``adjusted`` lists the vertices already at length one when the pivot
    ``[a, b]`` was chosen; ``alpha`` is the fixed point of the rescaling.
    """

    adjusted: tuple[int, ...]
    pivot: int
    a: Rational
    b: Rational
    alpha: Rational
    result: Representation = field(compare=False)

    def __str__(self):
        return (
            f"pivot {self.pivot} [{self.a}, {self.b}] alpha={self.alpha} "
            f"adjusted={list(self.adjusted)}"
        )


def containment_pairs(rep: Representation) -> list[tuple[int, int]]:
    """Ordered pairs ``(x, y)`` with interval ``y`` properly inside interval ``x``."""
    ivs = rep.intervals
    n = len(ivs)
    return [
        (x, y)
        for x in range(n)
        for y in range(n)
        if x != y and ivs[x].properly_contains(ivs[y])
    ]


def _nearest_below(points, value):
    below = [p for p in points if p < value]
    return max(below) if below else None


def _nearest_above(points, value):
    above = [p for p in points if p > value]
    return min(above) if above else None


def _blockers(ivs, x, y):
    """Intervals disjoint from ``y`` with an endpoint in the left / right span of ``x``.

    Assumes general position and ``y`` strictly inside ``x``.
    """
    a, b = ivs[x].left, ivs[x].right
    c, d = ivs[y].left, ivs[y].right
    left, right = [], []
    for z, iv in enumerate(ivs):
        if iv.right < c and iv.right >= a:
            left.append(z)
        elif iv.left > d and iv.left <= b:
            right.append(z)
    return left, right


def _properize_step(ivs):
    """Pick and perform one extension; returns ``None`` when already proper.

    The outer interval is the least ``x`` that contains something.  Among
    the intervals nested in ``x`` whose left span is free, the one with the
    smallest left end is pushed out to the left (symmetrically on the right
    when no left span is free).  That choice cannot create a new nesting,
    so the number of nested pairs drops by at least one per step.
    """
    n = len(ivs)
    for x in range(n):
        ix = ivs[x]
        inner = [y for y in range(n) if y != x and ix.properly_contains(ivs[y])]
        if inner:
            break
    else:
        return None

    left_free, right_free = [], []
    for y in inner:
        lb, rb = _blockers(ivs, x, y)
        if lb and rb:
            raise ClawObstruction(ClawWitness(x, (min(lb), y, min(rb))))
        (right_free if lb else left_free).append(y)

    points = [p for iv in ivs for p in (iv.left, iv.right)]
    if left_free:
        y = min(left_free, key=lambda v: ivs[v].left)
        a = ix.left
        nxt = _nearest_below(points, a)
        new_left = a - 1 if nxt is None else (a + nxt) / 2
        new = Interval(new_left, ivs[y].right)
        return ProperizeStep(y, x, LEFT, ivs[y], new)
    y = max(right_free, key=lambda v: ivs[v].right)
    b = ix.right
    nxt = _nearest_above(points, b)
    new_right = b + 1 if nxt is None else (b + nxt) / 2
    new = Interval(ivs[y].left, new_right)
    return ProperizeStep(y, x, RIGHT, ivs[y], new)


def properize(rep: Representation, check: bool = False) -> tuple[Representation, ProperizeTrace]:
    """Turn a representation of a claw-free graph into a proper one.

    An input that is already proper comes back unchanged with an empty
    trace.  Otherwise the input is first canonicalized (distinct integer
    endpoints) and the returned representation lives in those coordinates.

    Raises :class:`ClawObstruction` when both ends of some nesting are
    blocked; the three blockers are pairwise disjoint and all meet the
    outer interval.

    With ``check=True`` the intersection graph is re-extracted after every
    step and compared with the original.
    """
    if is_proper(rep):
        return rep, ProperizeTrace(rep, rep, ())

    work = canonicalize(rep)
    initial = work
    graph = intersection_graph(work) if check else None
    ivs = list(work.intervals)
    steps = []
    pairs = len(containment_pairs(work)) if check else None
    while True:
        step = _properize_step(ivs)
        if step is None:
            break
        ivs[step.vertex] = step.new
        steps.append(step)
        if check:
            cur = Representation(ivs)
            if intersection_graph(cur) != graph:
                raise AssertionError(f"step changed the graph: {step}")
            now = len(containment_pairs(cur))
            if now >= pairs:
                raise AssertionError(f"nesting count did not drop at {step}")
            pairs = now
    final = Representation(ivs)
    return final, ProperizeTrace(initial, final, tuple(steps))


def unitize_steps(rep: Representation) -> Iterator[SweepState]:
    """Yield one :class:`SweepState` per pivot of the unit sweep.

    Inputs with repeated endpoint values are canonicalized first; the
    rescaling maps below need every pivot to have ``alpha < b``.
    """
    if not is_proper(rep):
        raise NotProperError("unitize needs a proper representation; run properize first")
    if not rep.in_general_position():
        rep = canonicalize(rep)
    n = len(rep)
    left = [iv.left for iv in rep.intervals]
    right = [iv.right for iv in rep.intervals]
    done = [False] * n
    adjusted = []
    for _ in range(n):
        x = min((v for v in range(n) if not done[v]), key=lambda v: (left[v], v))
        a, b = left[x], right[x]
        inside = [right[z] for z in range(n) if z != x and a <= right[z] <= b]
        alpha = max(inside) if inside else a
        if not (alpha < a + 1 and alpha < b):
            raise AssertionError(f"alpha={alpha} not below min(a+1, b) for pivot [{a}, {b}]")

        scale = (a + 1 - alpha) / (b - alpha)
        shift = a + 1 - b

        def move(p):
            if p < alpha:
                return p
            if p <= b:
                return alpha + (p - alpha) * scale
            return p + shift

        left = [move(p) for p in left]
        right = [move(p) for p in right]
        done[x] = True
        state_adjusted = tuple(adjusted)
        adjusted.append(x)
        result = Representation(Interval(l, r) for l, r in zip(left, right))
        yield SweepState(state_adjusted, x, a, b, alpha, result)


def unitize(rep: Representation) -> Representation:
    """Unit representation with the same intersection graph as the proper ``rep``."""
    result = rep
    for state in unitize_steps(rep):
        result = state.result
    return result


def to_unit(g: Graph, rep: Representation) -> Representation:
    """Unit representation of ``g`` built from an arbitrary representation of it.

    Raises :class:`ClawObstruction` when ``g`` contains an induced claw.
    """
    if intersection_graph(rep) != g:
        raise ValueError("representation does not realise the given graph")
    proper, _ = properize(rep)
    unit = unitize(proper)
    assert is_unit(unit)
    return unit

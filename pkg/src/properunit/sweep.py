"""Exhaustive cross-validation of the transformations against the oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import oracle
from .core import find_claw, intersection_graph, is_unit
from .orders import (
    check_semiorder_axioms,
    classify,
    find_one_plus_three,
    find_two_plus_two,
)
from .transform import ClawObstruction, properize, unitize


@dataclass
class GraphRecord:
    """Verdicts for one labelled graph.

    ``unit_oracle``: difference-constraint search found a unit representation.
    ``interval``: clique-ordering search found an interval representation.
    ``claw_free``: no induced claw.  ``transform``: ``"unit"`` when the
    pipeline produced a verified unit representation, ``"claw"`` when it
    returned a verified claw, ``"-"`` for non-interval graphs, ``"bad"`` when
    its output failed verification.
    """

    n: int
    mask: int
    unit_oracle: bool
    interval: bool
    claw_free: bool
    transform: str

    @property
    def agree(self) -> bool:
        a = self.unit_oracle
        b = self.interval and self.claw_free
        c = self.interval and self.transform == "unit"
        if self.transform == "bad":
            return False
        if self.interval and not self.claw_free and self.transform != "claw":
            return False
        return a == b == c

    def line(self) -> str:
        return (
            f"graph n={self.n} id={self.mask} unit_oracle={int(self.unit_oracle)} "
            f"interval={int(self.interval)} claw_free={int(self.claw_free)} "
            f"transform={self.transform} agree={int(self.agree)}"
        )


def check_graph(g, mask=-1) -> GraphRecord:
    unit_rep = oracle.unit_rep_feasible(g, cap=g.n)
    if unit_rep is not None:
        assert is_unit(unit_rep) and intersection_graph(unit_rep) == g
    rep = oracle.interval_rep_brute(g, cap=g.n)
    claw = find_claw(g)
    if rep is None:
        transform = "-"
    else:
        assert intersection_graph(rep) == g
        try:
            proper, _ = properize(rep)
        except ClawObstruction as exc:
            transform = "claw" if exc.witness.verify(g) else "bad"
        else:
            unit = unitize(proper)
            ok = is_unit(unit) and intersection_graph(unit) == g
            transform = "unit" if ok else "bad"
    return GraphRecord(g.n, mask, unit_rep is not None, rep is not None, claw is None, transform)


def sweep_graphs(n: int, cap: int | None = None):
    """Yield a :class:`GraphRecord` for every labelled graph on ``n`` vertices."""
    limit = oracle.default_cap(oracle.UNIT_CAP) if cap is None else cap
    if n > limit:
        raise oracle.CapExceeded(f"sweep: n={n} exceeds cap {limit}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield check_graph(oracle.graph_from_mask(n, mask, pairs), mask)


@dataclass
class PosetRecord:
    n: int
    index: int
    classified: str
    semiorder: bool
    axioms: bool
    brute: bool
    values: bool
    certificate_ok: bool

    @property
    def agree(self) -> bool:
        return self.certificate_ok and self.semiorder == self.axioms == self.brute == self.values

    def line(self) -> str:
        return (
            f"poset n={self.n} id={self.index} class={self.classified.replace(' ', '_')} "
            f"axioms={int(self.axioms)} brute={int(self.brute)} values={int(self.values)} "
            f"certificate={int(self.certificate_ok)} agree={int(self.agree)}"
        )


def check_poset(p, index=-1) -> PosetRecord:
    c = classify(p)
    brute_rep = oracle.interval_rep_of_poset(p, cap=p.n)
    brute = brute_rep is not None and find_one_plus_three(p) is None
    values = oracle.value_function_feasible(p) is not None
    ok = c.verify(p) and (brute_rep is None) == (find_two_plus_two(p) is not None)
    ok = ok and c.is_interval_order == (brute_rep is not None)
    return PosetRecord(
        p.n, index, c.label.value, c.is_semiorder, check_semiorder_axioms(p), brute, values, ok
    )


def sweep_posets(n: int, cap: int | None = None):
    for i, p in enumerate(oracle.enumerate_posets(n, cap=cap)):
        yield check_poset(p, i)

"""Acceptance criteria, one recorded PASS/FAIL line each.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines as
they happen; they are also repeated in the terminal summary.
"""

import io
from collections import Counter
from itertools import combinations

import pytest
from gmpy2 import mpq

from helpers import corpus
from properunit import cli, oracle
from properunit.core import Representation, find_claw, intersection_graph, is_unit
from properunit.formats import format_representation, parse_representation
from properunit.orders import (
    check_semiorder_axioms,
    classify,
    find_one_plus_three,
    incomparability_graph,
    interval_order_of,
)
from properunit.transform import ClawObstruction, properize, to_unit, unitize, unitize_steps

SWEEP_MAX_N = 7
POSET_MAX_N = 5


def _sweep_one(g, tally):
    unit_oracle = oracle.unit_rep_feasible(g, cap=g.n) is not None
    rep = oracle.interval_rep_brute(g, cap=g.n)
    claw = find_claw(g)
    a = unit_oracle
    b = rep is not None and claw is None
    c = False
    if rep is not None:
        try:
            unit = to_unit(g, rep)
        except ClawObstruction as exc:
            tally["claw"] += 1
            if not exc.witness.verify(g):
                tally["bad_witness"] += 1
        else:
            c = True
            tally["unit"] += 1
            if not (is_unit(unit) and intersection_graph(unit) == g):
                tally["unsound"] += 1
        if claw is not None and c:
            tally["claw_missed"] += 1
    if not a == b == c:
        tally["disagree"] += 1
    tally["graphs"] += 1
    tally["with_claw"] += claw is not None


@pytest.fixture(scope="module")
def graph_sweep():
    tally = Counter()
    for n in range(SWEEP_MAX_N + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            _sweep_one(oracle.graph_from_mask(n, mask, pairs), tally)
    return tally


@pytest.fixture(scope="module")
def rep_corpus():
    return corpus()


@pytest.mark.slow
def test_criterion_1_equivalence_exhaustive(graph_sweep, criterion):
    t = graph_sweep
    expected = sum(1 << (n * (n - 1) // 2) for n in range(SWEEP_MAX_N + 1))
    ok = t["graphs"] == expected and t["disagree"] == 0
    criterion(1, ok, f"{t['graphs']} labelled graphs n<={SWEEP_MAX_N}, {t['disagree']} disagreements")
    assert ok


@pytest.mark.slow
def test_criterion_2_constructive_soundness(graph_sweep, criterion):
    t = graph_sweep
    ok = t["unit"] > 0 and t["unsound"] == 0
    criterion(2, ok, f"{t['unit']} unit outputs checked exactly, {t['unsound']} failures")
    assert ok


def _conservation_violations(rep):
    """Count step-level violations for one representation; claws are verified too."""
    g = intersection_graph(rep)
    bad = 0
    steps = 0
    try:
        proper, trace = properize(rep)
    except ClawObstruction as exc:
        return (0 if exc.witness.verify(g) else 1), 0, True
    for cur in trace.representations():
        steps += 1
        bad += intersection_graph(cur) != g
    bad += trace.final != proper
    done = set()
    for state in unitize_steps(proper):
        steps += 1
        bad += intersection_graph(state.result) != g
        bad += not (state.alpha < state.a + 1 and state.alpha < state.b)
        done.add(state.pivot)
        bad += any(state.result[v].length != 1 for v in done)
    bad += not is_unit(unitize(proper))
    return bad, steps, False


def test_criterion_3_step_conservation(rep_corpus, criterion):
    violations = steps = claws = 0
    for rep in rep_corpus:
        bad, k, claw = _conservation_violations(rep)
        violations += bad
        steps += k
        claws += claw
    ok = len(rep_corpus) >= 10_000 and violations == 0
    criterion(
        3,
        ok,
        f"{len(rep_corpus)} representations, {steps} steps checked "
        f"({claws} stopped at a verified claw), {violations} violations",
    )
    assert ok


@pytest.mark.slow
def test_criterion_4_claw_necessity(graph_sweep, criterion):
    t = graph_sweep
    ok = t["claw"] > 0 and t["bad_witness"] == 0 and t["claw_missed"] == 0
    criterion(
        4,
        ok,
        f"{t['claw']} interval graphs with a claw rejected, "
        f"{t['bad_witness']} bad witnesses, {t['claw_missed']} missed",
    )
    assert ok


def test_criterion_5_poset_equivalence(criterion):
    total = bad = 0
    for n in range(POSET_MAX_N + 1):
        for p in oracle.enumerate_posets(n):
            total += 1
            c = classify(p)
            brute = oracle.interval_rep_of_poset(p) is not None and find_one_plus_three(p) is None
            values = oracle.value_function_feasible(p) is not None
            agree = c.is_semiorder == check_semiorder_axioms(p) == brute == values
            bad += not (agree and c.verify(p))
    ok = total == 1 + 1 + 3 + 19 + 219 + 4231 and bad == 0
    criterion(5, ok, f"{total} labelled posets n<={POSET_MAX_N}, {bad} disagreements")
    assert ok


def test_criterion_6_golden_and_bridge(rep_corpus, criterion):
    rep = Representation.from_pairs([(0, 3), (2, 5)])
    states = list(unitize_steps(rep))
    trace = [(s.pivot, s.a, s.b, s.alpha) for s in states]
    golden = unitize(rep) == Representation.from_pairs([(0, 1), (mpq(2, 3), mpq(5, 3))])
    golden = golden and trace == [(0, 0, 3, 0), (1, mpq(2, 3), 3, 1)]
    golden = golden and states[0].result == Representation.from_pairs([(0, 1), (mpq(2, 3), 3)])
    broken = sum(
        incomparability_graph(interval_order_of(r)) != intersection_graph(r) for r in rep_corpus
    )
    ok = golden and broken == 0
    criterion(
        6,
        ok,
        f"golden example {'exact' if golden else 'WRONG'}, bridge identity failed on "
        f"{broken} of {len(rep_corpus)} representations",
    )
    assert ok


def _run(argv):
    buf = io.StringIO()
    code = cli.main(argv, out=buf)
    return code, buf.getvalue()


def test_criterion_7_cli_contract(rep_corpus, tmp_path, criterion):
    round_trip_bad = 0
    for rep in rep_corpus:
        text = format_representation(rep)
        again = parse_representation(text)
        round_trip_bad += again != rep or format_representation(again) != text

    valid = tmp_path / "valid.txt"
    valid.write_text("0 0 3\n1 2 5\n")
    claw = tmp_path / "claw.txt"
    claw.write_text("0 0 10\n1 1 2\n2 4 5\n3 8 9\n")
    malformed = tmp_path / "malformed.txt"
    malformed.write_text("0 5 1\n")
    codes = {
        "valid": _run(["unitize", str(valid)])[0],
        "claw": _run(["unitize", str(claw)])[0],
        "malformed": _run(["unitize", str(malformed)])[0],
    }
    codes_ok = codes == {"valid": 0, "claw": 1, "malformed": 2}

    sweep_code, _ = _run(["sweep", "6", str(tmp_path / "sweep")])
    ok = round_trip_bad == 0 and codes_ok and sweep_code == 0
    criterion(
        7,
        ok,
        f"round trip failed on {round_trip_bad} of {len(rep_corpus)}, exit codes {codes}, "
        f"sweep 6 exit {sweep_code}",
    )
    assert ok

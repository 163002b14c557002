"""Claw-free interval graphs to proper and unit interval representations, with certificates."""

from .core import (
    ClawWitness,
    Graph,
    Interval,
    Rational,
    Representation,
    as_rational,
    canonicalize,
    find_claw,
    intersection_graph,
    is_proper,
    is_unit,
)
from .orders import (
    Classification,
    CycleError,
    NotIntervalOrder,
    NotSemiorder,
    OnePlusThreeWitness,
    OrderClass,
    Poset,
    TwoPlusTwoWitness,
    ValueFunction,
    check_semiorder_axioms,
    classify,
    find_one_plus_three,
    find_two_plus_two,
    incomparability_graph,
    interval_order_of,
    interval_representation,
    semiorder_values,
)
from .transform import (
    ClawObstruction,
    NotProperError,
    Obstruction,
    ProperizeTrace,
    SweepState,
    properize,
    to_unit,
    unitize,
    unitize_steps,
)

__version__ = "0.1.0"

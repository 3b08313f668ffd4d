"""Weighted (LP^MLN-style) propositional programs: soft stable models,
limit probabilities and strong-equivalence checking."""

from .equivalence import (
    ConditionId, Equivalent, ReductMismatch, Vacuous, WeightMismatch, check_all_conditions,
    check_condition, check_se, falsify, soft_stable_equivalent,
)
from .semantics import (
    HTInterpretation, PrimingMap, SignatureTooLarge, choice_program, classically_equivalent,
    delta_transform, entails, ht_satisfies, ht_valid, is_stable_model, reduct, satisfied_rules,
    satisfies, soft_stable_models,
)
from .syntax import (
    ParseError, Program, WeightedRule, parse_formula, parse_program, render_formula,
    render_program,
)
from .weights import WExpr, probability_distribution, total_weight, weight_of

__version__ = "0.1.0"

"""Strong equivalence of weighted programs.

``check_se`` decides it with the weight-ratio plus reduct characterization.
``check_condition`` evaluates the alternative characterizations (reducts,
choice formulas, soft HT models, HT validity, and the primed translation) so
they can be cross-checked against each other, and ``falsify`` searches for a
distinguishing extension program directly.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .generators import random_program
from .semantics import (
    CLASSICAL_CAP, HT_CAP, PrimingMap, _check_cap, choice_program,
    classically_equivalent, delta_transform, entails, ht_interpretations, ht_satisfies,
    ht_valid, interpretations, reduct, satisfied_rules,
)
from .syntax import Atom, Formula, Not, Program, conjoin, iff
from .weights import (
    ONE, TOLERANCE, NoSoftStableModel, WExpr, probability_distribution, total_weight,
    weight_of,
)

# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class Equivalent:
    witness: WExpr

    equivalent = True


@dataclass(frozen=True)
class Vacuous:
    """Both programs are empty."""

    witness: WExpr = ONE

    equivalent = True


@dataclass(frozen=True)
class WeightMismatch:
    """The weight ratio at ``x2`` differs from the one fixed at ``x1``."""

    x1: frozenset
    ratio1: WExpr
    x2: frozenset
    ratio2: WExpr

    equivalent = False


@dataclass(frozen=True)
class ReductDiff:
    x: frozenset
    distinguishing: frozenset
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ReductMismatch:
    """At ``x`` the reducts disagree; ``distinguishing`` separates them classically.

    ``mismatches`` lists every interpretation where the reducts disagree,
    starting with ``x``.
    """

    x: frozenset
    distinguishing: frozenset
    left: Formula
    right: Formula
    mismatches: tuple = ()

    equivalent = False

    def at(self, x) -> Optional[ReductDiff]:
        x = frozenset(x)
        return next((d for d in self.mismatches if d.x == x), None)


SEVerdict = Union[Equivalent, Vacuous, WeightMismatch, ReductMismatch]


def joint_signature(f: Program, g: Program) -> frozenset:
    return f.signature | g.signature


def reduct_of_satisfied(p: Program, x: frozenset) -> Formula:
    """Conjunction of the reducts, w.r.t. ``x``, of the rules ``x`` satisfies."""
    return conjoin(reduct(r, x) for r in satisfied_rules(p, x).formulas)


def weight_ratio(f: Program, g: Program, x: frozenset) -> WExpr:
    return total_weight(satisfied_rules(f, x)) / total_weight(satisfied_rules(g, x))


def check_se(f: Program, g: Program, tol: float = TOLERANCE) -> SEVerdict:
    """Decide strong equivalence; on failure return the first counterexample.

    The witness ratio is fixed at the first interpretation (the empty set) and
    every other interpretation must reproduce it.
    """
    sig = joint_signature(f, g)
    _check_cap(sig, CLASSICAL_CAP)
    if not f.rules and not g.rules:
        return Vacuous()
    first = witness = None
    diffs = []
    for x in interpretations(sig):
        if not diffs:
            ratio = weight_ratio(f, g, x)
            if witness is None:
                first, witness = x, ratio
            elif not ratio.isclose(witness, tol):
                return WeightMismatch(first, witness, x, ratio)
        left, right = reduct_of_satisfied(f, x), reduct_of_satisfied(g, x)
        same, y = classically_equivalent(left, right, sig)
        if not same:
            diffs.append(ReductDiff(x, y, left, right))
    if diffs:
        d = diffs[0]
        return ReductMismatch(d.x, d.distinguishing, d.left, d.right, tuple(diffs))
    return Equivalent(witness)


# ---------------------------------------------------------------- conditions


class ConditionId(str, enum.Enum):
    B = "b"   # reducts of satisfied rules classically equivalent at every X
    C = "c"   # reducts of the choice programs classically equivalent at every X
    D = "d"   # same soft HT models
    E = "e"   # choice programs HT-equivalent
    F = "f"   # primed translations of satisfied rules equivalent at every X
    G = "g"   # primed translations of choice programs equivalent


@dataclass(frozen=True)
class ConditionResult:
    condition: ConditionId
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def _choice_conj(p: Program) -> Formula:
    return conjoin(choice_program(p))


def _check_b(f, g, sig):
    for x in interpretations(sig):
        same, y = classically_equivalent(reduct_of_satisfied(f, x), reduct_of_satisfied(g, x), sig)
        if not same:
            return False, (x, y)
    return True, None


def _check_c(f, g, sig):
    cf, cg = _choice_conj(f), _choice_conj(g)
    for x in interpretations(sig):
        same, y = classically_equivalent(reduct(cf, x), reduct(cg, x), sig)
        if not same:
            return False, (x, y)
    return True, None


def soft_ht_models(p: Program, sig) -> list:
    """Pairs (H, T) that HT-satisfy every rule of ``p`` satisfied classically by T."""
    out = []
    for m in ht_interpretations(sig):
        if all(ht_satisfies(m, r) for r in satisfied_rules(p, m.there).formulas):
            out.append(m)
    return out


def _check_d(f, g, sig):
    _check_cap(sig, HT_CAP, "here-and-there")
    mf, mg = soft_ht_models(f, sig), set(soft_ht_models(g, sig))
    in_f = set(mf)
    for m in ht_interpretations(sig):
        if (m in in_f) != (m in mg):
            return False, m
    return True, None


def _check_e(f, g, sig):
    return ht_valid(iff(_choice_conj(f), _choice_conj(g)), sig)


def _primed(sig):
    pm = PrimingMap(sig)
    return pm, sorted(set(sig) | set(pm.values()))


def _check_f(f, g, sig):
    pm, doubled = _primed(sig)
    _check_cap(doubled, CLASSICAL_CAP)
    axioms = pm.here_subset_axioms()
    for x in interpretations(sig):
        # unprimed atoms fixed to x; primed atoms range over subsets of x
        there = [Atom(p) if p in x else Not(Atom(p)) for p in sorted(sig)]
        goal = iff(delta_transform(conjoin(satisfied_rules(f, x).formulas), pm),
                   delta_transform(conjoin(satisfied_rules(g, x).formulas), pm))
        ok, y = entails(axioms + there, goal, doubled)
        if not ok:
            return False, (x, y)
    return True, None


def _check_g(f, g, sig):
    pm, doubled = _primed(sig)
    _check_cap(doubled, CLASSICAL_CAP)
    goal = iff(delta_transform(_choice_conj(f), pm), delta_transform(_choice_conj(g), pm))
    return entails(pm.here_subset_axioms(), goal, doubled)


_CHECKS = {
    ConditionId.B: _check_b,
    ConditionId.C: _check_c,
    ConditionId.D: _check_d,
    ConditionId.E: _check_e,
    ConditionId.F: _check_f,
    ConditionId.G: _check_g,
}


def check_condition(cond, f: Program, g: Program) -> ConditionResult:
    cond = ConditionId(cond)
    sig = joint_signature(f, g)
    _check_cap(sig, CLASSICAL_CAP)
    holds, witness = _CHECKS[cond](f, g, sig)
    return ConditionResult(cond, holds, witness)


@dataclass(frozen=True)
class CrossCheck:
    results: dict

    @property
    def agree(self) -> bool:
        return len({r.holds for r in self.results.values()}) <= 1

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.results.values())

    def __getitem__(self, cond) -> bool:
        return self.results[ConditionId(cond)].holds


def check_all_conditions(f: Program, g: Program,
                         conditions: Iterable = tuple(ConditionId)) -> CrossCheck:
    return CrossCheck({ConditionId(c): check_condition(c, f, g) for c in conditions})


def soft_stable_equivalent(f: Program, g: Program) -> bool:
    """Same soft stable models under every common extension (decided by condition B)."""
    return check_condition(ConditionId.B, f, g).holds


# ---------------------------------------------------------------- falsifier


@dataclass
class FalsifierReport:
    found: bool
    trials_used: int
    seed: int
    h: Optional[Program] = None
    x: Optional[frozenset] = None
    p_left: Optional[float] = None
    p_right: Optional[float] = None
    w_left: Optional[WExpr] = None
    w_right: Optional[WExpr] = None


def _distribution_or_none(p: Program, sig):
    try:
        return probability_distribution(p, sig)
    except NoSoftStableModel:
        return None


def compare_extensions(f: Program, g: Program, h: Program, tol: float = TOLERANCE):
    """Compare the distributions of ``f + h`` and ``g + h``.

    Returns ``None`` when they agree, else ``(x, p_left, p_right)``. The
    reported ``x`` is the soft stable model of only one side carrying the most
    probability; failing that, the point of largest probability gap.
    """
    sig = joint_signature(f, g) | h.signature
    fh, gh = f + h, g + h
    df, dg = _distribution_or_none(fh, sig), _distribution_or_none(gh, sig)
    if df is None and dg is None:
        return None
    df = df if df is not None else {}
    dg = dg if dg is not None else {}
    one_sided, differing = [], []
    for x in interpretations(sig):
        pl, pr = df.get(x, 0.0), dg.get(x, 0.0)
        if (x in df) != (x in dg):
            one_sided.append((x, pl, pr))
        elif abs(pl - pr) > tol:
            differing.append((x, pl, pr))
    # max() keeps the first of equal gaps, so ties resolve in enumeration order
    for hits in (one_sided, differing):
        if hits:
            return max(hits, key=lambda hit: abs(hit[1] - hit[2]))
    return None


def falsify(f: Program, g: Program, trials: int = 1000, seed: int = 0,
            pool: Iterable[Program] = (), tol: float = TOLERANCE) -> FalsifierReport:
    """Search for an extension ``h`` under which ``f + h`` and ``g + h`` get
    different distributions. Candidates from ``pool`` are tried first, then
    random programs over the joint signature; every candidate counts as a trial.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    names = sorted(joint_signature(f, g))
    _check_cap(names, CLASSICAL_CAP)
    pool = list(pool)
    for used in range(1, trials + 1):
        h = pool[used - 1] if used <= len(pool) else random_program(rng, names)
        hit = compare_extensions(f, g, h, tol)
        if hit is not None:
            x, pl, pr = hit
            sig = joint_signature(f, g) | h.signature
            return FalsifierReport(True, used, seed, h, x, pl, pr,
                                   weight_of(f + h, x, sig), weight_of(g + h, x, sig))
    return FalsifierReport(False, trials, seed)

"""Symbolic weights ``e^{c1 + c2*alpha}``, total weights and limit probabilities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .semantics import is_stable_model, satisfied_rules, soft_stable_models
from .syntax import Hard, Program, render_weight, Soft

TOLERANCE = 1e-9


@dataclass(frozen=True)
class WExpr:
    """``e^{c1 + c2*alpha}``: ``c1`` sums soft weights, ``c2`` counts hard rules."""

    c1: float = 0.0
    c2: int = 0

    def __post_init__(self):
        if not math.isfinite(self.c1):
            raise ValueError(f"c1 must be finite, got {self.c1!r}")
        if int(self.c2) != self.c2:
            raise ValueError(f"c2 must be an integer, got {self.c2!r}")
        object.__setattr__(self, "c1", float(self.c1))
        object.__setattr__(self, "c2", int(self.c2))

    def __mul__(self, other: "WExpr") -> "WExpr":
        return WExpr(self.c1 + other.c1, self.c2 + other.c2)

    def __truediv__(self, other: "WExpr") -> "WExpr":
        return WExpr(self.c1 - other.c1, self.c2 - other.c2)

    def isclose(self, other: "WExpr", tol: float = TOLERANCE) -> bool:
        return self.c2 == other.c2 and abs(self.c1 - other.c1) <= tol

    def __str__(self):
        c1 = render_weight(Soft(self.c1))
        if self.c2 == 0:
            return f"e^{{{c1}}}"
        return f"e^{{{c1}{self.c2:+d}a}}"

    def to_json(self) -> dict:
        return {"c1": self.c1, "c2": self.c2}

    @classmethod
    def from_json(cls, data: dict) -> "WExpr":
        return cls(data["c1"], data["c2"])


ONE = WExpr()


def total_weight(p: Program) -> WExpr:
    c1 = math.fsum(r.weight.value for r in p.rules if isinstance(r.weight, Soft))
    c2 = sum(1 for r in p.rules if isinstance(r.weight, Hard))
    return WExpr(c1, c2)


def weight_of(p: Program, x: frozenset, sig=None) -> Optional[WExpr]:
    """Weight of ``x``: the total weight of the rules it satisfies, or ``None`` (zero)
    when ``x`` is not a soft stable model."""
    sig = p.signature if sig is None else frozenset(sig) | p.signature
    if not x <= sig:
        raise ValueError(f"interpretation {sorted(x)} is not within the signature")
    px = satisfied_rules(p, x)
    if not is_stable_model(x, px.formulas):
        return None
    return total_weight(px)


class NoSoftStableModel(ValueError):
    pass


class Distribution(dict):
    """Probabilities of soft stable models; every other interpretation maps to 0."""

    def __missing__(self, key):
        return 0.0


def normalize(weighted: dict) -> Distribution:
    """Limit (alpha -> infinity) of ``W(X) / sum W(Y)`` for ``{X: WExpr}``.

    Only interpretations with the largest hard count keep mass.
    """
    if not weighted:
        raise NoSoftStableModel("no soft stable model: distribution undefined")
    top = max(w.c2 for w in weighted.values())
    shift = max(w.c1 for w in weighted.values() if w.c2 == top)
    mass = {x: math.exp(w.c1 - shift) if w.c2 == top else 0.0
            for x, w in weighted.items()}
    z = math.fsum(mass.values())
    return Distribution((x, m / z) for x, m in mass.items())


def model_weights(p: Program, sig=None) -> dict:
    """``{X: TW(p_X)}`` for every soft stable model, in enumeration order."""
    return {x: total_weight(satisfied_rules(p, x)) for x in soft_stable_models(p, sig)}


def probability_distribution(p: Program, sig=None) -> Distribution:
    return normalize(model_weights(p, sig))

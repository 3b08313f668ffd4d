"""Classical and here-and-there satisfaction, reducts, (soft) stable models,
choice formulas and the priming translation used for HT checks.

Classical checks run over truth tables packed into Python ints: bit ``i`` of
a table is the value under the interpretation whose atoms are the set bits of
``i`` (atom ``j`` of the sorted signature is bit ``j``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .syntax import (
    BOT, TOP, And, Atom, Bot, Formula, Implies, Not, Or, Program, Top,
    atoms, conjoin,
)

CLASSICAL_CAP = 24
HT_CAP = 15


class SignatureTooLarge(ValueError):
    def __init__(self, size: int, cap: int, what: str = "classical"):
        super().__init__(f"signature has {size} atoms; {what} enumeration is capped at {cap}")
        self.size = size
        self.cap = cap


def _check_cap(sig, cap: int, what: str = "classical"):
    if len(sig) > cap:
        raise SignatureTooLarge(len(sig), cap, what)


def interpretations(sig: Iterable[str]) -> Iterator[frozenset]:
    """All subsets of ``sig`` in lexicographic order of sorted atom names, ∅ first."""
    names = sorted(sig)

    def go(prefix: list, start: int):
        yield frozenset(prefix)
        for i in range(start, len(names)):
            prefix.append(names[i])
            yield from go(prefix, i + 1)
            prefix.pop()

    return go([], 0)


def ht_interpretations(sig: Iterable[str]) -> Iterator["HTInterpretation"]:
    """Pairs (H, T) with H ⊆ T ⊆ sig, T-major, both in lexicographic order."""
    for there in interpretations(sig):
        for here in interpretations(there):
            yield HTInterpretation(here, there)


# ---------------------------------------------------------------- classical


def satisfies(x: frozenset, f: Formula) -> bool:
    if isinstance(f, Atom):
        return f.name in x
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not satisfies(x, f.arg)
    if isinstance(f, And):
        return satisfies(x, f.left) and satisfies(x, f.right)
    if isinstance(f, Or):
        return satisfies(x, f.left) or satisfies(x, f.right)
    if isinstance(f, Implies):
        return not satisfies(x, f.left) or satisfies(x, f.right)
    raise TypeError(f"not a formula: {f!r}")


def satisfied_rules(p: Program, x: frozenset) -> Program:
    """The subprogram of rules whose formula ``x`` satisfies (weights and order kept)."""
    return Program([r for r in p.rules if satisfies(x, r.formula)], p.signature)


def reduct(f: Formula, x: frozenset) -> Formula:
    """Replace every maximal subformula not satisfied by ``x`` with ``bot``."""
    if not satisfies(x, f):
        return BOT
    if isinstance(f, (Atom, Top, Bot)):
        return f
    if isinstance(f, Not):
        # x satisfies not g, so g itself is unsatisfied
        return Not(BOT)
    return type(f)(reduct(f.left, x), reduct(f.right, x))


def _atom_table(j: int, n: int) -> int:
    width = 1 << j
    table = ((1 << width) - 1) << width
    period = width << 1
    total = 1 << n
    while period < total:
        table |= table << period
        period <<= 1
    return table


def truth_table(f: Formula, names: Sequence[str]) -> int:
    """Bit-packed truth table of ``f`` over the ordered atom list ``names``."""
    n = len(names)
    full = (1 << (1 << n)) - 1
    index = {a: j for j, a in enumerate(names)}
    cache: dict = {}

    def go(g: Formula) -> int:
        if isinstance(g, Atom):
            j = index[g.name]
            if j not in cache:
                cache[j] = _atom_table(j, n)
            return cache[j]
        if isinstance(g, Top):
            return full
        if isinstance(g, Bot):
            return 0
        if isinstance(g, Not):
            return full ^ go(g.arg)
        if isinstance(g, And):
            return go(g.left) & go(g.right)
        if isinstance(g, Or):
            return go(g.left) | go(g.right)
        if isinstance(g, Implies):
            return (full ^ go(g.left)) | go(g.right)
        raise TypeError(f"not a formula: {g!r}")

    return go(f)


def _first_set(table: int, names: Sequence[str]) -> Optional[frozenset]:
    """First interpretation (in enumeration order) whose bit is set in ``table``."""
    if not table:
        return None
    index = {a: j for j, a in enumerate(names)}
    for x in interpretations(names):
        if table >> sum(1 << index[a] for a in x) & 1:
            return x
    raise AssertionError("unreachable")


def _sig_for(sig, *formulas) -> list:
    names = set(sig) if sig is not None else set()
    for f in formulas:
        names |= atoms(f)
    return sorted(names)


def classically_equivalent(f: Formula, g: Formula, sig=None) -> tuple:
    """Return ``(True, None)`` or ``(False, x)`` with ``x`` a distinguishing interpretation.

    The check runs over ``sig`` extended by the atoms of both formulas.
    """
    names = _sig_for(sig, f, g)
    _check_cap(names, CLASSICAL_CAP)
    diff = truth_table(f, names) ^ truth_table(g, names)
    x = _first_set(diff, names)
    return (x is None, x)


def entails(assumptions: Iterable[Formula], f: Formula, sig=None) -> tuple:
    """Classical entailment; returns ``(True, None)`` or ``(False, countermodel)``."""
    premise = conjoin(assumptions)
    names = _sig_for(sig, premise, f)
    _check_cap(names, CLASSICAL_CAP)
    bad = truth_table(premise, names) & ~truth_table(f, names)
    x = _first_set(bad, names)
    return (x is None, x)


# ---------------------------------------------------------------- stable models


def is_stable_model(x: frozenset, fs: Iterable[Formula], sig=None) -> bool:
    """``x`` satisfies ``fs`` and no proper subset of ``x`` satisfies the reducts."""
    fs = list(fs)
    if sig is not None and not x <= frozenset(sig):
        raise ValueError(f"interpretation {sorted(x)} is not within the signature")
    if not all(satisfies(x, f) for f in fs):
        return False
    # reducts only mention atoms of x; bit 2^|x|-1 is x itself
    names = sorted(x)
    table = truth_table(conjoin(reduct(f, x) for f in fs), names)
    proper = (1 << ((1 << len(names)) - 1)) - 1
    return table & proper == 0


def soft_stable_models(p: Program, sig=None) -> list:
    """All ``X`` that are stable models of the rules they satisfy, in enumeration order."""
    sig = p.signature if sig is None else frozenset(sig) | p.signature
    _check_cap(sig, CLASSICAL_CAP)
    return [x for x in interpretations(sig)
            if is_stable_model(x, satisfied_rules(p, x).formulas)]


# ---------------------------------------------------------------- here-and-there


@dataclass(frozen=True)
class HTInterpretation:
    here: frozenset
    there: frozenset

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError("here must be a subset of there")


def ht_satisfies(m: HTInterpretation, f: Formula) -> bool:
    if isinstance(f, Atom):
        return f.name in m.here
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not satisfies(m.there, f.arg)
    if isinstance(f, And):
        return ht_satisfies(m, f.left) and ht_satisfies(m, f.right)
    if isinstance(f, Or):
        return ht_satisfies(m, f.left) or ht_satisfies(m, f.right)
    if isinstance(f, Implies):
        return ((not ht_satisfies(m, f.left) or ht_satisfies(m, f.right))
                and satisfies(m.there, f))
    raise TypeError(f"not a formula: {f!r}")


def ht_valid(f: Formula, sig=None) -> tuple:
    """HT validity by enumerating all 3^n pairs; ``(True, None)`` or ``(False, countermodel)``."""
    names = _sig_for(sig, f)
    _check_cap(names, HT_CAP, "here-and-there")
    for m in ht_interpretations(names):
        if not ht_satisfies(m, f):
            return (False, m)
    return (True, None)


# ---------------------------------------------------------------- translations


def choice(f: Formula) -> Formula:
    return Or(f, Not(f))


def choice_program(p: Program) -> list:
    """``R | not R`` for every rule ``w: R``; weights dropped, rule order kept."""
    return [choice(r.formula) for r in p.rules]


PRIME_SUFFIX = "'"


class PrimingMap(Mapping):
    """Injective map from atoms to fresh primed atoms (``p`` to ``p'``).

    ``'`` cannot occur in source atom names, so primed names never collide
    with the signature.
    """

    def __init__(self, sig: Iterable[str]):
        self._map = {a: a + PRIME_SUFFIX for a in sorted(sig)}

    def __getitem__(self, name: str) -> str:
        return self._map[name]

    def __iter__(self):
        return iter(self._map)

    def __len__(self):
        return len(self._map)

    def here_subset_axioms(self) -> list:
        """``p' -> p`` for every atom ``p``."""
        return [Implies(Atom(q), Atom(p)) for p, q in self._map.items()]


def delta_transform(f: Formula, pm: Mapping) -> Formula:
    if isinstance(f, Atom):
        return Atom(pm[f.name])
    if isinstance(f, (Top, Bot, Not)):
        return f
    if isinstance(f, (And, Or)):
        return type(f)(delta_transform(f.left, pm), delta_transform(f.right, pm))
    if isinstance(f, Implies):
        return And(Implies(delta_transform(f.left, pm), delta_transform(f.right, pm)), f)
    raise TypeError(f"not a formula: {f!r}")


def prime_display(name: str) -> str:
    """Re-parseable display name for a primed atom (``p'`` shown as ``p_prime``)."""
    if name.endswith(PRIME_SUFFIX):
        return name[: -len(PRIME_SUFFIX)] + "_prime"
    return name

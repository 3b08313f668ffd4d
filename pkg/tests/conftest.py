import itertools
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from lpmln.semantics import ht_satisfies, HTInterpretation
from lpmln.syntax import (
    BOT, HARD, TOP, And, Atom, Implies, Not, Or, Program, Soft, WeightedRule, parse_program,
)

settings.register_profile("default", deadline=None)
settings.load_profile("default")

PROGRAMS = Path(__file__).resolve().parent.parent / "programs"

SAMPLES = {
    "F": "0: not a\n2: b <- a.\n3: a <- not not a.",
    "G": "2: not a | b\n1: a | not a",
    "Fprime": "0: not a\n2: b <- a.\n3: a <- a.",
    "Gprime": "3: not a | b\n1: a | not a",
    "H": "1: a <- b\n1: b <- a",
    "P1": "alpha: a | b.\nalpha: <- a, b.",
    "P2": "alpha: a <- not b.\nalpha: b <- not a.\nalpha: <- a, b.",
    "Hhard": "alpha: a <- b.\nalpha: b <- a.",
}


@pytest.fixture(scope="session")
def samples():
    return {k: parse_program(v) for k, v in SAMPLES.items()}


def X(*names):
    return frozenset(names)


def subsets(sig):
    sig = sorted(sig)
    for k in range(len(sig) + 1):
        for c in itertools.combinations(sig, k):
            yield frozenset(c)


def equilibrium_stable(x, formulas):
    """Oracle: x is stable for ``formulas`` iff (x, x) is an HT model and no
    (y, x) with y a proper subset of x is one."""
    def model(y):
        m = HTInterpretation(y, x)
        return all(ht_satisfies(m, f) for f in formulas)
    return model(x) and not any(model(y) for y in subsets(x) if y != x)


# ---------------------------------------------------------------- strategies

NAMES = ("a", "b", "c")


def formulas(names=NAMES, max_leaves=8):
    leaves = st.one_of(st.sampled_from([Atom(n) for n in names]), st.just(TOP), st.just(BOT))
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.builds(Not, sub),
            st.builds(And, sub, sub),
            st.builds(Or, sub, sub),
            st.builds(Implies, sub, sub),
        ),
        max_leaves=max_leaves,
    )


weights = st.one_of(
    st.just(HARD),
    st.builds(Soft, st.floats(allow_nan=False, allow_infinity=False, width=64)),
)
small_weights = st.sampled_from([HARD, Soft(-1.0), Soft(0.0), Soft(1.0), Soft(2.0)])


def programs(names=NAMES, max_rules=4, weight=small_weights, max_leaves=6):
    return st.lists(st.builds(WeightedRule, weight, formulas(names, max_leaves)),
                    max_size=max_rules).map(Program)


interps = st.frozensets(st.sampled_from(NAMES))


# ---------------------------------------------------------------- acceptance report

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

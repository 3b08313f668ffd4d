"""Seeded random formulas and programs, used by the falsifier and experiment scripts."""

from __future__ import annotations

import random
from typing import Sequence

from .syntax import (
    BOT, HARD, TOP, And, Atom, Formula, Implies, Not, Or, Program, Soft,
    WeightedRule,
)

SOFT_WEIGHTS = (-1.0, 0.0, 1.0, 2.0)
ALPHA_PROB = 0.2


def random_formula(rng: random.Random, names: Sequence[str], depth: int) -> Formula:
    """Random formula of nesting depth at most ``depth`` over ``names``."""
    if depth <= 0 or rng.random() < 0.3:
        r = rng.random()
        if names and r < 0.85:
            return Atom(rng.choice(list(names)))
        return TOP if r < 0.93 else BOT
    kind = rng.choice((Not, And, Or, Implies, Implies))
    if kind is Not:
        return Not(random_formula(rng, names, depth - 1))
    return kind(random_formula(rng, names, depth - 1), random_formula(rng, names, depth - 1))


def random_weight(rng: random.Random, alpha_prob: float = ALPHA_PROB,
                  soft: Sequence[float] = SOFT_WEIGHTS):
    if rng.random() < alpha_prob:
        return HARD
    return Soft(rng.choice(list(soft)))


def random_program(rng: random.Random, names: Sequence[str], max_rules: int = 3,
                   max_depth: int = 2, min_rules: int = 0,
                   alpha_prob: float = ALPHA_PROB) -> Program:
    n = rng.randint(min_rules, max_rules)
    return Program([WeightedRule(random_weight(rng, alpha_prob),
                                 random_formula(rng, names, max_depth))
                    for _ in range(n)])


def _ht_rewrite(rng: random.Random, f: Formula) -> Formula:
    """An HT-equivalent variant of ``f`` (one rewrite at a random position)."""
    moves = [lambda g: And(g, TOP), lambda g: Or(g, BOT), lambda g: Or(BOT, g)]
    if isinstance(f, Not):
        moves.append(lambda g: Not(Not(g)))
    if isinstance(f, (And, Or)):
        moves.append(lambda g: type(g)(g.right, g.left))
    if isinstance(f, Implies) and isinstance(f.right, Implies):
        moves.append(lambda g: Implies(And(g.left, g.right.left), g.right.right))
    children = []
    if isinstance(f, Not):
        children = [lambda c: Not(c)]
    elif isinstance(f, (And, Or, Implies)):
        children = [lambda c: type(f)(c, f.right), lambda c: type(f)(f.left, c)]
    if children and rng.random() < 0.5:
        k = rng.randrange(len(children))
        child = f.arg if isinstance(f, Not) else (f.left, f.right)[k]
        return children[k](_ht_rewrite(rng, child))
    return rng.choice(moves)(f)


def equivalent_variant(rng: random.Random, p: Program) -> Program:
    """A program strongly equivalent to ``p``: rules rewritten into HT-equivalent
    forms, soft weights split, rules reordered, optionally a ``w: top`` rule added."""
    rules = []
    for r in p.rules:
        f = _ht_rewrite(rng, r.formula) if rng.random() < 0.7 else r.formula
        if isinstance(r.weight, Soft) and rng.random() < 0.3:
            rules.append(WeightedRule(Soft(0.5), f))
            rules.append(WeightedRule(Soft(r.weight.value - 0.5), f))
        else:
            rules.append(WeightedRule(r.weight, f))
    if rng.random() < 0.3:
        rules.append(WeightedRule(random_weight(rng), TOP))
    rng.shuffle(rules)
    return Program(rules, p.signature)


def perturbed_variant(rng: random.Random, p: Program, names: Sequence[str],
                      max_depth: int = 2) -> Program:
    """``p`` with one rule's formula or weight replaced at random."""
    if not p.rules:
        return random_program(rng, names, max_rules=1, max_depth=max_depth, min_rules=1)
    i = rng.randrange(len(p.rules))
    r = p.rules[i]
    if rng.random() < 0.5:
        new = WeightedRule(r.weight, random_formula(rng, names, max_depth))
    else:
        new = WeightedRule(random_weight(rng), r.formula)
    return p.replace_rule(i, new)


def random_pair(rng: random.Random, names: Sequence[str], max_rules: int = 4,
                max_depth: int = 3) -> tuple:
    """A program pair: independent, strongly equivalent, or a one-rule perturbation."""
    f = random_program(rng, names, max_rules=max_rules, max_depth=max_depth)
    kind = rng.randrange(3)
    if kind == 0:
        g = random_program(rng, names, max_rules=max_rules, max_depth=max_depth)
    elif kind == 1:
        g = equivalent_variant(rng, f)
    else:
        g = perturbed_variant(rng, f, names, max_depth)
    return f, g

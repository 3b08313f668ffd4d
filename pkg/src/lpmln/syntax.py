"""Formula and program ASTs for weighted propositional programs, plus the
``.lpmln`` text format.

Surface syntax::

    % comment
    0: not a
    2: b <- a.
    3: a <- not not a.
    alpha: <- a, b.

``~``/``not`` negation, ``&`` conjunction (``,`` inside rule bodies), ``|``
disjunction, ``->`` implication (right associative), ``<-`` reversed rule
sugar, ``top``/``bot`` constants. A rule ends with ``.`` or a newline. A rule
without a weight prefix is hard.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "Atom", "Top", "Bot", "Not", "And", "Or", "Implies", "Formula",
    "TOP", "BOT", "Soft", "Hard", "HARD", "Weight", "WeightedRule", "Program",
    "Interpretation", "ParseError", "RESERVED",
    "atoms", "conjoin", "iff", "parse_formula", "parse_program",
    "render_formula", "render_rule", "render_program", "render_weight",
    "interpretation",
]

RESERVED = frozenset({"alpha", "not", "top", "bot"})
ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

# ---------------------------------------------------------------- formulas


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Top, Bot, Not, And, Or, Implies]
TOP = Top()
BOT = Bot()

Interpretation = frozenset  # a frozenset of atom names


def interpretation(names: Iterable[str] = ()) -> frozenset:
    return frozenset(names)


def atoms(f: Formula) -> frozenset:
    """Atom names occurring in ``f``."""
    out: set = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g.name)
        elif isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or, Implies)):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(out)


def conjoin(formulas: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; ``top`` for no formulas."""
    formulas = list(formulas)
    if not formulas:
        return TOP
    return reduce(And, formulas)


def iff(f: Formula, g: Formula) -> Formula:
    return And(Implies(f, g), Implies(g, f))


# ---------------------------------------------------------------- programs


@dataclass(frozen=True)
class Soft:
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"soft weight must be finite, got {self.value!r}")


@dataclass(frozen=True)
class Hard:
    pass


HARD = Hard()
Weight = Union[Soft, Hard]


@dataclass(frozen=True)
class WeightedRule:
    weight: Weight
    formula: Formula
    line: Optional[int] = field(default=None, compare=False)

    @property
    def is_hard(self) -> bool:
        return isinstance(self.weight, Hard)


@dataclass(frozen=True)
class Program:
    """An ordered multiset of weighted rules over a signature.

    The signature defaults to the atoms occurring in the rules; an explicit
    one must contain them.
    """

    rules: tuple = ()
    signature: frozenset = None

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        used = frozenset().union(*(atoms(r.formula) for r in self.rules))
        if self.signature is None:
            object.__setattr__(self, "signature", used)
        else:
            sig = frozenset(self.signature)
            if not used <= sig:
                raise ValueError(f"signature misses atoms {sorted(used - sig)}")
            object.__setattr__(self, "signature", sig)

    def __len__(self):
        return len(self.rules)

    def __iter__(self) -> Iterator[WeightedRule]:
        return iter(self.rules)

    def __add__(self, other: "Program") -> "Program":
        return Program(self.rules + other.rules, self.signature | other.signature)

    @property
    def formulas(self) -> list:
        """The unweighted formulas, in rule order."""
        return [r.formula for r in self.rules]

    def replace_rule(self, index: int, rule: WeightedRule) -> "Program":
        rules = list(self.rules)
        rules[index] = rule
        return Program(rules)


# ---------------------------------------------------------------- lexer


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f\v]+)
  | (?P<comment>%[^\n]*)
  | (?P<newline>\n)
  | (?P<arrow>->)
  | (?P<larrow><-)
  | (?P<number>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[~&|,:().])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "newline":
            tokens.append(_Token("newline", "\n", line, col))
            line += 1
            line_start = m.end()
        elif kind == "ident":
            word = m.group()
            if word in RESERVED:
                tokens.append(_Token(word, word, line, col))
            elif not ATOM_RE.match(word):
                raise ParseError(f"invalid atom name {word!r}", line, col)
            else:
                tokens.append(_Token("atom", word, line, col))
        elif kind == "op":
            tokens.append(_Token(m.group(), m.group(), line, col))
        elif kind not in ("ws", "comment"):
            tokens.append(_Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


# ---------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text.replace("\r\n", "\n"))
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.line, tok.column)

    def expect(self, kind: str) -> _Token:
        if self.tok.kind != kind:
            raise self.error(f"expected {kind!r}")
        return self.advance()

    # formula := implication
    def formula(self) -> Formula:
        left = self.disjunction()
        if self.tok.kind == "arrow":
            self.advance()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.tok.kind == "|":
            self.advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.tok.kind == "&":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.tok
        if tok.kind in ("~", "not"):
            self.advance()
            return Not(self.unary())
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "top":
            self.advance()
            return TOP
        if tok.kind == "bot":
            self.advance()
            return BOT
        if tok.kind == "(":
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if tok.kind == "alpha":
            raise self.error("reserved word 'alpha' cannot be used as an atom")
        raise self.error("expected a formula")

    def weight(self) -> Optional[Weight]:
        tok = self.tok
        nxt = self.tokens[self.i + 1]
        if tok.kind == "alpha":
            self.advance()
            self.expect(":")
            return HARD
        if tok.kind == "number":
            if nxt.kind != ":":
                raise self.error("expected ':' after weight", nxt)
            self.advance()
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise ParseError(f"weight {tok.text!r} is not finite", tok.line, tok.column)
            return Soft(value)
        return None

    def rule(self) -> WeightedRule:
        line = self.tok.line
        weight = self.weight()
        if weight is None:
            weight = HARD
        if self.tok.kind == "larrow":
            head = BOT
        else:
            head = self.formula()
        if self.tok.kind == "larrow":
            self.advance()
            body = []
            if self.tok.kind not in (".", "newline", "eof"):
                body.append(self.formula())
                while self.tok.kind == ",":
                    self.advance()
                    body.append(self.formula())
            if body:
                f = Implies(conjoin(body), head)
            else:
                f = head
        else:
            f = head
        if self.tok.kind == ".":
            self.advance()
        elif self.tok.kind not in ("newline", "eof"):
            raise self.error("expected '.' or end of line after rule")
        return WeightedRule(weight, f, line)

    def program(self) -> Program:
        rules = []
        while self.tok.kind != "eof":
            if self.tok.kind in ("newline", "."):
                self.advance()
                continue
            rules.append(self.rule())
        return Program(rules)


def parse_program(text: str) -> Program:
    """Parse ``.lpmln`` source into a :class:`Program` (rules in source order)."""
    return _Parser(text).program()


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    while p.tok.kind == "newline":
        p.advance()
    f = p.formula()
    while p.tok.kind == "newline":
        p.advance()
    if p.tok.kind != "eof":
        raise p.error("unexpected trailing input")
    return f


# ---------------------------------------------------------------- printer

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 5)


def render_formula(f: Formula, rename=None) -> str:
    """Render with minimal parentheses. ``rename`` maps atom names for display."""

    def go(g: Formula, min_prec: int) -> str:
        if isinstance(g, Atom):
            s = rename(g.name) if rename else g.name
        elif isinstance(g, Top):
            s = "top"
        elif isinstance(g, Bot):
            s = "bot"
        elif isinstance(g, Not):
            s = "not " + go(g.arg, 4)
        elif isinstance(g, And):
            s = f"{go(g.left, 3)} & {go(g.right, 4)}"
        elif isinstance(g, Or):
            s = f"{go(g.left, 2)} | {go(g.right, 3)}"
        elif isinstance(g, Implies):
            s = f"{go(g.left, 2)} -> {go(g.right, 1)}"
        else:
            raise TypeError(f"not a formula: {g!r}")
        return f"({s})" if _prec(g) < min_prec else s

    return go(f, 0)


def render_weight(w: Weight) -> str:
    if isinstance(w, Hard):
        return "alpha"
    v = w.value
    if v.is_integer() and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def _body_items(f: Formula) -> list:
    items = []
    while isinstance(f, And):
        items.append(f.right)
        f = f.left
    items.append(f)
    return items[::-1]


def render_rule(rule: WeightedRule, rename=None) -> str:
    """``w: R`` with top-level implications shown in ``H <- B1, ..., Bn`` form."""
    f = rule.formula
    if isinstance(f, Implies):
        body = ", ".join(render_formula(b, rename) if _prec(b) > 1 else f"({render_formula(b, rename)})"
                         for b in _body_items(f.left))
        if isinstance(f.right, Bot):
            text = f"<- {body}"
        else:
            head = render_formula(f.right, rename)
            if _prec(f.right) == 1:
                head = f"({head})"
            text = f"{head} <- {body}"
    else:
        text = render_formula(f, rename)
    return f"{render_weight(rule.weight)}: {text}"


def render_program(p: Program) -> str:
    return "".join(render_rule(r) + ".\n" for r in p.rules)

"""Object language: terms, formulas, numerals, parsing and printing.

The concrete syntax is fully parenthesized ASCII::

    t=u   ~(F)   (F&G)   (F|G)   (F->G)   Exi(F)   Axi(F)
    0   0^(d)   S t   (t+u)   (t*u)   xi   ai

Numerals are single AST nodes carrying an arbitrary-precision successor
count, so ``0^(82031250)`` costs one node, not eighty million.  When a
formula is turned into a symbol sequence (for prime-power coding) a numeral
expands to ``count`` copies of ``S`` followed by ``0``; that expansion is
guarded by a bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import NumeralTooLarge, OpenTermError, ParseError

__all__ = [
    "Symbol", "ZERO", "SUCC", "PLUS", "TIMES", "EQUALS", "NEG", "AND", "OR",
    "IMPLIES", "EXISTS", "FORALL", "LPAREN", "RPAREN", "var_symbol", "const_symbol",
    "Numeral", "Var", "Const", "Succ", "Plus", "Times", "Term",
    "Equals", "Neg", "And", "Or", "Implies", "Exists", "Forall", "Formula",
    "succ", "iff", "parse", "parse_term", "parse_tokens", "print_formula",
    "print_term", "to_text", "tokens", "token_length", "free_vars",
    "variables", "constants", "substitute", "replace_constant", "is_closed",
    "is_class_sign",
]


# --------------------------------------------------------------------------
# Symbols

_FIXED_KINDS = ("0", "S", "+", "*", "=", "~", "&", "|", "->", "E", "A", "(", ")")
_INDEXED_KINDS = ("x", "a")


@dataclass(frozen=True, slots=True)
class Symbol:
    """One token of the object language.

    Fixed symbols use their concrete text as ``kind``; variables and
    constants use ``"x"`` and ``"a"`` with a positive ``index``.
    """

    kind: str
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind in _INDEXED_KINDS:
            if self.index < 1:
                raise ValueError(f"{self.kind}-index must be >= 1, got {self.index}")
        elif self.kind not in _FIXED_KINDS or self.index != 0:
            raise ValueError(f"unknown symbol {self.kind!r}/{self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}" if self.index else self.kind


ZERO = Symbol("0")
SUCC = Symbol("S")
PLUS = Symbol("+")
TIMES = Symbol("*")
EQUALS = Symbol("=")
NEG = Symbol("~")
AND = Symbol("&")
OR = Symbol("|")
IMPLIES = Symbol("->")
EXISTS = Symbol("E")
FORALL = Symbol("A")
LPAREN = Symbol("(")
RPAREN = Symbol(")")


def var_symbol(i: int) -> Symbol:
    return Symbol("x", i)


def const_symbol(i: int) -> Symbol:
    return Symbol("a", i)


# --------------------------------------------------------------------------
# AST


class _Node:
    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Numeral(_Node):
    """``0`` under ``count`` successor symbols."""

    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("numeral count must be >= 0")


@dataclass(frozen=True, slots=True)
class Var(_Node):
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("variable index must be >= 1")


@dataclass(frozen=True, slots=True)
class Const(_Node):
    index: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError("constant index must be >= 1")


@dataclass(frozen=True, slots=True)
class Succ(_Node):
    """Successor of a non-numeral term. Use :func:`succ` to build one."""

    arg: Term

    def __post_init__(self) -> None:
        if isinstance(self.arg, Numeral):
            raise ValueError("Succ over a Numeral is not canonical; use succ()")


@dataclass(frozen=True, slots=True)
class Plus(_Node):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Times(_Node):
    left: Term
    right: Term


Term = Union[Numeral, Var, Const, Succ, Plus, Times]


@dataclass(frozen=True, slots=True)
class Equals(_Node):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Neg(_Node):
    body: Formula


@dataclass(frozen=True, slots=True)
class And(_Node):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(_Node):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(_Node):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Exists(_Node):
    var: int
    body: Formula

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError("variable index must be >= 1")


@dataclass(frozen=True, slots=True)
class Forall(_Node):
    var: int
    body: Formula

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError("variable index must be >= 1")


Formula = Union[Equals, Neg, And, Or, Implies, Exists, Forall]

_TERM_TYPES = (Numeral, Var, Const, Succ, Plus, Times)
_BINARY_FORMULAS = {And: AND, Or: OR, Implies: IMPLIES}
_BINARY_TERMS = {Plus: PLUS, Times: TIMES}
_QUANTIFIERS = {Exists: EXISTS, Forall: FORALL}


def succ(t: Term, times: int = 1) -> Term:
    """Apply the successor ``times`` times, folding into a numeral when possible."""
    if isinstance(t, Numeral):
        return Numeral(t.count + times)
    for _ in range(times):
        t = Succ(t)
    return t


def iff(f: Formula, g: Formula) -> Formula:
    """The biconditional, written out as ``((F->G)&(G->F))``."""
    return And(Implies(f, g), Implies(g, f))


# --------------------------------------------------------------------------
# Printing


def print_term(t: Term) -> str:
    if isinstance(t, Numeral):
        return "0" if t.count == 0 else f"0^({t.count})"
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Const):
        return f"a{t.index}"
    if isinstance(t, Succ):
        return "S" + print_term(t.arg)
    if isinstance(t, Plus):
        return f"({print_term(t.left)}+{print_term(t.right)})"
    if isinstance(t, Times):
        return f"({print_term(t.left)}*{print_term(t.right)})"
    raise TypeError(f"not a term: {t!r}")


def print_formula(f: Formula) -> str:
    """Canonical fully-parenthesized text; numerals always print as ``0^(d)``."""
    if isinstance(f, Equals):
        return f"{print_term(f.left)}={print_term(f.right)}"
    if isinstance(f, Neg):
        return f"~({print_formula(f.body)})"
    if type(f) in _BINARY_FORMULAS:
        op = _BINARY_FORMULAS[type(f)].kind
        return f"({print_formula(f.left)}{op}{print_formula(f.right)})"
    if type(f) in _QUANTIFIERS:
        q = _QUANTIFIERS[type(f)].kind
        return f"{q}x{f.var}({print_formula(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


def to_text(node: Term | Formula) -> str:
    return print_term(node) if isinstance(node, _TERM_TYPES) else print_formula(node)


# --------------------------------------------------------------------------
# Symbol sequences


def tokens(node: Term | Formula, bound: int | None = None) -> list[Symbol]:
    """The symbol sequence of ``node`` with numerals expanded to ``S...S0``.

    Raises NumeralTooLarge if a numeral count exceeds ``bound``.
    """
    out: list[Symbol] = []
    _emit(node, out, bound)
    return out


def _emit(node, out: list[Symbol], bound: int | None) -> None:
    if isinstance(node, Numeral):
        if bound is not None and node.count > bound:
            raise NumeralTooLarge(f"numeral 0^({node.count}) exceeds expansion bound {bound}")
        out.extend([SUCC] * node.count)
        out.append(ZERO)
    elif isinstance(node, Var):
        out.append(var_symbol(node.index))
    elif isinstance(node, Const):
        out.append(const_symbol(node.index))
    elif isinstance(node, Succ):
        out.append(SUCC)
        _emit(node.arg, out, bound)
    elif type(node) in _BINARY_TERMS or type(node) in _BINARY_FORMULAS:
        op = _BINARY_TERMS.get(type(node)) or _BINARY_FORMULAS[type(node)]
        out.append(LPAREN)
        _emit(node.left, out, bound)
        out.append(op)
        _emit(node.right, out, bound)
        out.append(RPAREN)
    elif isinstance(node, Equals):
        _emit(node.left, out, bound)
        out.append(EQUALS)
        _emit(node.right, out, bound)
    elif isinstance(node, Neg):
        out += (NEG, LPAREN)
        _emit(node.body, out, bound)
        out.append(RPAREN)
    elif type(node) in _QUANTIFIERS:
        out += (_QUANTIFIERS[type(node)], var_symbol(node.var), LPAREN)
        _emit(node.body, out, bound)
        out.append(RPAREN)
    else:
        raise TypeError(f"not a term or formula: {node!r}")


def token_length(node: Term | Formula) -> int:
    """Length of :func:`tokens` without materializing it."""
    if isinstance(node, Numeral):
        return node.count + 1
    if isinstance(node, (Var, Const)):
        return 1
    if isinstance(node, Succ):
        return 1 + token_length(node.arg)
    if isinstance(node, Equals):
        return 1 + token_length(node.left) + token_length(node.right)
    if isinstance(node, Neg):
        return 3 + token_length(node.body)
    if type(node) in _QUANTIFIERS:
        return 4 + token_length(node.body)
    return 3 + token_length(node.left) + token_length(node.right)


# --------------------------------------------------------------------------
# Parsing

_LEXEME = re.compile(
    r"(?P<num>0\^\((?P<d>\d+)\))|x(?P<x>\d+)|a(?P<a>\d+)|(?P<arrow>->)|(?P<sym>[0S+*=~&|EA()])"
)
_FIXED_BY_TEXT = {s.kind: s for s in (ZERO, SUCC, PLUS, TIMES, EQUALS, NEG, AND, OR,
                                      IMPLIES, EXISTS, FORALL, LPAREN, RPAREN)}


@dataclass(frozen=True, slots=True)
class _NumeralLiteral:
    count: int


def _decimal(digits: str, pos: int, what: str) -> int:
    if len(digits) > 1 and digits[0] == "0":
        raise ParseError(f"leading zero in {what}", pos)
    return int(digits)


def _lex(text: str) -> tuple[list, list[int]]:
    items: list = []
    positions: list[int] = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _LEXEME.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if m.group("num") is not None:
            items.append(_NumeralLiteral(_decimal(m.group("d"), i + 3, "numeral")))
        elif m.group("x") is not None:
            n = _decimal(m.group("x"), i + 1, "variable index")
            if n < 1:
                raise ParseError("variable index must be >= 1", i + 1)
            items.append(var_symbol(n))
        elif m.group("a") is not None:
            n = _decimal(m.group("a"), i + 1, "constant index")
            if n < 1:
                raise ParseError("constant index must be >= 1", i + 1)
            items.append(const_symbol(n))
        else:
            items.append(_FIXED_BY_TEXT[m.group(0)])
        positions.append(i)
        i = m.end()
    return items, positions


_TERM_START = frozenset({"0", "0^(d)", "S", "xi", "ai", "("})
_FORMULA_START = frozenset({"~", "E", "A"}) | _TERM_START


class _Parser:
    def __init__(self, items: Sequence, positions: Sequence[int], end: int):
        self.items = items
        self.positions = positions
        self.end = end
        self.i = 0
        self.closing: dict[int, int] = {}
        stack = []
        for k, item in enumerate(items):
            if item == LPAREN:
                stack.append(k)
            elif item == RPAREN and stack:
                self.closing[stack.pop()] = k

    def _here(self) -> int:
        return self.positions[self.i] if self.i < len(self.items) else self.end

    def _peek(self):
        return self.items[self.i] if self.i < len(self.items) else None

    def _fail(self, expected: Iterable[str]):
        item = self._peek()
        what = "end of input" if item is None else f"{item.count if isinstance(item, _NumeralLiteral) else item}"
        raise ParseError(f"unexpected {what}", self._here(), frozenset(expected))

    def _expect(self, sym: Symbol) -> None:
        if self._peek() != sym:
            self._fail({sym.kind})
        self.i += 1

    def _expect_index(self, kind: str) -> int:
        item = self._peek()
        if not (isinstance(item, Symbol) and item.kind == kind):
            self._fail({kind + "i"})
        self.i += 1
        return item.index

    def finish(self) -> None:
        if self.i != len(self.items):
            self._fail({"end of input"})

    def formula(self) -> Formula:
        item = self._peek()
        if item == NEG:
            self.i += 1
            self._expect(LPAREN)
            body = self.formula()
            self._expect(RPAREN)
            return Neg(body)
        if item == EXISTS or item == FORALL:
            self.i += 1
            v = self._expect_index("x")
            self._expect(LPAREN)
            body = self.formula()
            self._expect(RPAREN)
            return Exists(v, body) if item == EXISTS else Forall(v, body)
        if item == LPAREN:
            # A parenthesized group followed by '=' is the left term of an atom.
            close = self.closing.get(self.i)
            if close is None or close + 1 >= len(self.items) or self.items[close + 1] != EQUALS:
                self.i += 1
                left = self.formula()
                op = self._peek()
                if op not in (AND, OR, IMPLIES):
                    self._fail({"&", "|", "->"})
                self.i += 1
                right = self.formula()
                self._expect(RPAREN)
                return {AND: And, OR: Or, IMPLIES: Implies}[op](left, right)
            return self.atom()
        if isinstance(item, _NumeralLiteral) or (
                isinstance(item, Symbol) and item.kind in ("0", "S", "x", "a")):
            return self.atom()
        self._fail(_FORMULA_START)

    def atom(self) -> Equals:
        left = self.term()
        self._expect(EQUALS)
        return Equals(left, self.term())

    def term(self) -> Term:
        # Successor runs are consumed iteratively; decoded numerals can be long.
        n_succ = 0
        while self._peek() == SUCC:
            n_succ += 1
            self.i += 1
        item = self._peek()
        if item == ZERO:
            self.i += 1
            base: Term = Numeral(0)
        elif isinstance(item, _NumeralLiteral):
            self.i += 1
            base = Numeral(item.count)
        elif isinstance(item, Symbol) and item.kind == "x":
            self.i += 1
            base = Var(item.index)
        elif isinstance(item, Symbol) and item.kind == "a":
            self.i += 1
            base = Const(item.index)
        elif item == LPAREN:
            self.i += 1
            left = self.term()
            op = self._peek()
            if op not in (PLUS, TIMES):
                self._fail({"+", "*"})
            self.i += 1
            right = self.term()
            self._expect(RPAREN)
            base = Plus(left, right) if op == PLUS else Times(left, right)
        else:
            self._fail(_TERM_START)
        return succ(base, n_succ) if n_succ else base


def parse(text: str) -> Formula:
    """Parse canonical concrete syntax into a formula.

    >>> parse("Ex1((x1=0^(4)&0=0))")
    Exists(var=1, body=And(left=Equals(left=Var(index=1), right=Numeral(count=4)), right=Equals(left=Numeral(count=0), right=Numeral(count=0))))
    """
    items, positions = _lex(text)
    p = _Parser(items, positions, len(text))
    f = p.formula()
    p.finish()
    return f


def parse_term(text: str) -> Term:
    items, positions = _lex(text)
    p = _Parser(items, positions, len(text))
    t = p.term()
    p.finish()
    return t


def parse_tokens(symbols: Sequence[Symbol]) -> Formula:
    """Parse a symbol sequence; error positions are token indices."""
    p = _Parser(symbols, range(len(symbols)), len(symbols))
    f = p.formula()
    p.finish()
    return f


# --------------------------------------------------------------------------
# Variables, constants, substitution


def free_vars(node: Term | Formula) -> frozenset[int]:
    if isinstance(node, Var):
        return frozenset((node.index,))
    if isinstance(node, (Numeral, Const)):
        return frozenset()
    if isinstance(node, Succ):
        return free_vars(node.arg)
    if isinstance(node, Neg):
        return free_vars(node.body)
    if type(node) in _QUANTIFIERS:
        return free_vars(node.body) - {node.var}
    return free_vars(node.left) | free_vars(node.right)


def variables(node: Term | Formula) -> frozenset[int]:
    """Every variable index occurring in ``node``, bound or free."""
    if isinstance(node, Var):
        return frozenset((node.index,))
    if isinstance(node, (Numeral, Const)):
        return frozenset()
    if isinstance(node, Succ):
        return variables(node.arg)
    if isinstance(node, Neg):
        return variables(node.body)
    if type(node) in _QUANTIFIERS:
        return variables(node.body) | {node.var}
    return variables(node.left) | variables(node.right)


def constants(node: Term | Formula) -> frozenset[int]:
    if isinstance(node, Const):
        return frozenset((node.index,))
    if isinstance(node, (Numeral, Var)):
        return frozenset()
    if isinstance(node, Succ):
        return constants(node.arg)
    if isinstance(node, Neg) or type(node) in _QUANTIFIERS:
        return constants(node.body)
    return constants(node.left) | constants(node.right)


def is_closed(t: Term) -> bool:
    return not free_vars(t)


def _replace(node, target: Var | Const, t: Term):
    # Returns ``node`` itself when nothing changed.
    if node == target:
        return t
    if isinstance(node, (Numeral, Var, Const)):
        return node
    if isinstance(node, Succ):
        arg = _replace(node.arg, target, t)
        return node if arg is node.arg else succ(arg)
    if isinstance(node, Neg):
        body = _replace(node.body, target, t)
        return node if body is node.body else Neg(body)
    if type(node) in _QUANTIFIERS:
        if isinstance(target, Var) and node.var == target.index:
            return node
        body = _replace(node.body, target, t)
        return node if body is node.body else type(node)(node.var, body)
    left = _replace(node.left, target, t)
    right = _replace(node.right, target, t)
    if left is node.left and right is node.right:
        return node
    return type(node)(left, right)


def substitute(f: Formula, var: int, t: Term) -> Formula:
    """Replace the free occurrences of ``x<var>`` in ``f`` by the closed term ``t``."""
    if free_vars(t):
        raise OpenTermError(f"cannot substitute open term {print_term(t)}")
    return _replace(f, Var(var), t)


def replace_constant(node: Term | Formula, index: int, t: Term) -> Term | Formula:
    """Replace every occurrence of ``a<index>`` by ``t``.

    Constants are never bound, so this is plain replacement; the caller must
    make sure variables in ``t`` are not captured.
    """
    return _replace(node, Const(index), t)


def is_class_sign(f: Formula) -> bool:
    """At most x1 free and no added constants."""
    return free_vars(f) <= {1} and not constants(f)

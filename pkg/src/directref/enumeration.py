"""Exhaustive generation of formulas and the enumeration of class signs.

Formulas are ordered by token length, then lexicographically on their
symbol-code sequences.  Variable codes are unbounded, so within one length
that order has infinite ascending chains (``Ex1(0=0)``, ``Ex2(0=0)``, ...).
To get a list in which every class sign has a finite position, formulas are
grouped by *degree* ``max(token length, largest variable index)``; each
degree holds finitely many formulas and is sorted by (length, codes).  For
formulas whose variable indices do not exceed their length this is exactly
the (length, codes) order.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ResourceLimit
from .numbering import symbol_code
from .syntax import (
    And, Const, Equals, Exists, Forall, Formula, Implies, Neg, Numeral, Or, Plus, Term,
    Times, Var, is_class_sign, succ, token_length, tokens, variables,
)

DEFAULT_BUDGET = 2_000_000


def code_key(f: Formula) -> tuple[int, tuple[int, ...]]:
    """Sort key: (token length, symbol codes)."""
    return token_length(f), tuple(symbol_code(s) for s in tokens(f))


@lru_cache(maxsize=None)
def terms_of_length(n: int, max_var: int, max_const: int = 0) -> tuple[Term, ...]:
    """All canonical terms of exactly ``n`` tokens over x1..x<max_var>, a1..a<max_const>."""
    if n < 1:
        return ()
    if n == 1:
        return ((Numeral(0),) + tuple(Var(i) for i in range(1, max_var + 1))
                + tuple(Const(i) for i in range(1, max_const + 1)))
    out: list[Term] = [succ(t) for t in terms_of_length(n - 1, max_var, max_const)]
    for a in range(1, n - 3):
        lefts = terms_of_length(a, max_var, max_const)
        rights = terms_of_length(n - 3 - a, max_var, max_const)
        for l in lefts:
            for r in rights:
                out.append(Plus(l, r))
                out.append(Times(l, r))
    return tuple(out)


@lru_cache(maxsize=None)
def _count_terms(n: int, leaves: int) -> int:
    if n < 1:
        return 0
    if n == 1:
        return leaves
    return _count_terms(n - 1, leaves) + 2 * sum(
        _count_terms(a, leaves) * _count_terms(n - 3 - a, leaves) for a in range(1, n - 3))


@lru_cache(maxsize=None)
def count_formulas(n: int, max_var: int, max_const: int = 0) -> int:
    """``len(formulas_of_length(n, ...))`` computed without generating them."""
    if n < 3:
        return 0
    leaves = 1 + max_var + max_const
    total = sum(_count_terms(a, leaves) * _count_terms(n - 1 - a, leaves) for a in range(1, n - 1))
    total += count_formulas(n - 3, max_var, max_const)
    total += 3 * sum(count_formulas(a, max_var, max_const) * count_formulas(n - 3 - a, max_var, max_const)
                     for a in range(3, n - 5))
    total += 2 * max_var * count_formulas(n - 4, max_var, max_const)
    return total


@lru_cache(maxsize=None)
def formulas_of_length(n: int, max_var: int, max_const: int = 0) -> tuple[Formula, ...]:
    """All canonical formulas of exactly ``n`` tokens, unordered."""
    if n < 3:
        return ()
    out: list[Formula] = []
    for a in range(1, n - 1):
        for l in terms_of_length(a, max_var, max_const):
            for r in terms_of_length(n - 1 - a, max_var, max_const):
                out.append(Equals(l, r))
    out.extend(Neg(f) for f in formulas_of_length(n - 3, max_var, max_const))
    for a in range(3, n - 5):
        lefts = formulas_of_length(a, max_var, max_const)
        rights = formulas_of_length(n - 3 - a, max_var, max_const)
        for l in lefts:
            for r in rights:
                out += (And(l, r), Or(l, r), Implies(l, r))
    for body in formulas_of_length(n - 4, max_var, max_const):
        for v in range(1, max_var + 1):
            out += (Exists(v, body), Forall(v, body))
    return tuple(out)


def enumerate_formulas(max_length: int, max_var: int, max_const: int = 0) -> list[Formula]:
    """Every canonical formula up to ``max_length`` tokens, in (length, codes) order."""
    out: list[Formula] = []
    for n in range(3, max_length + 1):
        out.extend(sorted(formulas_of_length(n, max_var, max_const), key=code_key))
    return out


def _degree(f: Formula) -> int:
    return max(token_length(f), max(variables(f), default=0))


@lru_cache(maxsize=None)
def _class_signs_of_degree(d: int) -> tuple[Formula, ...]:
    found = [f for n in range(3, d + 1) for f in formulas_of_length(n, d)
             if is_class_sign(f) and _degree(f) == d]
    found.sort(key=code_key)
    return tuple(found)


def enumerate_class_signs(count: int, budget: int = DEFAULT_BUDGET) -> list[Formula]:
    """The first ``count`` class signs A1, A2, ...

    >>> [str(f) for f in enumerate_class_signs(4)]
    ['0=0', '0=x1', 'x1=0', 'x1=x1']
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out: list[Formula] = []
    work = 0
    d = 3
    while len(out) < count:
        # Checked before generation so an oversized degree is never materialized.
        work += sum(count_formulas(n, d) for n in range(3, d + 1))
        if work > budget:
            raise ResourceLimit(f"class-sign enumeration exceeded budget of {budget} formulas")
        out.extend(_class_signs_of_degree(d))
        d += 1
    return out[:count]


def class_sign(i: int, budget: int = DEFAULT_BUDGET) -> Formula:
    """A_i, 1-based."""
    if i < 1:
        raise ValueError(f"class-sign index must be >= 1, got {i}")
    return enumerate_class_signs(i, budget)[-1]

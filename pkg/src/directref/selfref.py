"""Directly self-referential sentences.

Three constructions, all without a diagonal substitution function:

* :func:`smullyan_sentence` packs a class sign ``A`` into
  ``Ex1((x1=0^(2k)&A))``; under the nonstandard numbering that sentence's
  code is exactly ``2k``, the numeral it contains.
* :func:`sprime_axiom` gives each class sign ``Ai`` its own constant ``ai``
  and the axiom ``ai=0^(ni)`` where ``ni`` codes ``Ai(ai)``.
* :func:`sstar_fixed_point` uses one constant ``a1`` and one axiom
  ``a1=0^(n)``, ``n`` being the code of the sentence that mentions ``a1``.

The arithmetized provability predicate is not built here; any property
formula in ``x1`` can be plugged in.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .enumeration import DEFAULT_BUDGET, class_sign
from .errors import BadProperty, NotAClassSign, ProofConstructionFailure
from .numbering import DEFAULT_BOUND, GoedelNumber, gn_ext, gn_nonstd, gn_std, smullyan_form
from .proofs import (
    BaseAxiom, ExtraAxiom, Line, ModusPonens, Proof, System, check_proof,
)
from .syntax import (
    Const, Equals, Formula, Implies, Numeral, Var, constants, free_vars, iff, is_class_sign,
    print_formula, replace_constant, substitute, variables,
)


@dataclass(frozen=True)
class SmullyanSentence:
    sentence: Formula
    class_sign: Formula
    k: GoedelNumber
    code: GoedelNumber

    def to_dict(self) -> dict:
        return {
            "sentence": print_formula(self.sentence),
            "class_sign": print_formula(self.class_sign),
            "k": str(self.k),
            "code": str(self.code),
        }


def smullyan_sentence(a: Formula, bound: int = DEFAULT_BOUND) -> SmullyanSentence:
    if not is_class_sign(a):
        raise NotAClassSign(f"{print_formula(a)} is not a class sign")
    k = gn_std(a, bound)
    return SmullyanSentence(smullyan_form(a, 2 * k), a, k, 2 * k)


def smullyan_selfcheck(s: SmullyanSentence, bound: int = DEFAULT_BOUND) -> bool:
    """The numeral in the sentence equals the sentence's own nonstandard code."""
    named = s.sentence.body.left.right.count
    return gn_nonstd(s.sentence, bound) == s.code == named == 2 * gn_std(s.class_sign, bound)


@dataclass(frozen=True)
class SPrimeAxiom:
    index: int
    class_sign: Formula
    instance: Formula
    n: GoedelNumber
    axiom: Formula

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "class_sign": print_formula(self.class_sign),
            "instance": print_formula(self.instance),
            "n": str(self.n),
            "axiom": print_formula(self.axiom),
        }


@lru_cache(maxsize=256)
def sprime_axiom(i: int, bound: int = DEFAULT_BOUND, budget: int = DEFAULT_BUDGET) -> SPrimeAxiom:
    """``ai=0^(ni)`` with ``ni`` the extended code of ``Ai(ai)``."""
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"axiom index must be a positive integer, got {i!r}")
    a = class_sign(i, budget)
    instance = substitute(a, 1, Const(i))
    n = gn_ext(instance, bound)
    return SPrimeAxiom(i, a, instance, n, Equals(Const(i), Numeral(n)))


def sprime_selfcheck(ax: SPrimeAxiom, bound: int = DEFAULT_BOUND) -> bool:
    return (gn_ext(substitute(ax.class_sign, 1, Const(ax.index)), bound) == ax.n
            and ax.axiom == Equals(Const(ax.index), Numeral(ax.n)))


def sprime_system(bound: int = DEFAULT_BOUND, budget: int = DEFAULT_BUDGET) -> System:
    """S': the base system plus ``ai=0^(ni)`` for every i, generated on demand."""

    def extra(i: int) -> Formula | None:
        return sprime_axiom(i, bound, budget).axiom if i >= 1 else None

    def binding(c: int) -> int | None:
        return sprime_axiom(c, bound, budget).n if c >= 1 else None

    return System("Sprime", None, extra, binding)


@dataclass(frozen=True)
class SStarFixedPoint:
    property: Formula
    phi: Formula
    n: GoedelNumber
    axiom: Formula

    def to_dict(self) -> dict:
        return {
            "property": print_formula(self.property),
            "phi": print_formula(self.phi),
            "n": str(self.n),
            "axiom": print_formula(self.axiom),
        }


def sstar_fixed_point(b: Formula, bound: int = DEFAULT_BOUND) -> SStarFixedPoint:
    """Name the sentence ``B(a1)`` by ``a1`` itself.

    ``phi`` is ``b`` with x1 replaced by ``a1`` (``b`` may already use
    ``a1``), ``n`` is its extended code and the single extra axiom is
    ``a1=0^(n)``.
    """
    if not free_vars(b) <= {1}:
        raise BadProperty(f"{print_formula(b)} has free variables other than x1")
    if not constants(b) <= {1}:
        raise BadProperty(f"{print_formula(b)} mentions constants other than a1")
    phi = substitute(b, 1, Const(1))
    n = gn_ext(phi, bound)
    return SStarFixedPoint(b, phi, n, Equals(Const(1), Numeral(n)))


def sstar_selfcheck(fp: SStarFixedPoint, bound: int = DEFAULT_BOUND) -> bool:
    return gn_ext(fp.phi, bound) == fp.n and fp.axiom == Equals(Const(1), Numeral(fp.n))


def sstar_system(fp: SStarFixedPoint) -> System:
    """S*: the base system plus the one axiom ``a1=0^(n)``."""
    return System(
        "Sstar",
        frozenset({1}),
        lambda i: fp.axiom if i == 1 else None,
        lambda c: fp.n if c == 1 else None,
    )


def selfref_biconditional(fp: SStarFixedPoint) -> Proof:
    """An S*-proof of ``phi <-> phi[a1:=0^(n)]``.

    Three lines: the S* axiom, a Leibniz instance over a fresh variable
    standing for ``a1``, and modus ponens.
    """
    fresh = max(variables(fp.phi), default=0) + 1
    template = replace_constant(fp.phi, 1, Var(fresh))
    target = replace_constant(fp.phi, 1, Numeral(fp.n))
    leibniz = BaseAxiom.of("leibniz", F=template, t=Const(1), u=Numeral(fp.n), x=fresh)
    conclusion = iff(fp.phi, target)
    proof = Proof((
        Line(fp.axiom, ExtraAxiom(1)),
        Line(Implies(fp.axiom, conclusion), leibniz),
        Line(conclusion, ModusPonens(0, 1)),
    ))
    verdict = check_proof(sstar_system(fp), proof)
    if not verdict.ok:
        raise ProofConstructionFailure(f"line {verdict.line}: {verdict.reason}")
    return proof


def eq_axiom_code(m: int, bound: int = DEFAULT_BOUND) -> GoedelNumber:
    """Extended code of ``a1=0^(m)`` as a function of ``m``."""
    return gn_ext(Equals(Const(1), Numeral(m)), bound)

"""Hilbert-style proof checking and constant elimination.

A proof is a sequence of lines.  Each line carries a formula and one of four
justifications: an instance of a base schema (given with an explicit
instantiation of its metavariables), an extra axiom of the system, modus
ponens, or generalization.  The checker rebuilds each schema instance and
compares; it never searches.

Base schemas:

    propositional  k, s, contra, and_intro, and_elim_l, and_elim_r,
                   or_intro_l, or_intro_r, or_elim
    quantifier     all_elim, ex_intro (closed instances), all_dist, ex_elim
    equality       refl, sym, trans, cong_succ, cong_plus, cong_times,
                   leibniz: t=u -> (F[x:=t] <-> F[x:=u]) for closed t, u
    arithmetic     q1 ... q7 (Robinson's axioms, universally closed)

Metavariable names fix their sort: ``F G H`` are formulas, ``t u v w`` are
terms and ``x`` is a variable index.

Replacing each added constant by the numeral it is axiomatically equal to
turns a proof in an extended system into a proof in the base system: the
defining axiom ``ai=0^(n)`` becomes the reflexivity instance
``0^(n)=0^(n)`` and every other step survives because all schemas are
closed under replacing a constant by a closed term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Union

from .errors import DirectRefError, ProofFormatError, UnboundConstant
from .syntax import (
    And, Const, Equals, Exists, Forall, Formula, Implies, Neg, Numeral, Or, Plus, Succ, Term,
    Times, Var, constants, free_vars, iff, parse, parse_term, print_formula, print_term,
    replace_constant, substitute, succ,
)

# --------------------------------------------------------------------------
# Proof objects

FORMULA_METAVARS = frozenset("FGH")
TERM_METAVARS = frozenset("tuvw")
VAR_METAVARS = frozenset("x")


@dataclass(frozen=True, slots=True)
class BaseAxiom:
    schema: str
    inst: tuple[tuple[str, Any], ...] = ()

    @classmethod
    def of(cls, schema: str, **inst) -> BaseAxiom:
        return cls(schema, tuple(sorted(inst.items())))

    @property
    def bindings(self) -> dict[str, Any]:
        return dict(self.inst)


@dataclass(frozen=True, slots=True)
class ExtraAxiom:
    index: int


@dataclass(frozen=True, slots=True)
class ModusPonens:
    """From line ``minor`` (F) and line ``major`` (F->G) infer G."""

    minor: int
    major: int


@dataclass(frozen=True, slots=True)
class Generalization:
    line: int
    var: int


Justification = Union[BaseAxiom, ExtraAxiom, ModusPonens, Generalization]


@dataclass(frozen=True, slots=True)
class Line:
    formula: Formula
    just: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[Line, ...]

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def conclusion(self) -> Formula | None:
        return self.lines[-1].formula if self.lines else None

    def constants(self) -> frozenset[int]:
        out: set[int] = set()
        for line in self.lines:
            out |= constants(line.formula)
            if isinstance(line.just, BaseAxiom):
                for _, value in line.just.inst:
                    if not isinstance(value, int):
                        out |= constants(value)
        return frozenset(out)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    line: int | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "line": self.line, "reason": self.reason}


# --------------------------------------------------------------------------
# Systems


@dataclass(frozen=True)
class System:
    """An axiom set: the base schemas plus (possibly infinitely many) extras.

    ``allowed_constants`` is the set of added constants in the language;
    None means all of a1, a2, ...  ``extra_axiom(i)`` returns the i-th extra
    axiom or None, and ``binding(c)`` the numeral value the extras give to
    constant ``c`` (None if unbound).
    """

    name: str
    allowed_constants: frozenset[int] | None = frozenset()
    extra_axiom: Callable[[int], Formula | None] = field(default=lambda i: None, compare=False)
    binding: Callable[[int], int | None] = field(default=lambda c: None, compare=False)

    @property
    def language(self) -> str:
        return "L" if self.allowed_constants == frozenset() else "L+constants"

    def allows(self, f: Formula) -> bool:
        if self.allowed_constants is None:
            return True
        return constants(f) <= self.allowed_constants


SYSTEM_S = System("S")


# --------------------------------------------------------------------------
# Schemas


class _Reject(Exception):
    pass


_ROBINSON = {
    "q1": Forall(1, Neg(Equals(succ(Var(1)), Numeral(0)))),
    "q2": Forall(1, Forall(2, Implies(Equals(succ(Var(1)), succ(Var(2))), Equals(Var(1), Var(2))))),
    "q3": Forall(1, Or(Equals(Var(1), Numeral(0)), Exists(2, Equals(Var(1), succ(Var(2)))))),
    "q4": Forall(1, Equals(Plus(Var(1), Numeral(0)), Var(1))),
    "q5": Forall(1, Forall(2, Equals(Plus(Var(1), succ(Var(2))), succ(Plus(Var(1), Var(2)))))),
    "q6": Forall(1, Equals(Times(Var(1), Numeral(0)), Numeral(0))),
    "q7": Forall(1, Forall(2, Equals(Times(Var(1), succ(Var(2))), Plus(Times(Var(1), Var(2)), Var(1))))),
}


def _closed(name: str, t: Term) -> Term:
    if free_vars(t):
        raise _Reject(f"{name}:={print_term(t)} must be a closed term")
    return t


def _not_free(x: int, f: Formula, name: str) -> None:
    if x in free_vars(f):
        raise _Reject(f"x{x} occurs free in {name}")


def _all_dist(F, G, x):
    _not_free(x, F, "F")
    return Implies(Forall(x, Implies(F, G)), Implies(F, Forall(x, G)))


def _ex_elim(F, G, x):
    _not_free(x, G, "G")
    return Implies(Forall(x, Implies(F, G)), Implies(Exists(x, F), G))


def _leibniz(F, t, u, x):
    t, u = _closed("t", t), _closed("u", u)
    return Implies(Equals(t, u), iff(substitute(F, x, t), substitute(F, x, u)))


SCHEMAS: dict[str, tuple[str, Callable[..., Formula]]] = {
    "k": ("FG", lambda F, G: Implies(F, Implies(G, F))),
    "s": ("FGH", lambda F, G, H: Implies(Implies(F, Implies(G, H)),
                                         Implies(Implies(F, G), Implies(F, H)))),
    "contra": ("FG", lambda F, G: Implies(Implies(Neg(F), Neg(G)), Implies(G, F))),
    "and_intro": ("FG", lambda F, G: Implies(F, Implies(G, And(F, G)))),
    "and_elim_l": ("FG", lambda F, G: Implies(And(F, G), F)),
    "and_elim_r": ("FG", lambda F, G: Implies(And(F, G), G)),
    "or_intro_l": ("FG", lambda F, G: Implies(F, Or(F, G))),
    "or_intro_r": ("FG", lambda F, G: Implies(G, Or(F, G))),
    "or_elim": ("FGH", lambda F, G, H: Implies(Implies(F, H), Implies(Implies(G, H), Implies(Or(F, G), H)))),
    "all_elim": ("Ftx", lambda F, t, x: Implies(Forall(x, F), substitute(F, x, _closed("t", t)))),
    "ex_intro": ("Ftx", lambda F, t, x: Implies(substitute(F, x, _closed("t", t)), Exists(x, F))),
    "all_dist": ("FGx", _all_dist),
    "ex_elim": ("FGx", _ex_elim),
    "refl": ("t", lambda t: Equals(t, t)),
    "sym": ("tu", lambda t, u: Implies(Equals(t, u), Equals(u, t))),
    "trans": ("tuv", lambda t, u, v: Implies(Equals(t, u), Implies(Equals(u, v), Equals(t, v)))),
    "cong_succ": ("tu", lambda t, u: Implies(Equals(t, u), Equals(succ(t), succ(u)))),
    "cong_plus": ("tuvw", lambda t, u, v, w: Implies(Equals(t, u), Implies(Equals(v, w), Equals(Plus(t, v), Plus(u, w))))),
    "cong_times": ("tuvw", lambda t, u, v, w: Implies(Equals(t, u), Implies(Equals(v, w), Equals(Times(t, v), Times(u, w))))),
    "leibniz": ("Ftux", _leibniz),
}
for _name, _axiom in _ROBINSON.items():
    SCHEMAS[_name] = ("", lambda _a=_axiom: _a)


def _is_term(value) -> bool:
    return isinstance(value, (Numeral, Var, Const, Succ, Plus, Times))


def schema_instance(schema: str, inst: Mapping[str, Any]) -> Formula:
    """Build the instance of ``schema`` under ``inst``; raises ValueError if ill-formed."""
    if schema not in SCHEMAS:
        raise ValueError(f"unknown schema {schema!r}")
    metavars, build = SCHEMAS[schema]
    if set(inst) != set(metavars):
        raise ValueError(f"schema {schema} takes metavariables {sorted(metavars)}, got {sorted(inst)}")
    for name, value in inst.items():
        if name in VAR_METAVARS:
            ok = isinstance(value, int) and not isinstance(value, bool) and value >= 1
        elif name in TERM_METAVARS:
            ok = _is_term(value)
        else:
            ok = not isinstance(value, int) and not _is_term(value)
        if not ok:
            raise ValueError(f"metavariable {name} has the wrong sort: {value!r}")
    try:
        return build(**inst)
    except _Reject as e:
        raise ValueError(f"side condition of {schema} fails: {e}") from None


# --------------------------------------------------------------------------
# Checking


def _check_line(sys: System, lines: tuple[Line, ...], n: int) -> str | None:
    line = lines[n]
    f, just = line.formula, line.just
    if not sys.allows(f):
        return f"constants {sorted(constants(f))} are not in the language of {sys.name}"
    if isinstance(just, BaseAxiom):
        try:
            expected = schema_instance(just.schema, just.bindings)
        except (ValueError, DirectRefError) as e:
            return str(e)
        if expected != f:
            return f"not an instance of {just.schema}: the instantiation gives {print_formula(expected)}"
        return None
    if isinstance(just, ExtraAxiom):
        try:
            axiom = sys.extra_axiom(just.index)
        except (ValueError, DirectRefError) as e:
            return f"extra axiom {just.index} unavailable: {e}"
        if axiom is None:
            return f"{sys.name} has no extra axiom {just.index}"
        if axiom != f:
            return f"extra axiom {just.index} of {sys.name} is {print_formula(axiom)}"
        return None
    if isinstance(just, ModusPonens):
        for k in (just.minor, just.major):
            if not 0 <= k < n:
                return f"cited line {k} does not precede line {n}"
        if lines[just.major].formula != Implies(lines[just.minor].formula, f):
            return f"line {just.major} is not (line {just.minor} -> this line)"
        return None
    if isinstance(just, Generalization):
        if not 0 <= just.line < n:
            return f"cited line {just.line} does not precede line {n}"
        if f != Forall(just.var, lines[just.line].formula):
            return f"not the generalization of line {just.line} over x{just.var}"
        return None
    return f"unknown justification {just!r}"


def check_proof(sys: System, p: Proof) -> Verdict:
    """Accept iff every line is justified; otherwise report the first bad line."""
    if not p.lines:
        return Verdict(False, None, "empty proof")
    for n in range(len(p.lines)):
        reason = _check_line(sys, p.lines, n)
        if reason is not None:
            return Verdict(False, n, reason)
    return Verdict(True)


# --------------------------------------------------------------------------
# Constant elimination


def translate_formula(f: Formula | Term, bindings: Mapping[int, int]) -> Formula | Term:
    for c in sorted(constants(f)):
        if c not in bindings:
            raise UnboundConstant(f"no numeral bound to a{c}")
        f = replace_constant(f, c, Numeral(bindings[c]))
    return f


def translate_proof(p: Proof, bindings: Mapping[int, int]) -> Proof:
    """Replace every constant ``ai`` by ``0^(bindings[i])`` throughout ``p``.

    Extra-axiom lines become reflexivity instances; other justifications are
    kept, with their instantiations translated the same way.
    """
    if not p.constants() and not any(isinstance(l.just, ExtraAxiom) for l in p.lines):
        return p
    out = []
    for line in p.lines:
        f = translate_formula(line.formula, bindings)
        just = line.just
        if isinstance(just, ExtraAxiom):
            just = BaseAxiom.of("refl", t=f.left if isinstance(f, Equals) else Numeral(0))
        elif isinstance(just, BaseAxiom):
            just = BaseAxiom(just.schema, tuple(
                (k, v if isinstance(v, int) else translate_formula(v, bindings))
                for k, v in just.inst))
        out.append(Line(f, just))
    return Proof(tuple(out))


@dataclass(frozen=True)
class ConservativityVerdict:
    extended: Verdict
    base: Verdict | None = None
    conclusion_preserved: bool = False
    translated: Proof | None = None

    @property
    def ok(self) -> bool:
        return self.extended.ok and self.base is not None and self.base.ok and self.conclusion_preserved

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "extended": self.extended.to_dict(),
            "base": None if self.base is None else self.base.to_dict(),
            "conclusion_preserved": self.conclusion_preserved,
        }


def canonical_bindings(sys: System, p: Proof) -> dict[int, int]:
    out = {}
    for c in sorted(p.constants()):
        n = sys.binding(c)
        if n is None:
            raise UnboundConstant(f"{sys.name} gives no value to a{c}")
        out[c] = n
    return out


def conservativity_check(sys_ext: System, p: Proof) -> ConservativityVerdict:
    """Check ``p`` in ``sys_ext``, eliminate its constants and re-check in S."""
    extended = check_proof(sys_ext, p)
    if not extended.ok:
        return ConservativityVerdict(extended)
    bindings = canonical_bindings(sys_ext, p)
    translated = translate_proof(p, bindings)
    base = check_proof(SYSTEM_S, translated)
    preserved = translate_formula(p.conclusion, bindings) == translated.conclusion
    return ConservativityVerdict(extended, base, preserved, translated)


# --------------------------------------------------------------------------
# JSON


def _value_to_json(name: str, value):
    if name in VAR_METAVARS:
        return value
    if name in TERM_METAVARS:
        return print_term(value)
    return print_formula(value)


def just_to_json(just: Justification) -> dict:
    if isinstance(just, BaseAxiom):
        return {"rule": "axiom", "schema": just.schema,
                "inst": {k: _value_to_json(k, v) for k, v in just.inst}}
    if isinstance(just, ExtraAxiom):
        return {"rule": "extra", "index": just.index}
    if isinstance(just, ModusPonens):
        return {"rule": "mp", "minor": just.minor, "major": just.major}
    return {"rule": "gen", "line": just.line, "var": just.var}


def proof_to_json(p: Proof) -> list[dict]:
    return [{"formula": print_formula(l.formula), "just": just_to_json(l.just)} for l in p.lines]


def _int_field(d: dict, key: str, minimum: int = 0) -> int:
    v = d.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise ProofFormatError(f"field {key!r} must be an integer >= {minimum}, got {v!r}")
    return v


def _just_from_json(d) -> Justification:
    if not isinstance(d, dict):
        raise ProofFormatError(f"justification must be an object, got {d!r}")
    rule = d.get("rule")
    if rule == "axiom":
        schema = d.get("schema")
        inst = d.get("inst", {})
        if not isinstance(schema, str) or not isinstance(inst, dict):
            raise ProofFormatError("axiom justification needs 'schema' (string) and 'inst' (object)")
        values = {}
        for k, v in inst.items():
            if k in VAR_METAVARS:
                values[k] = _int_field(inst, k, 1)
            elif k in TERM_METAVARS or k in FORMULA_METAVARS:
                if not isinstance(v, str):
                    raise ProofFormatError(f"metavariable {k} must be given as text")
                values[k] = parse_term(v) if k in TERM_METAVARS else parse(v)
            else:
                raise ProofFormatError(f"unknown metavariable {k!r}")
        return BaseAxiom.of(schema, **values)
    if rule == "extra":
        return ExtraAxiom(_int_field(d, "index", 1))
    if rule == "mp":
        return ModusPonens(_int_field(d, "minor"), _int_field(d, "major"))
    if rule == "gen":
        return Generalization(_int_field(d, "line"), _int_field(d, "var", 1))
    raise ProofFormatError(f"unknown rule {rule!r}")


def proof_from_json(data) -> Proof:
    """Read the JSON line array; malformed input raises ProofFormatError."""
    if not isinstance(data, list):
        raise ProofFormatError("a proof is a JSON array of lines")
    lines = []
    for n, item in enumerate(data):
        if not isinstance(item, dict) or not isinstance(item.get("formula"), str):
            raise ProofFormatError(f"line {n} needs a 'formula' string")
        try:
            lines.append(Line(parse(item["formula"]), _just_from_json(item.get("just"))))
        except DirectRefError as e:
            if isinstance(e, ProofFormatError):
                raise
            raise ProofFormatError(f"line {n}: {e}") from e
    return Proof(tuple(lines))

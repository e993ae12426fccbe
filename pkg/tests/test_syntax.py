import pytest
from hypothesis import given

from directref.enumeration import enumerate_formulas
from directref.errors import OpenTermError, ParseError
from directref.syntax import (
    And, Const, Equals, Exists, Forall, Neg, Numeral, Plus, Succ, Var, free_vars,
    is_class_sign, iff, parse, parse_term, print_formula, substitute, succ, token_length,
    tokens,
)

from strategies import closed_terms, formulas


@pytest.mark.parametrize("text, expected", [
    ("0=0", Equals(Numeral(0), Numeral(0))),
    ("Ex1((x1=0^(4)&0=0))",
     Exists(1, And(Equals(Var(1), Numeral(4)), Equals(Numeral(0), Numeral(0))))),
    ("~(a1=0)", Neg(Equals(Const(1), Numeral(0)))),
    ("SSS0=0", Equals(Numeral(3), Numeral(0))),
    ("S0^(2)=Sx3", Equals(Numeral(3), Succ(Var(3)))),
    ("(0+x1)=(a2*0)", Equals(Plus(Numeral(0), Var(1)), parse_term("(a2*0)"))),
    ("((0+0)=0->Ax2(~(x2=0)))", parse("((0+0)=0->Ax2(~(x2=0)))")),
])
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("f, text", [
    (Equals(Numeral(0), Numeral(0)), "0=0"),
    (Equals(Numeral(3), Var(1)), "0^(3)=x1"),
    (Equals(Succ(Plus(Var(1), Numeral(1))), Const(2)), "S(x1+0^(1))=a2"),
    (Forall(2, Neg(Equals(Var(2), Numeral(0)))), "Ax2(~(x2=0))"),
])
def test_print(f, text):
    assert print_formula(f) == text
    assert parse(text) == f


def test_huge_numeral_prints_compactly():
    n = 10**400
    assert print_formula(Equals(Const(1), Numeral(n))) == f"a1=0^({n})"
    assert token_length(Numeral(n)) == n + 1


def test_print_normalizes_successor_chains():
    assert print_formula(parse("SSS0=0")) == "0^(3)=0"


@pytest.mark.parametrize("text, position", [
    ("0=", 2),
    ("(0=0&0=0", 8),
    ("0=0)", 3),
    ("x0=0", 1),
    ("Ex1(0=0", 7),
    ("0 # 0", 2),
    ("(0+0)", 2),
    ("0^(01)=0", 3),
])
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == position


def test_syntax_error_expected_set():
    with pytest.raises(ParseError) as info:
        parse("(0=0 0=0)")
    assert info.value.expected == {"&", "|", "->"}


def test_whitespace_is_ignored():
    assert parse(" Ex1 ( x1 = 0 ) ") == parse("Ex1(x1=0)")


def test_succ_constructor_keeps_canonical_form():
    assert succ(Numeral(4)) == Numeral(5)
    assert succ(Var(1), 2) == Succ(Succ(Var(1)))
    with pytest.raises(ValueError):
        Succ(Numeral(0))


def test_tokens_expand_numerals_prefix_successors():
    assert [str(s) for s in tokens(parse("0^(2)=a1"))] == ["S", "S", "0", "=", "a1"]


def test_iff_is_written_out():
    f, g = parse("0=0"), parse("x1=0")
    assert print_formula(iff(f, g)) == "((0=0->x1=0)&(x1=0->0=0))"


@pytest.mark.parametrize("text, fv", [
    ("0=0", set()),
    ("x1=0", {1}),
    ("Ex1((x1=0^(4)&x2=0))", {2}),
    ("(Ax3(x3=x1)|x3=0)", {1, 3}),
])
def test_free_vars(text, fv):
    assert free_vars(parse(text)) == fv


@pytest.mark.parametrize("f, var, t, expected", [
    ("x1=0", 1, Const(1), "a1=0"),
    ("0=0", 1, Const(1), "0=0"),
    ("Ex1(x1=0)", 1, Numeral(2), "Ex1(x1=0)"),
    ("(x1=0&Ex1(x1=x1))", 1, Numeral(2), "(0^(2)=0&Ex1(x1=x1))"),
    ("Sx1=x2", 1, Numeral(2), "0^(3)=x2"),
])
def test_substitute(f, var, t, expected):
    assert substitute(parse(f), var, t) == parse(expected)


def test_vacuous_substitution_returns_same_object():
    f = parse("Ex1((x1=0&x2=0))")
    assert substitute(f, 1, Const(3)) is f


def test_substitute_rejects_open_terms():
    with pytest.raises(OpenTermError):
        substitute(parse("x1=0"), 1, Var(2))


@pytest.mark.parametrize("text, expected", [
    ("x1=0", True), ("a1=0", False), ("x2=0", False), ("Ex2(x2=x1)", True), ("0=0", True),
])
def test_is_class_sign(text, expected):
    assert is_class_sign(parse(text)) is expected


def test_round_trip_exhaustive_to_length_7():
    for f in enumerate_formulas(7, 7, 2):
        assert parse(print_formula(f)) == f


@given(formulas)
def test_round_trip_random(f):
    text = print_formula(f)
    assert parse(text) == f
    assert print_formula(parse(text)) == text


@given(formulas, closed_terms)
def test_substitution_removes_x1(f, t):
    g = substitute(f, 1, t)
    assert free_vars(g) == free_vars(f) - {1}


@given(formulas)
def test_single_symbol_substitution_keeps_length(f):
    assert token_length(substitute(f, 1, Const(7))) == token_length(f)

"""Hypothesis strategies for terms and formulas."""

from hypothesis import strategies as st

from directref.syntax import (
    And, Const, Equals, Exists, Forall, Implies, Neg, Numeral, Or, Plus, Succ, Times, Var,
)

indices = st.integers(min_value=1, max_value=12)

leaf_terms = st.one_of(
    st.builds(Numeral, st.integers(min_value=0, max_value=10**30)),
    st.builds(Var, indices),
    st.builds(Const, indices),
)


def _extend_terms(children):
    non_numeral = children.filter(lambda t: not isinstance(t, Numeral))
    return st.one_of(
        st.builds(Succ, non_numeral),
        st.builds(Plus, children, children),
        st.builds(Times, children, children),
    )


terms = st.recursive(leaf_terms, _extend_terms, max_leaves=6)


def _extend_formulas(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
        st.builds(Exists, indices, children),
        st.builds(Forall, indices, children),
    )


formulas = st.recursive(st.builds(Equals, terms, terms), _extend_formulas, max_leaves=6)

closed_terms = st.recursive(
    st.one_of(st.builds(Numeral, st.integers(0, 50)), st.builds(Const, indices)),
    lambda c: st.one_of(st.builds(Plus, c, c), st.builds(Times, c, c)),
    max_leaves=4,
)

"""Gödel numberings and directly self-referential sentences of arithmetic."""

__version__ = "0.1.0"

from .enumeration import class_sign, enumerate_class_signs, enumerate_formulas
from .numbering import (
    DEFAULT_BOUND, Scheme, decode, decode_ext, decode_nonstd, decode_std, encode, gn_ext,
    gn_nonstd, gn_std,
)
from .proofs import (
    SYSTEM_S, BaseAxiom, ExtraAxiom, Generalization, Line, ModusPonens, Proof, System,
    Verdict, check_proof, conservativity_check, translate_proof,
)
from .selfref import (
    eq_axiom_code, selfref_biconditional, smullyan_sentence, sprime_axiom, sprime_system,
    sstar_fixed_point, sstar_system,
)
from .syntax import (
    free_vars, is_class_sign, parse, parse_term, print_formula, substitute,
)

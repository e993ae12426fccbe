"""Acceptance suite: one test per criterion.

Each test prints a ``[PASS]``/``[FAIL]`` line, and the terminal summary
(see conftest.py) lists all criteria at the end of the run.
"""

import random
import time

import pytest

from directref.enumeration import (
    enumerate_class_signs, enumerate_formulas, formulas_of_length, terms_of_length,
)
from directref.numbering import (
    decode_ext, decode_nonstd, decode_std, gn_ext, gn_nonstd, gn_std,
)
from directref.proofs import (
    SYSTEM_S, BaseAxiom, ExtraAxiom, ModusPonens, check_proof, conservativity_check,
)
from directref.selfref import (
    selfref_biconditional, smullyan_sentence, sprime_axiom, sprime_system, sstar_fixed_point,
    sstar_system,
)
from directref.syntax import Const, Numeral, parse, substitute

from clicases import CASES, check_case
from proofgen import random_sprime_proof
from test_numbering import oracle

PROPERTIES = [
    "x1=0",
    "~(x1=0)",
    "0=0",
    "Ex2(x1=Sx2)",
    "Ax2((x2+x1)=x1)",
    "(x1=0|~(x1=0))",
    "(x1=a1->Sx1=Sa1)",
    "Ex2((x1=(x2*0^(2))&~(x2=0)))",
    "Ax1(x1=x1)",
    "~(Ex2((x2+x2)=x1))",
]


@pytest.fixture(scope="module")
def formulas():
    # Every canonical L-formula of at most 7 tokens over x1..x7.
    return enumerate_formulas(7, 7)


@pytest.fixture(scope="module")
def smullyan_sentences():
    return [smullyan_sentence(a) for a in enumerate_class_signs(20)]


def report(number, title, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


@pytest.mark.criterion(1, "parity of standard codes, length <= 7, < 30 s")
def test_parity():
    formulas_of_length.cache_clear()
    terms_of_length.cache_clear()
    t0 = time.perf_counter()
    formulas = enumerate_formulas(7, 7)
    even = [f for f in formulas if gn_std(f) % 2 == 0]
    elapsed = time.perf_counter() - t0
    report(1, "parity", not even and elapsed < 30 and len(formulas) == 4096,
           f"{len(formulas)} formulas, {len(even)} even, {elapsed:.2f}s")


@pytest.mark.criterion(2, "decode . encode = id for std/ext/nonstd, < 60 s")
def test_round_trips(formulas, smullyan_sentences):
    t0 = time.perf_counter()
    with_constants = [f for f in enumerate_formulas(7, 2, 2) if "a" in str(f)]
    sigmas = [s.sentence for s in smullyan_sentences]
    bad = [f for f in formulas if decode_std(gn_std(f)) != f]
    # The sentences' numerals are far past any expansion bound, so only the
    # nonstandard scheme (which never expands them) can code them.
    bad += [f for f in formulas + with_constants if decode_ext(gn_ext(f)) != f]
    bad += [f for f in formulas + sigmas if decode_nonstd(gn_nonstd(f)) != f]
    elapsed = time.perf_counter() - t0
    report(2, "round trips", not bad and elapsed < 60,
           f"{len(formulas)} + {len(with_constants)} with constants + {len(sigmas)} sentences, "
           f"{len(bad)} failures, {elapsed:.2f}s")


@pytest.mark.criterion(3, "self-coding sentences for the first 20 class signs")
def test_smullyan_fixed_point(smullyan_sentences):
    bad = []
    for s in smullyan_sentences:
        embedded = s.sentence.body.left.right.count
        if not gn_nonstd(s.sentence) == 2 * gn_std(s.class_sign) == embedded:
            bad.append(str(s.class_sign))
    first = smullyan_sentences[0]
    anchor = (str(first.class_sign) == "0=0" and first.code == 82031250 == 2 * oracle([1, 9, 1])
              and gn_nonstd(first.sentence) == 82031250)
    report(3, "fixed point", not bad and anchor and len(smullyan_sentences) == 20,
           f"{len(bad)} failures, anchor {'ok' if anchor else 'wrong'}")


@pytest.mark.criterion(4, "nonstandard numbering is injective")
def test_injectivity(formulas, smullyan_sentences):
    universe = formulas + [s.sentence for s in smullyan_sentences]
    codes = [gn_nonstd(f) for f in universe]
    report(4, "injectivity", len(set(universe)) == len(universe) == len(set(codes)),
           f"{len(universe)} formulas, {len(set(codes))} distinct codes")


@pytest.mark.criterion(5, "S' axioms recompute for i = 1..10")
def test_sprime_axioms():
    bad = []
    for i in range(1, 11):
        ax = sprime_axiom(i)
        n = gn_ext(substitute(ax.class_sign, 1, Const(i)))
        if n != ax.n or str(ax.axiom) != f"a{i}=0^({n})":
            bad.append(i)
    report(5, "S' axioms", not bad, f"failures at {bad}" if bad else "10 axioms")


@pytest.mark.criterion(6, ">= 100 random S'-proofs are conservative, < 60 s")
def test_conservativity():
    t0 = time.perf_counter()
    system = sprime_system()
    corpus = [random_sprime_proof(random.Random(seed)) for seed in range(120)]
    failures = [i for i, p in enumerate(corpus)
                if not (check_proof(system, p).ok and conservativity_check(system, p).ok)]
    elapsed = time.perf_counter() - t0
    justs = [line.just for p in corpus for line in p.lines]
    mixed = (any(isinstance(j, ExtraAxiom) for j in justs)
             and any(isinstance(j, BaseAxiom) and j.schema == "leibniz" for j in justs)
             and any(isinstance(j, ModusPonens) for j in justs))
    every_proof_uses_constants = all(p.constants() for p in corpus)
    report(6, "conservativity",
           not failures and mixed and every_proof_uses_constants and elapsed < 60,
           f"{len(corpus)} proofs, {len(failures)} failures, {elapsed:.2f}s")


@pytest.mark.criterion(7, "S* self-reference biconditional end to end, 10 properties")
def test_self_reference_lemma():
    bad = []
    for text in PROPERTIES:
        fp = sstar_fixed_point(parse(text))
        proof = selfref_biconditional(fp)
        system = sstar_system(fp)
        cv = conservativity_check(system, proof)
        ok = (gn_ext(fp.phi) == fp.n
              and check_proof(system, proof).ok
              and cv.ok and check_proof(SYSTEM_S, cv.translated).ok
              and proof.conclusion.left.left == fp.phi)
        if not ok:
            bad.append(text)
    report(7, "self-reference lemma", not bad and len(PROPERTIES) == 10,
           f"failures: {bad}" if bad else f"{len(PROPERTIES)} properties")


@pytest.mark.criterion(8, "CLI golden files and exit codes")
def test_cli_contract():
    results = [(c.name, *check_case(c)) for c in CASES]
    bad = [f"{name}: {why}" for name, ok, why in results if not ok]
    report(8, "CLI contract", not bad, "; ".join(bad) if bad else f"{len(CASES)} cases")

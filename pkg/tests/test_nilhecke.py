import pytest

from artifact.grbasis import BoxShape
from artifact.lattice import transfer_via_trace
from artifact.nilhecke import cyclic_words, transfer_from_cyclic_words, verify_hecke_relations

from conftest import all_shapes

VARIANTS = ("rho_t", "rho_T_vee", "rho_t_prime", "pi_bar", "upsilon",
            "nil_coxeter", "nil_coxeter_vee", "bold_s")


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("N", [3, 4, 5])
def test_relations(variant, N):
    rep = verify_hecke_relations(variant, N)
    assert rep.passed, rep.counterexample


@pytest.mark.parametrize("variant", ["rho_t", "nil_coxeter", "upsilon"])
def test_relations_with_q(variant):
    assert verify_hecke_relations(variant, 4, q=True).passed


def test_cyclic_word_counts():
    from math import comb
    for N in range(2, 7):
        for r in range(1, N):
            assert len(list(cyclic_words(N, r, "anticlockwise"))) == comb(N, r)


@pytest.mark.parametrize("shape", all_shapes(5, 2))
def test_words_equal_trace(shape):
    for kind in ("H", "E"):
        trace = transfer_via_trace(kind, shape)
        for r, op in trace.items():
            if r < shape.N:
                assert transfer_from_cyclic_words(r, kind, shape) == op

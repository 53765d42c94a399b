import pytest

from artifact.grbasis import BoxShape, partitions
from artifact.transfer import (factorial_coeffs, factorial_via_det, pieri_chevalley, pieri_operator,
                               plain_coeffs, plain_via_factorial, route_identity)

from conftest import all_shapes


@pytest.mark.parametrize("shape", all_shapes(6))
def test_three_constructions_agree(shape):
    rep = route_identity(shape)
    assert rep.passed, rep.counterexample


@pytest.mark.parametrize("shape", all_shapes(5, 2))
def test_factorial_transforms_roundtrip(shape):
    for kind in ("H", "E"):
        bound = shape.k if kind == "H" else shape.n
        fac = factorial_coeffs(kind, shape)
        plain = plain_coeffs(kind, shape)
        for r in range(1, bound + 1):
            assert factorial_via_det(kind, shape, r) == fac[r]
            assert plain_via_factorial(kind, shape, r) == plain[r]


@pytest.mark.parametrize("shape", all_shapes(6, 2))
def test_pieri_is_first_factorial_coefficient(shape):
    if shape.k == 0:
        pytest.skip("Ht_1 needs k >= 1")
    assert pieri_operator(shape) == factorial_coeffs("H", shape)[1]


def test_pieri_example(P24):
    out = pieri_chevalley(P24(2, 1))
    assert set(out) == {(P24(2, 2), 0), (P24(2, 1), 0), (P24(), 1)}

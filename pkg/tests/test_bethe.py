import numpy as np
import pytest

from artifact.bethe import (BetheCollision, continue_roots, full_report, gkm_check, random_t,
                            residue_gw, resolution_of_identity, solve_bae, spectral_checks)
from artifact.grbasis import BoxShape, make, partitions
from artifact.qhring import evaluate, gw

from conftest import all_shapes


def test_q_zero_roots_are_t():
    tv = random_t(5, 3)
    ctx = solve_bae(BoxShape(2, 3), tv, q=0.0)
    assert np.allclose(ctx.roots, tv)


@pytest.mark.parametrize("n", [0, 1])
def test_single_site(n):
    tv = np.array([0.3 - 0.4j])
    q = 0.8 + 0.1j
    ctx = solve_bae(BoxShape.from_nN(n, 1), tv, q)
    assert abs(ctx.roots[0] - (tv[0] - (-1) ** n * q)) < 1e-12


def test_roots_are_companion_roots():
    tv = random_t(4, 7)
    ctx = solve_bae(BoxShape(2, 2), tv, 1.3)
    p = np.poly(tv)
    p[-1] += 1.3
    oracle = np.sort_complex(np.roots(p))
    assert np.allclose(np.sort_complex(ctx.roots), oracle, atol=1e-10)
    assert np.max(np.abs(ctx.residuals())) < 1e-10


def test_two_schedules_same_labels():
    tv = random_t(5, 2)
    a = continue_roots(tv, 2, 1.0, 64)
    b = continue_roots(tv, 2, 1.0, 23)
    assert np.max(np.abs(a - b)) < 1e-10


def test_equal_t_rejected():
    with pytest.raises(ValueError):
        solve_bae(BoxShape(1, 2), [1.0, 1.0, 2.0])


def test_collision_is_a_runtime_error():
    assert issubclass(BetheCollision, RuntimeError)


def test_small_case_n1_N3():
    ctx = solve_bae(BoxShape(1, 2), random_t(3, 5))
    rep = spectral_checks(ctx)
    assert rep["passed"], rep["failed"]


def test_resolution_of_identity():
    ctx = solve_bae(BoxShape(2, 2), random_t(4, 0))
    R = resolution_of_identity(ctx)
    assert np.allclose(R, np.eye(len(R)), atol=1e-10)


def test_residue_golden_value(P24):
    tv = random_t(4, 11)
    got = residue_gw(P24(2, 1), P24(2, 1), P24(2, 2), d=0, tvals=tv)
    T = tv[::-1]
    assert abs(got - (T[0] - T[3]) ** 2) < 1e-9 * max(1, abs(got))


def test_residue_unit(P24):
    tv = random_t(4, 4)
    for mu in partitions(P24().shape):
        for nu in partitions(P24().shape):
            got = residue_gw(P24(), mu, nu, tvals=tv)
            assert abs(got - (1 if mu == nu else 0)) < 1e-10


def test_residue_matches_exact_with_q(P24):
    tv = random_t(4, 9)
    for d in range(2):
        got = residue_gw(P24(2, 1), P24(2, 1), P24(1), d=d, tvals=tv)
        ex = evaluate(gw(P24(2, 1), P24(2, 1), P24(1), d), tv)
        assert abs(got - ex) < 1e-9 * max(1, abs(ex))


def test_gkm_printed_convention_fails():
    ctx = solve_bae(BoxShape(2, 2), random_t(4, 0))
    assert gkm_check(ctx)["passed"]
    assert not gkm_check(ctx, printed=True)["passed"]


@pytest.mark.parametrize("shape", all_shapes(5))
def test_full_report(shape):
    rep = full_report(shape)
    assert rep["passed"], rep["failed"]


@pytest.mark.parametrize("seed", range(1, 5))
def test_full_report_other_seeds(seed):
    rep = full_report(BoxShape(2, 3), q=0.6 - 0.9j, seed=seed)
    assert rep["passed"], rep["failed"]

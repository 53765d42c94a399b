import numpy as np
import pytest

from artifact.grbasis import BoxShape, make, partitions
from artifact.walkers import (partition_function, partition_function_numeric,
                              partition_function_osculating_dual, partition_function_toric,
                              specialize_at_T)

from conftest import all_shapes


def _T(vs, i, j):
    return vs.T(i) - vs.T(j)


def test_worked_example_factorises(P24):
    z = partition_function(P24(2, 2), P24(2, 1))
    vs = z.vs
    expected = (vs.x(1) - vs.T(4)) * (vs.x(2) - vs.T(4)) * (vs.x(1) + vs.x(2) - vs.T(2) - vs.T(3))
    assert z == expected


def test_specialisation_example(P24):
    z = specialize_at_T(P24(1, 1), P24(2, 1), P24())
    vs = z.vs
    assert z == vs.q() * _T(vs, 2, 4)


@pytest.mark.parametrize("shape", [s for s in all_shapes(5) if s.n])
def test_toric_tableaux_match_lattice(shape):
    for lam in partitions(shape):
        for mu in partitions(shape):
            assert partition_function_toric(lam, mu) == partition_function(lam, mu)


@pytest.mark.parametrize("shape", [BoxShape(2, 2), BoxShape(1, 3), BoxShape(3, 1), BoxShape(2, 3)])
def test_osculating_level_rank(shape):
    for lam in partitions(shape):
        for mu in partitions(shape):
            assert partition_function_osculating_dual(lam, mu) == partition_function(lam, mu, "osculating")


def test_numeric_matches_exact(P24, rng):
    from artifact.polyring import substitute
    tv = rng.normal(size=4) + 1j * rng.normal(size=4)
    xs = rng.normal(size=2) + 1j * rng.normal(size=2)
    q = 0.7 - 0.2j
    for lam in partitions(P24().shape):
        for mu in partitions(P24().shape):
            z = partition_function(lam, mu)
            vs = z.vs
            sub = {vs.N - j: complex(tv[j - 1]) for j in range(1, 5)}
            sub[vs.q_index] = q
            sub[vs.x_index(1)] = complex(xs[0])
            sub[vs.x_index(2)] = complex(xs[1])
            exact = complex(substitute(z, sub))
            num = partition_function_numeric(lam, mu, xs, tv, q)
            assert abs(num - exact) < 1e-10 * max(1, abs(exact))


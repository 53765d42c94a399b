import random

import pytest

from artifact.facschur import (METHODS, ASequence, a_T, a_t, braid_fac_schur_check, cauchy_check,
                               contained, facschur, vanishing_product, vanishing_value)
from artifact.grbasis import BoxShape, partitions
from artifact.polyring import VarSpace


@pytest.mark.parametrize("lam", [(), (1,), (2, 1), (2, 2), (1, 1), (3, 1)])
def test_methods_agree_symbolically(lam):
    vs = VarSpace(4, 2)
    xs = [vs.x(1), vs.x(2)]
    vals = {m: facschur(lam, xs, a_t(vs), m) for m in METHODS}
    assert len(set(map(str, vals.values()))) == 1


def test_methods_agree_numerically():
    rnd = random.Random(1)
    for _ in range(60):
        n = rnd.randint(1, 3)
        lam = sorted((rnd.randint(0, 3) for _ in range(n)), reverse=True)
        xs = [complex(rnd.gauss(0, 1), rnd.gauss(0, 1)) for _ in range(n)]
        a = ASequence([complex(rnd.gauss(0, 1), rnd.gauss(0, 1)) for _ in range(6)])
        vals = [facschur(lam, xs, a, m) for m in METHODS]
        assert max(abs(v - vals[0]) for v in vals) < 1e-10 * max(1, abs(vals[0]))


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (1, 3)])
def test_vanishing(n, k):
    shape = BoxShape(n, k)
    vs = VarSpace(n + k)
    a = a_T(vs)
    for lam in partitions(shape):
        for mu in partitions(shape):
            v = vanishing_value(lam.parts, mu.parts, n, a)
            if not contained(lam.parts, mu.parts):
                assert not v
            if lam == mu:
                assert v == vanishing_product(lam.parts, n, a)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (2, 3)])
def test_cauchy(n, k):
    assert cauchy_check(n, k).passed


@pytest.mark.parametrize("N,n", [(3, 1), (3, 2), (4, 2)])
def test_braid_identity(N, n):
    assert braid_fac_schur_check(N, n).passed
    assert not braid_fac_schur_check(N, n, printed=True).passed

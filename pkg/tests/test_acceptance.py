"""Acceptance criteria 1-8, one test each.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import time

import numpy as np

from artifact import identities
from artifact.bethe import ORTHO_TOL, RESIDUAL_TOL, GW_TOL, full_report
from artifact.facschur import braid_fac_schur_check, cauchy_check
from artifact.grbasis import BoxShape, complement, make, partitions
from artifact.lattice import YBE_IDS, verify_yang_baxter
from artifact.nilhecke import verify_hecke_relations
from artifact.qhring import (ROUTES, chern_leibniz_check, classical_table_check, cramer_column,
                             cramer_literal, gkm_table_check, golden_products, leibniz_check,
                             product, schubert_operator, split_q, three_route_check)
from artifact.transfer import route_identity
from artifact.walkers import specialize_at_T

from conftest import all_shapes

HECKE = ("rho_t", "rho_T_vee", "rho_t_prime", "pi_bar", "upsilon",
         "nil_coxeter", "nil_coxeter_vee", "bold_s", "r_hat")


def criterion(num, title):
    def wrap(fn):
        fn.criterion = (num, title)
        return fn
    return wrap


def _P(*parts):
    return make(parts, BoxShape(2, 2))


def _T(vs, i, j):
    return vs.T(i) - vs.T(j)


@criterion(1, "Gr(2,4) golden products, all product routes")
def test_golden_products(criterion):
    t0 = time.perf_counter()
    for route in ROUTES:
        for (lam, mu), want in golden_products().items():
            assert product(lam, mu, route) == want, (route, lam, mu)
    dt = time.perf_counter() - t0
    assert dt < 1.0
    criterion.update(ok=True, detail=f"{dt:.2f}s")


@criterion(2, "Gr(2,4) matrix elements of S~(2,1)")
def test_matrix_elements(criterion):
    t0 = time.perf_counter()
    S = schubert_operator(_P(2, 1))
    vs = S.vs
    assert S.matrix_element(_P(2, 1), _P(2, 1)) == _T(vs, 1, 2) * _T(vs, 1, 4) * _T(vs, 3, 4)
    assert S.matrix_element(_P(2, 2), _P(2, 1)) == _T(vs, 1, 4) ** 2
    dt = time.perf_counter() - t0
    assert dt < 1.0
    criterion.update(ok=True, detail=f"{dt:.2f}s")


@criterion(3, "det-cramer worked sequence and quantum specialisation")
def test_det_cramer_example(criterion):
    t0 = time.perf_counter()
    nu, mu = _P(2, 2), _P(2, 1)
    col = cramer_column(nu, mu)
    vs = col[_P()].vs
    lams = [_P(2, 2), _P(2, 1), _P(2), _P(1, 1), _P(1), _P()]
    want = [_T(vs, 1, 3) * _T(vs, 1, 4) * _T(vs, 2, 4), _T(vs, 1, 4) ** 2, _T(vs, 1, 4), _T(vs, 1, 4),
            vs.one(), vs.zero()]
    for lam, w in zip(lams, want):
        sigma = complement(lam)
        got = col[sigma]
        assert (split_q(got).get(0, vs.zero()) if got else vs.zero()) == w
        assert cramer_literal(nu, mu, sigma) == got
    z = specialize_at_T(_P(1, 1), _P(2, 1), _P())
    assert z == z.vs.q() * _T(z.vs, 2, 4)
    dt = time.perf_counter() - t0
    assert dt < 1.0
    criterion.update(ok=True, detail=f"{dt:.2f}s")


@criterion(4, "three-route equivalence, all shapes with N <= 6")
def test_three_routes(criterion):
    t0 = time.perf_counter()
    worst = 0.0
    for shape in all_shapes(6):
        rep = three_route_check(shape, tol=1e-9)
        assert rep.passed, (shape, rep.counterexample)
        worst = max(worst, rep.params["walker_max_rel_err"])
    dt = time.perf_counter() - t0
    assert dt < 300
    criterion.update(ok=True, detail=f"walker max rel err {worst:.1e}, {dt:.0f}s")


@criterion(5, "identity catalog, N <= 6")
def test_identity_catalog(criterion):
    t0 = time.perf_counter()
    count = 0

    def need(rep):
        nonlocal count
        assert rep.passed, (rep.id, rep.params, rep.counterexample)
        count += 1

    for id_ in YBE_IDS:
        need(verify_yang_baxter(id_))
    for shape in all_shapes(6, 2):
        for id_ in sorted(identities.CATALOG):
            need(identities.run(id_, shape))
    for N in range(2, 7):
        need(identities.run("S-action-M", N=N))
        for variant in HECKE:
            need(verify_hecke_relations(variant, N))
        for n in range(1, N):
            need(braid_fac_schur_check(N, n))
            need(cauchy_check(n, N - n))
    # operator determinants: the three Schubert operator routes agree
    for shape in all_shapes(6):
        for lam in partitions(shape):
            ops = [schubert_operator(lam, r) for r in ROUTES]
            assert ops[0] == ops[1] == ops[2], lam
            count += 1
    # Leibniz rules, including the preconditioned quantum cases
    for shape in all_shapes(6, 2):
        for mu in partitions(shape):
            for j in range(1, shape.N + 1):
                r = chern_leibniz_check(mu, j)
                if (r.counterexample or {}).get("precondition") != "not met":
                    need(r)
                for lam in partitions(shape):
                    r = leibniz_check(lam, mu, j)
                    if (r.counterexample or {}).get("precondition") != "not met":
                        need(r)
    dt = time.perf_counter() - t0
    assert dt < 600
    criterion.update(ok=True, detail=f"{count} checks, {dt:.0f}s")


@criterion(6, "transfer construction route identity, N <= 6")
def test_route_identity(criterion):
    for shape in all_shapes(6):
        rep = route_identity(shape)
        assert rep.passed, (shape, rep.counterexample)
    criterion.update(ok=True)


@criterion(7, "classical LR reduction and GKM divisibility")
def test_classical(criterion):
    for n, k in [(2, 2), (2, 3)]:
        shape = BoxShape(n, k)
        rep = classical_table_check(shape)
        assert rep.passed, rep.counterexample
        rep = gkm_table_check(shape)
        assert rep.passed, rep.counterexample
    criterion.update(ok=True)


@criterion(8, "Bethe numerics, N <= 5, q = 1")
def test_bethe(criterion):
    t0 = time.perf_counter()
    worst = {}
    for shape in all_shapes(5):
        rep = full_report(shape, q=1.0, seed=0)
        res = rep["residuals"]
        assert res["bae"] < RESIDUAL_TOL, shape
        assert res["res-of-1"] < ORTHO_TOL, shape
        assert res["residue-gw"] < GW_TOL, shape
        for key in ("GKM", "idempotent", "bold-s-permutes"):
            assert res[key] < ORTHO_TOL, (shape, key)
        assert rep["passed"], (shape, rep["failed"])
        for key, v in res.items():
            worst[key] = max(worst.get(key, 0.0), v)
    dt = time.perf_counter() - t0
    assert dt < 60
    criterion.update(ok=True, detail=f"max residual {max(worst.values()):.1e}, {dt:.0f}s")

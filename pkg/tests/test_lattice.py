import pytest

from artifact.grbasis import BoxShape
from artifact.lattice import (YBE_IDS, CapExceeded, OperatorVn, guard, omega_op, sector, theta_op,
                              transfer_matrix, transfer_via_trace, verify_yang_baxter)
from artifact.polyring import VarSpace

from conftest import all_shapes


@pytest.mark.parametrize("id_", YBE_IDS)
def test_yang_baxter(id_):
    assert verify_yang_baxter(id_).passed


@pytest.mark.parametrize("id_", YBE_IDS)
def test_yang_baxter_is_falsifiable(id_):
    rep = verify_yang_baxter(id_, mutate=True)
    assert not rep.passed and rep.counterexample


def test_printed_rpp_table_fails():
    assert not verify_yang_baxter("RLL-mixed'''", printed=True).passed


@pytest.mark.parametrize("shape", all_shapes(5))
def test_degree_bounds_from_trace(shape):
    # transfer_via_trace raises if a coefficient beyond the bound survives
    assert len(transfer_via_trace("H", shape)) == shape.k + 1
    assert len(transfer_via_trace("E", shape)) == shape.n + 1


def test_H1_on_gr24_hand_values():
    shape = BoxShape(2, 2)
    H = transfer_via_trace("H", shape)
    vs = H[0].vs
    assert H[0] == OperatorVn.identity(4, vs, sector(shape))
    # |11 00> -> |10 10> with weight 1 (one box added)
    assert H[1].entry((1, 0, 1, 0), (1, 1, 0, 0)) == vs.one()


def test_theta_and_omega_are_involutive_or_cyclic():
    N = 4
    vs = VarSpace(N)
    dom = sector(BoxShape(2, 2))
    Th = theta_op(N, vs, dom)
    assert Th * Th == OperatorVn.identity(N, vs, dom)
    Om = omega_op(N, vs, dom)
    P = OperatorVn.identity(N, vs, dom)
    for _ in range(N):
        P = Om * P
    assert P == OperatorVn.identity(N, vs, dom)


def test_cap(monkeypatch):
    monkeypatch.setenv("SW_MAX_N", "4")
    with pytest.raises(CapExceeded):
        guard(5)
    with pytest.raises(CapExceeded):
        transfer_matrix("vicious", BoxShape(2, 3))

import pytest

from artifact import identities
from artifact.grbasis import BoxShape

from conftest import all_shapes

SHAPES = all_shapes(5, 2)


@pytest.mark.parametrize("id_", sorted(identities.CATALOG))
@pytest.mark.parametrize("shape", SHAPES, ids=lambda s: f"{s.n}-{s.N}")
def test_catalog(id_, shape):
    rep = identities.run(id_, shape)
    assert rep.passed, rep.counterexample


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_s_action_m(N):
    assert identities.run("S-action-M", N=N).passed


def test_rotation_needs_q_one():
    shape = BoxShape(2, 2)
    assert identities.rot_he(shape).passed
    assert not identities.rot_he(shape, q="symbolic").passed


def test_printed_divided_difference_formula_fails():
    shape = BoxShape(1, 1)
    assert identities.leibniz_dell_he(shape).passed
    assert not identities.leibniz_dell_he(shape, printed=True).passed


def test_unknown_id():
    with pytest.raises(ValueError):
        identities.run("no-such-identity", BoxShape(1, 1))


def test_all_ids_listed():
    assert "S-action-M" in identities.all_ids()
    assert set(identities.CATALOG) <= set(identities.all_ids())

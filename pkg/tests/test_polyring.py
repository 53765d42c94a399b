import random

import pytest

from artifact.polyring import (Poly, PolyError, VarSpace, divide_by_difference, divided_difference,
                               elementary, parse, permute_vars, substitute, swap_vars, to_string)


@pytest.fixture
def vs():
    return VarSpace(3, 2)


def random_poly(vs, rnd, terms=5, deg=3):
    p = vs.zero()
    for _ in range(terms):
        m = vs.const(rnd.randint(-4, 4))
        for _ in range(rnd.randint(0, deg)):
            m = m * vs.var(rnd.randrange(vs.nvars))
        p = p + m
    return p


def test_t_is_reversed_T(vs):
    assert vs.t(1) == vs.T(3) and vs.t(3) == vs.T(1)
    assert vs.names() == ["T1", "T2", "T3", "q", "x1", "x2"]


def test_ring_axioms(vs):
    rnd = random.Random(7)
    for _ in range(30):
        a, b, c = (random_poly(vs, rnd) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a - a == vs.zero()


def test_string_roundtrip(vs):
    rnd = random.Random(3)
    for _ in range(30):
        p = random_poly(vs, rnd)
        assert parse(to_string(p), vs) == p


def test_canonical_example():
    vs = VarSpace(4)
    p = (vs.T(1) - vs.T(4)) ** 2
    assert to_string(p) == "T1^2 - 2*T1*T4 + T4^2"
    assert to_string(vs.zero()) == "0"


def test_exact_division(vs):
    p = (vs.T(1) - vs.T(2)) * (vs.x(1) + vs.q())
    assert divide_by_difference(p, 0, 1) == vs.x(1) + vs.q()
    with pytest.raises(PolyError):
        divide_by_difference(vs.T(1), 0, 1)


def test_divided_difference_of_symmetric_is_zero(vs):
    e2 = elementary(2, [vs.t(1), vs.t(2), vs.t(3)], vs)
    for j in (1, 2):
        assert not divided_difference(e2, j, "t")
    assert divided_difference(vs.t(1), 1, "t") == vs.one()


def test_swap_and_permute(vs):
    p = vs.t(1) ** 2 * vs.t(2)
    assert swap_vars(p, 1, "t") == vs.t(2) ** 2 * vs.t(1)
    # non-injective relabel merges exponents
    assert permute_vars(vs.T(1) * vs.T(2), {1: 0}) == vs.T(1) ** 2


def test_substitute_numeric_and_symbolic(vs):
    p = vs.T(1) * vs.x(1) + vs.q()
    assert substitute(p, {"T1": 2, "x1": 3, "q": 1}) == 7
    r = substitute(p, {"x1": vs.T(2)})
    assert r == vs.T(1) * vs.T(2) + vs.q()


def test_bad_names():
    with pytest.raises(PolyError):
        VarSpace(2).index_of("T3")
    with pytest.raises(PolyError):
        parse("T1 + y", VarSpace(2))

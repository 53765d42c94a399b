from math import comb

import pytest

from artifact.grbasis import (BoxShape, ShapeError, complement, conjugate, cylindric_skew,
                              horizontal_strips, make, partition_from_word, partitions, star,
                              theta_word, word_from_partition, words)

from conftest import all_shapes


@pytest.mark.parametrize("shape", all_shapes(6))
def test_basis_size_and_words(shape):
    ps = partitions(shape)
    assert len(ps) == comb(shape.N, shape.n)
    ws = {word_from_partition(p) for p in ps}
    assert ws == set(words(shape.N, shape.n))
    for p in ps:
        assert partition_from_word(word_from_partition(p), shape) == p


def test_word_convention(P24):
    # particle positions l_i = lam_{n+1-i} + i
    assert word_from_partition(P24()) == (1, 1, 0, 0)
    assert word_from_partition(P24(2, 2)) == (0, 0, 1, 1)
    assert word_from_partition(P24(2, 1)) == (0, 1, 0, 1)


@pytest.mark.parametrize("shape", all_shapes(5))
def test_involutions(shape):
    for p in partitions(shape):
        assert conjugate(conjugate(p)) == p
        assert complement(complement(p)) == p
        w = word_from_partition(p)
        assert word_from_partition(conjugate(p)) == theta_word(w)
        assert word_from_partition(star(p)) == tuple(1 - b for b in w)


def test_shape_equality_is_part_of_identity():
    assert make((1,), BoxShape(1, 2)) != make((1,), BoxShape(1, 3))


def test_bad_box():
    with pytest.raises(ShapeError):
        make((3,), BoxShape(1, 2))
    with pytest.raises(ShapeError):
        BoxShape(0, 0)


def test_cylindric_skew_sizes(gr24, P24):
    sk = cylindric_skew(P24(2, 1), 0, P24(1))
    assert sk.size == 2 and sk.is_horizontal_strip()
    for lam in partitions(gr24):
        for mu in partitions(gr24):
            for d in (0, 1):
                sk = cylindric_skew(lam, d, mu)
                if sk is not None:
                    assert sk.size == lam.size - mu.size + d * gr24.N


def test_strips_are_horizontal(gr24):
    for mu in partitions(gr24):
        for d in (0, 1):
            for lam, J in horizontal_strips(mu, d):
                sk = cylindric_skew(lam, d, mu)
                assert sk.is_horizontal_strip()
                # every column class is either in the strip or contributes a factor
                assert len(set(sk.column_classes())) + len(J) == gr24.k

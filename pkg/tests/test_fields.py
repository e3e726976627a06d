from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from uniserial.fields import Field

small_mats = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=5))


def test_parse():
    assert Field.parse("Q") == Field()
    assert Field.parse("1009") == Field(1009)
    assert Field.parse(7).name == "7"
    with pytest.raises(ValueError):
        Field(8)


def test_scalars():
    q, f = Field(), Field(5)
    assert q(Fraction(1, 2)) + q(Fraction(1, 2)) == 1
    assert f.inv(2) == 3
    assert f(Fraction(1, 2)) == 3


@given(small_mats)
def test_rank_fast_path_matches_elimination(rows):
    f = Field(1009)
    a = np.array(rows)
    assert f.rank(a) == len(f.rref(f.matrix(rows))[1])
    assert Field().rank(a) == np.linalg.matrix_rank(a.astype(float))


@given(small_mats)
def test_nullspace(rows):
    f = Field(7)
    n = len(rows[0])
    basis = f.nullspace(rows, n)
    assert len(basis) == n - f.rank(np.array(rows))
    for v in basis:
        assert all(f.is_zero(c) for r in f.matmul(f.matrix(rows), [[x] for x in v]) for c in r)


def test_inverse_and_nilpotent():
    f = Field()
    assert f.inverse([[2, 0], [0, 4]]) == [[Fraction(1, 2), 0], [0, Fraction(1, 4)]]
    assert f.inverse([[1, 1], [1, 1]]) is None
    assert f.is_nilpotent([[0, 1, 5], [0, 0, 2], [0, 0, 0]])
    assert not f.is_nilpotent([[0, 1], [1, 0]])


def test_solvable():
    f = Field(11)
    assert f.solvable([[1, 1], [2, 2]], [1, 2])
    assert not f.solvable([[1, 1], [2, 2]], [1, 3])
    assert f.solvable(np.zeros((2, 0), dtype=int), [0, 0])
    assert not f.solvable(np.zeros((2, 0), dtype=int), [0, 1])

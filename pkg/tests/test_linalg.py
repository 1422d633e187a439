from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assocgeom import GF, QQ, Field, Matrix
from assocgeom.linalg import image, kernel, rref, solve

from helpers import SMALL_FIELDS, scalars


@st.composite
def matrices(draw, fields=SMALL_FIELDS + (QQ,), max_dim=4, square=False):
    field = draw(st.sampled_from(fields))
    r = draw(st.integers(1, max_dim))
    c = r if square else draw(st.integers(1, max_dim))
    rows = [[draw(scalars(field)) for _ in range(c)] for _ in range(r)]
    return Matrix.from_rows(field, rows)


def test_field_arithmetic_gf():
    F = GF(7)
    assert F(-1) == 6
    assert F(10) == 3
    assert F.inv(3) * 3 % 7 == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_field_parse_and_spec():
    assert Field.parse("p=5") == GF(5)
    assert Field.parse("q") == QQ
    assert GF(3).spec() == "p=3" and QQ.spec() == "q"
    with pytest.raises(ValueError):
        Field.parse("p=4")


def test_rationals_exact():
    assert QQ("1/3") + QQ("1/6") == Fraction(1, 2)
    assert QQ.inv(Fraction(-2, 3)) == Fraction(-3, 2)


def test_gf_elements_and_vectors():
    assert GF(3).elements() == [0, 1, 2]
    assert len(list(GF(2).vectors(3))) == 8


def test_known_inverse_gf2():
    m = Matrix.from_rows(GF(2), [[1, 1], [0, 1]])
    assert m.inverse() == m
    assert (m @ m) == Matrix.identity(GF(2), 2)


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows(GF(3), [[1, 2], [2, 1]]).inverse()


def test_rref_example_q():
    m = Matrix.from_rows(QQ, [[2, 4, 6], [1, 1, 1]])
    red, piv = rref(m)
    assert piv == [0, 1]
    assert red.data == ((1, 0, -1), (0, 1, 2))


@given(matrices())
def test_rank_nullity(m):
    assert m.rank() + kernel(m).nrows == m.ncols


@given(matrices())
def test_kernel_is_annihilated(m):
    for v in kernel(m).data:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
def test_rref_idempotent(m):
    red, piv = rref(m)
    again, piv2 = rref(red)
    assert again == red and piv == piv2
    assert len(piv) == m.rank()


@given(matrices())
def test_transpose_rank(m):
    assert m.rank() == m.T.rank() == image(m).nrows


@given(matrices(square=True))
def test_inverse_roundtrip(m):
    if m.is_invertible():
        one = Matrix.identity(m.field, m.nrows)
        assert m @ m.inverse() == one == m.inverse() @ m
    else:
        assert m.rank() < m.nrows


@given(matrices(), st.data())
def test_solve_consistent(m, data):
    F = m.field
    v = [data.draw(scalars(F)) for _ in range(m.ncols)]
    b = m.apply(v)
    sol = solve(m, b)
    assert sol is not None
    assert tuple(m.apply(sol)) == tuple(b)


@given(matrices(max_dim=3), st.data())
def test_matmul_associative(m, data):
    F = m.field
    k = data.draw(st.integers(1, 3))
    n2 = Matrix.from_rows(F, [[data.draw(scalars(F)) for _ in range(k)] for _ in range(m.ncols)])
    p = Matrix.from_rows(F, [[data.draw(scalars(F)) for _ in range(2)] for _ in range(k)])
    assert (m @ n2) @ p == m @ (n2 @ p)
    assert (m @ n2).T == n2.T @ m.T

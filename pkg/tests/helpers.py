"""Hypothesis strategies and small fixtures shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from assocgeom import GF, QQ, Subspace

SMALL_FIELDS = (GF(2), GF(3), GF(5))


def scalars(field):
    if field.p is not None:
        return st.integers(0, field.p - 1)
    return st.fractions(min_value=-9, max_value=9, max_denominator=9)


def vectors(field, n):
    return st.lists(scalars(field), min_size=n, max_size=n)


def subspaces(field, n):
    return st.lists(vectors(field, n), max_size=n).map(lambda rows: Subspace.span(field, n, rows))


@st.composite
def geometry(draw, k, fields=SMALL_FIELDS + (QQ,), min_n=1, max_n=3):
    """A field, an ambient dimension and ``k`` points of Gras(F^n)."""
    field = draw(st.sampled_from(fields))
    n = draw(st.integers(min_n, max_n))
    return field, n, [draw(subspaces(field, n)) for _ in range(k)]


def sub(field, n, *rows):
    return Subspace.span(field, n, [list(r) for r in rows])


def half(x):
    return Fraction(x, 2)

import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from assocgeom import GF, QQ, Matrix
from assocgeom.charts import Chart
from assocgeom.gamma import (
    DESCRIPTIONS,
    OutsideDomain,
    SingularDenominator,
    affine_gamma_points,
    dilation_operator,
    domain_flags,
    gamma_affine,
    gamma_affine_b0,
    gamma_affine_origin,
    gamma_bruteforce,
    gamma_description,
    gamma_extended,
    gamma_first_kind,
    gamma_operator,
    left_operator,
    middle_operator,
    pi_extended,
    pi_operator,
    right_operator,
)
from assocgeom.grassmannian import common_complement, is_transversal, projector, random_complement, random_subspace

from helpers import SMALL_FIELDS, geometry, scalars, sub

F2, F3, F5 = GF(2), GF(3), GF(5)
e1, e2 = (1, 0), (0, 1)


def test_worked_example_gf2_cubed():
    x = sub(F2, 3, (1, 0, 0), (0, 1, 0))
    a = sub(F2, 3, (0, 1, 0), (0, 0, 1))
    b = sub(F2, 3, (0, 0, 1))
    z = sub(F2, 3, (1, 0, 1))
    expected = sub(F2, 3, (1, 0, 1), (0, 1, 0))
    assert gamma_extended(x, a, x, b, z) == expected == gamma_bruteforce(x, a, x, b, z)
    assert expected == (z | (x & a)) & (b | x)


def test_operator_example_gf2():
    a = b = sub(F2, 2, e2)
    x = z = sub(F2, 2, e1)
    y = sub(F2, 2, (1, 1))
    assert gamma_operator(x, a, y, b, z) == sub(F2, 2, (1, 1)) == gamma_bruteforce(x, a, y, b, z)


def test_domain_flags_example():
    x, a, y, b, z = sub(F2, 2, e1), sub(F2, 2, e2), sub(F2, 2, (1, 1)), sub(F2, 2, e1), sub(F2, 2, e2)
    assert domain_flags(x, a, y, b, z) == (True, True, True)
    flags = domain_flags(a, a, y, b, z)
    assert not flags.in_DL and not flags.in_DM


def test_outside_domain_raises():
    x = sub(F2, 2, e1)
    with pytest.raises(OutsideDomain):
        gamma_operator(x, x, x, x, x)
    with pytest.raises(OutsideDomain):
        gamma_operator(x, x, x, sub(F2, 2, e2), x, branch="L")


def test_lattice_special_values():
    rng = random.Random(1)
    for _ in range(50):
        x, a, y, b = (random_subspace(F3, 3, rng) for _ in range(4))
        assert gamma_extended(a, a, y, b, b) == a | b
        assert gamma_extended(x, a, y, a, a) == a
        assert gamma_bruteforce(a, b, y, a, b) == a & b


def test_operator_identities():
    x, a = sub(F3, 2, e1), sub(F3, 2, e2)
    one = Matrix.identity(F3, 2)
    assert left_operator(x, a, x, a) == one
    assert middle_operator(x, a, a, x) == dilation_operator(-1, x, a)
    assert dilation_operator(1, x, a) == one
    assert dilation_operator(0, x, a) == projector(x, a)
    z = sub(F3, 2, (1, 1))
    m = middle_operator(x, a, a, z)
    # diagonal value: M_{xabz}(a) = b, here with b = a
    assert a.image(m) == a


def test_dilation_gf5_multiplicative():
    x, a = sub(F5, 2, e1), sub(F5, 2, (1, 1))
    assert dilation_operator(2, x, a) @ dilation_operator(3, x, a) == Matrix.identity(F5, 2)


def test_pi_example_gf3():
    assert pi_extended(2, sub(F3, 2, e1), sub(F3, 2, e2), sub(F3, 2, (1, 1))) == sub(F3, 2, (1, 2))
    assert pi_operator(2, sub(F3, 2, e1), sub(F3, 2, e2), sub(F3, 2, (1, 1))) == sub(F3, 2, (1, 2))


def test_affine_formulas_examples():
    one = Matrix.identity(F2, 1)
    zero = Matrix.zeros(F2, 1, 1)
    assert gamma_affine_origin(one, one, one) == one
    ch = Chart.standard(F2, 1, 1)
    q = affine_gamma_points(ch, one, one, zero, zero, one)
    assert q.y == ch.o_plus and q.b == ch.o_minus
    assert ch.coords_plus(gamma_extended(*q)) == one
    X, Y, Z = (Matrix.from_rows(F5, [[v]]) for v in (2, 3, 4))
    assert gamma_first_kind(X, Y, Z) == Matrix.from_rows(F5, [[1]])
    with pytest.raises(SingularDenominator):
        gamma_first_kind(X, Matrix.zeros(F5, 1, 1), Z)


@given(geometry(5, fields=(F2, F3), max_n=3))
def test_extended_matches_bruteforce(g):
    _, _, q = g
    assert gamma_extended(*q) == gamma_bruteforce(*q)


@given(geometry(5), st.sampled_from(sorted(DESCRIPTIONS)))
def test_descriptions_agree(g, variant):
    _, _, q = g
    assert gamma_description(*q, variant) == gamma_extended(*q)


@st.composite
def in_domain(draw):
    F = draw(st.sampled_from(SMALL_FIELDS + (QQ,)))
    n = draw(st.integers(1, 4))
    rng = random.Random(draw(st.integers(0, 2**32)))
    k = rng.randint(0, n)
    a = random_subspace(F, n, rng, k)
    b = random_subspace(F, n, rng, k)
    x, y, z = (random_complement(a if i < 2 else b, rng) if rng.random() < 0.8 else random_subspace(F, n, rng) for i in range(3))
    return x, a, y, b, z


@given(in_domain())
def test_operator_branches_agree_with_extended(q):
    flags = domain_flags(*q)
    assume(flags.any)
    ext = gamma_extended(*q)
    for branch, ok in zip("LRM", flags):
        if ok:
            assert gamma_operator(*q, branch=branch) == ext


@given(in_domain())
def test_operators_invertible_on_cab(q):
    x, a, y, b, z = q
    assume(common_complement(a, b) is not None)
    assume(all(is_transversal(s, a) and is_transversal(s, b) for s in (x, y, z)))
    one = Matrix.identity(x.field, x.n)
    assert left_operator(x, a, y, b) @ left_operator(y, a, x, b) == one
    assert middle_operator(x, a, b, z) @ middle_operator(z, a, b, x) == one
    assert right_operator(a, y, b, z) @ right_operator(a, z, b, y) == one


@given(geometry(3), st.data())
def test_pi_operator_on_domain(g, data):
    F, n, (x, a, z) = g
    r = data.draw(scalars(F))
    if is_transversal(x, a) or is_transversal(z, a):
        assert pi_operator(r, x, a, z) == pi_extended(r, x, a, z)
    else:
        with pytest.raises(OutsideDomain):
            pi_operator(r, x, a, z)


@st.composite
def chart_coords(draw):
    F = draw(st.sampled_from(SMALL_FIELDS + (QQ,)))
    m, k = draw(st.integers(1, 2)), draw(st.integers(1, 2))

    def mat(r, c):
        return Matrix.from_rows(F, [[draw(scalars(F)) for _ in range(c)] for _ in range(r)])

    return Chart.standard(F, m, k), mat(m, k), mat(k, m), mat(m, k), mat(k, m), mat(m, k)


@given(chart_coords())
def test_chart_formulas_match_extended(c):
    ch, X, A, Y, B, Z = c
    assert ch.coords_plus(ch.graph_plus(X)) == X
    assert ch.coords_minus(ch.graph_minus(A)) == A
    q = affine_gamma_points(ch, X, A, Y, B, Z)
    ext = gamma_extended(*q)
    origin = gamma_extended(q.x, q.a, ch.o_plus, ch.o_minus, q.z)
    assert ch.coords_plus(origin) == gamma_affine_origin(X, A, Z)
    try:
        nd = gamma_affine(X, A, Y, B, Z)
    except SingularDenominator:
        nd = None
    if nd is not None:
        assert ext == ch.graph_plus(nd)
    try:
        b0 = gamma_affine_b0(X, A, Y, Z)
    except SingularDenominator:
        b0 = None
    if b0 is not None:
        assert gamma_extended(q.x, q.a, q.y, ch.o_minus, q.z) == ch.graph_plus(b0)


@given(st.sampled_from(SMALL_FIELDS + (QQ,)), st.data())
def test_first_kind_picture(F, data):
    k = data.draw(st.integers(1, 2))
    ch = Chart.standard(F, k, k)

    def mat():
        return Matrix.from_rows(F, [[data.draw(scalars(F)) for _ in range(k)] for _ in range(k)])

    X, Y, Z = mat(), mat(), mat()
    assume(Y.is_invertible())
    got = gamma_extended(ch.graph_plus(X), ch.o_minus, ch.graph_plus(Y), ch.o_plus, ch.graph_plus(Z))
    assert got == ch.graph_plus(gamma_first_kind(X, Y, Z))


def test_bruteforce_guard():
    x = sub(QQ, 2)
    with pytest.raises(ValueError):
        gamma_bruteforce(x, x, x, x, x)

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assocgeom import GF, QQ, Matrix
from assocgeom.charts import Chart
from assocgeom.gamma import gamma_extended
from assocgeom.grassmannian import (
    enumerate_subspaces,
    exists_transversal_triple,
    gaussian_binomial,
    is_transversal,
    random_common_complement,
    random_complement,
    random_subspace,
)
from assocgeom.pairs import (
    Algebra,
    AssocPair,
    algebra_pair,
    check_pair_laws,
    extract_algebra,
    extract_pair,
    find_algebra_isomorphism,
    geometry_from_pair,
    hom_pair,
    homotope,
    is_invertible,
    jordan_Q,
    jordan_T,
    pair_isomorphism_kind,
    right_ideals,
    standard_imbedding,
)

from helpers import SMALL_FIELDS, scalars

F2, F3, F5 = GF(2), GF(3), GF(5)


def scalar_pair(F):
    return hom_pair(F, 1, 1)


def vec(draw, F, d):
    return tuple(draw(scalars(F)) for _ in range(d))


@given(st.sampled_from(SMALL_FIELDS + (QQ,)), st.integers(1, 2), st.integers(1, 2), st.data())
def test_hom_pairs_para_associative(F, e, f, data):
    P = hom_pair(F, e, f)

    def triples(sign):
        dp, dm = P.dims(sign)
        yield [vec(data.draw, F, d) for d in (dp, dm, dp, dm, dp)]

    assert check_pair_laws(P, triples) == {"+": 0, "-": 0}


def test_para_associativity_failure_is_counted():
    # <xyz>+ = xyz but <xyz>- = 2xyz: the middle term picks up the factor 2
    bad = AssocPair(F3, 1, 1, ((((1,),),),), ((((2,),),),))
    ones = lambda sign: [((1,), (1,), (1,), (1,), (1,))]  # noqa: E731
    assert check_pair_laws(bad, ones) == {"+": 1, "-": 1}


@pytest.mark.parametrize("F", [F2, F3, QQ])
@pytest.mark.parametrize("m,k", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_standard_chart_pair_is_hom_pair(F, m, k):
    ch = Chart.standard(F, m, k)
    gp = extract_pair(ch.o_plus, ch.o_minus).constants()
    assert pair_isomorphism_kind(hom_pair(F, k, m), gp, (m, k)) == "direct"


def test_gf2_axes_pair_is_scalar_pair():
    ch = Chart.standard(F2, 1, 1)
    assert extract_pair(ch.o_plus, ch.o_minus).constants() == scalar_pair(F2)


@given(st.integers(0, 2**32))
def test_base_point_absorbs(seed):
    rng = random.Random(seed)
    F = rng.choice([F2, F3, F5])
    ch = Chart.standard(F, 2, 1)
    x = random_complement(ch.o_minus, rng)
    z = random_complement(ch.o_minus, rng)
    b = random_complement(ch.o_plus, rng)
    o_p, o_m = ch.o_plus, ch.o_minus
    assert gamma_extended(x, o_m, b, o_p, o_p) == o_p
    assert gamma_extended(x, o_m, o_m, o_p, z) == o_p


@given(st.integers(0, 2**32))
def test_extracted_products_trilinear(seed):
    rng = random.Random(seed)
    F = rng.choice([F2, F3, QQ])
    n = 3
    o_plus = random_subspace(F, n, rng, 1)
    o_minus = random_complement(o_plus, rng)
    gp = extract_pair(o_plus, o_minus)
    m, k = gp.chart.m, gp.chart.k

    def mat(r, c):
        return Matrix.from_rows(F, [[rng.choice([0, 1, 2, -1]) for _ in range(c)] for _ in range(r)])

    X1, X2, Z = mat(m, k), mat(m, k), mat(m, k)
    Y = mat(k, m)
    s = F(rng.choice([2, 3]))
    lhs = gp.plus_product(X1 + X2.scale(s), Y, Z)
    rhs = gp.plus_product(X1, Y, Z) + gp.plus_product(X2, Y, Z).scale(s)
    assert lhs == rhs
    assert gp.plus_product(Z, Y, X1 + X2) == gp.plus_product(Z, Y, X1) + gp.plus_product(Z, Y, X2)


def test_algebra_from_gf3_triple_is_field():
    ok, (a, u, c) = exists_transversal_triple(F3, 2)
    alg = extract_algebra(a, u, c).constants()
    assert alg == Algebra(F3, 1, (((1,),),))


def test_algebra_from_gf2_triple_is_m2():
    ok, (a, u, c) = exists_transversal_triple(F2, 4)
    ga = extract_algebra(a, u, c)
    alg = ga.constants()
    assert alg.is_associative()
    assert alg.is_unit(tuple(v for row in ga.unit().data for v in row))
    phi = find_algebra_isomorphism(alg, Algebra.matrix_algebra(F2, 2))
    assert phi is not None and phi.is_invertible()


def test_isomorphism_search_rejects_non_isomorphic():
    F = F2
    m2 = Algebra.matrix_algebra(F, 2)
    # upper triangular 2x2 plus a square-zero element: dimension 4, commutative part differs
    comm = Algebra.from_product(F, 4, lambda x, y: tuple(F(x[i] * y[i]) for i in range(4)))
    assert find_algebra_isomorphism(comm, m2) is None


def test_unit_detection():
    assert Algebra.matrix_algebra(F3, 2).unit() == (1, 0, 0, 1)
    nil = Algebra.from_product(F3, 1, lambda x, y: (0,))
    assert nil.unit() is None


def test_homotopes():
    H = hom_pair(F3, 2, 2)
    zero = homotope(H, (0, 0, 0, 0))
    assert all(v == 0 for blk in zero.consts for row in blk for v in row)
    ident = homotope(H, (1, 0, 0, 1))
    assert ident == Algebra.matrix_algebra(F3, 2)
    S = scalar_pair(F3)
    h2 = homotope(S, (2,))
    for x, y in itertools.product(range(3), repeat=2):
        assert h2.mul((x,), (y,)) == (F3(2 * x * y),)
    assert h2.is_associative()


def test_jordan_quadratic():
    S = scalar_pair(F5)
    for x, y in itertools.product(range(5), repeat=2):
        assert jordan_Q(S, (x,), (y,)) == (F5(x * x * y),)
    H = hom_pair(F5, 2, 2)
    assert jordan_Q(H, (0,) * 4, (1, 2, 3, 4)) == (0,) * 4


@given(st.data())
def test_polarization_gf5(data):
    H = hom_pair(F5, 2, 3)
    x, z = vec(data.draw, F5, 6), vec(data.draw, F5, 6)
    y = vec(data.draw, F5, 6)
    want = tuple(F5(p + q) for p, q in zip(H.triple_plus(x, y, z), H.triple_plus(z, y, x)))
    assert jordan_T(H, x, y, z) == want


def test_invertible_elements():
    H = hom_pair(F2, 2, 2)
    for v in F2.vectors(4):
        X = Matrix.from_rows(F2, [v[:2], v[2:]])
        inv, xinv = is_invertible(H, v)
        assert inv == X.is_invertible()
        if inv:
            assert homotope(H, v, "-").is_unit(xinv)
            assert xinv == tuple(c for row in X.inverse().data for c in row)
    assert is_invertible(H, (0, 0, 0, 0)) == (False, None)
    R = hom_pair(F2, 1, 2)
    assert not any(is_invertible(R, v)[0] for v in F2.vectors(2))


def test_algebra_pair_products():
    A = Algebra.matrix_algebra(F2, 2)
    P = algebra_pair(A)
    x, y, z = (1, 1, 0, 1), (0, 1, 1, 0), (1, 0, 1, 1)
    assert P.triple_plus(x, y, z) == A.mul(A.mul(x, y), z)
    assert P.triple_minus(x, y, z) == A.mul(A.mul(z, y), x)


def test_standard_imbedding_blocks():
    im = standard_imbedding(F2, 1, 1)
    assert im.algebra == Algebra.matrix_algebra(F2, 2)
    assert im.idempotent == (1, 0, 0, 0)
    assert im.peirce_dims() == (1, 1, 1, 1)
    im2 = standard_imbedding(F3, 1, 2)
    assert im2.peirce_dims() == (4, 2, 2, 1)
    assert pair_isomorphism_kind(hom_pair(F3, 1, 2), im2.block_pair(), (2, 1)) == "direct"


def test_right_ideals_match_closure_filter():
    alg = Algebra.matrix_algebra(F2, 2)
    filtered = [s for s in enumerate_subspaces(F2, 4) if alg.is_right_ideal(s)]
    assert sorted(filtered, key=lambda s: (s.dim, s.basis)) == right_ideals(alg)
    assert len(filtered) == 5


def test_right_ideals_of_m3_count():
    # right ideals of M(3, F) correspond to subspaces of F^3
    ideals = right_ideals(Algebra.matrix_algebra(F2, 3))
    assert len(ideals) == sum(gaussian_binomial(3, k, 2) for k in range(4))


@pytest.mark.parametrize("e,f", [(1, 1), (1, 2)])
def test_round_trip(e, f):
    geo = geometry_from_pair(F2, e, f)
    alg = geo.imbedded.algebra
    assert all(alg.is_right_ideal(I) for I in geo.ideals)
    assert geo.o_plus in geo.ideals and geo.o_minus in geo.ideals
    assert is_transversal(geo.o_plus, geo.o_minus)
    one = geo.imbedded.one()
    assert tuple(F2(p + q) for p, q in zip(geo.imbedded.idempotent, geo.imbedded.complement())) == one
    kind = pair_isomorphism_kind(hom_pair(F2, e, f), geo.extract_pair(), (f, e))
    assert kind in ("direct", "swap")
    assert kind == "direct"


@given(st.integers(0, 2**32))
def test_transport_identity_on_common_complements(seed):
    rng = random.Random(seed)
    F = rng.choice([F2, F3])
    n, k = 4, 2
    a = random_subspace(F, n, rng, k)
    b = random_subspace(F, n, rng, k)
    x = random_common_complement(a, b, rng)
    z = random_complement(b, rng)
    y = random_subspace(F, n, rng)
    G = gamma_extended
    assert G(x, b, G(x, a, y, b, z), b, z) == G(z, b, a, y, x)

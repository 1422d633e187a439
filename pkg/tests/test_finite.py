import itertools
import random

import numpy as np
import pytest

from assocgeom import GF, QQ
from assocgeom.finite import AxiomReport, FiniteGeometry, axiom_verifier, mutate
from assocgeom.gamma import gamma_extended, pi_extended
from assocgeom.grassmannian import gaussian_binomial


@pytest.fixture(scope="module")
def gf3_plane():
    return FiniteGeometry(GF(3), 2)


@pytest.fixture(scope="module")
def gf2_plane():
    return FiniteGeometry(GF(2), 2)


def test_point_count(gf3_plane):
    assert gf3_plane.N == sum(gaussian_binomial(2, k, 3) for k in range(3)) == 6
    assert FiniteGeometry(GF(2), 3).N == 16


def test_lattice_tables(gf3_plane):
    geo = gf3_plane
    for i, j in itertools.product(range(geo.N), repeat=2):
        x, y = geo.points[i], geo.points[j]
        assert geo.points[geo.meet[i, j]] == x & y
        assert geo.points[geo.join[i, j]] == x | y
        assert geo.trans[i, j] == ((x & y).is_zero() and (x | y).is_full())
    assert geo.points[geo.bottom].is_zero() and geo.points[geo.top].is_full()


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2)])
def test_gamma_table_matches_extended(p, n):
    geo = FiniteGeometry(GF(p), n)
    G = geo.gamma
    for idx in itertools.product(range(geo.N), repeat=5):
        assert geo.points[G[idx]] == gamma_extended(*geo.quintuple(idx))


def test_gamma_table_sampled_gf2_cubed():
    geo = FiniteGeometry(GF(2), 3)
    rng = random.Random(0)
    for _ in range(400):
        idx = tuple(rng.randrange(geo.N) for _ in range(5))
        assert geo.points[geo.gamma[idx]] == gamma_extended(*geo.quintuple(idx))


@pytest.mark.parametrize("r", [0, 1, 2])
def test_pi_table(gf3_plane, r):
    geo = gf3_plane
    T = geo.pi(r)
    for i, j, k in itertools.product(range(geo.N), repeat=3):
        assert geo.points[T[i, j, k]] == pi_extended(r, *geo.quintuple((i, j, k)))


def test_axioms_gf3_plane(gf3_plane):
    rep = axiom_verifier(gf3_plane)
    assert rep.passed, rep.failed()
    for name in ("(1) semitorsor", "(2i) klein", "(3) structural M", "(4v) diagonal", "(5) affine torsor", "(6) semitorsored pairs"):
        assert rep.checked[name] > 0


def test_axioms_opposite_geometry(gf3_plane):
    op = gf3_plane.opposite()
    G = gf3_plane.gamma
    assert op.gamma[1, 2, 3, 4, 5] == G[5, 2, 3, 4, 1]
    assert axiom_verifier(op, extras=False).passed


def test_axioms_budgeted_gf2_cubed():
    rep = axiom_verifier(FiniteGeometry(GF(2), 3), structural_budget=40, seed=1)
    assert rep.passed, rep.failed()


@pytest.mark.parametrize("seed", range(4))
def test_mutation_detected(gf2_plane, seed):
    bad, i, j = mutate(gf2_plane, seed)
    assert i != j
    assert bad.gamma[i] == gf2_plane.gamma[j]
    rep = axiom_verifier(bad, structural_budget=20)
    assert not rep.passed
    assert "(1) semitorsor" in rep.failed() or any(n.startswith("(4") for n in rep.failed())
    # the original is untouched
    assert axiom_verifier(gf2_plane, structural_budget=20).passed


def test_report_bookkeeping():
    rep = AxiomReport()
    rep.record("ok law", np.array([True, True]))
    rep.record("bad law", np.array([True, False]), locate=lambda k: ("at", k))
    assert rep.checked == {"ok law": 2, "bad law": 2}
    assert rep.failed() == ["bad law"] and not rep.passed


def test_guards():
    with pytest.raises(ValueError):
        FiniteGeometry(QQ, 2)
    with pytest.raises(ValueError):
        FiniteGeometry(GF(5), 6)

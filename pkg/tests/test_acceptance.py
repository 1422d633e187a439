"""Acceptance criteria, one test each.

A PASS/FAIL line per criterion is printed in the terminal summary (see
conftest.py) and, with ``-s``, by each test as it finishes.
"""

import itertools
import random
import subprocess
import sys

import pytest

from assocgeom import GF, QQ
from assocgeom.finite import FiniteGeometry, axiom_verifier, mutate
from assocgeom.gamma import domain_flags, gamma_bruteforce, gamma_extended, gamma_operator
from assocgeom.grassmannian import (
    enumerate_subspaces,
    exists_transversal_triple,
    gaussian_binomial,
    random_complement,
    random_subspace,
)
from assocgeom.pairs import (
    Algebra,
    extract_algebra,
    find_algebra_isomorphism,
    geometry_from_pair,
    hom_pair,
    pair_isomorphism_kind,
)
from assocgeom.suites import RunConfig, SUITES

F2, F3, F5 = GF(2), GF(3), GF(5)


def report(number, name, ok, detail=""):
    print(f"\ncriterion {number:2d} {name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return ok


def run_suite(name, **kw):
    return SUITES[name](RunConfig(**kw))


def check_suite(res, minimum, laws=None):
    laws = laws if laws is not None else list(res.report.checked)
    short = {law: res.report.checked.get(law, 0) for law in laws if res.report.checked.get(law, 0) < minimum}
    return res.passed and not short, short


def test_criterion_01_oracle_equivalence():
    mismatches = 0
    exhaustive = {}
    for F in (F2, F3):
        pts = enumerate_subspaces(F, 2)
        count = 0
        for q in itertools.product(pts, repeat=5):
            count += 1
            mismatches += gamma_extended(*q) != gamma_bruteforce(*q)
        exhaustive[f"GF({F.p})^2"] = count
    sampled = {}
    for F, n in ((F2, 4), (F3, 3)):
        rng = random.Random(f"oracle-{F.p}-{n}")
        for _ in range(1000):
            q = tuple(random_subspace(F, n, rng) for _ in range(5))
            mismatches += gamma_extended(*q) != gamma_bruteforce(*q)
        sampled[f"GF({F.p})^{n}"] = 1000
    # Gras(GF(2)^2) has 5 points, Gras(GF(3)^2) has 6
    ok = exhaustive == {"GF(2)^2": 5**5, "GF(3)^2": 6**5} and mismatches == 0
    assert report(1, "oracle equivalence", ok, f"(exhaustive {exhaustive}, sampled {sampled}, {mismatches} mismatches)")


def _domain_sample(F, n, rng):
    k = rng.randint(0, n)
    a = random_subspace(F, n, rng, k)
    b = random_subspace(F, n, rng, k) if rng.random() < 0.8 else random_subspace(F, n, rng)

    def pick(base):
        if rng.random() < 0.85 and base.dim < n or (base.dim == n and rng.random() < 0.5):
            return random_complement(base, rng)
        return random_subspace(F, n, rng)

    return pick(a), a, pick(rng.choice((a, b))), b, pick(b)


def test_criterion_02_main_theorem_coincidence():
    rng = random.Random("coincidence")
    in_domain = mismatches = branches = 0
    configs = ((F2, 4), (F3, 3), (F5, 2), (QQ, 3))
    while in_domain < 1200:
        F, n = configs[in_domain % len(configs)]
        q = _domain_sample(F, n, rng)
        flags = domain_flags(*q)
        if not flags.any:
            continue
        in_domain += 1
        ext = gamma_extended(*q)
        mismatches += gamma_operator(*q) != ext
        for branch, allowed in zip("LRM", flags):
            if allowed:
                branches += 1
                mismatches += gamma_operator(*q, branch=branch) != ext
    ok = in_domain >= 1000 and mismatches == 0
    assert report(2, "main theorem coincidence", ok, f"({in_domain} quintuples in D, {branches} branch evaluations)")


def test_criterion_03_semitorsor_and_klein():
    results = [
        run_suite("semitorsor", field=F3, n=2, exhaustive=True),
        run_suite("klein", field=F3, n=2, exhaustive=True),
        run_suite("semitorsor", field=F2, n=4, budget=1000, seed=3),
        run_suite("klein", field=F2, n=4, budget=1000, seed=3),
    ]
    exhaustive_ok = (
        results[0].report.checked.get("G3 para-associativity") == 6**7
        and results[1].report.checked.get("(2i) klein") == 6**5
        and results[1].report.checked.get("(2ii) klein") == 6**5
    )
    sampled_ok = all(check_suite(r, 1000)[0] for r in results[2:])
    ok = exhaustive_ok and sampled_ok and all(r.passed for r in results)
    assert report(3, "semitorsor and Klein symmetries", ok, "(6^7 and 6^5 exhaustive on GF(3)^2, 1000 sampled on GF(2)^4)")


LATTICE_LAWS = [
    "diagonal x=y", "diagonal x=y=z", "diagonal x=y=a", "diagonal x=y=a, b=z", "diagonal x=y=b", "diagonal x=y=b, a=z",
    "diagonal x=y, a=z", "diagonal x=y, a=b", "diagonal x=y, z=b", "diagonal a=z", "diagonal a=z, x=b",
    "diagonal b=z", "diagonal b=z, x=a", "diagonal a=b=z", "dual diagonal x=y",
    "modular law (join form)", "modular law (meet form)", "x=y, a ^ x = 0, b v x = W gives z", "a=z, a v y = W, b v x = W gives a", "b=z, x ^ a = 0, y ^ b = 0 gives b",
]


def test_criterion_04_lattice_diagonal_values():
    outcomes = []
    for F, n in ((F2, 4), (F3, 3)):
        res = run_suite("lattice-diagonals", field=F, n=n, budget=500, seed=4)
        outcomes.append(check_suite(res, 500, LATTICE_LAWS))
    ok = all(o for o, _ in outcomes)
    assert report(4, "lattice diagonal values", ok, f"({len(LATTICE_LAWS)} identities x 500 on GF(2)^4 and GF(3)^3)")


def test_criterion_05_torsor():
    ok = True
    for p in (2, 3, 5):
        res = run_suite("torsor", field=GF(p), n=2, exhaustive=True)
        checked = res.report.checked
        ok &= res.passed and checked.get("G1", 0) > 0 and checked.get("G2", 0) > 0 and checked.get("closure", 0) > 0
        ok &= checked.get(f"GF({p})^2 axes: order p-1") == 1 and checked.get(f"GF({p})^2 axes: cyclic") == 1
    assert report(5, "torsor on U_ab", ok, "(exhaustive on GF(2)^2, GF(3)^2, GF(5)^2; axis groups of order p-1, cyclic)")


AFFINE_LAWS = ["projector-add", "projector-scale", "commutative", "associative", "zero", "negative", "one",
               "distrib-vector", "distrib-scalar", "mult-scalar", "stable"]


def test_criterion_06_affine():
    outcomes = [check_suite(run_suite("affine", field=F, n=3, budget=500, seed=6), 500, AFFINE_LAWS) for F in (F3, QQ)]
    ok = all(o for o, _ in outcomes)
    assert report(6, "affine structure of C_a", ok, "(500 cases each over GF(3)^3 and Q^3)")


def test_criterion_07_structural():
    res = run_suite("structural", field=F2, n=3, budget=200, seed=7)
    laws = ["relation pair (r_*, r^*)", "L pair (L_xayb, L_yaxb)", "M pair (M_xabz, M_zabx)",
            "R pair (R_aybz, R_azby)", "self-distributivity (middle)", "self-distributivity (right)"]
    ok, short = check_suite(res, 200, laws)
    assert report(7, "structural pairs", ok, f"(200 each on GF(2)^3; short: {short or 'none'})")


def test_criterion_08_dilation():
    res = run_suite("dilation", field=F5, n=2, exhaustive=True)
    c = res.report.checked
    ok = (
        res.passed
        and c.get("symmetry") == 8**3 * 25
        and c.get("multiplicativity", 0) > 0
        and c.get("operator = extended (x T a)", 0) > 0
        and c.get("Pi_0(x,a,z) = Pi_1(z,a,x) = x ^ (z v a) = Gamma(x,a,a,x,z)", 0) > 0
    )
    assert report(8, "dilation", ok, f"(all {8**3 * 25} (x,a,z,r,s) over GF(5)^2)")


def _explicit_ring_iso(alg, target, phi):
    elems = list(alg.elements())
    images = {phi.apply(v) for v in elems}
    if len(images) != len(elems):
        return False
    if phi.apply(alg.unit()) != target.unit():
        return False
    return all(phi.apply(alg.mul(x, y)) == target.mul(phi.apply(x), phi.apply(y)) for x in elems for y in elems)


def test_criterion_09_pair_and_algebra():
    res = run_suite("pair", field=F2, n=4, budget=200, seed=9)
    laws = ["trilinear plus product", "trilinear minus product", "x -_b Gamma(x,a,y,b,z) +_b z = Gamma(z,b,a,y,x)",
            "Gamma(x,a,o+,o-,z) = X - ZAX + Z", "X - (X - ZAX + Z) + Z = ZAX", "Gamma(z,o-,a,o+,x) = ZAX"]
    ok, short = check_suite(res, 200, laws)
    ok &= res.report.checked.get("para-associativity", 0) >= 200
    _, (o_plus, diag, o_minus) = exists_transversal_triple(F2, 4)
    alg = extract_algebra(o_plus, diag, o_minus).constants()
    target = Algebra.matrix_algebra(F2, 2)
    phi = find_algebra_isomorphism(alg, target)
    ok &= phi is not None and _explicit_ring_iso(alg, target, phi)
    assert report(9, "pair and algebra extraction", ok, "(200 cases; explicit ring isomorphism onto M(2,GF(2)))")


def test_criterion_10_round_trip():
    ok = True
    details = []
    for e, f in ((1, 1), (1, 2)):
        geo = geometry_from_pair(F2, e, f)
        alg = geo.imbedded.algebra
        closed = all(alg.is_right_ideal(I) for I in geo.ideals)
        # right ideals of M(n, F) correspond to subspaces of F^n
        n = e + f
        expected = sum(gaussian_binomial(n, k, 2) for k in range(n + 1))
        complete = len(geo.ideals) == expected
        if n == 2:
            filtered = {s for s in enumerate_subspaces(F2, 4) if alg.is_right_ideal(s)}
            complete &= filtered == set(geo.ideals)
        kind = pair_isomorphism_kind(hom_pair(F2, e, f), geo.extract_pair(), (f, e))
        ok &= closed and complete and kind in ("direct", "swap")
        details.append(f"({e},{f}): {len(geo.ideals)} ideals, {kind}")
    assert report(10, "round trip pair -> geometry -> pair", ok, "(" + "; ".join(details) + ")")


@pytest.mark.slow
def test_criterion_11_axiom_verifier():
    ok = True
    for p, n in ((2, 3), (3, 2)):
        rep = axiom_verifier(FiniteGeometry(GF(p), n))
        ok &= rep.passed and all(rep.checked.get(k, 0) > 0 for k in ("(1) semitorsor", "(3) structural L", "(6) semitorsored pairs"))
    geo = FiniteGeometry(F3, 2)
    bad, _, _ = mutate(geo, seed=11)
    failed = axiom_verifier(bad, structural_budget=50).failed()
    detected = "(1) semitorsor" in failed or any(name.startswith("(4") for name in failed)
    ok &= detected
    assert report(11, "axiom verifier", ok, f"(Gras(GF(2)^3), Gras(GF(3)^2) exhaustive; mutation caught by {failed[:2]})")


def test_criterion_12_determinism():
    argv = [sys.executable, "-m", "assocgeom.cli", "verify", "all", "--field", "p=2", "--n", "3", "--budget", "50", "--seed", "12"]
    first = subprocess.run(argv, capture_output=True, check=False)
    second = subprocess.run(argv, capture_output=True, check=False)
    ok = first.returncode == 0 and first.stdout == second.stdout and first.stdout.strip().endswith(b"overall: PASS")
    assert report(12, "determinism", ok, f"({len(first.stdout)} bytes, identical: {first.stdout == second.stdout})")

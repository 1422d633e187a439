"""Verification suites behind ``assocgeom verify``.

Each suite samples (or enumerates) instances of a family of identities and
returns a :class:`SuiteResult`.  All randomness flows from ``RunConfig.seed``
through one ``random.Random`` per suite, so reports are reproducible byte for
byte.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .charts import Chart
from .finite import AxiomReport, FiniteGeometry, axiom_verifier, mutate
from .gamma import (
    domain_flags,
    gamma_affine_origin,
    gamma_bruteforce,
    gamma_extended,
    gamma_operator,
    pi_extended,
    pi_operator,
)
from .grassmannian import (
    Subspace,
    common_complement,
    enumerate_subspaces,
    exists_transversal_triple,
    gaussian_binomial,
    is_transversal,
    random_common_complement,
    random_complement,
    random_scalar,
    random_subspace,
)
from .linalg import GF, Field, Matrix
from .pairs import (
    Algebra,
    check_pair_laws,
    extract_algebra,
    extract_pair,
    find_algebra_isomorphism,
    geometry_from_pair,
    hom_pair,
    homotope,
    is_invertible,
    jordan_T,
    pair_isomorphism_kind,
)
from .relations import (
    LinearRelation,
    check_structural_pair,
    gamma_via_relations,
    left_mult_relation,
    pushforward,
    relation_pair,
)
from .textio import format_sections
from .torsors import (
    GroupContext,
    LawReport,
    TorsorContext,
    group_mul,
    group_table,
    is_cyclic,
    left_action,
    right_action,
    semitorsored_pair_check,
    verify_affine,
    verify_torsor,
)

EXHAUSTIVE_LIMIT = 200_000  # instances per identity in --exhaustive mode
TORSOR_EXHAUSTIVE_MAX = 10  # largest |C_ab| checked on all 5-tuples
TABLE_POINTS_MAX = 16  # largest Grassmannian turned into Gamma tables


class SuiteError(ValueError):
    """Configuration the suite cannot run (e.g. exhaustion over an infinite field)."""


@dataclass
class RunConfig:
    command: str = "verify"
    field: Field = field(default_factory=lambda: GF(2))
    n: int = 3
    seed: int = 0
    budget: int = 200
    exhaustive: bool = False
    mutate: bool = False
    input_paths: tuple = ()
    output_path: str | None = None

    def describe(self) -> str:
        mode = "exhaustive" if self.exhaustive else "sampled"
        return f"field {self.field.spec()} n={self.n} seed={self.seed} budget={self.budget} mode={mode}"


@dataclass
class SuiteResult:
    name: str
    report: LawReport
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.report.passed

    def lines(self) -> list[str]:
        out = [f"suite {self.name}"]
        out.extend(f"  note: {n}" for n in self.notes)
        for law, count in self.report.checked.items():
            status = "FAIL" if law in self.report.failures else "ok"
            out.append(f"  {law}: {count} checked, {status}")
        out.append(f"result {self.name}: {'PASS' if self.passed else 'FAIL'}")
        return out

    def counterexample(self) -> str | None:
        if self.passed:
            return None
        law, witness = next(iter(self.report.failures.items()))
        return format_witness(f"{self.name}: {law}", witness)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "notes": list(self.notes),
            "laws": [
                {"law": k, "checked": v, "ok": k not in self.report.failures} for k, v in self.report.checked.items()
            ],
            "counterexample": self.counterexample(),
        }


_LABELS = ("x", "a", "y", "b", "z", "u", "v")


def _flatten_witness(w) -> list:
    if isinstance(w, (tuple, list)):
        return [v for part in w for v in _flatten_witness(part)]
    return [w]


def format_witness(title: str, witness) -> str:
    items = _flatten_witness(witness)
    spaces = [v for v in items if isinstance(v, Subspace)]
    extras = [v for v in items if not isinstance(v, Subspace)]
    labels = _LABELS if len(spaces) <= len(_LABELS) else [f"w{i}" for i in range(len(spaces))]
    comment = f"counterexample to {title}"
    if extras:
        comment += "\nparameters: " + " ".join(str(v) for v in extras)
    return format_sections(zip(labels, spaces), comment)


# -- sampling helpers ------------------------------------------------------------


def _rng(cfg: RunConfig, suite: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}")


def _all_points(cfg: RunConfig) -> list[Subspace]:
    if cfg.field.p is None:
        raise SuiteError("exhaustive mode needs a finite field")
    return enumerate_subspaces(cfg.field, cfg.n)


def _tuples(cfg: RunConfig, rng: random.Random, k: int) -> Iterator[tuple]:
    if cfg.exhaustive:
        pts = _all_points(cfg)
        if len(pts) ** k > EXHAUSTIVE_LIMIT:
            raise SuiteError(f"{len(pts)}^{k} instances exceed the exhaustive limit")
        yield from itertools.product(pts, repeat=k)
    else:
        for _ in range(cfg.budget):
            yield tuple(random_subspace(cfg.field, cfg.n, rng) for _ in range(k))


def _sub_of(s: Subspace, rng: random.Random) -> Subspace:
    f = s.field
    k = rng.randint(0, s.dim)
    vecs = []
    for _ in range(k):
        coeffs = [random_scalar(f, rng) for _ in s.basis]
        vecs.append([f(sum(c * b[i] for c, b in zip(coeffs, s.basis))) for i in range(s.n)])
    return Subspace.span(f, s.n, vecs)


def _super_of(s: Subspace, rng: random.Random) -> Subspace:
    return s | random_subspace(s.field, s.n, rng)


def _finite_geometry(cfg: RunConfig) -> tuple[FiniteGeometry, list[str]]:
    """Tables for the configured geometry, or the largest small one over the same field."""
    p = cfg.field.p if cfg.field.p is not None else 3
    n = cfg.n
    while n > 1 and sum(gaussian_binomial(n, k, p) for k in range(n + 1)) > TABLE_POINTS_MAX:
        n -= 1
    notes = []
    if (p, n) != (cfg.field.p, cfg.n):
        notes.append(f"tables built on Gras(GF({p})^{n}); the configured geometry is too large")
    return FiniteGeometry(GF(p), n), notes


def _check_table(geo: FiniteGeometry, rep: LawReport, rng: random.Random, budget: int) -> None:
    """Gamma table against gamma_extended: every entry when small, else ``budget`` entries."""
    N = geo.N
    if N**5 <= 10_000:
        idxs = itertools.product(range(N), repeat=5)
    else:
        idxs = (tuple(rng.randrange(N) for _ in range(5)) for _ in range(budget))
    G = geo.gamma
    for i in idxs:
        q = geo.quintuple(i)
        rep.record("table = gamma_extended", geo.points[G[i]] == gamma_extended(*q), q)


def _absorb(rep: LawReport, ax: AxiomReport, geo: FiniteGeometry) -> None:
    for name, count in ax.checked.items():
        rep.checked[name] = rep.checked.get(name, 0) + count
    for name, w in ax.witness.items():
        idx = [v for v in _flatten_witness(w) if isinstance(v, int)]
        rep.failures.setdefault(name, tuple(geo.points[i] for i in idx))


# -- suites ------------------------------------------------------------------------


def suite_semitorsor(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "semitorsor")
    rep = LawReport()
    notes = []
    if cfg.exhaustive:
        geo = FiniteGeometry(cfg.field, cfg.n) if cfg.field.p else None
        if geo is None or geo.N > TABLE_POINTS_MAX:
            raise SuiteError("exhaustive semitorsor check needs at most 16 points")
        _check_table(geo, rep, rng, cfg.budget)
        ax = AxiomReport()
        from .finite import _semitorsor

        _semitorsor(geo.gamma, ax, name="G3 para-associativity")
        _absorb(rep, ax, geo)
        notes.append(f"all {geo.N}^7 instances via Gamma tables")
    else:
        for x, a, y, b, z, u, v in _tuples(cfg, rng, 7):
            g = lambda p, q, r: gamma_extended(p, a, q, b, r)  # noqa: E731
            left = g(x, y, g(z, u, v))
            mid = g(x, g(u, z, y), v)
            right = g(g(x, y, z), u, v)
            rep.record("G3 para-associativity", left == mid == right, (x, a, y, b, z, u, v))
    return SuiteResult("semitorsor", rep, notes)


def suite_klein(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "klein")
    rep = LawReport()
    notes = []
    if cfg.exhaustive and cfg.field.p is not None:
        geo = FiniteGeometry(cfg.field, cfg.n)
        if geo.N > TABLE_POINTS_MAX:
            raise SuiteError("exhaustive Klein check needs at most 16 points")
        _check_table(geo, rep, rng, cfg.budget)
        ax = AxiomReport()
        from .finite import _klein

        _klein(geo.gamma, ax)
        _absorb(rep, ax, geo)
        notes.append(f"all {geo.N}^5 instances via Gamma tables")
    else:
        for x, a, y, b, z in _tuples(cfg, rng, 5):
            g = gamma_extended(x, a, y, b, z)
            rep.record("reversal (z,b,y,a,x)", g == gamma_extended(z, b, y, a, x), (x, a, y, b, z))
            rep.record("swap (a,x,y,z,b)", g == gamma_extended(a, x, y, z, b), (x, a, y, b, z))
    return SuiteResult("klein", rep, notes)


def suite_oracle(cfg: RunConfig) -> SuiteResult:
    """gamma_extended against brute force, and the operator form on its domain."""
    rng = _rng(cfg, "oracle")
    rep = LawReport()
    for q in _tuples(cfg, rng, 5):
        g = gamma_extended(*q)
        if cfg.field.p is not None:
            rep.record("extended = bruteforce", g == gamma_bruteforce(*q), q)
        if domain_flags(*q).any:
            rep.record("operator = extended on D(Gamma)", gamma_operator(*q) == g, q)
    return SuiteResult("oracle", rep)


# name, sampler (None: five free points), quintuple of the Gamma call, expected value
_Point = dict


def _cond_diag_z(p, rng):
    # b v x = W and a ^ x = 0
    p["a"] = _sub_of(random_complement(p["x"], rng), rng)
    p["b"] = _super_of(random_complement(p["x"], rng), rng)


def _cond_meet_a(p, rng):
    # a v y = W and b v x = W
    p["a"] = _super_of(random_complement(p["y"], rng), rng)
    p["b"] = _super_of(random_complement(p["x"], rng), rng)


def _cond_join_b(p, rng):
    # x ^ a = 0 and y ^ b = 0
    p["a"] = _sub_of(random_complement(p["x"], rng), rng)
    p["b"] = _sub_of(random_complement(p["y"], rng), rng)


LATTICE_IDENTITIES: list[tuple[str, Callable | None, Callable, Callable]] = [
    ("diagonal x=y", None, lambda p: (p["x"], p["a"], p["x"], p["b"], p["z"]),
     lambda p: (p["z"] | (p["x"] & p["a"])) & (p["b"] | p["x"])),
    ("diagonal x=y=z", None, lambda p: (p["x"], p["a"], p["x"], p["b"], p["x"]), lambda p: p["x"]),
    ("diagonal x=y=a", None, lambda p: (p["x"], p["x"], p["x"], p["b"], p["z"]),
     lambda p: (p["z"] | p["x"]) & (p["b"] | p["x"])),
    ("diagonal x=y=a, b=z", None, lambda p: (p["x"], p["x"], p["x"], p["z"], p["z"]), lambda p: p["z"] | p["x"]),
    ("diagonal x=y=b", None, lambda p: (p["x"], p["a"], p["x"], p["x"], p["z"]),
     lambda p: (p["z"] | (p["x"] & p["a"])) & p["x"]),
    ("diagonal x=y=b, a=z", None, lambda p: (p["x"], p["a"], p["x"], p["x"], p["a"]), lambda p: p["a"] & p["x"]),
    ("diagonal x=y, a=z", None, lambda p: (p["x"], p["a"], p["x"], p["b"], p["a"]),
     lambda p: p["a"] & (p["b"] | p["x"])),
    ("diagonal x=y, a=b", None, lambda p: (p["x"], p["a"], p["x"], p["a"], p["z"]),
     lambda p: (p["z"] | (p["x"] & p["a"])) & (p["x"] | p["a"])),
    ("diagonal x=y, z=b", None, lambda p: (p["x"], p["a"], p["x"], p["z"], p["z"]),
     lambda p: p["z"] | (p["x"] & p["a"])),
    ("diagonal a=z", None, lambda p: (p["x"], p["a"], p["y"], p["b"], p["a"]),
     lambda p: p["a"] & (p["b"] | (p["x"] & (p["y"] | p["a"])))),
    ("diagonal a=z, x=b", None, lambda p: (p["x"], p["a"], p["y"], p["x"], p["a"]), lambda p: p["a"] & p["x"]),
    ("diagonal b=z", None, lambda p: (p["x"], p["a"], p["y"], p["b"], p["b"]),
     lambda p: p["b"] | (p["a"] & (p["x"] | (p["y"] & p["b"])))),
    ("diagonal b=z, x=a", None, lambda p: (p["a"], p["a"], p["y"], p["b"], p["b"]), lambda p: p["b"] | p["a"]),
    ("diagonal a=b=z", None, lambda p: (p["x"], p["a"], p["y"], p["a"], p["a"]), lambda p: p["a"]),
    ("dual diagonal x=y", None, lambda p: (p["x"], p["a"], p["x"], p["b"], p["z"]),
     lambda p: (p["z"] & (p["x"] | p["b"])) | (p["a"] & p["x"])),
    ("modular law (join form)", None, lambda p: (p["x"], p["a"], p["x"], p["x"], p["z"]),
     lambda p: (p["z"] & p["x"]) | (p["a"] & p["x"])),
    ("modular law (meet form)", None, lambda p: (p["x"], p["a"], p["x"], p["x"], p["z"]),
     lambda p: ((p["z"] & p["x"]) | p["a"]) & p["x"]),
    ("x=y, a ^ x = 0, b v x = W gives z", _cond_diag_z, lambda p: (p["x"], p["a"], p["x"], p["b"], p["z"]), lambda p: p["z"]),
    ("a=z, a v y = W, b v x = W gives a", _cond_meet_a, lambda p: (p["x"], p["a"], p["y"], p["b"], p["a"]), lambda p: p["a"]),
    ("b=z, x ^ a = 0, y ^ b = 0 gives b", _cond_join_b, lambda p: (p["x"], p["a"], p["y"], p["b"], p["b"]), lambda p: p["b"]),
]

_CONDITIONS = {
    "x=y, a ^ x = 0, b v x = W gives z": lambda p, W: (p["b"] | p["x"]) == W and (p["a"] & p["x"]).dim == 0,
    "a=z, a v y = W, b v x = W gives a": lambda p, W: (p["a"] | p["y"]) == W and (p["b"] | p["x"]) == W,
    "b=z, x ^ a = 0, y ^ b = 0 gives b": lambda p, W: (p["x"] & p["a"]).dim == 0 and (p["y"] & p["b"]).dim == 0,
}


def suite_lattice(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "lattice-diagonals")
    rep = LawReport()
    W = Subspace.full(cfg.field, cfg.n)
    for name, cond, args, expected in LATTICE_IDENTITIES:
        for q in _tuples(cfg, rng, 5):
            p = dict(zip("xaybz", q))
            if cond is not None:
                if cfg.exhaustive:
                    if not _CONDITIONS[name](p, W):
                        continue
                else:
                    cond(p, rng)
            quint = args(p)
            rep.record(name, gamma_extended(*quint) == expected(p), quint)
    # absorption and the lattice-form recovery of join and meet
    for x, y in _tuples(cfg, rng, 2):
        rep.record("absorption", (x | (x & y)) == x == (x & (x | y)), (x, y))
    ex = GF(2)
    x = Subspace.span(ex, 3, [[1, 0, 0], [0, 1, 0]])
    a = Subspace.span(ex, 3, [[0, 1, 0], [0, 0, 1]])
    b = Subspace.span(ex, 3, [[0, 0, 1]])
    z = Subspace.span(ex, 3, [[1, 0, 1]])
    rep.record(
        "worked example GF(2)^3",
        gamma_extended(x, a, x, b, z) == Subspace.span(ex, 3, [[1, 0, 1], [0, 1, 0]]),
        (x, a, x, b, z),
    )
    return SuiteResult("lattice-diagonals", rep)


def _torsor_sampled(rep: LawReport, ctx: TorsorContext, draw: Callable[[], Subspace], budget: int) -> None:
    a, b = ctx.a, ctx.b
    g = lambda x, y, z: gamma_extended(x, a, y, b, z)  # noqa: E731
    for _ in range(budget):
        x, y, z, u, v = (draw() for _ in range(5))
        w = (x, a, y, b, z, u, v)
        rep.record("closure", ctx.contains(g(x, y, z)), (x, a, y, b, z))
        rep.record("G1", g(x, y, g(z, u, v)) == g(g(x, y, z), u, v), w)
        rep.record("G2", g(x, x, y) == y == g(y, x, x), (x, a, x, b, y))


def suite_torsor(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "torsor")
    rep = LawReport()
    notes = []
    F, n = cfg.field, cfg.n
    if cfg.exhaustive:
        pts = _all_points(cfg)
        pairs = [(a, b) for a, b in itertools.product(pts, repeat=2) if a.dim == b.dim and common_complement(a, b)]
    else:
        pairs = []
        for _ in range(max(1, cfg.budget // 100)):
            k = rng.randint(1, n - 1) if n > 1 else 0
            a = random_subspace(F, n, rng, k)
            b = random_subspace(F, n, rng, k)
            if common_complement(a, b) is None:
                b = random_complement(random_complement(a, rng), rng)
            pairs.append((a, b))
    for a, b in pairs:
        ctx = TorsorContext(a, b)
        elems = ctx.elements() if F.p is not None and _small_ctx(ctx) else None
        if elems is not None and len(elems) <= TORSOR_EXHAUSTIVE_MAX:
            rep.merge(verify_torsor(elems, lambda x, y, z: gamma_extended(x, a, y, b, z)))
        else:
            draw = (lambda: rng.choice(elems)) if elems else (lambda: random_common_complement(a, b, rng))
            _torsor_sampled(rep, ctx, draw, max(1, cfg.budget // max(1, len(pairs))))
        unit = common_complement(a, b)
        grp = GroupContext(ctx, unit)
        for _ in range(10):
            x = random_common_complement(a, b, rng)
            z = random_common_complement(a, b, rng)
            w = random_subspace(F, n, rng)
            rep.record(
                "left/right actions commute",
                left_action(grp, x, right_action(grp, w, z)) == right_action(grp, left_action(grp, x, w), z),
                (x, a, w, b, z),
            )
            rep.record(
                "left action is an action",
                left_action(grp, x, left_action(grp, z, w)) == left_action(grp, group_mul(grp, x, z), w),
                (x, a, w, b, z),
            )
    notes.append(f"{len(pairs)} axis pairs (a, b)")
    for p in (2, 3, 5):
        field_p = GF(p)
        a = Subspace.coordinate(field_p, 2, [0])
        b = Subspace.coordinate(field_p, 2, [1])
        unit = Subspace.span(field_p, 2, [[1, 1]])
        elems, table = group_table(GroupContext(TorsorContext(a, b), unit))
        rep.record(f"GF({p})^2 axes: order p-1", len(elems) == p - 1, (a, unit, b))
        rep.record(f"GF({p})^2 axes: cyclic", is_cyclic(table), (a, unit, b))
        rep.merge(verify_torsor(elems, lambda x, y, z, a=a, b=b: gamma_extended(x, a, y, b, z)))
    return SuiteResult("torsor", rep, notes)


def _small_ctx(ctx: TorsorContext) -> bool:
    a = ctx.a
    return gaussian_binomial(a.n, a.n - a.dim, a.field.p) <= 2000


def suite_affine(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "affine")
    rep = LawReport()
    F, n = cfg.field, cfg.n
    if F.p is not None:
        scalars = F.elements()
    else:
        scalars = sorted({random_scalar(F, rng) for _ in range(12)})
    rounds = max(1, cfg.budget // 100)
    for i in range(rounds):
        k = rng.randint(1, n - 1) if n > 1 else 0
        a = random_subspace(F, n, rng, k)
        if F.p is not None and gaussian_binomial(n, n - k, F.p) <= 2000:
            points = [s for s in enumerate_subspaces(F, n, n - k) if is_transversal(s, a)]
        else:
            points = [random_complement(a, rng) for _ in range(8)]
        share = cfg.budget // rounds + (1 if i < cfg.budget % rounds else 0)
        rep.merge(verify_affine(a, points, scalars, rng, share))
        b = random_subspace(F, n, rng, k)
        rep.merge(semitorsored_pair_check(a, b, rng, max(1, share // 10)))
    return SuiteResult("affine", rep, [f"{rounds} base points a"])


def suite_structural(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "structural")
    rep = LawReport()
    F, n = cfg.field, cfg.n
    space = (F, n)

    def seed():
        return rng.randrange(2**31)

    for _ in range(cfg.budget):
        graph = random_subspace(F, 2 * n, rng)
        r = LinearRelation(n, n, graph)
        f, g = relation_pair(r)
        res = check_structural_pair(f, g, space, space, budget=1, seed=seed())
        rep.record("relation pair (r_*, r^*)", res.passed, res.counterexample)
    for _ in range(cfg.budget):
        x, a, y, b, z = (random_subspace(F, n, rng) for _ in range(5))
        maps = {
            "L pair (L_xayb, L_yaxb)": (
                lambda t: gamma_extended(x, a, y, b, t),
                lambda t: gamma_extended(y, a, x, b, t),
            ),
            "M pair (M_xabz, M_zabx)": (
                lambda t: gamma_extended(x, a, t, b, z),
                lambda t: gamma_extended(z, a, t, b, x),
            ),
            "R pair (R_aybz, R_azby)": (
                lambda t: gamma_extended(t, a, y, b, z),
                lambda t: gamma_extended(t, a, z, b, y),
            ),
        }
        for name, (f, g) in maps.items():
            res = check_structural_pair(f, g, space, space, budget=1, seed=seed())
            rep.record(name, res.passed, res.counterexample)
    for _ in range(cfg.budget):
        x, a, y, b, z, u, v, w, c, d = (random_subspace(F, n, rng) for _ in range(10))
        G = gamma_extended
        lhs1 = G(x, a, G(u, G(a, z, c, x, b), v, G(a, z, d, x, b), w), b, z)
        rhs1 = G(G(x, a, u, b, z), c, G(x, a, v, b, z), d, G(x, a, w, b, z))
        rep.record("self-distributivity (middle)", lhs1 == rhs1, (x, a, y, b, z, u, v, w, c, d))
        lhs2 = G(x, a, y, b, G(u, G(y, a, x, b, c), v, G(y, a, x, b, d), w))
        rhs2 = G(G(x, a, y, b, u), c, G(x, a, y, b, v), d, G(x, a, y, b, w))
        rep.record("self-distributivity (right)", lhs2 == rhs2, (x, a, y, b, z, u, v, w, c, d))
    for _ in range(cfg.budget):
        x, a, y, b, z = (random_subspace(F, n, rng) for _ in range(5))
        rep.record(
            "l_{x,a,y,b} pushes z to Gamma(x,a,y,b,z)",
            pushforward(left_mult_relation(x, a, y, b), z) == gamma_extended(x, a, y, b, z),
            (x, a, y, b, z),
        )
        b2 = random_complement(a, rng)
        rep.record(
            "relation semitorsor z y^-1 x",
            gamma_via_relations(x, a, y, b2, z) == gamma_extended(x, a, y, b2, z),
            (x, a, y, b2, z),
        )
    units = [r for r in (F.elements() if F.p else [F(2), F(-1), F("1/3")]) if r and F(1 - r)]
    if units:
        for _ in range(max(1, cfg.budget // 4)):
            r = rng.choice(units)
            x, a, z = (random_subspace(F, n, rng) for _ in range(3))
            lam = (lambda t: pi_extended(r, x, a, t), lambda t: pi_extended(r, a, x, t))
            mu = (lambda t: pi_extended(r, x, t, z), lambda t: pi_extended(r, z, t, x))
            for name, (f, g) in (("Pi_r left pair", lam), ("Pi_r middle pair", mu)):
                res = check_structural_pair(f, g, space, space, budget=1, seed=seed())
                rep.record(name + " (r(1-r) invertible)", res.passed, (res.counterexample, r))
    return SuiteResult("structural", rep)


def _dilation_instances(cfg: RunConfig, rng: random.Random) -> Iterator[tuple]:
    F = cfg.field
    if cfg.exhaustive:
        pts = _all_points(cfg)
        for (x, a, z), r, s in itertools.product(itertools.product(pts, repeat=3), F.elements(), F.elements()):
            yield x, a, z, r, s
    else:
        for _ in range(cfg.budget):
            x, a, z = (random_subspace(F, cfg.n, rng) for _ in range(3))
            yield x, a, z, random_scalar(F, rng), random_scalar(F, rng)


def suite_dilation(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "dilation")
    rep = LawReport()
    F = cfg.field
    one = F.one
    for x, a, z, r, s in _dilation_instances(cfg, rng):
        P = lambda t, p, q, u: pi_extended(F(t), p, q, u)  # noqa: E731
        w = (x, a, z, r, s)
        val = P(r, x, a, z)
        rep.record("symmetry", val == P(one - r, z, a, x), w)
        rep.record("Pi_r(x,a,x) = x", P(r, x, a, x) == x, w)
        if s == 0:
            meet_val = x & (z | a)
            rep.record(
                "Pi_0(x,a,z) = Pi_1(z,a,x) = x ^ (z v a) = Gamma(x,a,a,x,z)",
                P(0, x, a, z) == P(1, z, a, x) == meet_val == gamma_extended(x, a, a, x, z),
                w,
            )
        if is_transversal(x, a):
            rep.record("multiplicativity", P(r, x, a, P(s, x, a, z)) == P(r * s, x, a, z), w)
            rep.record("operator = extended (x T a)", pi_operator(F(r), x, a, z) == val, w)
        if is_transversal(z, a):
            rep.record("operator = extended (z T a)", pi_operator(F(r), x, a, z) == val, w)
        if r != 0:
            rep.record("Pi_r(a,x,z) = Pi_1/r(x,a,z)", P(r, a, x, z) == P(F.inv(F(r)), x, a, z), w)
    return SuiteResult("dilation", rep)


def _rand_matrix(F: Field, r: int, c: int, rng: random.Random) -> Matrix:
    return Matrix.from_rows(F, [[random_scalar(F, rng) for _ in range(c)] for _ in range(r)])


def _flat(m: Matrix) -> tuple:
    return tuple(v for row in m.data for v in row)


def suite_pair(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "pair")
    rep = LawReport()
    notes = []
    F, n = cfg.field, cfg.n
    k = n // 2
    m = n - k
    o_plus = random_subspace(F, n, rng, k)
    o_minus = random_complement(o_plus, rng)
    gp = extract_pair(o_plus, o_minus)
    pair = gp.constants()
    for _ in range(cfg.budget):
        X, Z = _rand_matrix(F, m, k, rng), _rand_matrix(F, m, k, rng)
        Y = _rand_matrix(F, k, m, rng)
        got = _flat(gp.plus_product(X, Y, Z))
        rep.record("trilinear plus product", got == pair.triple_plus(_flat(X), _flat(Y), _flat(Z)), (o_plus, o_minus))
        A, C = _rand_matrix(F, k, m, rng), _rand_matrix(F, k, m, rng)
        B = _rand_matrix(F, m, k, rng)
        got = _flat(gp.minus_product(A, B, C))
        rep.record("trilinear minus product", got == pair.triple_minus(_flat(A), _flat(B), _flat(C)), (o_plus, o_minus))

    def triples(sign):
        dp, dm = pair.dims(sign)
        for _ in range(cfg.budget):
            vx = [tuple(random_scalar(F, rng) for _ in range(d)) for d in (dp, dm, dp, dm, dp)]
            yield vx

    bad = check_pair_laws(pair, triples)
    rep.checked["para-associativity"] = 2 * cfg.budget
    if bad["+"] or bad["-"]:
        rep.failures["para-associativity"] = (o_plus, o_minus)

    # Gamma(x,b,Gamma(x,a,y,b,z),b,z) = Gamma(z,b,a,y,x) for z in U_b, x in U_ab
    for _ in range(cfg.budget):
        a = random_subspace(F, n, rng, k)
        b = random_subspace(F, n, rng, k)
        x = random_common_complement(a, b, rng)
        if x is None:
            b = random_complement(random_complement(a, rng), rng)
            x = random_common_complement(a, b, rng)
        z = random_complement(b, rng)
        y = random_subspace(F, n, rng)
        G = gamma_extended
        rep.record("x -_b Gamma(x,a,y,b,z) +_b z = Gamma(z,b,a,y,x)", G(x, b, G(x, a, y, b, z), b, z) == G(z, b, a, y, x), (x, a, y, b, z))
    ch = Chart.standard(F, m, k)
    for _ in range(cfg.budget):
        X, Z = _rand_matrix(F, m, k, rng), _rand_matrix(F, m, k, rng)
        A = _rand_matrix(F, k, m, rng)
        x, z, a = ch.graph_plus(X), ch.graph_plus(Z), ch.graph_minus(A)
        inner = gamma_extended(x, a, ch.o_plus, ch.o_minus, z)
        rep.record("Gamma(x,a,o+,o-,z) = X - ZAX + Z", ch.coords_plus(inner) == gamma_affine_origin(X, A, Z), (x, a, z))
        outer = gamma_extended(x, ch.o_minus, inner, ch.o_minus, z)
        rep.record("X - (X - ZAX + Z) + Z = ZAX", ch.coords_plus(outer) == Z @ A @ X, (x, a, z))
        rep.record("Gamma(z,o-,a,o+,x) = ZAX", gamma_extended(z, ch.o_minus, a, ch.o_plus, x) == ch.graph_plus(Z @ A @ X), (x, a, z))

    if n % 2 == 0 and n > 0:
        half = n // 2
        ok, (a0, u0, c0) = exists_transversal_triple(F, n)
        triples_ = [(a0, u0, c0)]
        for _ in range(3):
            a = random_subspace(F, n, rng, half)
            c = random_complement(a, rng)
            u = random_common_complement(a, c, rng)
            if u is not None:
                triples_.append((a, u, c))
        target = Algebra.matrix_algebra(F, half)
        for a, u, c in triples_:
            ga = extract_algebra(a, u, c)
            alg = ga.constants()
            rep.record("extracted algebra associative", alg.is_associative(), (a, u, c))
            rep.record("unit of extracted algebra = coordinates of u", alg.is_unit(_flat(ga.unit())), (a, u, c))
            if F.p is not None and F.p ** (half * half) <= 16:
                rep.record("extracted algebra isomorphic to M(n/2)", find_algebra_isomorphism(alg, target) is not None, (a, u, c))
    else:
        notes.append("odd n: no transversal triple, algebra extraction skipped")

    # invertible elements and the Jordan quadratic map in the square Hom model
    if F.p is None or F.p ** 4 <= 10**6:
        H = hom_pair(F, 2, 2)
        for _ in range(max(1, cfg.budget // 10)):
            X = _rand_matrix(F, 2, 2, rng)
            inv, xinv = is_invertible(H, _flat(X))
            rep.record("invertible iff invertible matrix", inv == X.is_invertible(), ())
            if inv:
                rep.record("x^-1 is the unit of the homotope A_x", homotope(H, _flat(X), "-").is_unit(xinv), ())
            x, y, z = (tuple(random_scalar(F, rng) for _ in range(4)) for _ in range(3))
            lhs = jordan_T(H, x, y, z)
            rhs = tuple(F(p + q) for p, q in zip(H.triple_plus(x, y, z), H.triple_plus(z, y, x)))
            rep.record("Q polarization", lhs == rhs, ())

    # round trip through the geometry of right ideals of End(E (+) F) over GF(2)
    for e_dim, f_dim in ((1, 1), (1, 2)):
        geo = geometry_from_pair(GF(2), e_dim, f_dim)
        alg = geo.imbedded.algebra
        rep.record(f"right ideals closed ({e_dim},{f_dim})", all(alg.is_right_ideal(I) for I in geo.ideals), ())
        kind = pair_isomorphism_kind(hom_pair(GF(2), e_dim, f_dim), geo.extract_pair(), (f_dim, e_dim))
        rep.record(f"round trip ({e_dim},{f_dim})", kind in ("direct", "swap"), ())
        notes.append(f"round trip ({e_dim},{f_dim}): {len(geo.ideals)} right ideals, isomorphism {kind}")
    return SuiteResult("pair", rep, notes)


def suite_axioms(cfg: RunConfig) -> SuiteResult:
    rng = _rng(cfg, "axioms")
    rep = LawReport()
    geo, notes = _finite_geometry(cfg)
    _check_table(geo, rep, rng, cfg.budget)
    budget = None if cfg.exhaustive else cfg.budget
    notes.append(f"{geo.N} points; structurality {'all' if budget is None else budget} parameter tuples")
    target = geo
    if cfg.mutate:
        target, i, j = mutate(geo, cfg.seed)
        notes.append(f"mutation: swapped Gamma entries {i} and {j}")
    _absorb(rep, axiom_verifier(target, structural_budget=budget, seed=cfg.seed), geo)
    if not cfg.mutate:
        op = AxiomReport()
        op_rep = axiom_verifier(geo.opposite(), structural_budget=budget, seed=cfg.seed, extras=False)
        op.checked = {f"opposite {k}": v for k, v in op_rep.checked.items()}
        op.witness = {f"opposite {k}": v for k, v in op_rep.witness.items()}
        _absorb(rep, op, geo)
    return SuiteResult("axioms", rep, notes)


SUITES: dict[str, Callable[[RunConfig], SuiteResult]] = {
    "semitorsor": suite_semitorsor,
    "klein": suite_klein,
    "lattice-diagonals": suite_lattice,
    "torsor": suite_torsor,
    "affine": suite_affine,
    "structural": suite_structural,
    "dilation": suite_dilation,
    "pair": suite_pair,
    "axioms": suite_axioms,
    "oracle": suite_oracle,
}

ALL_ORDER = (
    "oracle",
    "semitorsor",
    "klein",
    "lattice-diagonals",
    "torsor",
    "affine",
    "structural",
    "dilation",
    "pair",
    "axioms",
)


def run_suites(name: str, cfg: RunConfig) -> list[SuiteResult]:
    names = ALL_ORDER if name == "all" else (name,)
    if any(s not in SUITES for s in names):
        raise SuiteError(f"unknown suite {name!r}")
    return [SUITES[s](cfg) for s in names]


def render(results: list[SuiteResult], cfg: RunConfig, as_json: bool = False) -> str:
    passed = all(r.passed for r in results)
    if as_json:
        doc = {"config": cfg.describe(), "passed": passed, "suites": [r.as_dict() for r in results]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines = [f"verify {cfg.describe()}"]
    for r in results:
        lines.extend(r.lines())
    lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
    for r in results:
        ce = r.counterexample()
        if ce:
            lines.append("")
            lines.append(ce.rstrip("\n"))
    return "\n".join(lines) + "\n"


__all__ = [
    "ALL_ORDER",
    "LATTICE_IDENTITIES",
    "RunConfig",
    "SUITES",
    "SuiteError",
    "SuiteResult",
    "format_witness",
    "render",
    "run_suites",
]

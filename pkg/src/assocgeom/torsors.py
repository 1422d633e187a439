"""Torsors, groups and affine spaces carved out of Gamma, plus generic torsor law checkers."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .gamma import gamma_extended, pi_extended
from .grassmannian import (
    Subspace,
    _check,
    enumerate_subspaces,
    is_transversal,
    projector,
    random_complement,
    random_scalar,
)


class NotInTorsor(ValueError):
    pass


@dataclass(frozen=True)
class TorsorContext:
    """The pair (a, b); C_ab with ``(xyz) = Gamma(x, a, y, b, z)`` is the torsor U_ab."""

    a: Subspace
    b: Subspace

    def __post_init__(self):
        _check(self.a, self.b)

    def contains(self, x: Subspace) -> bool:
        return is_transversal(x, self.a) and is_transversal(x, self.b)

    def require(self, *xs: Subspace) -> None:
        for x in xs:
            if not self.contains(x):
                raise NotInTorsor(f"{x!r} is not a common complement of a and b")

    def elements(self) -> list[Subspace]:
        """C_ab, by enumeration (finite fields only)."""
        a = self.a
        return [s for s in enumerate_subspaces(a.field, a.n, a.n - a.dim) if self.contains(s)]

    def opposite(self) -> "TorsorContext":
        return TorsorContext(self.b, self.a)


@dataclass(frozen=True)
class GroupContext:
    ctx: TorsorContext
    unit: Subspace

    def __post_init__(self):
        self.ctx.require(self.unit)


def torsor_product(ctx: TorsorContext, x: Subspace, y: Subspace, z: Subspace) -> Subspace:
    ctx.require(x, y, z)
    return gamma_extended(x, ctx.a, y, ctx.b, z)


def group_mul(g: GroupContext, x: Subspace, z: Subspace) -> Subspace:
    return torsor_product(g.ctx, x, g.unit, z)


def group_inv(g: GroupContext, x: Subspace) -> Subspace:
    return torsor_product(g.ctx, g.unit, x, g.unit)


def left_action(g: GroupContext, x: Subspace, z: Subspace) -> Subspace:
    """``L_{x a y b}(z)`` for x in U_ab and arbitrary z."""
    g.ctx.require(x)
    return gamma_extended(x, g.ctx.a, g.unit, g.ctx.b, z)


def right_action(g: GroupContext, x: Subspace, z: Subspace) -> Subspace:
    """``R_{a y b z}(x)`` for arbitrary x and z in U_ab."""
    g.ctx.require(z)
    return gamma_extended(x, g.ctx.a, g.unit, g.ctx.b, z)


def affine_add(a: Subspace, x: Subspace, y: Subspace, z: Subspace) -> Subspace:
    """``x +_y z = Gamma(x, a, y, a, z)`` on C_a (origin y)."""
    for s in (x, y, z):
        if not is_transversal(s, a):
            raise NotInTorsor("affine_add needs points of C_a")
    return gamma_extended(x, a, y, a, z)


def affine_scale(a: Subspace, r, x: Subspace, y: Subspace) -> Subspace:
    """``(1 - r) x + r y = Pi_r(x, a, y)`` on C_a."""
    for s in (x, y):
        if not is_transversal(s, a):
            raise NotInTorsor("affine_scale needs points of C_a")
    return pi_extended(a.field(r), x, a, y)


def projector_add(a: Subspace, x: Subspace, y: Subspace, z: Subspace) -> Subspace:
    """The point with projector ``P_x^a - P_y^a + P_z^a``."""
    p = projector(x, a) - projector(y, a) + projector(z, a)
    return Subspace.full(a.field, a.n).image(p)


def projector_scale(a: Subspace, r, x: Subspace, y: Subspace) -> Subspace:
    """The point with projector ``(1 - r) P_x^a + r P_y^a``."""
    f = a.field
    r = f(r)
    p = projector(x, a).scale(f(1 - r)) + projector(y, a).scale(r)
    return Subspace.full(f, a.n).image(p)


# -- generic law checkers ----------------------------------------------------


@dataclass
class LawReport:
    """Per-law outcome; ``failures`` maps a law name to its first witness."""

    checked: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, law: str, ok: bool, witness) -> None:
        self.checked[law] = self.checked.get(law, 0) + 1
        if not ok and law not in self.failures:
            self.failures[law] = witness

    def merge(self, other: "LawReport") -> "LawReport":
        for k, v in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + v
        for k, v in other.failures.items():
            self.failures.setdefault(k, v)
        return self


Ternary = Callable[[Hashable, Hashable, Hashable], Hashable]


def _tabulate(elements: Sequence, product: Ternary):
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    table = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        out = product(elements[i], elements[j], elements[k])
        if out not in index:
            return None, (elements[i], elements[j], elements[k])
        table[i, j, k] = index[out]
    return table, None


def verify_semitorsor(elements: Sequence, product: Ternary) -> LawReport:
    """Exhaustive (G3) on a finite set (closure is checked first)."""
    rep = LawReport()
    table, witness = _tabulate(elements, product)
    rep.record("closure", table is not None, witness)
    if table is None:
        return rep
    n = len(elements)
    for x, y, z, u, v in itertools.product(range(n), repeat=5):
        left = table[x, y, table[z, u, v]]
        mid = table[x, table[u, z, y], v]
        right = table[table[x, y, z], u, v]
        w = tuple(elements[i] for i in (x, y, z, u, v))
        rep.record("G3", left == mid == right, w)
    return rep


def verify_torsor(elements: Sequence, product: Ternary) -> LawReport:
    """Exhaustive (G1), (G2) and the consequences: Chasle for left translations,
    ``m_{x,z} o m_{z,x} = id``, and (G3)."""
    rep = LawReport()
    table, witness = _tabulate(elements, product)
    rep.record("closure", table is not None, witness)
    if table is None:
        return rep
    n = len(elements)
    e = elements
    for x, y, z, u, v in itertools.product(range(n), repeat=5):
        w = (e[x], e[y], e[z], e[u], e[v])
        rep.record("G1", table[x, y, table[z, u, v]] == table[table[x, y, z], u, v], w)
        rep.record("G3", table[x, y, table[z, u, v]] == table[x, table[u, z, y], v], w)
    for x, y in itertools.product(range(n), repeat=2):
        rep.record("G2", table[x, x, y] == y == table[y, x, x], (e[x], e[y]))
    for x, y, u, z in itertools.product(range(n), repeat=4):
        # l_{x,y} o l_{y,u} = l_{x,u}
        rep.record("chasle", table[x, y, table[y, u, z]] == table[x, u, z], (e[x], e[y], e[u], e[z]))
    for x, z, y in itertools.product(range(n), repeat=3):
        # m_{x,z}(m_{z,x}(y)) = y
        rep.record("middle-inverse", table[x, table[z, y, x], z] == y, (e[x], e[z], e[y]))
    return rep


def group_table(g: GroupContext) -> tuple[list[Subspace], list[list[int]]]:
    """Elements of U_ab (unit first, then canonical order) and the multiplication table."""
    others = [s for s in g.ctx.elements() if s != g.unit]
    elems = [g.unit] + others
    index = {s: i for i, s in enumerate(elems)}
    table = [[index[group_mul(g, x, z)] for z in elems] for x in elems]
    return elems, table


def is_cyclic(table: list[list[int]]) -> bool:
    """Whether the group given by an index table (unit at index 0) is cyclic."""
    n = len(table)
    for g in range(n):
        seen, cur = {0}, g
        while cur != 0:
            seen.add(cur)
            cur = table[cur][g]
        if len(seen) == n:
            return True
    return n == 0


# -- affine-space and pair checks --------------------------------------------


def verify_affine(a: Subspace, points: Sequence[Subspace], scalars: Sequence, rng: random.Random, budget: int) -> LawReport:
    """Affine-space laws on C_a and agreement with the projector formulas."""
    rep = LawReport()
    for _ in range(budget):
        x, y, z, w = (rng.choice(points) for _ in range(4))
        r, s = rng.choice(scalars), rng.choice(scalars)
        add = lambda p, q: affine_add(a, p, y, q)  # noqa: E731, origin y
        sc = lambda t, p: affine_scale(a, t, y, p)  # noqa: E731, t p about origin y
        rep.record("projector-add", affine_add(a, x, y, z) == projector_add(a, x, y, z), (x, a, y, a, z))
        rep.record("projector-scale", affine_scale(a, r, x, z) == projector_scale(a, r, x, z), (x, a, z, r))
        rep.record("commutative", add(x, z) == add(z, x), (x, a, y, a, z))
        rep.record("associative", add(add(x, z), w) == add(x, add(z, w)), (x, y, z, w))
        rep.record("zero", add(x, y) == x, (x, y))
        neg = affine_add(a, y, x, y)
        rep.record("negative", add(x, neg) == y, (x, y))
        f = a.field
        rep.record("one", sc(1, x) == x and sc(0, x) == y, (x, y))
        rep.record("distrib-vector", sc(r, add(x, z)) == add(sc(r, x), sc(r, z)), (x, y, z, r))
        rep.record("distrib-scalar", sc(f(r + s), x) == add(sc(r, x), sc(s, x)), (x, y, r, s))
        rep.record("mult-scalar", sc(f(r * s), x) == sc(r, sc(s, x)), (x, y, r, s))
        rep.record("stable", is_transversal(affine_scale(a, r, x, z), a), (x, a, z, r))
    return rep


def semitorsored_pair_check(a: Subspace, b: Subspace, rng: random.Random, budget: int = 100) -> LawReport:
    """Gamma(U_a, a, U_b, b, U_a) in U_a, the mirror, and tri-affineness slot by slot."""
    rep = LawReport()
    f = a.field
    for _ in range(budget):
        x1, x2, x3, z = (random_complement(a, rng) for _ in range(4))
        y1, y2, y3 = (random_complement(b, rng) for _ in range(3))
        r = random_scalar(f, rng)
        g = lambda x, y, zz: gamma_extended(x, a, y, b, zz)  # noqa: E731
        rep.record("closure+", is_transversal(g(x1, y1, z), a), (x1, a, y1, b, z))
        rep.record("closure-", is_transversal(gamma_extended(y1, a, x1, b, y2), b), (y1, a, x1, b, y2))
        add_a = lambda p, o, q: gamma_extended(p, a, o, a, q)  # noqa: E731
        add_b = lambda p, o, q: gamma_extended(p, b, o, b, q)  # noqa: E731
        rep.record(
            "affine-x",
            g(add_a(x1, x2, x3), y1, z) == add_a(g(x1, y1, z), g(x2, y1, z), g(x3, y1, z)),
            (x1, x2, x3, y1, z),
        )
        rep.record(
            "affine-z",
            g(z, y1, add_a(x1, x2, x3)) == add_a(g(z, y1, x1), g(z, y1, x2), g(z, y1, x3)),
            (z, y1, x1, x2, x3),
        )
        rep.record(
            "affine-y",
            g(x1, add_b(y1, y2, y3), z) == add_a(g(x1, y1, z), g(x1, y2, z), g(x1, y3, z)),
            (x1, y1, y2, y3, z),
        )
        rep.record(
            "scale-x",
            g(pi_extended(r, x1, a, x2), y1, z) == pi_extended(r, g(x1, y1, z), a, g(x2, y1, z)),
            (x1, x2, y1, z, r),
        )
        rep.record(
            "scale-y",
            g(x1, pi_extended(r, y1, b, y2), z) == pi_extended(r, g(x1, y1, z), a, g(x1, y2, z)),
            (x1, y1, y2, z, r),
        )
    return rep


__all__ = [
    "GroupContext",
    "LawReport",
    "NotInTorsor",
    "TorsorContext",
    "affine_add",
    "affine_scale",
    "group_inv",
    "group_mul",
    "group_table",
    "is_cyclic",
    "left_action",
    "projector_add",
    "projector_scale",
    "right_action",
    "semitorsored_pair_check",
    "torsor_product",
    "verify_affine",
    "verify_semitorsor",
    "verify_torsor",
]

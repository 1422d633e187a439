"""Linear relations W -> W' stored as subspaces of W (+) W', and structural pairs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .gamma import gamma_extended
from .grassmannian import Subspace, enumerate_subspaces, random_subspace
from .linalg import Field, Matrix, kernel_rows


@dataclass(frozen=True)
class LinearRelation:
    """A relation from F^src to F^dst; the first ``src`` graph coordinates are the source."""

    src: int
    dst: int
    graph: Subspace

    def __post_init__(self):
        if self.graph.n != self.src + self.dst:
            raise ValueError(f"graph lives in F^{self.graph.n}, expected F^{self.src + self.dst}")

    @property
    def field(self) -> Field:
        return self.graph.field

    @classmethod
    def of_matrix(cls, m: Matrix) -> "LinearRelation":
        """Graph ``{(v, m v)}`` of the linear map ``m``."""
        n, k = m.ncols, m.nrows
        one, zero = m.field.one, m.field.zero
        vecs = []
        for j in range(n):
            e = [one if i == j else zero for i in range(n)]
            vecs.append(e + list(m.apply(e)))
        return cls(n, k, Subspace.span(m.field, n + k, vecs))

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearRelation":
        return cls.of_matrix(Matrix.identity(field, n))

    def __repr__(self):
        return f"LinearRelation({self.src}->{self.dst}, {self.graph!r})"


def _eliminate(field: Field, blocks: Sequence[int], constraints, keep: Sequence[int]) -> Subspace:
    """Project the solution set of ``constraints`` onto the blocks listed in ``keep``.

    ``blocks`` gives the size of each variable block.  Each constraint is
    ``(space, [block indices])`` meaning the concatenation of those blocks lies in ``space``.
    """
    offsets = list(itertools.accumulate([0] + list(blocks)))
    ncols = offsets[-1]
    zero = field.zero
    rows = []
    for space, idx in constraints:
        for h in space.annihilator():
            row = [zero] * ncols
            pos = 0
            for i in idx:
                row[offsets[i] : offsets[i + 1]] = h[pos : pos + blocks[i]]
                pos += blocks[i]
            rows.append(row)
    sols = kernel_rows(rows, ncols, field)
    out_n = sum(blocks[i] for i in keep)
    vecs = [[v for i in keep for v in s[offsets[i] : offsets[i + 1]]] for s in sols]
    return Subspace.span(field, out_n, vecs)


def compose(s: LinearRelation, r: LinearRelation) -> LinearRelation:
    """``s o r = {(u, w) : exists v, (u, v) in r, (v, w) in s}``."""
    if r.dst != s.src or r.field != s.field:
        raise ValueError("relations do not chain")
    g = _eliminate(r.field, [r.src, r.dst, s.dst], [(r.graph, [0, 1]), (s.graph, [1, 2])], [0, 2])
    return LinearRelation(r.src, s.dst, g)


def reverse(r: LinearRelation) -> LinearRelation:
    n = r.src
    swapped = [tuple(v[n:]) + tuple(v[:n]) for v in r.graph.basis]
    return LinearRelation(r.dst, r.src, Subspace.span(r.field, r.graph.n, swapped))


def relation_semitorsor(x: LinearRelation, y: LinearRelation, z: LinearRelation) -> LinearRelation:
    """``z o y^-1 o x``."""
    return compose(z, compose(reverse(y), x))


def pushforward(r: LinearRelation, x: Subspace) -> Subspace:
    """``r_*(x) = {w' : exists xi in x, (xi, w') in r}``."""
    if x.n != r.src:
        raise ValueError("subspace is not in the source space")
    return _eliminate(r.field, [r.src, r.dst], [(x, [0]), (r.graph, [0, 1])], [1])


def pullback(r: LinearRelation, y: Subspace) -> Subspace:
    """``r^*(y) = {w : exists eta in y, (w, eta) in r}``."""
    if y.n != r.dst:
        raise ValueError("subspace is not in the target space")
    return _eliminate(r.field, [r.src, r.dst], [(y, [1]), (r.graph, [0, 1])], [0])


def left_mult_relation(x: Subspace, a: Subspace, y: Subspace, b: Subspace) -> LinearRelation:
    """``l_{x,a,y,b} = {(zeta, w) : exists xi in x, w + zeta in a, w + zeta + xi in y, w + xi in b}``."""
    field, n = x.field, x.n
    zero = field.zero
    p = field.p

    def combo(h, sel):
        # constraint row over (zeta | w | xi-coords) for h . (sum of selected blocks) = 0
        row = [zero] * (2 * n + x.dim)
        if "zeta" in sel:
            row[:n] = h
        if "w" in sel:
            row[n : 2 * n] = h
        if "xi" in sel:
            for i, vec in enumerate(x.basis):
                s = sum(c * v for c, v in zip(h, vec))
                row[2 * n + i] = s % p if p else s
        return row

    rows = []
    for space, sel in ((a, ("w", "zeta")), (y, ("w", "zeta", "xi")), (b, ("w", "xi"))):
        rows.extend(combo(h, sel) for h in space.annihilator())
    sols = kernel_rows(rows, 2 * n + x.dim, field)
    return LinearRelation(n, n, Subspace.span(field, 2 * n, [s[: 2 * n] for s in sols]))


def gamma_via_relations(x: Subspace, a: Subspace, y: Subspace, b: Subspace, z: Subspace) -> Subspace:
    """For ``W = a (+) b``, read x, y, z as relations a -> b and form ``z y^-1 x``."""
    from .charts import Chart

    chart = Chart(a, b)
    frame = chart._frame()  # columns: basis of b then basis of a
    inv = frame.inverse()
    k, m = a.dim, b.dim

    def as_relation(s: Subspace) -> LinearRelation:
        vecs = []
        for v in s.basis:
            c = inv.apply(v)
            vecs.append(tuple(c[m:]) + tuple(c[:m]))
        return LinearRelation(k, m, Subspace.span(s.field, s.n, vecs))

    r = relation_semitorsor(as_relation(x), as_relation(y), as_relation(z))
    vecs = [frame.apply(tuple(v[k:]) + tuple(v[:k])) for v in r.graph.basis]
    return Subspace.span(x.field, x.n, vecs)


# -- structural pairs --------------------------------------------------------

SubspaceMap = Callable[[Subspace], Subspace]

# Positions (into x, a, y, b, z) that carry the "g"-transported arguments.
SLOT_VARIANTS = {"ab": (1, 3), "yb": (2, 3), "xz": (0, 4)}


@dataclass
class StructuralReport:
    checked: int
    counterexample: tuple | None = None
    side: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _structural_once(f, g, args, primed, slots) -> bool:
    """One instance of ``f(Gamma(.., g a', .., g b', ..)) = Gamma(f x, a', f y, b', f z)``."""
    inner = []
    outer = []
    pi = iter(primed)
    for pos, u in enumerate(args):
        if pos in slots:
            up = next(pi)
            inner.append(g(up))
            outer.append(up)
        else:
            inner.append(u)
            outer.append(f(u))
    return f(gamma_extended(*inner)) == gamma_extended(*outer)


def check_structural_pair(
    f: SubspaceMap,
    g: SubspaceMap,
    source: tuple[Field, int],
    target: tuple[Field, int],
    budget: int = 500,
    seed: int = 0,
    variant: str = "ab",
    exhaustive: bool = False,
) -> StructuralReport:
    """Test both structurality identities of ``(f, g)`` on random (or all) instances.

    ``source``/``target`` are ``(field, n)`` for the geometries of f's domain and
    codomain.  ``variant`` picks which argument pair is transported by ``g``.
    """
    slots = SLOT_VARIANTS[variant]
    rng = random.Random(seed)
    checked = 0

    def instances(space, other):
        nfree, nprimed = 5 - len(slots), len(slots)
        if exhaustive:
            xs = enumerate_subspaces(*space)
            ys = enumerate_subspaces(*other)
            for free in itertools.product(xs, repeat=nfree):
                for primed in itertools.product(ys, repeat=nprimed):
                    yield free, primed
        else:
            for _ in range(budget):
                yield (
                    [random_subspace(*space, rng) for _ in range(nfree)],
                    [random_subspace(*other, rng) for _ in range(nprimed)],
                )

    for side, (ff, gg, dom, cod) in (("forward", (f, g, source, target)), ("backward", (g, f, target, source))):
        for free, primed in instances(dom, cod):
            args = []
            it = iter(free)
            for pos in range(5):
                args.append(None if pos in slots else next(it))
            checked += 1
            if not _structural_once(ff, gg, args, primed, slots):
                full = []
                pi = iter(primed)
                for pos, u in enumerate(args):
                    full.append(gg(next(pi)) if pos in slots else u)
                return StructuralReport(checked, tuple(full), side)
    return StructuralReport(checked)


def relation_pair(r: LinearRelation) -> tuple[SubspaceMap, SubspaceMap]:
    return (lambda x: pushforward(r, x)), (lambda y: pullback(r, y))


__all__ = [
    "LinearRelation",
    "SLOT_VARIANTS",
    "StructuralReport",
    "check_structural_pair",
    "compose",
    "gamma_via_relations",
    "left_mult_relation",
    "pullback",
    "pushforward",
    "relation_pair",
    "relation_semitorsor",
    "reverse",
]

"""Finite geometries as lookup tables, and the axiom verifier.

For a small Gras(GF(p)^n) every point gets an index, Gamma becomes an integer
array of shape (N,)*5 and Pi_r one of shape (N,)*3 per scalar r.  Identities
are then checked exhaustively with numpy fancy indexing.

Tables are built by a membership computation independent of the kernel
projection in :mod:`gamma`: vectors are encoded as integers and
``w in Gamma(x,a,y,b,z)`` iff some ``alpha in a``, ``beta in b`` give
``w - beta in x``, ``w - alpha - beta in y`` and ``w - alpha in z``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .grassmannian import Subspace, enumerate_subspaces
from .linalg import Field

TABLE_LIMIT = 1 << 12  # vectors in the ambient space


@dataclass
class AxiomReport:
    """Outcome per axiom; ``witness`` holds the first counterexample as index tuples."""

    checked: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.witness

    def record(self, name: str, ok: np.ndarray | bool, count: int | None = None, locate=None) -> None:
        ok_arr = np.asarray(ok)
        self.checked[name] = self.checked.get(name, 0) + (int(ok_arr.size) if count is None else count)
        if name in self.witness or ok_arr.all():
            return
        where = tuple(int(i) for i in np.argwhere(~ok_arr)[0]) if ok_arr.ndim else ()
        self.witness[name] = locate(where) if locate else where

    def failed(self) -> list[str]:
        return sorted(self.witness)


class FiniteGeometry:
    """Point set with Gamma, Pi, meet, join and transversality as numpy tables."""

    def __init__(self, field_: Field, n: int, points: Sequence[Subspace] | None = None):
        if field_.p is None:
            raise ValueError("finite geometries need a finite field")
        p = field_.p
        if p**n > TABLE_LIMIT:
            raise ValueError("ambient space too large for tables")
        self.field = field_
        self.n = n
        self.V = p**n
        self.points = list(points) if points is not None else enumerate_subspaces(field_, n)
        self.index = {s: i for i, s in enumerate(self.points)}
        self.N = len(self.points)
        self._vecs = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(self.V, n)
        weights = p ** np.arange(n - 1, -1, -1)
        self._code = lambda arr: (arr % p) @ weights
        self.add = self._code(self._vecs[:, None, :] + self._vecs[None, :, :])
        self.sub = self._code(self._vecs[:, None, :] - self._vecs[None, :, :])
        self.smul = np.stack([self._code(r * self._vecs) for r in range(p)])
        self.member = np.zeros((self.N, self.V), dtype=bool)
        for i, s in enumerate(self.points):
            for coeffs in itertools.product(range(p), repeat=s.dim):
                v = np.zeros(n, dtype=np.int64)
                for c, b in zip(coeffs, s.basis):
                    v += c * np.array(b, dtype=np.int64)
                self.member[i, self._code(v)] = True
        self._elements = [np.flatnonzero(self.member[i]) for i in range(self.N)]
        self.meet = self._lattice(np.logical_and)
        self.join = self._join_table()
        zero = np.zeros(self.V, dtype=bool)
        zero[0] = True
        self.bottom = self._locate(zero)
        self.top = self._locate(np.ones(self.V, dtype=bool))
        self.trans = (self.meet == self.bottom) & (self.join == self.top)
        self._gamma = None
        self._pi = {}

    # -- construction --------------------------------------------------------

    def _locate(self, mask: np.ndarray) -> int:
        hits = np.flatnonzero((self.member == mask).all(axis=1))
        if len(hits) != 1:
            raise ValueError("membership set is not a point of this geometry")
        return int(hits[0])

    def _masks_to_index(self, masks: np.ndarray) -> np.ndarray:
        """Map boolean membership arrays (..., V) to point indices."""
        flat = masks.reshape(-1, self.V)
        packed = np.packbits(flat, axis=1)
        ref = np.packbits(self.member, axis=1)
        lookup = {row.tobytes(): i for i, row in enumerate(ref)}
        out = np.fromiter((lookup[row.tobytes()] for row in packed), dtype=np.int16, count=flat.shape[0])
        return out.reshape(masks.shape[:-1])

    def _lattice(self, op) -> np.ndarray:
        masks = op(self.member[:, None, :], self.member[None, :, :])
        return self._masks_to_index(masks)

    def _join_table(self) -> np.ndarray:
        out = np.empty((self.N, self.N), dtype=np.int16)
        for i, j in itertools.product(range(self.N), repeat=2):
            out[i, j] = self.index[self.points[i] | self.points[j]]
        return out

    def _gamma_slice(self, a: int, b: int) -> np.ndarray:
        """Table of ``(x, y, z) -> Gamma(x, a, y, b, z)`` for fixed (a, b)."""
        alphas, betas = self._elements[a], self._elements[b]
        al = np.repeat(alphas, len(betas))
        be = np.tile(betas, len(alphas))
        w = np.arange(self.V)[:, None]
        ix = self.sub[w, be[None, :]]  # w - beta
        iz = self.sub[w, al[None, :]]  # w - alpha
        iy = self.sub[ix, al[None, :]]  # w - alpha - beta
        mx = self.member[:, ix].astype(np.float32)  # (N, V, P)
        my = self.member[:, iy].astype(np.float32)
        mz = self.member[:, iz].astype(np.float32)
        # out[x, y, z, w] = any_p mx[x,w,p] my[y,w,p] mz[z,w,p]
        out = np.einsum("xwp,ywp,zwp->xyzw", mx, my, mz, optimize=True) > 0
        return self._masks_to_index(out)

    @property
    def gamma(self) -> np.ndarray:
        if self._gamma is None:
            N = self.N
            g = np.empty((N,) * 5, dtype=np.uint8 if N < 256 else np.int16)
            for a, b in itertools.product(range(N), repeat=2):
                g[:, a, :, b, :] = self._gamma_slice(a, b)
            self._gamma = g
        return self._gamma

    def set_gamma(self, table: np.ndarray) -> None:
        self._gamma = table

    def pi(self, r: int) -> np.ndarray:
        """Table of ``(x, a, z) -> Pi_r(x, a, z)``: w = xi + r alpha with xi in x, xi + alpha in z."""
        r %= self.field.p
        if r not in self._pi:
            N, V = self.N, self.V
            out = np.empty((N, N, N), dtype=np.int16)
            w = np.arange(V)[:, None]
            s = (1 - r) % self.field.p
            for a in range(N):
                al = self._elements[a]
                ix = self.sub[w, self.smul[r][al][None, :]]  # w - r alpha
                iz = self.add[w, self.smul[s][al][None, :]]  # w + (1 - r) alpha
                mx = self.member[:, ix].astype(np.float32)
                mz = self.member[:, iz].astype(np.float32)
                masks = np.einsum("xwp,zwp->xzw", mx, mz, optimize=True) > 0
                out[:, a, :] = self._masks_to_index(masks)
            self._pi[r] = out
        return self._pi[r]

    def opposite(self) -> "FiniteGeometry":
        """Same points, ``Gamma^op(x,a,y,b,z) = Gamma(z,a,y,b,x)``, dual lattice."""
        op = FiniteGeometry.__new__(FiniteGeometry)
        op.__dict__.update(self.__dict__)
        op._gamma = np.ascontiguousarray(np.transpose(self.gamma, (4, 1, 2, 3, 0)))
        op.meet, op.join = self.join, self.meet
        op.bottom, op.top = self.top, self.bottom
        op._pi = dict(self._pi)
        op._opposite_of = self
        return op

    def quintuple(self, idx: Sequence[int]) -> tuple[Subspace, ...]:
        return tuple(self.points[i] for i in idx)


# -- axioms ---------------------------------------------------------------------


def _semitorsor(G: np.ndarray, rep: AxiomReport, name: str = "(1) semitorsor") -> None:
    N = G.shape[0]
    x, y, z, u, v = np.ix_(*(np.arange(N),) * 5)
    for a, b in itertools.product(range(N), repeat=2):
        t = G[:, a, :, b, :]
        left = t[t[x, y, z], u, v]
        mid = t[x, t[u, z, y], v]
        right = t[x, y, t[z, u, v]]
        ok = (left == mid) & (mid == right)
        rep.record(name, ok, locate=lambda w, a=a, b=b: (w[0], a, w[1], b, w[2], w[3], w[4]))


def _klein(G: np.ndarray, rep: AxiomReport) -> None:
    rep.record("(2i) klein", G == np.transpose(G, (4, 3, 2, 1, 0)))
    rep.record("(2ii) klein", G == np.transpose(G, (1, 0, 2, 4, 3)))


def _partial_maps(G: np.ndarray, kind: str, params: tuple[int, int, int, int]):
    """The pair (f, g) of index maps for L, M or R at the given parameters."""
    if kind == "L":  # (L_{xayb}, L_{yaxb}) acting on z
        x, a, y, b = params
        return G[x, a, y, b, :], G[y, a, x, b, :]
    if kind == "M":  # (M_{xabz}, M_{zabx}) acting on y
        x, a, b, z = params
        return G[x, a, :, b, z], G[z, a, :, b, x]
    a, y, b, z = params  # (R_{aybz}, R_{azby}) acting on x
    return G[:, a, y, b, z], G[:, a, z, b, y]


def _structural_side(G: np.ndarray, f: np.ndarray, g: np.ndarray) -> np.ndarray | None:
    """``f(Gamma(x, g a', y, g b', z)) == Gamma(f x, a', f y, b', f z)`` over all arguments.

    Returns None when the identity holds everywhere, else the boolean table.
    """
    lhs = f[np.take(np.take(G, g, axis=1), g, axis=3)]
    rhs = np.take(np.take(np.take(G, f, axis=0), f, axis=2), f, axis=4)
    if np.array_equal(lhs, rhs):
        return None
    return lhs == rhs


def _structurality(G: np.ndarray, rep: AxiomReport, params: Sequence[tuple[int, int, int, int]]) -> None:
    # Distinct parameter tuples often give the same maps; each ordered (f, g) is checked once.
    size = G.size
    for kind in "LMR":
        name = f"(3) structural {kind}"
        done = set()
        for prm in params:
            f, g = _partial_maps(G, kind, prm)
            for ff, gg in ((f, g), (g, f)):
                key = ff.tobytes() + gg.tobytes()
                if key in done:
                    continue
                done.add(key)
                bad = _structural_side(G, ff, gg)
                rep.record(name, True if bad is None else bad, count=size, locate=lambda w, prm=prm: (prm, w))


def _diagonal(geo: FiniteGeometry, G: np.ndarray, rep: AxiomReport) -> None:
    N = geo.N
    r = np.arange(N)
    T = geo.trans
    a, y, b = np.ix_(r, r, r)
    rep.record("(4i) diagonal", G[a, a, y, b, b] == geo.join[a, b])
    rep.record("(4ii) diagonal", G[a, b, y, a, b] == geo.meet[a, b])
    x, a, b, z = np.ix_(r, r, r, r)
    cab = T[x, a] & T[x, b]
    ok = ~cab | ((G[x, a, x, b, z] == z) & (G[z, b, x, a, x] == z))
    rep.record("(4iii) diagonal", ok)
    x, a, y, b = np.ix_(r, r, r, r)
    rep.record("(4iv) diagonal", ~(T[a, x] & T[y, b]) | (G[x, a, y, b, b] == b))
    rep.record("(4v) diagonal", ~(T[a, y] & T[b, x]) | (G[x, a, y, b, a] == a))


def _affine(geo: FiniteGeometry, G: np.ndarray, rep: AxiomReport) -> None:
    p = geo.field.p
    T = geo.trans
    for a in range(geo.N):
        C = np.flatnonzero(T[:, a])
        if len(C) == 0:
            continue
        pos = {int(c): i for i, c in enumerate(C)}
        add = G[np.ix_(C, [a], C, [a], C)][:, 0, :, 0, :]  # x +_y z as [x, y, z]
        inC = np.isin(add, C)
        rep.record("(5) affine closure", inC)
        if not inC.all():
            continue
        loc = np.vectorize(pos.get)(add)
        x, y, z, u, v = np.ix_(*(np.arange(len(C)),) * 5)
        rep.record("(5) affine torsor", loc[x, y, loc[z, u, v]] == loc[loc[x, y, z], u, v])
        xx, yy = np.ix_(np.arange(len(C)), np.arange(len(C)))
        rep.record("(5) affine idempotent", (loc[xx, xx, yy] == yy) & (loc[yy, xx, xx] == yy))
        x3, y3, z3 = np.ix_(*(np.arange(len(C)),) * 3)
        rep.record("(5) affine commutative", loc[x3, y3, z3] == loc[z3, y3, x3])
        scal = {}
        for rr in range(p):
            P = geo.pi(rr)[np.ix_(C, [a], C)][:, 0, :]  # r ._o x = Pi_r(o, a, x) as [o, x]
            okc = np.isin(P, C)
            rep.record("(5) dilation stable", okc)
            if not okc.all():
                return
            scal[rr] = np.vectorize(pos.get)(P)
        o, x, z = np.ix_(*(np.arange(len(C)),) * 3)
        o2, x2 = np.ix_(np.arange(len(C)), np.arange(len(C)))
        rep.record("(5) scalar one", (scal[1][o2, x2] == x2) & (scal[0][o2, x2] == o2))
        for rr, ss in itertools.product(range(p), repeat=2):
            S, R_ = scal[ss], scal[rr]
            rep.record("(5) scalar vector-distributive", R_[o, loc[x, o, z]] == loc[R_[o, x], o, R_[o, z]])
            rep.record("(5) scalar distributive", scal[(rr + ss) % p][o2, x2] == loc[R_[o2, x2], o2, S[o2, x2]])
            rep.record("(5) scalar multiplicative", scal[(rr * ss) % p][o2, x2] == R_[o2, S[o2, x2]])


def _pairs(geo: FiniteGeometry, G: np.ndarray, rep: AxiomReport) -> None:
    T = geo.trans
    for a, b in itertools.product(range(geo.N), repeat=2):
        Ca, Cb = np.flatnonzero(T[:, a]), np.flatnonzero(T[:, b])
        if len(Ca) == 0 or len(Cb) == 0:
            continue
        plus = G[np.ix_(Ca, [a], Cb, [b], Ca)]
        minus = G[np.ix_(Cb, [a], Ca, [b], Cb)]
        rep.record("(6) semitorsored pairs", T[plus, a])
        rep.record("(6) semitorsored pairs", T[minus, b])


def _consequences(geo: FiniteGeometry, G: np.ndarray, rep: AxiomReport) -> None:
    T = geo.trans
    N = geo.N
    ident = np.arange(N)
    for a, b in itertools.product(range(N), repeat=2):
        C = np.flatnonzero(T[:, a] & T[:, b])
        for x, y in itertools.product(C, repeat=2):
            L, Linv = G[x, a, y, b, :], G[y, a, x, b, :]
            rep.record("L inverse", Linv[L] == ident)
            M, Minv = G[x, a, :, b, y], G[x, b, :, a, y]
            rep.record("M inverse", Minv[M] == ident)
        if len(C):
            prod = G[np.ix_(C, [a], C, [b], C)]
            rep.record("C_ab stable", T[prod, a] & T[prod, b])


def axiom_verifier(
    geo: FiniteGeometry,
    structural_budget: int | None = None,
    seed: int = 0,
    extras: bool = True,
) -> AxiomReport:
    """Check axioms (1)-(6) on every instance.

    Structurality (3) runs over all parameter tuples unless ``structural_budget``
    is given, in which case that many tuples are drawn (each still checked
    against every (x, a', y, b', z)).
    """
    G = geo.gamma
    rep = AxiomReport()
    _semitorsor(G, rep)
    _klein(G, rep)
    N = geo.N
    if structural_budget is None:
        params = list(itertools.product(range(N), repeat=4))
    else:
        rng = random.Random(seed)
        params = [tuple(rng.randrange(N) for _ in range(4)) for _ in range(structural_budget)]
    _structurality(G, rep, params)
    _diagonal(geo, G, rep)
    _affine(geo, G, rep)
    _pairs(geo, G, rep)
    if extras:
        _consequences(geo, G, rep)
    return rep


def mutate(geo: FiniteGeometry, seed: int = 0) -> tuple[FiniteGeometry, tuple, tuple]:
    """A copy of ``geo`` whose Gamma table has two entries with different values swapped."""
    rng = random.Random(seed)
    G = geo.gamma.copy()
    shape = G.shape
    while True:
        i = tuple(rng.randrange(s) for s in shape)
        j = tuple(rng.randrange(s) for s in shape)
        if G[i] != G[j]:
            break
    G[i], G[j] = G[j], G[i]
    bad = FiniteGeometry.__new__(FiniteGeometry)
    bad.__dict__.update(geo.__dict__)
    bad._gamma = G
    return bad, i, j


__all__ = ["AxiomReport", "FiniteGeometry", "axiom_verifier", "mutate"]

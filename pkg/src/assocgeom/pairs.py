"""Associative pairs and unital algebras, both ways round.

Geometry to algebra: a base point ``(o+, o-)`` gives the pair
``<x b z>+ = Gamma(x, o-, b, o+, z)``, ``<a y c>- = Gamma(a, o-, y, o+, c)``; a
transversal triple ``(a, u, c)`` gives the algebra ``x z = Gamma(x, a, u, c, z)``.

Algebra to geometry: a pair of Hom-spaces sits in ``End(E (+) F)`` as Peirce
blocks of the idempotent ``e`` projecting onto E.  The right ideals of that
algebra, with Gamma computed on their underlying subspaces, form a geometry
whose pair at ``(e A, f A)`` is the one we started from.

Elements of pairs and algebras are coordinate tuples; products are given by
structure constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .charts import Chart
from .gamma import gamma_extended
from .grassmannian import Subspace, _guard, is_transversal
from .linalg import Field, Matrix, kernel, solve

Vector = tuple


def _zero(field: Field, d: int) -> Vector:
    return (field.zero,) * d


def _axpy(field: Field, acc: list, s, v) -> None:
    p = field.p
    if p:
        for i, t in enumerate(v):
            if t:
                acc[i] = (acc[i] + s * t) % p
    else:
        for i, t in enumerate(v):
            if t:
                acc[i] += s * t


def _add(field: Field, *vs: Vector) -> Vector:
    acc = list(_zero(field, len(vs[0])))
    for v in vs:
        _axpy(field, acc, field.one, v)
    return tuple(acc)


def _scale(field: Field, s, v: Vector) -> Vector:
    return tuple(field(s * t) for t in v)


def _sub(field: Field, u: Vector, v: Vector) -> Vector:
    return _add(field, u, _scale(field, -1, v))


def _unit(field: Field, d: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(d))


def _flatten(m: Matrix) -> Vector:
    return tuple(v for row in m.data for v in row)


def _unflatten(field: Field, v: Sequence, r: int, c: int) -> Matrix:
    return Matrix._raw(field, [v[i * c : (i + 1) * c] for i in range(r)], c)


# -- algebras ------------------------------------------------------------------


@dataclass(frozen=True)
class Algebra:
    """A finite-dimensional algebra with ``b_i b_j = sum_k consts[i][j][k] b_k``."""

    field: Field
    dim: int
    consts: tuple

    def mul(self, x: Vector, y: Vector) -> Vector:
        f = self.field
        acc = list(_zero(f, self.dim))
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.consts[i]
            for j, yj in enumerate(y):
                if yj:
                    _axpy(f, acc, f(xi * yj), row[j])
        return tuple(acc)

    def basis(self) -> list[Vector]:
        return [_unit(self.field, self.dim, i) for i in range(self.dim)]

    def elements(self):
        return self.field.vectors(self.dim)

    def is_associative(self) -> bool:
        b = self.basis()
        return all(self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)) for x, y, z in itertools.product(b, repeat=3))

    def is_unit(self, u: Vector) -> bool:
        return all(self.mul(u, x) == x == self.mul(x, u) for x in self.basis())

    def unit(self) -> Vector | None:
        """The unit, solving ``u b_j = b_j`` for all j, when it exists."""
        f, d = self.field, self.dim
        rows, rhs = [], []
        for j in range(d):
            for k in range(d):
                rows.append([self.consts[i][j][k] for i in range(d)])
                rhs.append(f.one if j == k else f.zero)
        u = solve(Matrix._raw(f, rows, d), rhs)
        if u is None or not self.is_unit(u):
            return None
        return u

    def right_mult(self, y: Vector) -> Matrix:
        """Matrix of ``x -> x y`` acting on coordinate columns."""
        cols = [self.mul(b, y) for b in self.basis()]
        return Matrix.from_columns(self.field, cols, self.dim)

    def left_mult(self, x: Vector) -> Matrix:
        cols = [self.mul(x, b) for b in self.basis()]
        return Matrix.from_columns(self.field, cols, self.dim)

    def is_right_ideal(self, s: Subspace) -> bool:
        return all(self.mul(v, b) in s for v in s.basis for b in self.basis())

    @classmethod
    def from_product(cls, field: Field, dim: int, mul) -> "Algebra":
        basis = [_unit(field, dim, i) for i in range(dim)]
        consts = tuple(tuple(tuple(mul(x, y)) for y in basis) for x in basis)
        return cls(field, dim, consts)

    @classmethod
    def matrix_algebra(cls, field: Field, n: int) -> "Algebra":
        """M(n, F) with basis E_rs at index ``r n + s``."""
        d = n * n

        def mul(x, y):
            a = _unflatten(field, x, n, n)
            b = _unflatten(field, y, n, n)
            return _flatten(a @ b)

        return cls.from_product(field, d, mul)


def find_algebra_isomorphism(A: Algebra, B: Algebra) -> Matrix | None:
    """A linear bijection ``phi`` (columns = images of A's basis) with
    ``phi(xy) = phi(x) phi(y)`` and ``phi(1) = 1``, found by backtracking.

    A basis of A starting at its unit is chosen; the unit goes to B's unit and
    the remaining basis images range over B, pruned by linear independence.
    """
    if A.field != B.field or A.dim != B.dim or A.field.p is None:
        return None
    f, d = A.field, A.dim
    _guard(f, d)
    ua, ub = A.unit(), B.unit()
    if (ua is None) != (ub is None):
        return None
    # basis of A beginning with the unit
    start = [ua] if ua is not None else []
    basis_a = list(start)
    for v in A.basis():
        if len(Subspace.span(f, d, basis_a + [v]).basis) > len(basis_a):
            basis_a.append(v)
    P = Matrix.from_columns(f, basis_a, d)  # new basis -> old coordinates
    Pinv = P.inverse()
    candidates = [v for v in B.elements()]

    def extend(images: list):
        k = len(images)
        if k == d:
            phi = Matrix.from_columns(f, images, d) @ Pinv
            for x, y in itertools.product(A.basis(), repeat=2):
                if phi.apply(A.mul(x, y)) != B.mul(phi.apply(x), phi.apply(y)):
                    return None
            return phi
        span = Subspace.span(f, d, images)
        for v in candidates:
            if v in span:
                continue
            images.append(v)
            res = extend(images)
            images.pop()
            if res is not None:
                return res
        return None

    return extend([ub] if ub is not None else [])


# -- associative pairs -------------------------------------------------------


@dataclass(frozen=True)
class AssocPair:
    """Two spaces A+ (dim ``dplus``) and A- (dim ``dminus``) with
    ``<x y z>+ = sum x_i y_j z_k plus[i][j][k]`` and likewise for ``-``."""

    field: Field
    dplus: int
    dminus: int
    plus: tuple
    minus: tuple

    def _triple(self, consts, x, y, z, dout):
        f = self.field
        acc = list(_zero(f, dout))
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                s = f(xi * yj)
                row = consts[i][j]
                for k, zk in enumerate(z):
                    if zk:
                        _axpy(f, acc, f(s * zk), row[k])
        return tuple(acc)

    def triple_plus(self, x: Vector, y: Vector, z: Vector) -> Vector:
        return self._triple(self.plus, x, y, z, self.dplus)

    def triple_minus(self, x: Vector, y: Vector, z: Vector) -> Vector:
        return self._triple(self.minus, x, y, z, self.dminus)

    def triple(self, sign: str, x, y, z) -> Vector:
        return self.triple_plus(x, y, z) if sign == "+" else self.triple_minus(x, y, z)

    def swap(self) -> "AssocPair":
        """The pair ``(A-, A+)`` with the roles of the two products exchanged."""
        return AssocPair(self.field, self.dminus, self.dplus, self.minus, self.plus)

    def dims(self, sign: str) -> tuple[int, int]:
        return (self.dplus, self.dminus) if sign == "+" else (self.dminus, self.dplus)

    @classmethod
    def from_products(cls, field: Field, dplus: int, dminus: int, plus, minus) -> "AssocPair":
        bp = [_unit(field, dplus, i) for i in range(dplus)]
        bm = [_unit(field, dminus, i) for i in range(dminus)]
        cp = tuple(tuple(tuple(tuple(plus(x, y, z)) for z in bp) for y in bm) for x in bp)
        cm = tuple(tuple(tuple(tuple(minus(x, y, z)) for z in bm) for y in bp) for x in bm)
        return cls(field, dplus, dminus, cp, cm)


def hom_pair(field: Field, e: int, f: int) -> AssocPair:
    """``(Hom(E, F), Hom(F, E))`` with ``XYZ`` and ``ZYX``; matrices flattened row-major.

    A+ holds f x e matrices, A- holds e x f matrices.
    """

    def plus(x, y, z):
        X, Y, Z = _unflatten(field, x, f, e), _unflatten(field, y, e, f), _unflatten(field, z, f, e)
        return _flatten(X @ Y @ Z)

    def minus(x, y, z):
        X, Y, Z = _unflatten(field, x, e, f), _unflatten(field, y, f, e), _unflatten(field, z, e, f)
        return _flatten(Z @ Y @ X)

    return AssocPair.from_products(field, e * f, e * f, plus, minus)


def algebra_pair(alg: Algebra) -> AssocPair:
    """``A+ = A- = A`` with ``xyz`` and ``zyx``."""
    plus = lambda x, y, z: alg.mul(alg.mul(x, y), z)  # noqa: E731
    minus = lambda x, y, z: alg.mul(alg.mul(z, y), x)  # noqa: E731
    return AssocPair.from_products(alg.field, alg.dim, alg.dim, plus, minus)


def homotope(pair: AssocPair, a: Vector, sign: str = "+") -> Algebra:
    """``x ._a y = <x a y>`` on A+ (or on A- when ``sign`` is ``-``)."""
    d, _ = pair.dims(sign)
    return Algebra.from_product(pair.field, d, lambda x, y: pair.triple(sign, x, a, y))


def jordan_Q(pair: AssocPair, x: Vector, y: Vector, sign: str = "+") -> Vector:
    return pair.triple(sign, x, y, x)


def jordan_T(pair: AssocPair, x: Vector, y: Vector, z: Vector, sign: str = "+") -> Vector:
    """``Q(x + z) y - Q(x) y - Q(z) y``."""
    f = pair.field
    xz = _add(f, x, z)
    return _sub(f, _sub(f, jordan_Q(pair, xz, y, sign), jordan_Q(pair, x, y, sign)), jordan_Q(pair, z, y, sign))


def quadratic_operator(pair: AssocPair, x: Vector, sign: str = "+") -> Matrix:
    """``Q(x): A-/+ -> A+/-`` as a matrix on coordinate columns."""
    dout, din = pair.dims(sign)
    cols = [jordan_Q(pair, x, _unit(pair.field, din, j), sign) for j in range(din)]
    return Matrix.from_columns(pair.field, cols, dout)


def is_invertible(pair: AssocPair, x: Vector, sign: str = "+") -> tuple[bool, Vector | None]:
    """Whether ``Q(x)`` is invertible; if so also ``x^-1 = Q(x)^-1 x`` in the opposite space."""
    q = quadratic_operator(pair, x, sign)
    if not q.is_invertible():
        return False, None
    return True, q.inverse().apply(x)


def check_pair_laws(pair: AssocPair, triples) -> dict:
    """Count para-associativity violations on sampled ``(x, y, z, u, v)`` for both signs.

    For sign ``+``: x, z, v in A+ and y, u in A-.
    """
    bad = {"+": 0, "-": 0}
    for sign, other in (("+", "-"), ("-", "+")):
        for x, y, z, u, v in triples(sign):
            t = lambda s, p, q, r: pair.triple(s, p, q, r)  # noqa: E731
            left = t(sign, x, y, t(sign, z, u, v))
            mid = t(sign, t(sign, x, y, z), u, v)
            right = t(sign, x, t(other, u, z, y), v)
            if not (left == mid == right):
                bad[sign] += 1
    return bad


def pairs_equal_under(p: AssocPair, q: AssocPair, phi_plus: Matrix, phi_minus: Matrix) -> bool:
    """Whether the linear maps ``(phi_plus, phi_minus)`` intertwine the products of p and q."""
    f = p.field
    bp = [_unit(f, p.dplus, i) for i in range(p.dplus)]
    bm = [_unit(f, p.dminus, i) for i in range(p.dminus)]
    for x, y, z in itertools.product(bp, bm, bp):
        if phi_plus.apply(p.triple_plus(x, y, z)) != q.triple_plus(phi_plus.apply(x), phi_minus.apply(y), phi_plus.apply(z)):
            return False
    for x, y, z in itertools.product(bm, bp, bm):
        if phi_minus.apply(p.triple_minus(x, y, z)) != q.triple_minus(phi_minus.apply(x), phi_plus.apply(y), phi_minus.apply(z)):
            return False
    return True


# -- extraction from a geometry -----------------------------------------------


@dataclass(frozen=True)
class GeometricPair:
    """The pair at a base point of Gras(F^n), in chart coordinates.

    Plus elements are m x k matrices (maps o+ -> o-), minus elements are k x m.
    """

    chart: Chart

    @property
    def field(self) -> Field:
        return self.chart.field

    def point_plus(self, X: Matrix) -> Subspace:
        return self.chart.graph_plus(X)

    def point_minus(self, A: Matrix) -> Subspace:
        return self.chart.graph_minus(A)

    def plus_product(self, X: Matrix, B: Matrix, Z: Matrix) -> Matrix:
        ch = self.chart
        s = gamma_extended(ch.graph_plus(X), ch.o_minus, ch.graph_minus(B), ch.o_plus, ch.graph_plus(Z))
        return ch.coords_plus(s)

    def minus_product(self, A: Matrix, Y: Matrix, C: Matrix) -> Matrix:
        ch = self.chart
        s = gamma_extended(ch.graph_minus(A), ch.o_minus, ch.graph_plus(Y), ch.o_plus, ch.graph_minus(C))
        return ch.coords_minus(s)

    def constants(self) -> AssocPair:
        f, m, k = self.field, self.chart.m, self.chart.k

        def plus(x, y, z):
            return _flatten(self.plus_product(_unflatten(f, x, m, k), _unflatten(f, y, k, m), _unflatten(f, z, m, k)))

        def minus(x, y, z):
            return _flatten(self.minus_product(_unflatten(f, x, k, m), _unflatten(f, y, m, k), _unflatten(f, z, k, m)))

        return AssocPair.from_products(f, m * k, m * k, plus, minus)


def extract_pair(o_plus: Subspace, o_minus: Subspace) -> GeometricPair:
    return GeometricPair(Chart(o_plus, o_minus))


@dataclass(frozen=True)
class GeometricAlgebra:
    """``x z = Gamma(x, a, u, c, z)`` on U_c with origin a and unit u, in chart coordinates."""

    a: Subspace
    u: Subspace
    c: Subspace

    def __post_init__(self):
        if not (is_transversal(self.a, self.u) and is_transversal(self.u, self.c) and is_transversal(self.a, self.c)):
            raise ValueError("(a, u, c) must be mutually transversal")

    @property
    def chart(self) -> Chart:
        return Chart(self.a, self.c)

    def product(self, X: Matrix, Z: Matrix) -> Matrix:
        ch = self.chart
        return ch.coords_plus(gamma_extended(ch.graph_plus(X), self.a, self.u, self.c, ch.graph_plus(Z)))

    def unit(self) -> Matrix:
        return self.chart.coords_plus(self.u)

    def constants(self) -> Algebra:
        ch = self.chart
        f, m, k = ch.field, ch.m, ch.k
        mul = lambda x, z: _flatten(self.product(_unflatten(f, x, m, k), _unflatten(f, z, m, k)))  # noqa: E731
        return Algebra.from_product(f, m * k, mul)


def extract_algebra(a: Subspace, u: Subspace, c: Subspace) -> GeometricAlgebra:
    return GeometricAlgebra(a, u, c)


# -- standard imbedding and the geometry of right ideals ------------------------


@dataclass(frozen=True)
class ImbeddedAlgebra:
    """``End(E (+) F)`` with ``e`` the projector onto E and its Peirce blocks.

    ``blocks[(i, j)] = {x : e x = i x, x e = j x}`` as subspaces of the
    algebra's coordinate space (matrices flattened row-major).
    """

    algebra: Algebra
    e_dim: int
    f_dim: int
    idempotent: Vector
    blocks: dict

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def size(self) -> int:
        return self.e_dim + self.f_dim

    def one(self) -> Vector:
        return _flatten(Matrix.identity(self.field, self.size))

    def complement(self) -> Vector:
        return _sub(self.field, self.one(), self.idempotent)

    def peirce_dims(self) -> tuple[int, int, int, int]:
        return tuple(self.blocks[ij].dim for ij in ((0, 0), (0, 1), (1, 0), (1, 1)))

    def embed_plus(self, X: Matrix) -> Vector:
        """Hom(E, F) (f x e) into ``f A e``: the lower-left block."""
        n, e = self.size, self.e_dim
        M = [[self.field.zero] * n for _ in range(n)]
        for i in range(self.f_dim):
            for j in range(e):
                M[e + i][j] = X[i, j]
        return tuple(v for row in M for v in row)

    def embed_minus(self, Y: Matrix) -> Vector:
        """Hom(F, E) (e x f) into ``e A f``: the upper-right block."""
        n, e = self.size, self.e_dim
        M = [[self.field.zero] * n for _ in range(n)]
        for i in range(e):
            for j in range(self.f_dim):
                M[i][e + j] = Y[i, j]
        return tuple(v for row in M for v in row)

    def block_pair(self) -> AssocPair:
        """``(A01, A10) = (f A e, e A f)`` with ``xyz`` and ``zyx``, in the embedded Hom bases."""
        f, e, g = self.field, self.e_dim, self.f_dim
        alg = self.algebra
        plus_basis = [self.embed_plus(_unflatten(f, _unit(f, e * g, i), g, e)) for i in range(e * g)]
        minus_basis = [self.embed_minus(_unflatten(f, _unit(f, e * g, i), e, g)) for i in range(e * g)]
        P = Matrix.from_columns(f, plus_basis, alg.dim)
        M = Matrix.from_columns(f, minus_basis, alg.dim)

        def coords(basis_m: Matrix, v):
            return solve(basis_m, v)

        def plus(x, y, z):
            X, Y, Z = P.apply(x), M.apply(y), P.apply(z)
            return coords(P, alg.mul(alg.mul(X, Y), Z))

        def minus(x, y, z):
            X, Y, Z = M.apply(x), P.apply(y), M.apply(z)
            return coords(M, alg.mul(alg.mul(Z, Y), X))

        return AssocPair.from_products(f, e * g, e * g, plus, minus)


def standard_imbedding(field: Field, e_dim: int, f_dim: int) -> ImbeddedAlgebra:
    """Imbed ``(Hom(E, F), Hom(F, E))`` in ``End(E (+) F)``."""
    n = e_dim + f_dim
    alg = Algebra.matrix_algebra(field, n)
    e = _flatten(Matrix._raw(field, [[field.one if i == j and i < e_dim else field.zero for j in range(n)] for i in range(n)], n))
    L, R = alg.left_mult(e), alg.right_mult(e)
    one = Matrix.identity(field, alg.dim)
    blocks = {}
    for i, j in itertools.product((0, 1), repeat=2):
        # e x = i x and x e = j x
        cons = (L - one.scale(i)).vstack(R - one.scale(j))
        blocks[i, j] = Subspace._from_canonical(field, alg.dim, kernel(cons).data)
    return ImbeddedAlgebra(alg, e_dim, f_dim, e, blocks)


def right_ideals(alg: Algebra) -> list[Subspace]:
    """All right ideals, as sums of cyclic right ideals ``v A`` closed under BFS.

    Every right ideal is the sum of the cyclic ideals of its elements, so
    closing {0} under ``I -> I + vA`` reaches each one.
    """
    f, d = alg.field, alg.dim
    _guard(f, d)
    cyclic = {}
    for v in alg.elements():
        cyclic[Subspace.span(f, d, [v] + [alg.mul(v, b) for b in alg.basis()])] = None
    gens = list(cyclic)
    seen = {Subspace.zero(f, d)}
    frontier = [Subspace.zero(f, d)]
    while frontier:
        nxt = []
        for ideal in frontier:
            for c in gens:
                j = ideal | c
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(seen, key=lambda s: (s.dim, s.basis))


@dataclass(frozen=True)
class IdealGeometry:
    """Right ideals of an imbedded algebra, with base point ``(e A, f A)``."""

    imbedded: ImbeddedAlgebra
    ideals: tuple

    @property
    def field(self) -> Field:
        return self.imbedded.field

    def _ideal(self, v: Vector) -> Subspace:
        alg = self.imbedded.algebra
        return Subspace.span(self.field, alg.dim, [alg.mul(v, b) for b in alg.basis()])

    @property
    def o_plus(self) -> Subspace:
        return self._ideal(self.imbedded.idempotent)

    @property
    def o_minus(self) -> Subspace:
        return self._ideal(self.imbedded.complement())

    def point_plus(self, c: Vector) -> Subspace:
        """``(e + c) A`` for c in ``f A e``."""
        return self._ideal(_add(self.field, self.imbedded.idempotent, c))

    def point_minus(self, d: Vector) -> Subspace:
        """``(f + d) A`` for d in ``e A f``."""
        return self._ideal(_add(self.field, self.imbedded.complement(), d))

    def _read(self, s: Subspace, unit: Vector, other: Subspace) -> Vector:
        # unit = sigma + phi with sigma in s, phi in other; s contains unit - phi
        f = self.field
        n = s.n
        frame = Matrix.from_columns(f, list(s.basis) + list(other.basis), n)
        coef = frame.inverse().apply(unit)
        phi = tuple(sum((coef[s.dim + i] * other.basis[i][t] for i in range(other.dim)), f.zero) for t in range(n))
        return _scale(f, -1, tuple(f(v) for v in phi))

    def read_plus(self, s: Subspace) -> Vector:
        """The c in ``f A e`` with ``s = (e + c) A``."""
        return self._read(s, self.imbedded.idempotent, self.o_minus)

    def read_minus(self, s: Subspace) -> Vector:
        """The d in ``e A f`` with ``s = (f + d) A``."""
        return self._read(s, self.imbedded.complement(), self.o_plus)

    def plus_product(self, c1: Vector, d: Vector, c2: Vector) -> Vector:
        s = gamma_extended(self.point_plus(c1), self.o_minus, self.point_minus(d), self.o_plus, self.point_plus(c2))
        return self.read_plus(s)

    def minus_product(self, d1: Vector, c: Vector, d2: Vector) -> Vector:
        s = gamma_extended(self.point_minus(d1), self.o_minus, self.point_plus(c), self.o_plus, self.point_minus(d2))
        return self.read_minus(s)

    def extract_pair(self) -> AssocPair:
        """The pair at ``(e A, f A)`` in the Hom bases of the two off-diagonal blocks."""
        im = self.imbedded
        f, e, g = self.field, im.e_dim, im.f_dim

        def to_plus(x):
            return im.embed_plus(_unflatten(f, x, g, e))

        def to_minus(y):
            return im.embed_minus(_unflatten(f, y, e, g))

        def from_plus(v):
            return tuple(v[(e + i) * (e + g) + j] for i in range(g) for j in range(e))

        def from_minus(v):
            return tuple(v[i * (e + g) + e + j] for i in range(e) for j in range(g))

        plus = lambda x, y, z: from_plus(self.plus_product(to_plus(x), to_minus(y), to_plus(z)))  # noqa: E731
        minus = lambda x, y, z: from_minus(self.minus_product(to_minus(x), to_plus(y), to_minus(z)))  # noqa: E731
        return AssocPair.from_products(f, e * g, e * g, plus, minus)


def geometry_from_pair(field: Field, e_dim: int, f_dim: int) -> IdealGeometry:
    """The geometry of right ideals of ``End(E (+) F)`` for the pair ``(Hom(E, F), Hom(F, E))``."""
    im = standard_imbedding(field, e_dim, f_dim)
    return IdealGeometry(im, tuple(right_ideals(im.algebra)))


def transpose_map(field: Field, r: int, c: int) -> Matrix:
    """The linear map sending a flattened r x c matrix to its flattened transpose."""
    cols = [_flatten(_unflatten(field, _unit(field, r * c, i), r, c).T) for i in range(r * c)]
    return Matrix.from_columns(field, cols, r * c)


def pair_isomorphism_kind(p: AssocPair, q: AssocPair, shape: tuple[int, int]) -> str | None:
    """``"direct"`` if the identity on Hom coordinates is an isomorphism p -> q,
    ``"swap"`` if transposition is an isomorphism p -> q.swap(), else None.

    ``shape`` is ``(rows, cols)`` of the plus matrices of p.
    """
    f = p.field
    if (p.dplus, p.dminus) == (q.dplus, q.dminus):
        one_p, one_m = Matrix.identity(f, p.dplus), Matrix.identity(f, p.dminus)
        if pairs_equal_under(p, q, one_p, one_m):
            return "direct"
    r, c = shape
    qs = q.swap()
    if (p.dplus, p.dminus) == (qs.dplus, qs.dminus):
        if pairs_equal_under(p, qs, transpose_map(f, r, c), transpose_map(f, c, r)):
            return "swap"
    return None


__all__ = [
    "Algebra",
    "AssocPair",
    "GeometricAlgebra",
    "GeometricPair",
    "IdealGeometry",
    "ImbeddedAlgebra",
    "algebra_pair",
    "check_pair_laws",
    "extract_algebra",
    "extract_pair",
    "find_algebra_isomorphism",
    "geometry_from_pair",
    "hom_pair",
    "homotope",
    "is_invertible",
    "jordan_Q",
    "jordan_T",
    "pair_isomorphism_kind",
    "pairs_equal_under",
    "transpose_map",
    "quadratic_operator",
    "right_ideals",
    "standard_imbedding",
]

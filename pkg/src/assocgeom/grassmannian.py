"""Subspaces of F^n as points of the Grassmannian, with the lattice operations."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .linalg import Field, Matrix, kernel_rows, rref_rows

ENUM_LIMIT = 2**20


class AmbientMismatch(ValueError):
    pass


class NotTransversal(ValueError):
    pass


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored by its RREF basis (no zero rows).

    Equality and hashing go through the RREF, so two spans of the same
    space compare equal.
    """

    field: Field
    n: int
    basis: tuple = ()

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [[field(v) for v in vec] for vec in vectors]
        for r in rows:
            if len(r) != n:
                raise AmbientMismatch(f"vector of length {len(r)} in F^{n}")
        red, _ = rref_rows(rows, n, field)
        return cls(field, n, tuple(tuple(r) for r in red))

    @classmethod
    def _from_canonical(cls, field, n, rows):
        return cls(field, n, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        one, zero = field.one, field.zero
        return cls(field, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors e_i, i in ``indices`` (0-based)."""
        one, zero = field.one, field.zero
        return cls.span(field, n, [[one if j == i else zero for j in range(n)] for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.n

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.n, self.basis)

    def annihilator(self) -> list[list]:
        """Rows ``A`` with ``self = {v : A v = 0}``."""
        return kernel_rows(self.basis, self.n, self.field)

    def __contains__(self, vec) -> bool:
        vec = [self.field(v) for v in vec]
        red, _ = rref_rows(list(self.basis) + [vec], self.n, self.field)
        return len(red) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        _check(self, other)
        return all(v in other for v in self.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        return meet(self, other)

    def __or__(self, other: "Subspace") -> "Subspace":
        return join(self, other)

    def image(self, op: Matrix) -> "Subspace":
        """Image of this subspace under the linear map ``op`` (acting on columns)."""
        if op.ncols != self.n:
            raise AmbientMismatch("operator does not act on this ambient space")
        return Subspace.span(self.field, op.nrows, [op.apply(v) for v in self.basis])

    def preimage(self, op: Matrix) -> "Subspace":
        """``{v : op v in self}``."""
        if op.nrows != self.n:
            raise AmbientMismatch("operator does not map into this ambient space")
        ann = self.annihilator()
        if not ann:
            return Subspace.full(self.field, op.ncols)
        cons = (Matrix._raw(self.field, ann, self.n) @ op).data
        return Subspace._from_canonical(self.field, op.ncols, kernel_rows(cons, op.ncols, self.field))

    def __repr__(self):
        rows = "; ".join(" ".join(str(v) for v in r) for r in self.basis)
        return f"Subspace({self.field!r}^{self.n}: [{rows}])"


def _check(*spaces: Subspace) -> None:
    first = spaces[0]
    for s in spaces[1:]:
        if s.n != first.n or s.field != first.field:
            raise AmbientMismatch(f"{first.field!r}^{first.n} vs {s.field!r}^{s.n}")


def meet(x: Subspace, y: Subspace) -> Subspace:
    """Intersection, as the kernel of the stacked annihilators."""
    _check(x, y)
    cons = x.annihilator() + y.annihilator()
    return Subspace._from_canonical(x.field, x.n, kernel_rows(cons, x.n, x.field))


def join(x: Subspace, y: Subspace) -> Subspace:
    _check(x, y)
    red, _ = rref_rows(list(x.basis) + list(y.basis), x.n, x.field)
    return Subspace._from_canonical(x.field, x.n, red)


def is_transversal(x: Subspace, a: Subspace) -> bool:
    """``x`` and ``a`` are complementary: zero meet and full join."""
    _check(x, a)
    if x.dim + a.dim != x.n:
        return False
    return join(x, a).is_full()


def projector(x: Subspace, a: Subspace) -> Matrix:
    """The projector onto ``x`` with kernel ``a``."""
    if not is_transversal(x, a):
        raise NotTransversal("projector needs complementary subspaces")
    field, n = x.field, x.n
    basis = Matrix.from_columns(field, list(x.basis) + list(a.basis), n)
    one, zero = field.one, field.zero
    keep = Matrix._raw(field, [[one if i == j and i < x.dim else zero for j in range(n)] for i in range(n)], n)
    return basis @ keep @ basis.inverse()


def _first_outside(space: Subspace) -> tuple:
    one, zero = space.field.one, space.field.zero
    for i in range(space.n):
        e = tuple(one if j == i else zero for j in range(space.n))
        if e not in space:
            return e
    raise ValueError("space is full")


def find_complement(a: Subspace) -> Subspace:
    """Greedy complement of ``a`` from standard basis vectors, in index order."""
    field, n = a.field, a.n
    chosen = []
    current = a
    one, zero = field.one, field.zero
    for i in range(n):
        if current.is_full():
            break
        e = tuple(one if j == i else zero for j in range(n))
        if e not in current:
            chosen.append(e)
            current = join(current, Subspace.span(field, n, [e]))
    return Subspace.span(field, n, chosen)


def common_complement(a: Subspace, b: Subspace) -> Subspace | None:
    """Some ``s`` transversal to both ``a`` and ``b``; ``None`` iff dims differ.

    Each step adds a vector outside both ``a + s`` and ``b + s``: take ``u``,
    the first standard vector outside ``a + s``, and ``w``, the first outside
    ``b + s``; one of ``u``, ``w``, ``u + w`` avoids both.
    """
    _check(a, b)
    if a.dim != b.dim:
        return None
    field, n = a.field, a.n
    p = field.p
    chosen: list[tuple] = []
    sa, sb = a, b
    while not sa.is_full():
        u = _first_outside(sa)
        w = _first_outside(sb)
        if u not in sb:
            v = u
        elif w not in sa:
            v = w
        else:
            v = tuple((s + t) % p if p else s + t for s, t in zip(u, w))
        chosen.append(v)
        line = Subspace.span(field, n, [v])
        sa, sb = join(sa, line), join(sb, line)
    return Subspace.span(field, n, chosen)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _guard(field: Field, n: int, limit: int = ENUM_LIMIT) -> None:
    if field.p is None:
        raise ValueError("enumeration needs a finite field")
    if field.p**n > limit:
        raise ValueError(f"p^n = {field.p}^{n} exceeds the enumeration guard {limit}")


def iter_subspaces(field: Field, n: int, k: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces of GF(p)^n, by pivot set then free entries."""
    _guard(field, n)
    elems = field.elements()
    for pivots in itertools.combinations(range(n), k):
        pset = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pset]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield Subspace._from_canonical(field, n, rows)


def enumerate_subspaces(field: Field, n: int, dim: int | None = None) -> list[Subspace]:
    """Every subspace of dimension ``dim`` (all dimensions when ``None``)."""
    dims = range(n + 1) if dim is None else [dim]
    return [s for k in dims for s in iter_subspaces(field, n, k)]


def same_component(x: Subspace, y: Subspace) -> bool:
    """Over a field the connected components are the fixed-dimension Grassmannians."""
    _check(x, y)
    return x.dim == y.dim


def exists_transversal_triple(field: Field, n: int):
    """``(True, (o_plus, diagonal, o_minus))`` when n is even, else ``(False, None)``."""
    if n % 2:
        return False, None
    h = n // 2
    one, zero = field.one, field.zero
    o_plus = Subspace.coordinate(field, n, range(h))
    o_minus = Subspace.coordinate(field, n, range(h, n))
    diag = Subspace.span(
        field, n, [[one if j in (i, i + h) else zero for j in range(n)] for i in range(h)]
    )
    return True, (o_plus, diag, o_minus)


def random_scalar(field: Field, rng: random.Random, bound: int = 9):
    if field.p is not None:
        return rng.randrange(field.p)
    den = rng.randint(1, bound)
    return Fraction(rng.randint(-bound, bound), den)


def random_vector(field: Field, n: int, rng: random.Random) -> tuple:
    return tuple(random_scalar(field, rng) for _ in range(n))


def random_subspace(field: Field, n: int, rng: random.Random, dim: int | None = None) -> Subspace:
    """A random subspace; uniform dimension unless ``dim`` is given."""
    k = rng.randint(0, n) if dim is None else dim
    while True:
        s = Subspace.span(field, n, [random_vector(field, n, rng) for _ in range(k)])
        if s.dim == k:
            return s


def random_complement(a: Subspace, rng: random.Random) -> Subspace:
    """A random complement of ``a``."""
    while True:
        s = random_subspace(a.field, a.n, rng, a.n - a.dim)
        if is_transversal(s, a):
            return s


def random_common_complement(a: Subspace, b: Subspace, rng: random.Random, tries: int = 200) -> Subspace | None:
    """Random element of C_ab, falling back to the deterministic one."""
    if a.dim != b.dim:
        return None
    for _ in range(tries):
        s = random_subspace(a.field, a.n, rng, a.n - a.dim)
        if is_transversal(s, a) and is_transversal(s, b):
            return s
    return common_complement(a, b)

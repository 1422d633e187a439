"""Graph coordinates around a base point ``(o_plus, o_minus)``.

Points transversal to ``o_minus`` are graphs ``{v + X v : v in o_plus}`` of maps
``X: o_plus -> o_minus``; points transversal to ``o_plus`` are graphs
``{u + A u : u in o_minus}`` of maps ``A: o_minus -> o_plus``.  Maps are
matrices in the bases stored on the chart, acting on columns.

For ``Chart.standard(m, k)`` we have ``W = F^m (+) F^k`` with ``o_minus`` the first
``m`` coordinates and ``o_plus`` the last ``k``; then ``x = [X; 1]`` and
``a = {(u, A u)}`` is the kernel of the row ``(-A, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grassmannian import NotTransversal, Subspace, is_transversal
from .linalg import Field, Matrix


@dataclass(frozen=True)
class Chart:
    o_plus: Subspace
    o_minus: Subspace

    def __post_init__(self):
        if not is_transversal(self.o_plus, self.o_minus):
            raise NotTransversal("a base point must be a transversal pair")

    @classmethod
    def standard(cls, field: Field, m: int, k: int) -> "Chart":
        n = m + k
        return cls(Subspace.coordinate(field, n, range(m, n)), Subspace.coordinate(field, n, range(m)))

    @property
    def field(self) -> Field:
        return self.o_plus.field

    @property
    def n(self) -> int:
        return self.o_plus.n

    @property
    def k(self) -> int:
        return self.o_plus.dim

    @property
    def m(self) -> int:
        return self.o_minus.dim

    def _frame(self) -> Matrix:
        """Columns: basis of o_minus followed by basis of o_plus."""
        return Matrix.from_columns(self.field, list(self.o_minus.basis) + list(self.o_plus.basis), self.n)

    def _split(self, s: Subspace):
        coords = self._frame().inverse() @ Matrix.from_columns(self.field, list(s.basis), self.n) if s.dim else None
        if coords is None:
            return None, None
        return coords.block(0, self.m, 0, s.dim), coords.block(self.m, self.n, 0, s.dim)

    def graph_plus(self, X: Matrix) -> Subspace:
        """The point of U_{o_minus} with coordinate ``X`` (an m x k matrix)."""
        if X.shape != (self.m, self.k):
            raise ValueError(f"plus coordinate must be {self.m}x{self.k}")
        cols = []
        for j in range(self.k):
            v = list(self.o_plus.basis[j])
            for i in range(self.m):
                c = X[i, j]
                if c:
                    v = [s + c * t for s, t in zip(v, self.o_minus.basis[i])]
            cols.append(v)
        return Subspace.span(self.field, self.n, cols)

    def graph_minus(self, A: Matrix) -> Subspace:
        """The point of U_{o_plus} with coordinate ``A`` (a k x m matrix)."""
        if A.shape != (self.k, self.m):
            raise ValueError(f"minus coordinate must be {self.k}x{self.m}")
        cols = []
        for j in range(self.m):
            v = list(self.o_minus.basis[j])
            for i in range(self.k):
                c = A[i, j]
                if c:
                    v = [s + c * t for s, t in zip(v, self.o_plus.basis[i])]
            cols.append(v)
        return Subspace.span(self.field, self.n, cols)

    def coords_plus(self, s: Subspace) -> Matrix:
        if not is_transversal(s, self.o_minus):
            raise NotTransversal("point is not in the chart U_{o_minus}")
        if self.k == 0:
            return Matrix.zeros(self.field, self.m, 0)
        lower, upper = self._split(s)
        return lower @ upper.inverse()

    def coords_minus(self, s: Subspace) -> Matrix:
        if not is_transversal(s, self.o_plus):
            raise NotTransversal("point is not in the chart U_{o_plus}")
        if self.m == 0:
            return Matrix.zeros(self.field, self.k, 0)
        lower, upper = self._split(s)
        return upper @ lower.inverse()

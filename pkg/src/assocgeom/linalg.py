"""Exact arithmetic over GF(p) and Q, with the matrix kernels everything else uses.

Scalars are plain Python objects: ``int`` residues in ``[0, p)`` for GF(p) and
``fractions.Fraction`` for Q.  A :class:`Field` canonicalises values and knows
how to invert them; matrices are immutable row-major tuples.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

_P_MAX = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p`` is a prime, the rationals when ``p`` is ``None``."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (self.p <= _P_MAX and _is_prime(self.p)):
            raise ValueError(f"GF(p) needs a prime p <= 2^31, got {self.p}")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def __call__(self, value) -> "int | Fraction":
        """Canonical representative of ``value`` (int, Fraction or string)."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, value):
        if value == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.p is None:
            return 1 / Fraction(value)
        return pow(value, -1, self.p)

    def elements(self) -> list:
        if self.p is None:
            raise ValueError("Q is infinite")
        return list(range(self.p))

    def vectors(self, n: int) -> Iterator[tuple]:
        """All of F^n in lexicographic order (finite fields only)."""
        return itertools.product(self.elements(), repeat=n)

    def format(self, value) -> str:
        return str(value)

    def spec(self) -> str:
        return "q" if self.p is None else f"p={self.p}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``p=<prime>`` or ``q``."""
        text = text.strip()
        if text in ("q", "Q", "QQ"):
            return cls(None)
        if text.startswith("p="):
            return cls(int(text[2:]))
        raise ValueError(f"bad field descriptor {text!r}")

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)


def rref_rows(rows: Sequence[Sequence], ncols: int, field: Field):
    """Reduced row echelon form of ``rows`` with zero rows dropped.

    Returns ``(rows, pivots)`` where ``rows`` is a list of lists.
    """
    p = field.p
    work = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    m = len(work)
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        lead = prow[c]
        if lead != 1:
            if p:
                s = pow(lead, -1, p)
                prow = [v * s % p for v in prow]
            else:
                prow = [v / lead for v in prow]
            work[r] = prow
        for i in range(m):
            if i != r:
                f = work[i][c]
                if f:
                    if p:
                        work[i] = [(a - f * b) % p for a, b in zip(work[i], prow)]
                    else:
                        work[i] = [a - f * b for a, b in zip(work[i], prow)]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def kernel_rows(rows: Sequence[Sequence], ncols: int, field: Field) -> list[list]:
    """Basis of ``{v : rows . v = 0}`` in RREF."""
    red, pivots = rref_rows(rows, ncols, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    zero, one = field.zero, field.one
    p = field.p
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, pivots):
            c = row[f]
            if c:
                v[pc] = (-c) % p if p else -c
        basis.append(v)
    # already in RREF up to ordering: reduce once more for the canonical form
    return rref_rows(basis, ncols, field)[0]


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    data: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.data) != self.nrows or any(len(r) != self.ncols for r in self.data):
            raise ValueError("entries length must equal rows x cols")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(field(v) for v in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(data[0])
        return cls(field, len(data), ncols, data)

    @classmethod
    def _raw(cls, field, rows, ncols):
        data = tuple(tuple(r) for r in rows)
        return cls(field, len(data), ncols, data)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls._raw(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls._raw(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def rows(self) -> list[tuple]:
        return list(self.data)

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.data) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, self.columns(), self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        p = self.field.p
        if p:
            rows = [[(a + sign * b) % p for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        else:
            rows = [[a + sign * b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        return Matrix._raw(self.field, rows, self.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, s) -> "Matrix":
        s = self.field(s)
        p = self.field.p
        if p:
            rows = [[v * s % p for v in r] for r in self.data]
        else:
            rows = [[v * s for v in r] for r in self.data]
        return Matrix._raw(self.field, rows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.field.p
        cols = other.columns()
        if p:
            rows = [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in self.data]
        else:
            zero = self.field.zero
            rows = [[sum((a * b for a, b in zip(r, c)), zero) for c in cols] for r in self.data]
        return Matrix._raw(self.field, rows, other.ncols)

    def apply(self, vec: Sequence) -> tuple:
        """``self . vec`` for a column vector given as a sequence."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        p = self.field.p
        if p:
            return tuple(sum(a * b for a, b in zip(r, vec)) % p for r in self.data)
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, vec)), zero) for r in self.data)

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("only square matrices are invertible")
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.data)]
        red, pivots = rref_rows(aug, 2 * n, self.field)
        if pivots[:n] != list(range(n)) or len(red) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(self.field, [r[n:] for r in red], n)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix._raw(self.field, [a + b for a, b in zip(self.data, other.data)], self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix._raw(self.field, self.data + other.data, self.ncols)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix._raw(self.field, [r[c0:c1] for r in self.data[r0:r1]], c1 - c0)

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in r) for r in self.data)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows, pivots = rref_rows(m.data, m.ncols, m.field)
    return Matrix._raw(m.field, rows, m.ncols), pivots


def kernel(m: Matrix) -> Matrix:
    """Rows form an RREF basis of the right null space ``{v : m v = 0}``."""
    return Matrix._raw(m.field, kernel_rows(m.data, m.ncols, m.field), m.ncols)


def solve(m: Matrix, b: Sequence):
    """One solution ``v`` of ``m v = b``, or ``None`` when inconsistent."""
    if len(b) != m.nrows:
        raise ValueError("right-hand side length must equal the row count")
    field = m.field
    aug = [list(r) + [field(bi)] for r, bi in zip(m.data, b)]
    red, pivots = rref_rows(aug, m.ncols + 1, field)
    if pivots and pivots[-1] == m.ncols:
        return None
    v = [field.zero] * m.ncols
    for row, pc in zip(red, pivots):
        v[pc] = row[-1]
    return tuple(v)


def image(m: Matrix) -> Matrix:
    """RREF basis (as rows) of the column space of ``m``."""
    return rref(m.transpose())[0]

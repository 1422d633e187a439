"""The quintary product map Gamma and the dilation map Pi_r on Gras(F^n).

``gamma_extended`` is the normative, everywhere-defined product.  The other
forms (operator formulas on D(Gamma), six witness-elimination descriptions,
a brute-force enumeration, and chart formulas) exist as cross-checks.

Witness layout of ``gamma_extended``: the unknown vector is
``omega | xi | alpha | eta | beta | zeta`` where ``omega`` has n coordinates and
each of the others is a coefficient vector on the RREF basis of x, a, y, b, z.
The 3n equations are ``omega = zeta + alpha``, ``omega = alpha + eta + beta``,
``omega = xi + beta`` (in this row order).
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .charts import Chart
from .grassmannian import (
    AmbientMismatch,
    NotTransversal,
    Subspace,
    _check,
    common_complement,
    is_transversal,
    projector,
)
from .linalg import Field, Matrix, kernel_rows, solve

BRUTEFORCE_LIMIT = 2**16


class GammaQuintuple(NamedTuple):
    x: Subspace
    a: Subspace
    y: Subspace
    b: Subspace
    z: Subspace


class DomainFlags(NamedTuple):
    in_DL: bool
    in_DR: bool
    in_DM: bool

    @property
    def any(self) -> bool:
        return self.in_DL or self.in_DR or self.in_DM


class OutsideDomain(ValueError):
    pass


class SingularDenominator(ArithmeticError):
    """The chart formula leaves the chart; fall back to ``gamma_extended``."""


def _project(rows, ncols: int, field: Field, n: int) -> Subspace:
    """Span of the first ``n`` coordinates of the solution space of ``rows``."""
    sols = kernel_rows(rows, ncols, field)
    return Subspace.span(field, n, [v[:n] for v in sols])


def _neg(field: Field, v):
    return (-v) % field.p if field.p else -v


# -- operator form ----------------------------------------------------------


def left_operator(x: Subspace, a: Subspace, y: Subspace, b: Subspace) -> Matrix:
    """``1 - P_a^x P_y^b``; needs x transversal to a and y transversal to b."""
    one = Matrix.identity(x.field, x.n)
    return one - projector(a, x) @ projector(y, b)


def middle_operator(x: Subspace, a: Subspace, b: Subspace, z: Subspace) -> Matrix:
    """``P_x^a - P_b^z``; needs x transversal to a and z transversal to b."""
    return projector(x, a) - projector(b, z)


def right_operator(a: Subspace, y: Subspace, b: Subspace, z: Subspace) -> Matrix:
    """``1 - P_b^z P_y^a``; needs y transversal to a and z transversal to b."""
    one = Matrix.identity(a.field, a.n)
    return one - projector(b, z) @ projector(y, a)


def dilation_operator(s, x: Subspace, a: Subspace) -> Matrix:
    """``s 1 + (1 - s) P_x^a``."""
    field = x.field
    s = field(s)
    one = Matrix.identity(field, x.n)
    return one.scale(s) + projector(x, a).scale(field(1 - s))


def domain_flags(x, a, y, b, z) -> DomainFlags:
    xa, zb = is_transversal(x, a), is_transversal(z, b)
    in_dl = xa and is_transversal(y, b)
    in_dr = is_transversal(y, a) and zb
    in_dm = xa and zb and common_complement(a, b) is not None
    return DomainFlags(in_dl, in_dr, in_dm)


def gamma_operator(x, a, y, b, z, branch: str | None = None) -> Subspace:
    """Gamma on D(Gamma) via L, R or M; ``branch`` forces one of ``"L"``, ``"R"``, ``"M"``."""
    _check(x, a, y, b, z)
    flags = domain_flags(x, a, y, b, z)
    if branch is None:
        branch = "L" if flags.in_DL else "R" if flags.in_DR else "M" if flags.in_DM else None
        if branch is None:
            raise OutsideDomain("quintuple is outside D(Gamma)")
    allowed = {"L": flags.in_DL, "R": flags.in_DR, "M": flags.in_DM}
    if not allowed.get(branch, False):
        raise OutsideDomain(f"quintuple is outside D_{branch}")
    if branch == "L":
        return z.image(left_operator(x, a, y, b))
    if branch == "R":
        return x.image(right_operator(a, y, b, z))
    return y.image(middle_operator(x, a, b, z))


# -- extended form ----------------------------------------------------------


def _witness_rows(x, a, y, b, z):
    """Rows of the omega|xi|alpha|eta|beta|zeta system (see module docstring)."""
    field, n = x.field, x.n
    one, zero = field.one, field.zero
    dims = [s.dim for s in (x, a, y, b, z)]
    ncols = n + sum(dims)
    offsets = {}
    col = n
    for name, d in zip("xaybz", dims):
        offsets[name] = col
        col += d
    spaces = {"x": x, "a": a, "y": y, "b": b, "z": z}
    equations = (("z", "a"), ("a", "y", "b"), ("x", "b"))
    rows = []
    for names in equations:
        for t in range(n):
            row = [zero] * ncols
            row[t] = one
            for name in names:
                off = offsets[name]
                for i, vec in enumerate(spaces[name].basis):
                    if vec[t]:
                        row[off + i] = _neg(field, vec[t])
            rows.append(row)
    return rows, ncols


@lru_cache(maxsize=1 << 17)
def gamma_extended(x: Subspace, a: Subspace, y: Subspace, b: Subspace, z: Subspace) -> Subspace:
    """``{w : exists xi, alpha, eta, beta, zeta with w = zeta + alpha = alpha + eta + beta = xi + beta}``."""
    _check(x, a, y, b, z)
    rows, ncols = _witness_rows(x, a, y, b, z)
    return _project(rows, ncols, x.field, x.n)


# Each description: (witness 1, witness 2, [(target, (c_omega, c_w1, c_w2)), ...]),
# meaning: exists w1, w2 with c_omega*omega + c_w1*w1 + c_w2*w2 in target.
DESCRIPTIONS = {
    "xz": ("x", "z", [("a", (1, 0, 1)), ("y", (1, 1, 1)), ("b", (1, 1, 0))]),
    "xa": ("x", "a", [("z", (1, 0, -1)), ("y", (0, 1, -1)), ("b", (1, -1, 0))]),
    "bz": ("b", "z", [("a", (-1, 0, 1)), ("y", (0, -1, 1)), ("x", (1, -1, 0))]),
    "yb": ("y", "b", [("a", (1, -1, -1)), ("z", (0, 1, 1)), ("x", (1, 0, -1))]),
    "yz": ("y", "z", [("a", (1, 0, 1)), ("b", (0, 1, 1)), ("x", (1, 1, 1))]),
    "ab": ("a", "b", [("z", (1, 1, 0)), ("y", (1, 1, 1)), ("x", (1, 0, 1))]),
}


def gamma_description(x, a, y, b, z, variant: str) -> Subspace:
    """Gamma via one of the two-witness descriptions, using annihilators of the targets."""
    _check(x, a, y, b, z)
    field, n = x.field, x.n
    spaces = {"x": x, "a": a, "y": y, "b": b, "z": z}
    w1, w2, conds = DESCRIPTIONS[variant]
    s1, s2 = spaces[w1], spaces[w2]
    ncols = n + s1.dim + s2.dim
    rows = []
    for target, (c0, c1, c2) in conds:
        for h in spaces[target].annihilator():
            row = [field(c0 * v) for v in h]
            for vec in s1.basis:
                row.append(field(c1 * sum(p * q for p, q in zip(h, vec))))
            for vec in s2.basis:
                row.append(field(c2 * sum(p * q for p, q in zip(h, vec))))
            rows.append(row)
    return _project(rows, ncols, field, n)


def gamma_bruteforce(x, a, y, b, z) -> Subspace:
    """Independent oracle: test every omega in F^n for a solvable witness system."""
    _check(x, a, y, b, z)
    field, n = x.field, x.n
    if field.p is None or field.p**n > BRUTEFORCE_LIMIT:
        raise ValueError("brute force needs a finite field with p^n <= 2^16")
    zero = field.zero
    blocks = (("z", "a"), ("a", "y", "b"), ("x", "b"))
    spaces = {"x": x, "a": a, "y": y, "b": b, "z": z}
    order = "xaybz"
    ncols = sum(s.dim for s in spaces.values())
    rows = []
    for names in blocks:
        for t in range(n):
            row = []
            for name in order:
                coef = [vec[t] for vec in spaces[name].basis]
                row.extend(coef if name in names else [zero] * len(coef))
            rows.append(row)
    system = Matrix(field, 3 * n, ncols, tuple(tuple(r) for r in rows))
    kept = [w for w in field.vectors(n) if solve(system, w * 3) is not None]
    return Subspace.span(field, n, kept)


# -- dilation ----------------------------------------------------------------


@lru_cache(maxsize=1 << 15)
def pi_extended(r, x: Subspace, a: Subspace, z: Subspace) -> Subspace:
    """``{w : exists xi in x, alpha in a, zeta in z with w = (1-r) xi + r zeta, zeta - xi = alpha}``."""
    _check(x, a, z)
    field, n = x.field, x.n
    r = field(r)
    one, zero = field.one, field.zero
    ncols = n + x.dim + a.dim + z.dim
    rows = []
    for t in range(n):
        # omega - (1-r) xi - r zeta = 0
        row = [zero] * ncols
        row[t] = one
        col = n
        for vec in x.basis:
            row[col] = field(-(1 - r) * vec[t])
            col += 1
        col += a.dim
        for vec in z.basis:
            row[col] = field(-r * vec[t])
            col += 1
        rows.append(row)
    for t in range(n):
        # zeta - xi - alpha = 0
        row = [zero] * ncols
        col = n
        for vec in x.basis:
            row[col] = field(-vec[t])
            col += 1
        for vec in a.basis:
            row[col] = field(-vec[t])
            col += 1
        for vec in z.basis:
            row[col] = vec[t]
            col += 1
        rows.append(row)
    return _project(rows, ncols, field, n)


def pi_operator(r, x: Subspace, a: Subspace, z: Subspace) -> Subspace:
    """Pi_r on its original domain (x or z transversal to a)."""
    field = x.field
    if is_transversal(x, a):
        return z.image(dilation_operator(r, x, a))
    if is_transversal(z, a):
        return x.image(dilation_operator(field(1 - field(r)), z, a))
    raise OutsideDomain("Pi_r needs x or z transversal to a")


# -- chart formulas ----------------------------------------------------------


def _one(field: Field, k: int) -> Matrix:
    return Matrix.identity(field, k)


def _inv(m: Matrix) -> Matrix:
    try:
        return m.inverse()
    except ZeroDivisionError:
        raise SingularDenominator("chart formula needs an invertible factor") from None


def gamma_affine(X: Matrix, A: Matrix, Y: Matrix, B: Matrix, Z: Matrix) -> Matrix:
    """``N D^-1`` with ``D = (1-AX)^-1 (1-AY) - 1 + (1-BZ)^-1 (1-BY)`` and
    ``N = X (1-AX)^-1 (1-AY) - Y + Z (1-BZ)^-1 (1-BY)``.

    X, Y, Z are m x k (plus coordinates), A, B are k x m (minus coordinates),
    all in the standard chart.
    """
    field, k = X.field, X.ncols
    one = _one(field, k)
    left = _inv(one - A @ X) @ (one - A @ Y)
    right = _inv(one - B @ Z) @ (one - B @ Y)
    denominator = left - one + right
    numerator = X @ left - Y + Z @ right
    return numerator @ _inv(denominator)


def gamma_affine_origin(X: Matrix, A: Matrix, Z: Matrix) -> Matrix:
    """Gamma(X, A, O+, O-, Z) = X - Z A X + Z."""
    return X - Z @ A @ X + Z


def gamma_affine_b0(X: Matrix, A: Matrix, Y: Matrix, Z: Matrix) -> Matrix:
    """Gamma(X, A, Y, O-, Z) = X - (Y - Z)(1 - AY)^-1 (1 - AX)."""
    one = _one(X.field, X.ncols)
    return X - (Y - Z) @ _inv(one - A @ Y) @ (one - A @ X)


def gamma_first_kind(X: Matrix, Y: Matrix, Z: Matrix) -> Matrix:
    """Gamma(X, o-, Y, o+, Z) = X Y^-1 Z for graphs of square maps."""
    try:
        return X @ Y.inverse() @ Z
    except ZeroDivisionError:
        raise SingularDenominator("Y must be invertible") from None


def affine_gamma_points(chart: Chart, X, A, Y, B, Z) -> GammaQuintuple:
    """Encode chart coordinates as the five subspaces Gamma acts on."""
    return GammaQuintuple(
        chart.graph_plus(X), chart.graph_minus(A), chart.graph_plus(Y), chart.graph_minus(B), chart.graph_plus(Z)
    )


__all__ = [
    "AmbientMismatch",
    "BRUTEFORCE_LIMIT",
    "DESCRIPTIONS",
    "DomainFlags",
    "GammaQuintuple",
    "NotTransversal",
    "OutsideDomain",
    "SingularDenominator",
    "affine_gamma_points",
    "dilation_operator",
    "domain_flags",
    "gamma_affine",
    "gamma_affine_b0",
    "gamma_affine_origin",
    "gamma_bruteforce",
    "gamma_description",
    "gamma_extended",
    "gamma_first_kind",
    "gamma_operator",
    "left_operator",
    "middle_operator",
    "pi_extended",
    "pi_operator",
    "right_operator",
]

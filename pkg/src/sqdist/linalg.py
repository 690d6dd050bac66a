"""Exact rational linear algebra used as the independent check on every formula.

Scalars are :class:`fractions.Fraction`.  Matrices are ``numpy`` arrays of
``dtype=object`` holding fractions, so ``@`` and ``==`` behave exactly; any
integer array or nested list is accepted as input.  Nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from math import lcm, prod
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DivisionByZeroPoly,
    NotDivisible,
    NotSquare,
    NotSymmetric,
    OrderTooSmall,
    Singular,
)

__all__ = [
    "Inertia",
    "RatPoly",
    "as_rational",
    "identity",
    "det_bareiss",
    "cof_sum_reduction",
    "cof_sum_adjugate",
    "cofactor_matrix",
    "inverse",
    "rank",
    "inertia_congruence",
    "charpoly_exact",
    "poly_eval",
    "poly_mul",
    "poly_div_exact",
    "poly_gcd",
    "format_rational",
    "parse_rational",
]


class Inertia(NamedTuple):
    n_plus: int
    n_zero: int
    n_minus: int

    def __add__(self, other):  # type: ignore[override]
        return Inertia(*(a + b for a, b in zip(self, other)))


def format_rational(q) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


# ---------------------------------------------------------------------------
# matrices


def as_rational(m) -> np.ndarray:
    """Copy ``m`` into a 2-D object array of :class:`Fraction`."""
    arr = np.asarray(m, dtype=object)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = Fraction(int(v)) if isinstance(v, np.integer) else Fraction(v)
    return out


def identity(n: int) -> np.ndarray:
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def _square(m) -> np.ndarray:
    a = as_rational(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"matrix is {a.shape[0]}x{a.shape[1]}")
    return a


def _integer_rows(a: np.ndarray) -> tuple[list[list[int]], int]:
    """Scale each row to integers; return the rows and the total scale factor."""
    rows, scale = [], 1
    for row in a:
        d = lcm(*(x.denominator for x in row)) if len(row) else 1
        rows.append([int(x * d) for x in row])
        scale *= d
    return rows, scale


def _bareiss_int(m: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix (modified in place)."""
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_bareiss(m) -> Fraction:
    """Exact determinant via Bareiss elimination on the denominator-cleared matrix."""
    a = _square(m)
    rows, scale = _integer_rows(a)
    return Fraction(_bareiss_int(rows), scale)


def cof_sum_reduction(m) -> Fraction:
    """Sum of all cofactors, as ``det M_A(1|1)``.

    ``M_A`` subtracts the first row from every other row, then the first
    column from every other column.
    """
    a = _square(m)
    if a.shape[0] < 2:
        raise OrderTooSmall("cofactor sum by reduction needs order >= 2")
    a = a.copy()
    a[1:, :] -= a[0, :]
    a[:, 1:] -= a[:, [0]]
    return det_bareiss(a[1:, 1:])


def cofactor_matrix(m) -> np.ndarray:
    """Matrix of signed cofactors ``(-1)^(i+j) det A(i|j)``."""
    a = _square(m)
    n = a.shape[0]
    if n == 1:
        return identity(1)
    rows, _ = _integer_rows(a)
    row_scale = [lcm(*(x.denominator for x in row)) for row in a]
    total = prod(row_scale)
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        kept = rows[:i] + rows[i + 1:]
        scale = total // row_scale[i]
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for r in kept]
            c = Fraction(_bareiss_int(minor), scale)
            out[i, j] = -c if (i + j) % 2 else c
    return out


def cof_sum_adjugate(m) -> Fraction:
    """Sum of all ``n^2`` cofactors, each computed from its own minor."""
    return sum(cofactor_matrix(m).flat, Fraction(0))


def inverse(m) -> np.ndarray:
    """Gauss-Jordan inverse over the rationals."""
    a = _square(m)
    n = a.shape[0]
    aug = [list(a[i]) + list(identity(n)[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        out[i, :] = aug[i][n:]
    return out


def rank(m) -> int:
    a = [list(row) for row in as_rational(m)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def inertia_congruence(m) -> Inertia:
    """Eigenvalue sign counts of a symmetric matrix by congruence reduction.

    Each step applies the same elementary operation to rows and columns, so
    Sylvester's law keeps the inertia.  When every remaining diagonal entry
    is zero but an off-diagonal one is not, ``R_i += R_j, C_i += C_j`` puts
    ``2 a_ij`` on the diagonal first.
    """
    a = _square(m)
    if not (a == a.T).all():
        raise NotSymmetric("inertia requires a symmetric matrix")
    a = [list(row) for row in a]
    diag: list[Fraction] = []
    while a:
        k = len(a)
        piv = next((i for i in range(k) if a[i][i] != 0), None)
        if piv is None:
            hit = next(((i, j) for i in range(k) for j in range(k) if a[i][j] != 0), None)
            if hit is None:
                diag.extend([Fraction(0)] * k)
                break
            i, j = hit
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for row in a:
                row[i] += row[j]
            piv = i
        # move the pivot to position 0 by a symmetric permutation
        a[0], a[piv] = a[piv], a[0]
        for row in a:
            row[0], row[piv] = row[piv], row[0]
        p = a[0][0]
        diag.append(p)
        a = [
            [a[i][j] - a[i][0] * a[0][j] / p for j in range(1, k)]
            for i in range(1, k)
        ]
    return Inertia(
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d == 0),
        sum(1 for d in diag if d < 0),
    )


def charpoly_exact(m) -> RatPoly:
    """``det(xI - M)`` by the Faddeev-LeVerrier recurrence (exact divisions only)."""
    a = _square(m)
    n = a.shape[0]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = np.full((n, n), Fraction(0), dtype=object)
    eye = identity(n)
    for k in range(1, n + 1):
        mk = a @ mk + coeffs[n - k + 1] * eye
        am = a @ mk
        coeffs[n - k] = -sum((am[i, i] for i in range(n)), Fraction(0)) / k
    return RatPoly(coeffs)


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True, eq=True)
class RatPoly:
    """Dense univariate polynomial with rational coefficients, constant term first."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> RatPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> RatPoly:
        return cls([c])

    @classmethod
    def linear(cls, root_shift) -> RatPoly:
        """``x + root_shift``."""
        return cls([root_shift, 1])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other) -> RatPoly:
        other = _as_poly(other)
        return RatPoly(
            a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))
        )

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return RatPoly(-a for a in self.coeffs)

    def __sub__(self, other) -> RatPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> RatPoly:
        return _as_poly(other) - self

    def __mul__(self, other) -> RatPoly:
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> RatPoly:
        out = RatPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple[RatPoly, RatPoly]:
        return _divmod(self, _as_poly(other))

    def __floordiv__(self, other) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> RatPoly:
        return divmod(self, other)[1]

    def derivative(self) -> RatPoly:
        return RatPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        return RatPoly(c / self.lead for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(self.to_strings())}])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and k) else format_rational(mag)
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(("-" if c < 0 else "+", body + var))
        sign, first = terms[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(p) -> RatPoly:
    return p if isinstance(p, RatPoly) else RatPoly([p])


def poly_eval(p: RatPoly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_mul(p: RatPoly, q: RatPoly) -> RatPoly:
    if p.is_zero() or q.is_zero():
        return RatPoly()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return RatPoly(out)


def _divmod(p: RatPoly, q: RatPoly) -> tuple[RatPoly, RatPoly]:
    if q.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    if len(rem) - 1 < dq:
        return RatPoly(), p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / q.lead
        quot[k] = c
        if c:
            for j, b in enumerate(q.coeffs):
                rem[k + j] -= c * b
    return RatPoly(quot), RatPoly(rem[:dq])


def poly_div_exact(p: RatPoly, q: RatPoly) -> RatPoly:
    quot, rem = _divmod(p, q)
    if not rem.is_zero():
        raise NotDivisible(f"remainder {rem} is nonzero")
    return quot


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def poly_from_roots_shifts(shifts: Sequence) -> RatPoly:
    """``prod (x + s)`` over ``shifts``; the empty product is 1."""
    out = RatPoly([1])
    for s in shifts:
        out = out * RatPoly.linear(s)
    return out

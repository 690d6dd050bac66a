"""Closed-form spectral and algebraic data of squared distance matrices of
starlike block graphs.

Every function here evaluates a formula in the block sizes; none of them
looks at Delta itself.  The matrix-based checks live in :mod:`sqdist.linalg`.

Notation used in the code::

    alpha              prod_k (3 n_k + 1)
    alpha_hat[i]       prod_{k != i} (3 n_k + 1)
    alpha_hat2[i][j]   prod_{k != i, j} (3 n_k + 1)
    beta               sum_k n_k alpha_hat[k]
    beta_hat[i]        sum_{k != i} n_k alpha_hat2[i][k]
    a2b                alpha - 2 beta
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from .errors import BlockCountTooSmall, CofactorZero
from .graph import Shape
from .linalg import Inertia, RatPoly, poly_from_roots_shifts

__all__ = [
    "ScalarInvariants",
    "EtaVector",
    "LaplacianLike",
    "scalar_invariants",
    "det_delta_closed",
    "det_delta22_closed",
    "cof_delta_closed",
    "cof_delta22_closed",
    "charpoly_delta_closed",
    "charpoly_delta22_closed",
    "quotient_matrix_delta",
    "quotient_matrix_delta22",
    "charpoly_quotient_delta",
    "charpoly_quotient_delta22",
    "minus_one_eigenbasis",
    "inertia_delta_closed",
    "inertia_delta22_closed",
    "eta",
    "lambda_",
    "laplacian_like",
    "delta_inverse_closed",
    "cofactor_constant",
]


@dataclass(frozen=True)
class ScalarInvariants:
    alpha: Fraction
    alpha_hat: tuple[Fraction, ...]
    alpha_hat2: tuple[tuple[Fraction, ...], ...]
    beta: Fraction
    beta_hat: tuple[Fraction, ...]
    a2b: Fraction
    lambda_: Fraction | None


@dataclass(frozen=True)
class EtaVector:
    entries: np.ndarray

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class LaplacianLike:
    l_hat: np.ndarray
    l: np.ndarray


def _weights(shape: Shape) -> list[int]:
    return [3 * ni + 1 for ni in shape.parts]


def scalar_invariants(shape: Shape) -> ScalarInvariants:
    w = _weights(shape)
    parts = shape.parts
    b = shape.b
    alpha = Fraction(prod(w))
    alpha_hat = tuple(Fraction(prod(w[k] for k in range(b) if k != i)) for i in range(b))
    alpha_hat2 = tuple(
        tuple(
            Fraction(prod(w[k] for k in range(b) if k not in (i, j))) if i != j else Fraction(0)
            for j in range(b)
        )
        for i in range(b)
    )
    beta = sum((parts[k] * alpha_hat[k] for k in range(b)), Fraction(0))
    beta_hat = tuple(
        sum((parts[k] * alpha_hat2[i][k] for k in range(b) if k != i), Fraction(0))
        for i in range(b)
    )
    a2b = alpha - 2 * beta
    lam = beta / a2b if a2b != 0 else None
    return ScalarInvariants(alpha, alpha_hat, alpha_hat2, beta, beta_hat, a2b, lam)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def det_delta_closed(shape: Shape) -> Fraction:
    s = scalar_invariants(shape)
    return _sign(sum(shape.parts)) * s.beta


def det_delta22_closed(shape: Shape) -> Fraction:
    s = scalar_invariants(shape)
    return _sign(sum(shape.parts) - 1) * (4 * s.beta - s.alpha)


def cof_delta_closed(shape: Shape) -> Fraction:
    s = scalar_invariants(shape)
    return _sign(sum(shape.parts)) * s.a2b


def cof_delta22_closed(shape: Shape) -> Fraction:
    s = scalar_invariants(shape)
    return _sign(sum(shape.parts) - 1) * s.beta


def _weighted_sum_of_cofactors(shape: Shape) -> RatPoly:
    """``sum_i n_i prod_{j != i} (x + 3 n_j + 1)``."""
    w = _weights(shape)
    total = RatPoly()
    for i, ni in enumerate(shape.parts):
        total = total + ni * poly_from_roots_shifts(w[:i] + w[i + 1:])
    return total


def charpoly_quotient_delta(shape: Shape) -> RatPoly:
    """Characteristic polynomial of the quotient matrix of Delta (degree b+1)."""
    x = RatPoly.x()
    return x * poly_from_roots_shifts(_weights(shape)) - (4 * x + 1) * _weighted_sum_of_cofactors(shape)


def charpoly_quotient_delta22(shape: Shape) -> RatPoly:
    return poly_from_roots_shifts(_weights(shape)) - 4 * _weighted_sum_of_cofactors(shape)


def _minus_one_power(shape: Shape) -> RatPoly:
    return RatPoly.linear(1) ** (sum(shape.parts) - shape.b)


def charpoly_delta_closed(shape: Shape) -> RatPoly:
    return _minus_one_power(shape) * charpoly_quotient_delta(shape)


def charpoly_delta22_closed(shape: Shape) -> RatPoly:
    return _minus_one_power(shape) * charpoly_quotient_delta22(shape)


def quotient_matrix_delta(shape: Shape) -> np.ndarray:
    b = shape.b
    q = np.empty((b + 1, b + 1), dtype=object)
    q[0, 0] = Fraction(0)
    for j, nj in enumerate(shape.parts, start=1):
        q[0, j] = Fraction(nj)
        q[j, 0] = Fraction(1)
    for i in range(1, b + 1):
        for j, nj in enumerate(shape.parts, start=1):
            q[i, j] = Fraction(nj - 1) if i == j else Fraction(4 * nj)
    return q


def quotient_matrix_delta22(shape: Shape) -> np.ndarray:
    return quotient_matrix_delta(shape)[1:, 1:].copy()


def minus_one_eigenbasis(shape: Shape) -> list[np.ndarray]:
    """Vectors ``e_first - e_other`` inside each block; all are -1 eigenvectors."""
    basis = []
    for r in shape.partition().ranges:
        for v in r[1:]:
            vec = np.zeros(shape.n, dtype=np.int64)
            vec[r[0]] = 1
            vec[v] = -1
            basis.append(vec)
    return basis


def inertia_delta_closed(shape: Shape) -> Inertia:
    return Inertia(1, 0, shape.n - 1)


def inertia_delta22_closed(shape: Shape) -> Inertia:
    return Inertia(1, 0, shape.n - 2)


def _require_invertible_form(shape: Shape) -> ScalarInvariants:
    if shape.b < 2:
        raise BlockCountTooSmall(f"{shape} has a single block; at least two are required")
    s = scalar_invariants(shape)
    if s.a2b == 0:
        raise CofactorZero(f"cof Delta vanishes for {shape}")
    return s


def eta(shape: Shape) -> EtaVector:
    s = _require_invertible_form(shape)
    vec = np.empty(shape.n, dtype=object)
    vec[0] = (s.alpha - 3 * s.beta) / s.a2b
    for i, r in enumerate(shape.partition().ranges):
        for v in r:
            vec[v] = s.alpha_hat[i] / s.a2b
    return EtaVector(vec)


def lambda_(shape: Shape) -> Fraction:
    return _require_invertible_form(shape).lambda_


def laplacian_like(shape: Shape) -> LaplacianLike:
    s = _require_invertible_form(shape)
    part = shape.partition()
    n = shape.n
    block = [part.block_of(v) for v in range(n)]
    l_hat = np.empty((n, n), dtype=object)
    for u in range(n):
        for v in range(n):
            bu, bv = block[u], block[v]
            if bu is None and bv is None:
                val = s.beta
            elif bu is None or bv is None:
                val = -s.alpha_hat[bv if bu is None else bu]
            elif bu == bv:
                val = 6 * s.beta_hat[bu] - s.alpha_hat[bu]
                if u == v:
                    val += s.a2b
            else:
                val = 2 * s.alpha_hat2[bu][bv]
            l_hat[u, v] = Fraction(val)
    return LaplacianLike(l_hat, l_hat / s.a2b)


def delta_inverse_closed(shape: Shape) -> np.ndarray:
    """``-L + (1/lambda) eta eta^T``."""
    s = _require_invertible_form(shape)
    e = eta(shape).entries
    return -laplacian_like(shape).l + np.outer(e, e) / s.lambda_


def cofactor_constant(shape: Shape) -> Fraction:
    s = _require_invertible_form(shape)
    return 1 / s.a2b

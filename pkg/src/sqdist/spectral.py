"""Exact isolation and comparison of the spectral radius of Delta.

The spectral radius is the unique positive root of the reduced factor of the
characteristic polynomial (the factor left after removing ``(x+1)^(sum n - b)``).
Brackets are refined by bisection with exact sign evaluation, so every
ordering returned here is certified by signs rather than by a tolerance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from . import closed_forms
from .errors import (
    InvalidParameters,
    MovePreconditionViolated,
    NonPositiveSample,
    WidthNotPositive,
)
from .graph import Shape
from .linalg import RatPoly, format_rational, poly_gcd

__all__ = [
    "DEFAULT_WIDTH",
    "RootBracket",
    "Ordering",
    "ExtremalReport",
    "reduced_factor",
    "isolate_positive_root",
    "spectral_radius",
    "refine",
    "sturm_sequence",
    "count_roots",
    "compare_rho",
    "balancing_move",
    "lemma_fg_values",
    "s1_shape",
    "s2_shape",
    "enumerate_shapes",
    "extremal_report",
]

DEFAULT_WIDTH = Fraction(1, 10**9)
COMPARE_CAP = 256


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class RootBracket:
    poly: RatPoly
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def disjoint_from(self, other: RootBracket) -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def to_json(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}


def reduced_factor(shape: Shape) -> RatPoly:
    """``x prod(x+3n_i+1) - (4x+1) sum_i n_i prod_{j!=i}(x+3n_j+1)``."""
    return closed_forms.charpoly_quotient_delta(shape)


def _bisect(bracket: RootBracket) -> RootBracket:
    p, lo, hi = bracket.poly, bracket.lo, bracket.hi
    mid = (lo + hi) / 2
    s_mid = _sign(p(mid))
    if s_mid == 0:
        # exact hit: the root is interior, shrink symmetrically around it
        d = (hi - lo) / 8
        return RootBracket(p, mid - d, mid + d)
    if s_mid == _sign(p(lo)):
        return RootBracket(p, mid, hi)
    return RootBracket(p, lo, mid)


def refine(bracket: RootBracket, width_limit) -> RootBracket:
    width_limit = Fraction(width_limit)
    if width_limit <= 0:
        raise WidthNotPositive(f"width limit must be positive, got {width_limit}")
    while bracket.width > width_limit:
        bracket = _bisect(bracket)
    return bracket


def isolate_positive_root(poly: RatPoly, upper, width_limit=DEFAULT_WIDTH) -> RootBracket:
    """Bracket the root of ``poly`` in ``(0, upper)``; needs ``poly(0) < 0 < poly(upper)``."""
    lo, hi = Fraction(0), Fraction(upper)
    if not (poly(lo) < 0 < poly(hi)):
        raise InvalidParameters("polynomial does not change sign from - to + on [0, upper]")
    return refine(RootBracket(poly, lo, hi), width_limit)


def _initial_bracket(shape: Shape) -> RootBracket:
    # 4n exceeds every row sum of Delta, hence the spectral radius
    return RootBracket(reduced_factor(shape), Fraction(0), Fraction(4 * shape.n))


def spectral_radius(shape: Shape, width_limit=DEFAULT_WIDTH) -> RootBracket:
    width_limit = Fraction(width_limit)
    if width_limit <= 0:
        raise WidthNotPositive(f"width limit must be positive, got {width_limit}")
    return isolate_positive_root(reduced_factor(shape), 4 * shape.n, width_limit)


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _variations(seq: list[RatPoly], x) -> int:
    signs = [s for s in (_sign(q(x)) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(seq: list[RatPoly]) -> int:
    signs = [_sign(q.lead) for q in seq if not q.is_zero()]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: RatPoly, lo, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]`` (``hi=None`` means +inf)."""
    seq = sturm_sequence(p)
    upper = _variations_at_infinity(seq) if hi is None else _variations(seq, hi)
    return _variations(seq, lo) - upper


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def _shared_root_in(g: RatPoly, lo: Fraction, hi: Fraction) -> bool:
    if g.degree < 1 or lo > hi:
        return False
    if g(lo) == 0 or g(hi) == 0:
        return True
    return count_roots(g, lo, hi) > 0


def compare_rho(a: Shape, b: Shape, cap: int = COMPARE_CAP) -> Ordering:
    """Exact ordering of the spectral radii of ``Delta(a)`` and ``Delta(b)``."""
    if a.canonical() == b.canonical():
        return Ordering.EQUAL
    ba, bb = _initial_bracket(a), _initial_bracket(b)
    steps = 0
    while not ba.disjoint_from(bb):
        if ba.width >= bb.width:
            ba = _bisect(ba)
        else:
            bb = _bisect(bb)
        steps += 1
        if steps >= cap and steps % cap == 0:
            g = poly_gcd(ba.poly, bb.poly)
            if _shared_root_in(g, max(ba.lo, bb.lo), min(ba.hi, bb.hi)):
                return Ordering.EQUAL
    return Ordering.LESS if ba.hi < bb.lo else Ordering.GREATER


def _check_move(shape: Shape, p: int, q: int) -> None:
    if not (0 <= p < shape.b and 0 <= q < shape.b) or p == q:
        raise MovePreconditionViolated(f"invalid block indices p={p}, q={q} for {shape}")
    if shape.parts[p] - shape.parts[q] < 2:
        raise MovePreconditionViolated(
            f"need n_p - n_q >= 2, got {shape.parts[p]} - {shape.parts[q]}"
        )


def balancing_move(shape: Shape, p: int, q: int) -> Shape:
    """Move one vertex from block ``p`` to block ``q`` (0-based indices)."""
    _check_move(shape, p, q)
    parts = list(shape.parts)
    parts[p] -= 1
    parts[q] += 1
    return Shape(parts)


def _fg(parts, p: int, q: int, x: Fraction) -> Fraction:
    s = sum((Fraction(ni, 1) / (x + 3 * ni + 1) for ni in parts), Fraction(0))
    return (x + 3 * parts[p] + 1) * (x + 3 * parts[q] + 1) * (x - (4 * x + 1) * s)


def lemma_fg_values(shape: Shape, p: int, q: int, x) -> tuple[Fraction, Fraction]:
    """``(f(x), g(x))``: reduced factors of ``shape`` and of its balancing move,
    each divided by the common product over the untouched blocks."""
    _check_move(shape, p, q)
    x = Fraction(x)
    if x <= 0:
        raise NonPositiveSample(f"sample point must be positive, got {x}")
    moved = balancing_move(shape, p, q)
    return _fg(shape.parts, p, q, x), _fg(moved.parts, p, q, x)


def untouched_product(shape: Shape, p: int, q: int, x) -> Fraction:
    x = Fraction(x)
    return prod((x + 3 * ni + 1 for k, ni in enumerate(shape.parts) if k not in (p, q)), start=Fraction(1))


def _check_nb(n: int, b: int) -> None:
    if b < 2 or n < b + 1:
        raise InvalidParameters(f"need n >= b + 1 >= 3, got n={n}, b={b}")


def s1_shape(n: int, b: int) -> Shape:
    """One large block and ``b - 1`` pendant edges."""
    _check_nb(n, b)
    return Shape([n - b] + [1] * (b - 1))


def s2_shape(n: int, b: int) -> Shape:
    """The balanced composition of ``n - 1`` into ``b`` parts."""
    _check_nb(n, b)
    q, r = divmod(n - 1, b)
    return Shape([q + 1] * r + [q] * (b - r))


def _partitions(total: int, parts: int, largest: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - (parts - 1), largest), 0, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def enumerate_shapes(n: int, b: int) -> list[Shape]:
    """Canonical shapes with ``n`` vertices and ``b`` blocks, lexicographically descending."""
    if b < 1 or n < b + 1:
        raise InvalidParameters(f"need n >= b + 1 and b >= 1, got n={n}, b={b}")
    return [Shape(p) for p in _partitions(n - 1, b, n - 1)]


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    b: int
    shapes: list[tuple[Shape, RootBracket]]
    argmin_shape: Shape
    argmax_shape: Shape
    min_unique: bool
    max_unique: bool
    expected_min: Shape = field(default=None)
    expected_max: Shape = field(default=None)

    @property
    def matches_expected(self) -> bool:
        return (
            self.argmin_shape == self.expected_min
            and self.argmax_shape == self.expected_max
            and self.min_unique
            and self.max_unique
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "shapes": [
                {"shape": list(s.parts), "rho": br.to_json()} for s, br in self.shapes
            ],
            "argmin_shape": list(self.argmin_shape.parts),
            "argmax_shape": list(self.argmax_shape.parts),
            "min_unique": self.min_unique,
            "max_unique": self.max_unique,
        }


def extremal_report(n: int, b: int, width_limit=DEFAULT_WIDTH, mapper=map) -> ExtremalReport:
    """Spectral radius extremes over all shapes with ``n`` vertices and ``b`` blocks.

    ``mapper`` may be a parallel ``map``; results are consumed in enumeration
    order so the report does not depend on completion order.
    """
    _check_nb(n, b)
    width_limit = Fraction(width_limit)
    shapes = enumerate_shapes(n, b)
    brackets = list(mapper(spectral_radius, shapes, [width_limit] * len(shapes)))

    lo = hi = shapes[0]
    for s in shapes[1:]:
        if compare_rho(s, lo) is Ordering.LESS:
            lo = s
        if compare_rho(s, hi) is Ordering.GREATER:
            hi = s
    min_unique = all(compare_rho(lo, s) is Ordering.LESS for s in shapes if s != lo)
    max_unique = all(compare_rho(hi, s) is Ordering.GREATER for s in shapes if s != hi)
    return ExtremalReport(
        n, b, list(zip(shapes, brackets)), lo, hi, min_unique, max_unique,
        s1_shape(n, b), s2_shape(n, b),
    )

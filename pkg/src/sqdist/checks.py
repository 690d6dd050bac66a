"""Named invariant checks pairing each closed form with an independent oracle.

Closed forms are always looked up through their module (``closed_forms.f``,
``spectral.f``) so that a corrupted formula is seen by every check.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import closed_forms as cf
from . import graph
from . import linalg as la
from . import spectral as sp
from .errors import CofactorZero
from .graph import Shape

__all__ = [
    "fg_samples",
    "shape_checks",
    "run_shape_checks",
    "sweep_shapes",
    "laplacian_inertia",
    "family_check",
]

MIN_VERTICES = 3


def fg_samples(shape: Shape) -> list[Fraction]:
    return [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10), Fraction(4 * shape.n)]


def _eq(a, b) -> bool:
    return bool(np.all(np.asarray(a, dtype=object) == np.asarray(b, dtype=object)))


def _ones(k: int) -> np.ndarray:
    return np.array([Fraction(1)] * k, dtype=object)


def quotient_from_matrix(m, ranges) -> np.ndarray | None:
    """Block row-sum quotient of ``m``; ``None`` if the partition is not equitable."""
    a = la.as_rational(m)
    q = np.empty((len(ranges), len(ranges)), dtype=object)
    for i, ri in enumerate(ranges):
        for j, rj in enumerate(ranges):
            sums = {sum(a[u, rj.start:rj.stop], Fraction(0)) for u in ri}
            if len(sums) != 1:
                return None
            q[i, j] = sums.pop()
    return q


def _multiplicity_minus_one(p: la.RatPoly) -> int:
    k = 0
    x_plus_one = la.RatPoly.linear(1)
    while p.degree >= 1 and p(-1) == 0:
        p = la.poly_div_exact(p, x_plus_one)
        k += 1
    return k


def laplacian_inertia(shape: Shape) -> la.Inertia | None:
    """Inertia of the Laplacian-like matrix, or ``None`` where it is undefined."""
    try:
        lap = cf.laplacian_like(shape)
    except (CofactorZero, ValueError):
        return None
    return la.inertia_congruence(lap.l)


def shape_checks(shape: Shape, width_limit=sp.DEFAULT_WIDTH) -> Iterator[tuple[str, Callable[[], bool]]]:
    """Yield ``(name, thunk)`` for every invariant applicable to ``shape``."""
    n, b = shape.n, shape.b
    m = sum(shape.parts) - b
    part = shape.partition()
    delta = la.as_rational(graph.squared_distance_matrix(shape))
    d22 = la.as_rational(graph.delta22(shape))
    cache: dict = {}

    def oracle_charpoly():
        if "p" not in cache:
            cache["p"] = la.charpoly_exact(delta)
        return cache["p"]

    def delta_matches_bfs():
        dist = graph.bfs_distance_matrix(graph.build_adjacency(shape))
        return _eq(dist * dist, delta) and _eq(delta[1:, 1:], d22)

    def det_delta():
        d = la.det_bareiss(delta)
        return cf.det_delta_closed(shape) == d == (-1) ** n * oracle_charpoly()(0)

    def det_delta22():
        return cf.det_delta22_closed(shape) == la.det_bareiss(d22)

    def cof_delta():
        c = cf.cof_delta_closed(shape)
        return c == la.cof_sum_reduction(delta) == la.cof_sum_adjugate(delta)

    def cof_delta22():
        c = cf.cof_delta22_closed(shape)
        return c == la.cof_sum_reduction(d22) == la.cof_sum_adjugate(d22)

    def cof_zero_iff_path():
        is_path = shape.canonical().parts == (1, 1)
        return (la.cof_sum_adjugate(delta) == 0) == is_path == (cf.cof_delta_closed(shape) == 0)

    def charpoly_delta():
        return cf.charpoly_delta_closed(shape) == oracle_charpoly()

    def charpoly_delta22():
        return cf.charpoly_delta22_closed(shape) == la.charpoly_exact(d22)

    def quotient_matrices():
        q = cf.quotient_matrix_delta(shape)
        q22 = cf.quotient_matrix_delta22(shape)
        ranges = (range(0, 1),) + part.ranges
        return (
            _eq(quotient_from_matrix(delta, ranges), q)
            and _eq(quotient_from_matrix(d22, [range(r.start - 1, r.stop - 1) for r in part.ranges]), q22)
        )

    def charpoly_quotient_delta():
        return cf.charpoly_quotient_delta(shape) == la.charpoly_exact(cf.quotient_matrix_delta(shape))

    def charpoly_quotient_delta22():
        return cf.charpoly_quotient_delta22(shape) == la.charpoly_exact(cf.quotient_matrix_delta22(shape))

    def reduced_factor_divides():
        red = sp.reduced_factor(shape)
        quot = la.poly_div_exact(oracle_charpoly(), red)
        return quot == la.RatPoly.linear(1) ** m and red.degree == b + 1

    def reduced_factor_at_minus_one():
        return sp.reduced_factor(shape)(-1) != 0

    def minus_one_eigenbasis():
        basis = cf.minus_one_eigenbasis(shape)
        if len(basis) != m:
            return False
        for v in basis:
            v = np.array([Fraction(int(x)) for x in v], dtype=object)
            if v[0] != 0 or not _eq(delta @ v, -v) or not _eq(d22 @ v[1:], -v[1:]):
                return False
        return not basis or la.rank(np.array(basis)) == m

    def minus_one_multiplicity():
        return _multiplicity_minus_one(oracle_charpoly()) == m == _multiplicity_minus_one(
            la.charpoly_exact(d22)
        )

    def inertia_delta():
        return la.inertia_congruence(delta) == cf.inertia_delta_closed(shape)

    def inertia_delta22():
        return la.inertia_congruence(d22) == cf.inertia_delta22_closed(shape)

    def haynsworth():
        inv22 = la.inverse(d22)
        one = _ones(n - 1)
        schur = np.array([[-(one @ inv22 @ one)]], dtype=object)
        return la.inertia_congruence(delta) == la.inertia_congruence(d22) + la.inertia_congruence(schur)

    def quotient22_one_positive_root():
        return sp.count_roots(cf.charpoly_quotient_delta22(shape), 0) == 1

    def rho_bracket():
        br = sp.spectral_radius(shape, width_limit)
        full = cf.charpoly_delta_closed(shape)
        return (
            br.width <= width_limit
            and full(br.lo) * full(br.hi) < 0
            and br.poly(br.lo) * br.poly(br.hi) < 0
            and sp.count_roots(br.poly, 0) == 1
            and sp.count_roots(oracle_charpoly(), 0) == 1
            and sp.count_roots(br.poly, br.lo, br.hi) == 1
        )

    def single_block_minus_one():
        # a lone clique has -1 as a root of the quotient factor too
        red = sp.reduced_factor(shape)
        return red(-1) == 0 and _multiplicity_minus_one(oracle_charpoly()) == m + 1

    checks = [
        delta_matches_bfs, det_delta, det_delta22, cof_delta, cof_delta22, cof_zero_iff_path,
        charpoly_delta, charpoly_delta22, quotient_matrices, charpoly_quotient_delta,
        charpoly_quotient_delta22, reduced_factor_divides, minus_one_eigenbasis,
    ]
    if b >= 2:
        checks += [reduced_factor_at_minus_one, minus_one_multiplicity]
    else:
        checks += [single_block_minus_one]
    checks += [inertia_delta, inertia_delta22, haynsworth, quotient22_one_positive_root, rho_bracket]
    for fn in checks:
        yield fn.__name__, fn

    if b < 2:
        return
    if shape.canonical().parts == (1, 1):
        def inverse_undefined():
            try:
                cf.eta(shape)
            except CofactorZero:
                return cf.cof_delta_closed(shape) == 0
            return False

        yield "inverse_undefined", inverse_undefined
    else:
        yield from _inverse_checks(shape, delta)
    yield from _balancing_checks(shape)


def _inverse_checks(shape: Shape, delta: np.ndarray):
    n = shape.n
    one = _ones(n)

    def eta_eigen():
        e = cf.eta(shape).entries
        return _eq(delta @ e, cf.lambda_(shape) * one)

    def eta_sum_one():
        return sum(cf.eta(shape).entries, Fraction(0)) == 1

    def l_hat_zero_sums():
        lh = cf.laplacian_like(shape).l_hat
        zero = np.array([Fraction(0)] * n, dtype=object)
        return _eq(lh, lh.T) and _eq(lh @ one, zero) and _eq(one @ lh, zero)

    def l_delta_identity():
        lap = cf.laplacian_like(shape).l
        e = cf.eta(shape).entries
        return _eq(lap @ delta + la.identity(n), np.outer(e, one))

    def inverse_closed():
        inv = cf.delta_inverse_closed(shape)
        eye = la.identity(n)
        return _eq(delta @ inv, eye) and _eq(inv @ delta, eye) and _eq(inv, la.inverse(delta))

    def laplacian_rank():
        return la.rank(cf.laplacian_like(shape).l) == n - 1

    def laplacian_cofactors():
        c = cf.cofactor_constant(shape)
        return all(x == c for x in la.cofactor_matrix(cf.laplacian_like(shape).l).flat)

    def laplacian_nullity():
        return la.inertia_congruence(cf.laplacian_like(shape).l).n_zero == 1

    for fn in (eta_eigen, eta_sum_one, l_hat_zero_sums, l_delta_identity, inverse_closed,
               laplacian_rank, laplacian_cofactors, laplacian_nullity):
        yield fn.__name__, fn


def _moves(shape: Shape):
    parts = shape.parts
    for p in range(shape.b):
        for q in range(shape.b):
            if parts[p] - parts[q] >= 2:
                yield p, q


def _balancing_checks(shape: Shape):
    moves = list(_moves(shape))
    if not moves:
        return

    def balancing_increases_rho():
        return all(
            sp.compare_rho(shape, sp.balancing_move(shape, p, q)) is sp.Ordering.LESS
            for p, q in moves
        )

    def fg_gap():
        red = sp.reduced_factor(shape)
        moved_red = {pq: sp.reduced_factor(sp.balancing_move(shape, *pq)) for pq in moves}
        for p, q in moves:
            for x in fg_samples(shape):
                f, g = sp.lemma_fg_values(shape, p, q, x)
                rest = sp.untouched_product(shape, p, q, x)
                if not (f > g and f * rest == red(x) and g * rest == moved_red[p, q](x)):
                    return False
        return True

    yield "balancing_increases_rho", balancing_increases_rho
    yield "fg_gap", fg_gap


def run_shape_checks(shape: Shape, width_limit=sp.DEFAULT_WIDTH) -> dict[str, bool]:
    """Evaluate every applicable check; an exception counts as a failure."""
    out = {}
    for name, fn in shape_checks(shape, width_limit):
        try:
            out[name] = bool(fn())
        except Exception:  # noqa: BLE001 - a crashing check is a failing check
            out[name] = False
    return out


def sweep_shapes(max_n: int) -> list[Shape]:
    """Canonical shapes with ``3 <= n <= max_n``, ordered by ``n``, then ``b``,
    then lexicographically descending."""
    return [
        s
        for n in range(MIN_VERTICES, max_n + 1)
        for b in range(1, n)
        for s in sp.enumerate_shapes(n, b)
    ]


def family_check(n: int, b: int, width_limit=sp.DEFAULT_WIDTH) -> bool:
    try:
        return sp.extremal_report(n, b, width_limit).matches_expected
    except Exception:  # noqa: BLE001
        return False


def tally(results: list[dict[str, bool]]) -> dict[str, tuple[int, int]]:
    """Per-check ``(passed, applicable)`` counts, in first-seen order."""
    passed, seen = Counter(), {}
    for r in results:
        for name, ok in r.items():
            seen.setdefault(name, 0)
            seen[name] += 1
            passed[name] += ok
    return {name: (passed[name], total) for name, total in seen.items()}

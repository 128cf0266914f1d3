"""Power sums of squared vertex distances and their closed form.

For a regular n-gon with circumradius R and a probe point at distance L from
the centroid, the sum of the 2m-th powers of the vertex distances depends only
on (n, R, L) for every order m up to n-1:

    sum_i d_i^(2m) = n * [ (R^2+L^2)^m
                           + sum_k C(m,2k) C(2k,k) R^(2k) L^(2k) (R^2+L^2)^(m-2k) ]

with k running from 1 to floor(m/2).  The helpers here evaluate both sides,
convert power sums to elementary symmetric functions (Newton's identities),
and decide multiset equality of squared-distance lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .geom import DEFAULT_TOLERANCE, GeometryError, Point, Tolerance
from .polygon import RegularPolygon


class OrderOutOfRangeError(GeometryError):
    pass


class LengthMismatchError(GeometryError):
    pass


@dataclass(frozen=True)
class DistanceMultiset:
    """Squared distances from one probe point to a list of labelled vertices."""

    squared: tuple[float, ...]
    source: Point
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.squared)


def distances_squared(vertices: Sequence[Point], point: Point) -> DistanceMultiset:
    squared = tuple(point.distance_squared(v) for v in vertices)
    return DistanceMultiset(squared, point, tuple(range(1, len(squared) + 1)))


def _values(data: DistanceMultiset | Iterable[float]) -> tuple[float, ...]:
    if isinstance(data, DistanceMultiset):
        return data.squared
    return tuple(data)


def power_sum(data: DistanceMultiset | Iterable[float], order: int) -> float:
    """Direct evaluation of ``sum(x ** order)`` over the squared distances."""
    if order < 1:
        raise OrderOutOfRangeError(f"order must be >= 1, got {order}")
    return sum(x ** order for x in _values(data))


def power_sums_vector(
    data: DistanceMultiset | Iterable[float], max_order: int
) -> tuple[float, ...]:
    """Power sums of all orders 1..max_order, computed incrementally."""
    if max_order < 1:
        raise OrderOutOfRangeError(f"max_order must be >= 1, got {max_order}")
    values = _values(data)
    running = list(values)
    sums = []
    for _ in range(max_order):
        sums.append(sum(running))
        running = [r * v for r, v in zip(running, values)]
    return tuple(sums)


def power_sum_closed_form(n: int, circumradius: float, center_distance: float, order: int) -> float:
    """Closed form of the order-m power sum; valid only for 1 <= m <= n-1."""
    if n < 3:
        raise GeometryError(f"need n >= 3, got {n}")
    if not 1 <= order <= n - 1:
        raise OrderOutOfRangeError(
            f"order {order} outside the valid range 1..{n - 1} for n={n}"
        )
    if circumradius < 0.0 or center_distance < 0.0:
        raise GeometryError("radius and center distance must be non-negative")
    rr = circumradius * circumradius
    ll = center_distance * center_distance
    s = rr + ll
    total = s ** order
    for k in range(1, order // 2 + 1):
        total += math.comb(order, 2 * k) * math.comb(2 * k, k) * rr ** k * ll ** k * s ** (order - 2 * k)
    return n * total


@dataclass(frozen=True)
class PowerSumCheck:
    order: int
    direct: float
    closed_form: float
    residual: float
    ok: bool


@dataclass(frozen=True)
class PowerSumIdentityReport:
    checks: tuple[PowerSumCheck, ...]
    max_residual: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_power_sum_identity(
    poly: RegularPolygon,
    point: Point,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_order: int | None = None,
) -> PowerSumIdentityReport:
    """Compare direct power sums against the closed form for m = 1..n-1.

    Residuals are relative: |direct - closed| / max(direct, closed).  Both
    sides are sums of non-negative terms, so no cancellation is possible and
    the comparison is meaningful at machine precision.
    """
    n = poly.n
    top = n - 1 if max_order is None else max_order
    if not 1 <= top <= n - 1:
        raise OrderOutOfRangeError(f"max_order {top} outside 1..{n - 1} for n={n}")
    squared = distances_squared(poly.vertices(), point).squared
    center_distance = point.distance(poly.centroid)
    running = list(squared)
    checks = []
    worst = 0.0
    for order in range(1, top + 1):
        direct = sum(running)
        running = [r * v for r, v in zip(running, squared)]
        closed = power_sum_closed_form(n, poly.circumradius, center_distance, order)
        residual = abs(direct - closed) / max(abs(direct), abs(closed), 1e-300)
        worst = max(worst, residual)
        checks.append(PowerSumCheck(order, direct, closed, residual, tol.eq(direct, closed)))
    return PowerSumIdentityReport(tuple(checks), worst)


def power_sums_to_elementary(power_sums: Sequence[float]) -> tuple[float, ...]:
    """Elementary symmetric functions e_1..e_K from power sums p_1..p_K.

    Uses the triangular recurrence ``m e_m = sum_{i=1}^{m} (-1)^(i-1) e_{m-i} p_i``
    with e_0 = 1.
    """
    p = tuple(power_sums)
    e = [1.0]
    for m in range(1, len(p) + 1):
        acc = 0.0
        for i in range(1, m + 1):
            term = e[m - i] * p[i - 1]
            acc += term if i % 2 == 1 else -term
        e.append(acc / m)
    return tuple(e[1:])


@dataclass(frozen=True)
class MultisetMatch:
    """Outcome of comparing two squared-distance multisets.

    ``permutation`` is 1-based: entry i of the first list pairs with entry
    ``permutation[i-1]`` of the second.  The Newton cross-check recomputes the
    comparison through elementary symmetric functions; it is reported but the
    sorted pairwise comparison is the decision.
    """

    equal: bool
    permutation: tuple[int, ...] | None
    max_residual: float
    newton_consistent: bool


def multisets_equal(
    first: DistanceMultiset | Iterable[float],
    second: DistanceMultiset | Iterable[float],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> MultisetMatch:
    a = _values(first)
    b = _values(second)
    if len(a) != len(b):
        raise LengthMismatchError(f"multiset sizes differ: {len(a)} vs {len(b)}")
    size = len(a)
    if size == 0:
        return MultisetMatch(True, (), 0.0, True)
    scale = max(max(abs(x) for x in a), max(abs(x) for x in b))
    order_a = sorted(range(size), key=lambda i: (a[i], i))
    order_b = sorted(range(size), key=lambda i: (b[i], i))
    slack = tol.bound(scale)
    worst = 0.0
    permutation = [0] * size
    equal = True
    for ia, ib in zip(order_a, order_b):
        gap = abs(a[ia] - b[ib])
        worst = max(worst, gap)
        if gap > slack:
            equal = False
        permutation[ia] = ib + 1

    if scale == 0.0:
        return MultisetMatch(equal, tuple(permutation) if equal else None, worst, True)
    norm_a = [x / scale for x in a]
    norm_b = [x / scale for x in b]
    ea = power_sums_to_elementary(power_sums_vector(norm_a, size))
    eb = power_sums_to_elementary(power_sums_vector(norm_b, size))
    # Normalized entries are at most 1 in magnitude, so e_m is bounded by
    # C(size, m); judge each coefficient against that scale.
    newton_consistent = all(
        abs(x - y) <= tol.bound(max(1.0, math.comb(size, m + 1)))
        for m, (x, y) in enumerate(zip(ea, eb))
    )
    return MultisetMatch(equal, tuple(permutation) if equal else None, worst, newton_consistent)


@dataclass(frozen=True)
class PowerSumComparison:
    order: int
    first: float
    second: float
    residual: float
    ok: bool


@dataclass(frozen=True)
class PowerSumsReport:
    """Order-by-order comparison of two squared-distance lists."""

    comparisons: tuple[PowerSumComparison, ...]
    max_residual: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.comparisons)

    def failing_orders(self) -> tuple[int, ...]:
        return tuple(c.order for c in self.comparisons if not c.ok)


def compare_power_sums(
    first: DistanceMultiset | Iterable[float],
    second: DistanceMultiset | Iterable[float],
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_order: int | None = None,
) -> PowerSumsReport:
    """Check p_m(first) == p_m(second) for m = 1..max_order (default: size-1).

    Entries are normalized by the joint maximum before exponentiation, which
    keeps high orders away from overflow and makes the residuals comparable
    across scales.
    """
    a = _values(first)
    b = _values(second)
    if len(a) != len(b):
        raise LengthMismatchError(f"multiset sizes differ: {len(a)} vs {len(b)}")
    top = (len(a) - 1) if max_order is None else max_order
    if top < 1:
        raise OrderOutOfRangeError(f"need at least order 1, got max_order={top}")
    scale = max((abs(x) for x in (*a, *b)), default=0.0)
    if scale == 0.0:
        comparisons = tuple(PowerSumComparison(m, 0.0, 0.0, 0.0, True) for m in range(1, top + 1))
        return PowerSumsReport(comparisons, 0.0)
    norm_a = [x / scale for x in a]
    norm_b = [x / scale for x in b]
    run_a = list(norm_a)
    run_b = list(norm_b)
    comparisons = []
    worst = 0.0
    for order in range(1, top + 1):
        pa = sum(run_a)
        pb = sum(run_b)
        run_a = [r * v for r, v in zip(run_a, norm_a)]
        run_b = [r * v for r, v in zip(run_b, norm_b)]
        residual = abs(pa - pb) / max(abs(pa), abs(pb), 1.0)
        worst = max(worst, residual)
        comparisons.append(PowerSumComparison(order, pa, pb, residual, tol.eq_at(pa, pb, max(abs(pa), abs(pb), 1.0))))
    return PowerSumsReport(tuple(comparisons), worst)

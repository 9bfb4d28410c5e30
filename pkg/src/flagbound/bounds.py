"""Dimension-bound inequalities and the uniform constant N0."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Sequence, Tuple

from .building import parabolic_stats
from .polygon import AdjointPolygon, adjoint_polygon, product_polygon
from .root_data import RootDatum


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class BoundProblem:
    polygon: AdjointPolygon
    dim_flag_bar: int
    dim_p_ss_bar: int
    rank_bar: int
    n: int
    dim_centralizer: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise BoundsError(f"n must be >= 1, got {self.n}")
        if self.dim_centralizer < 0:
            raise BoundsError(f"dim C must be >= 0, got {self.dim_centralizer}")


def bound_problem(datum: RootDatum, x: Sequence, n: int, dim_centralizer: int = 0) -> BoundProblem:
    st = parabolic_stats(datum, x)
    return BoundProblem(adjoint_polygon(datum, x), st.dim_flag, st.dim_p_ss, st.rank,
                        n, dim_centralizer)


def theorem_inequalities(bp: BoundProblem) -> bool:
    shift = Fraction(bp.dim_p_ss_bar - bp.rank_bar, 2)
    a, b = Fraction(bp.n - 1), bp.n - 1 + shift
    for t in (a, b):
        if not 0 <= t <= bp.polygon.dim:
            raise BoundsError(
                f"polygon evaluated at {t}, outside its domain [0, {bp.polygon.dim}] "
                f"(n={bp.n}, (dim P^ss - rk)/2={shift})"
            )
    if bp.n > bp.dim_flag_bar:
        return False
    p = bp.polygon
    return p(a) + p(b) < p.max_value()


def codim_conclusion(bp: BoundProblem) -> int:
    if not theorem_inequalities(bp):
        raise BoundsError("the inequalities fail for this problem; no codimension bound")
    return bp.n - bp.dim_centralizer


def ss_inequality(dim_h: int, rank_h: int, dim_p_ss: int) -> bool:
    return 2 * dim_p_ss < dim_h + rank_h


@dataclass(frozen=True)
class UniformProblem:
    slopes_allowed: FrozenSet[Fraction]
    n: int
    dim_h: int
    h_polygon: AdjointPolygon
    h_flag_dim: int
    h_p_ss: int
    h_rank: int

    def __post_init__(self):
        allowed = frozenset(Fraction(s) for s in self.slopes_allowed)
        object.__setattr__(self, "slopes_allowed", allowed)
        if self.n < 1:
            raise BoundsError(f"n must be >= 1, got {self.n}")
        if self.h_polygon.dim != self.dim_h:
            raise BoundsError(f"polygon has domain {self.h_polygon.dim}, group has dim {self.dim_h}")
        diffs = {a - b for a in allowed for b in allowed} | {Fraction(0)}
        stray = sorted(set(self.h_polygon.slopes) - diffs)
        if stray:
            raise BoundsError(f"slopes {[str(s) for s in stray]} are not differences of the allowed set")

    @property
    def shift(self) -> Fraction:
        return Fraction(self.h_p_ss - self.h_rank, 2)


def uniform_problem(datum: RootDatum, y: Sequence, n: int,
                    slopes_allowed: Optional[Sequence] = None) -> UniformProblem:
    """Problem for H = datum at y; default allowed set is {0} and the +/- entries of y."""
    y = datum.check_point(y)
    if slopes_allowed is None:
        slopes_allowed = {Fraction(0)} | set(y) | {-v for v in y}
    st = parabolic_stats(datum, y)
    return UniformProblem(frozenset(slopes_allowed), n, datum.dim_group,
                          adjoint_polygon(datum, y), st.dim_flag, st.dim_p_ss, st.rank)


def conditions_at(up: UniformProblem, N: int) -> Tuple[bool, bool]:
    """The two sufficient conditions with eps = (n-1)/N."""
    eps = Fraction(up.n - 1, N)
    first = eps + Fraction(1, N) <= up.h_flag_dim
    second_arg = eps + up.shift
    p = up.h_polygon
    if second_arg > p.dim:
        return first, False
    second = p(eps) + p(second_arg) < p.max_value()
    return first, second


def conditions_hold(up: UniformProblem, N: int) -> bool:
    return all(conditions_at(up, N))


def n0_certificate(up: UniformProblem) -> Optional[int]:
    """An N at which both conditions provably hold, or None if no N exists."""
    if up.h_flag_dim == 0 or not ss_inequality(up.dim_h, up.h_rank, up.h_p_ss):
        return None
    p = up.h_polygon
    gap = p.max_value() - p(up.shift)
    if gap <= 0:
        return None
    # p(eps) + p(eps + shift) <= p(shift) + 2 * s_max * eps, so any
    # eps < gap / (2 s_max) satisfies the second condition.
    s_max = p.slopes[0]
    n_first = -(-up.n // up.h_flag_dim)
    n_second = math.floor((up.n - 1) * 2 * s_max / gap) + 1
    return max(n_first, n_second, 1)


def n0_search(up: UniformProblem) -> Optional[int]:
    """Minimal N >= 1 with both conditions, or None when no N works.

    Once the first condition holds both polygon arguments stay in [0, dim P],
    where the polygon is nondecreasing, so the conjunction is monotone in N
    and bisection below the certificate is exact.
    """
    hi = n0_certificate(up)
    if hi is None:
        return None
    if not conditions_hold(up, hi):
        raise AssertionError(f"certificate N={hi} fails; monotonicity argument broken")
    lo = 0  # conditions fail at lo (N=0 is a sentinel)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if conditions_hold(up, mid):
            hi = mid
        else:
            lo = mid
    return hi


def power_problem(up: UniformProblem, N: int) -> BoundProblem:
    """Theorem inputs for H^N at the diagonal point."""
    return BoundProblem(
        polygon=product_polygon([up.h_polygon] * N),
        dim_flag_bar=N * up.h_flag_dim,
        dim_p_ss_bar=N * up.h_p_ss,
        rank_bar=N * up.h_rank,
        n=up.n,
    )


def lv_parameters(dim_base: int, dim_h: int) -> Tuple[int, int]:
    """(n, dim C bound) for the Hodge application: n = dim base + dim H, dim C <= dim H."""
    return dim_base + dim_h, dim_h

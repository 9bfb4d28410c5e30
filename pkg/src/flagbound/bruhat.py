"""Bruhat representatives W_{Q,P}, fiber root sets and fiber codimensions."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

from .building import parabolic_stats
from .positivity import StandardParabolic, point_parabolic, positivity_pairing
from .root_data import (
    RootDatum,
    RootDataError,
    RootVector,
    WeylElement,
    is_positive_root,
    pairing,
    simple_reflection,
    weyl_elements,
)

INFINITE = math.inf


@dataclass(frozen=True)
class BruhatCell:
    w: WeylElement
    fiber_roots: FrozenSet[RootVector]
    is_positive: bool
    pairing: Fraction

    @property
    def cell_fiber_dim(self) -> int:
        return len(self.fiber_roots)


def _check_same(datum: RootDatum, *parabolics: StandardParabolic) -> None:
    for q in parabolics:
        if q.datum != datum:
            raise RootDataError(f"parabolic of {q.datum.family} used with {datum.family}")


def weyl_subgroup(datum: RootDatum, simple_subset) -> FrozenSet[WeylElement]:
    """Parabolic subgroup W_Q generated by the given simple reflections."""
    gens = [simple_reflection(datum, i) for i in sorted(simple_subset)]
    e = WeylElement.identity(datum.coords)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def _levi_simple(q: StandardParabolic) -> List[RootVector]:
    # Delta_Q = (-Phi_Q) intersect Delta_G
    return [q.datum.simple_roots[i] for i in sorted(q.simple_subset)]


def bruhat_reps(datum: RootDatum, q: StandardParabolic, p: StandardParabolic) -> List[WeylElement]:
    """Weyl elements with w.Delta_P and w^{-1}.Delta_Q made of positive roots."""
    _check_same(datum, q, p)
    dp, dq = _levi_simple(p), _levi_simple(q)
    out = []
    for w in weyl_elements(datum):
        if not all(is_positive_root(w(a)) for a in dp):
            continue
        winv = w.inverse()
        if all(is_positive_root(winv(a)) for a in dq):
            out.append(w)
    return out


def fiber_roots(datum: RootDatum, q: StandardParabolic, p: StandardParabolic,
                w: WeylElement) -> FrozenSet[RootVector]:
    """Roots chi outside Phi_Q with -w^{-1}chi outside Phi_P."""
    winv = w.inverse()
    return frozenset(
        chi for chi in q.outside_roots
        if tuple(-c for c in winv(chi)) not in p.phi_q
    )


def _check_point_parabolic(datum: RootDatum, p: StandardParabolic, x) -> None:
    px = point_parabolic(datum, x)
    if px.simple_subset != p.simple_subset:
        raise RootDataError(
            f"parabolic {p.label()} does not match the zero pattern of the point "
            f"(expected simple roots {px.label()})"
        )


def positive_reps(datum: RootDatum, q: StandardParabolic, p: StandardParabolic,
                  x: Sequence, threads: int = 1) -> List[BruhatCell]:
    x = datum.check_point(x)
    _check_same(datum, q, p)
    _check_point_parabolic(datum, p, x)

    def cell(w: WeylElement) -> BruhatCell:
        val = positivity_pairing(datum, q, w(x))
        return BruhatCell(w, fiber_roots(datum, q, p, w), val >= 0, val)

    reps = bruhat_reps(datum, q, p)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(cell, reps))
    return [cell(w) for w in reps]


def fiber_codimension(datum: RootDatum, x: Sequence, q: StandardParabolic,
                      threads: int = 1):
    """Minimum of dim G/P - |Phi^w_{Q,P}| over Q-positive cells; INFINITE if none."""
    p = point_parabolic(datum, x)
    dim_flag = parabolic_stats(datum, x).dim_flag
    cells = [c for c in positive_reps(datum, q, p, x, threads) if c.is_positive]
    if not cells:
        return INFINITE
    return min(dim_flag - c.cell_fiber_dim for c in cells)


def modular_inequality_sides(datum: RootDatum, q: StandardParabolic, p: StandardParabolic,
                             w: WeylElement, x: Sequence) -> Tuple[Fraction, Fraction]:
    """Both sides of the rewritten positivity inequality for the cell of ``w``."""
    x = datum.check_point(x)
    winv = w.inverse()
    fib = fiber_roots(datum, q, p, w)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for chi in q.outside_roots:
        v = pairing(x, winv(chi))
        if chi in fib:
            rhs += v
        else:
            lhs -= v
    return lhs, rhs

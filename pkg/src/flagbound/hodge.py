"""Hodge-number front end: profiles, the skull inequality, the numerical
condition, and the group/point fed into the uniform bound."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .bounds import n0_search, ss_inequality, uniform_problem, lv_parameters
from .building import ParabolicStats, parabolic_stats
from .root_data import ApartmentPoint, GroupFamily, build_root_datum


class HodgeError(ValueError):
    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class HodgeProfile:
    d: int
    h: Tuple[int, ...]
    symmetric: bool = False

    def __post_init__(self):
        h = tuple(int(v) for v in self.h)
        object.__setattr__(self, "h", h)
        if self.d < 0:
            raise HodgeError(f"dimension must be >= 0, got {self.d}")
        if len(h) != self.d + 1:
            raise HodgeError(f"need {self.d + 1} Hodge numbers for d={self.d}, got {len(h)}")
        for p, v in enumerate(h):
            if v < 0:
                raise HodgeError(f"h_{p} = {v} is negative", p)
        for p in range(self.d + 1):
            if h[p] != h[self.d - p]:
                raise HodgeError(f"h_{p} = {h[p]} but h_{self.d - p} = {h[self.d - p]}", p)
        if sum(h) == 0:
            raise HodgeError("all Hodge numbers vanish")

    @property
    def e(self) -> int:
        return sum(self.h)

    @property
    def chi_top(self) -> int:
        return (-1) ** self.d * self.e

    def chis(self) -> Tuple[int, ...]:
        """chi(X, Omega^p) recovered from the profile."""
        return tuple((-1) ** (self.d - p) * v for p, v in enumerate(self.h))


def profile_from_chis(d: int, chis: Sequence[int], symmetric: bool = False) -> HodgeProfile:
    if len(chis) != d + 1:
        raise HodgeError(f"need {d + 1} Euler characteristics for d={d}, got {len(chis)}")
    return HodgeProfile(d, tuple((-1) ** (d - p) * c for p, c in enumerate(chis)), symmetric)


def skull_check(p: HodgeProfile) -> Tuple[bool, int]:
    """Verdict of 2 sum h_p^2 <= e^2 and the value of 2 sum h_p^2 - e^2."""
    # Kunneth plus Serre symmetry: chi(X x X, Omega^d) = sum h_p h_{d-p} = sum h_p^2.
    q = 2 * sum(v * v for v in p.h) - p.e**2
    return q <= 0, q


@dataclass(frozen=True)
class ConditionInput:
    d: int
    g: int
    chi_top_bar: int
    chi_o_bar: int
    symmetric: bool


def numerical_condition(c: ConditionInput) -> Tuple[bool, Optional[str]]:
    if not c.symmetric:
        return True, None
    top = abs(c.chi_top_bar)
    if top == 56 and c.d == 3 and c.g in (8, 9) and c.chi_o_bar == -7:
        return False, "56"
    if 4 * c.d >= c.g - 1:
        for m in range(3, c.d + 1):
            if (m - c.d) % 2 == 0 and top == 2 ** (2 * m - 1):
                return False, f"2^(2m-1), m={m}"
    return True, None


def quotient_characteristics(chi_top: int, chi_o: int, stab_order: int) -> Tuple[int, int]:
    if stab_order < 1:
        raise ValueError(f"stabilizer order must be positive, got {stab_order}")
    for name, v in (("chi_top", chi_top), ("chi_O", chi_o)):
        if v % stab_order:
            raise ValueError(f"stabilizer order {stab_order} does not divide {name} = {v}")
    return chi_top // stab_order, chi_o // stab_order


def hodge_filtration_dims(p: HodgeProfile) -> List[int]:
    """dim F^i for i = 0..d+1."""
    return [sum(p.h[i:]) for i in range(p.d + 2)]


def lv_group_and_point(p: HodgeProfile) -> Tuple[GroupFamily, ApartmentPoint]:
    e, d = p.e, p.d
    if not p.symmetric:
        y = [Fraction(a) for a in range(d, -1, -1) for _ in range(p.h[a])]
        return GroupFamily("gl", e), tuple(y)
    fam = GroupFamily("go" if d % 2 == 0 else "gsp", e)
    half = Fraction(d, 2)
    upper = [Fraction(a) - half for a in range(d, -1, -1) if a > half for _ in range(p.h[a])]
    if d % 2 == 0:
        mid = p.h[d // 2]
        assert mid % 2 == e % 2, "middle Hodge number parity disagrees with e"
    assert len(upper) <= fam.coords
    y = upper + [Fraction(0)] * (fam.coords - len(upper))
    return fam, tuple(y)


@dataclass(frozen=True)
class LVReport:
    profile: HodgeProfile
    family: GroupFamily
    point: ApartmentPoint
    stats: ParabolicStats
    dim_h: int
    skull: bool
    skull_q: int
    ss: bool
    n: int
    n0: Optional[int]

    @property
    def implication_holds(self) -> bool:
        return self.ss or not self.skull

    @property
    def ok(self) -> bool:
        return self.skull and self.ss and self.n0 is not None


def lv_pipeline(p: HodgeProfile, dim_base: int = 0) -> LVReport:
    if dim_base < 0:
        raise ValueError(f"base dimension must be >= 0, got {dim_base}")
    fam, y = lv_group_and_point(p)
    datum = build_root_datum(fam)
    st = parabolic_stats(datum, y)
    skull, q = skull_check(p)
    ss = ss_inequality(datum.dim_group, datum.rank, st.dim_p_ss)
    n, _ = lv_parameters(dim_base, datum.dim_group)
    n0 = None
    if skull and ss:
        n0 = n0_search(uniform_problem(datum, y, n, slopes_allowed=range(p.d + 1)))
    return LVReport(p, fam, y, st, datum.dim_group, skull, q, ss, n, n0)


def enumerate_profiles(d_max: int, e_max: int) -> Iterator[HodgeProfile]:
    """All Serre-symmetric profiles with d <= d_max and 1 <= e <= e_max, both symmetry flags."""
    for d in range(d_max + 1):
        free = d // 2 + 1
        for head in itertools.product(range(e_max + 1), repeat=free):
            h = list(head) + list(reversed(head[: (d + 1) - free]))
            if not 1 <= sum(h) <= e_max:
                continue
            for sym in (False, True):
                yield HodgeProfile(d, tuple(h), sym)


@dataclass(frozen=True)
class SurfaceInvariants:
    c1sq: int
    chi_o: int
    hilbert: Tuple[Fraction, Fraction, Fraction]  # coefficients of n^2, n, 1

    def hilbert_at(self, n: int) -> Fraction:
        a, b, c = self.hilbert
        return a * n * n + b * n + c


def surface_hilbert(c2: int) -> List[SurfaceInvariants]:
    """Candidate (c1^2, chi(O)) with 1 <= c1^2 <= 3 c2 and 12 | c1^2 + c2."""
    if c2 < 1:
        raise ValueError(f"c2 must be >= 1, got {c2}")
    out = []
    for c1sq in range(1, 3 * c2 + 1):
        if (c1sq + c2) % 12:
            continue
        chi_o = (c1sq + c2) // 12
        half = Fraction(c1sq, 2)
        out.append(SurfaceInvariants(c1sq, chi_o, (half, -half, Fraction(chi_o))))
    return out

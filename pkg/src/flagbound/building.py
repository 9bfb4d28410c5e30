"""Building points as apartment points and rational-indexed filtrations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .root_data import (
    ApartmentPoint,
    RootDatum,
    RootDataError,
    WeylElement,
    pairing,
)


@dataclass(frozen=True)
class Filtration:
    """Filtration recorded as ``(slope, multiplicity)`` steps, slopes strictly decreasing."""

    steps: Tuple[Tuple[Fraction, int], ...]

    def __post_init__(self):
        steps = tuple((Fraction(a), int(m)) for a, m in self.steps)
        object.__setattr__(self, "steps", steps)
        for (a, _), (b, _) in zip(steps, steps[1:]):
            if not a > b:
                raise ValueError(f"filtration slopes must strictly decrease: {a} then {b}")
        if any(m < 1 for _, m in steps):
            raise ValueError("filtration multiplicities must be positive")

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.steps)

    def step_dim(self, alpha) -> int:
        """Dimension of the filtration step of index ``alpha``."""
        alpha = Fraction(alpha)
        return sum(m for a, m in self.steps if a >= alpha)

    def slopes(self) -> Tuple[Fraction, ...]:
        """All slopes with multiplicity, nonincreasing."""
        return tuple(a for a, m in self.steps for _ in range(m))

    @classmethod
    def from_slopes(cls, values: Sequence) -> "Filtration":
        counts = Counter(Fraction(v) for v in values)
        return cls(tuple(sorted(counts.items(), reverse=True)))


@dataclass(frozen=True)
class ParabolicStats:
    dim_p: int
    dim_p_ss: int
    dim_rad_p: int
    dim_flag: int
    rank: int

    def to_json(self) -> dict:
        return {
            "dim_p": self.dim_p,
            "dim_p_ss": self.dim_p_ss,
            "dim_rad_p": self.dim_rad_p,
            "dim_flag": self.dim_flag,
            "rank": self.rank,
        }


def is_dominant(datum: RootDatum, x: Sequence) -> bool:
    return all(pairing(x, a) >= 0 for a in datum.simple_roots)


def dominant_representative(datum: RootDatum, x: Sequence) -> Tuple[ApartmentPoint, WeylElement]:
    """Move ``x`` into the closed dominant chamber.

    Negative entries are sign-flipped first (GSp/GO), then a stable
    descending sort fixes the permutation. For type D an odd number of flips
    is repaired on a zero entry if there is one, else on the entry that lands
    last.
    """
    x = datum.check_point(x)
    n = datum.coords
    t = datum.family.cartan_type
    if t == "A":
        signs = [1] * n
        keys = list(x)
    else:
        signs = [-1 if v < 0 else 1 for v in x]
        keys = [abs(v) for v in x]
    order = sorted(range(n), key=lambda i: -keys[i])  # stable
    perm = [0] * n
    for pos, src in enumerate(order):
        perm[src] = pos
    if t == "D" and signs.count(-1) % 2:
        zero = next((i for i in range(n) if x[i] == 0), None)
        fix = zero if zero is not None else order[-1]
        signs[fix] = -signs[fix]
    w = WeylElement(tuple(perm), tuple(signs))
    return w(x), w


def filtration_of_point(datum: RootDatum, x: Sequence) -> Filtration:
    if datum.family.kind != "gl":
        raise RootDataError(
            f"{datum.family}: filtrations of points are only defined here for GL"
        )
    return Filtration.from_slopes(datum.check_point(x))


def weight(f: Filtration) -> Fraction:
    if not f.steps:
        raise ValueError("weight of an empty filtration")
    return sum((a * m for a, m in f.steps), Fraction(0)) / f.dim


def is_self_dual(f: Filtration, c) -> bool:
    c = Fraction(c)
    return dict(f.steps) == {c - a: m for a, m in f.steps}


def parabolic_stats(datum: RootDatum, x: Sequence) -> ParabolicStats:
    x = datum.check_point(x)
    pos = zero = neg = 0
    for chi in datum.roots:
        v = pairing(x, chi)
        if v > 0:
            pos += 1
        elif v < 0:
            neg += 1
        else:
            zero += 1
    dim_p_ss = datum.dim_torus + zero
    return ParabolicStats(
        dim_p=dim_p_ss + pos,
        dim_p_ss=dim_p_ss,
        dim_rad_p=pos,
        dim_flag=neg,
        rank=datum.rank,
    )

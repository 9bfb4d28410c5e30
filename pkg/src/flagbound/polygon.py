"""Filtration polygons and the adjoint polygon, stored as slope multisets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, List, Sequence, Tuple

from .building import Filtration
from .root_data import RootDatum, pairing


def _polygon_at(slopes: Sequence[Fraction], prefix: Sequence[Fraction], t) -> Fraction:
    t = Fraction(t)
    if t < 0 or t > len(slopes):
        raise ValueError(f"polygon argument {t} outside [0, {len(slopes)}]")
    k = math.floor(t)
    value = prefix[k]
    if k < len(slopes):
        value += slopes[k] * (t - k)
    return value


def filtration_polygon(f: Filtration, t) -> Fraction:
    slopes = f.slopes()
    return _polygon_at(slopes, [Fraction(0), *accumulate(slopes)], t)


@dataclass(frozen=True)
class AdjointPolygon:
    slopes: Tuple[Fraction, ...]
    _prefix: Tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        slopes = tuple(sorted((Fraction(s) for s in self.slopes), reverse=True))
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(self, "_prefix", (Fraction(0), *accumulate(slopes)))

    @property
    def dim(self) -> int:
        return len(self.slopes)

    def evaluate(self, t) -> Fraction:
        return _polygon_at(self.slopes, self._prefix, t)

    __call__ = evaluate

    def max_value(self) -> Fraction:
        return sum((s for s in self.slopes if s > 0), Fraction(0))

    def breakpoints(self) -> List[Tuple[int, Fraction]]:
        """Values at every integer argument 0..dim."""
        return list(enumerate(self._prefix))

    def scaled(self, c) -> "AdjointPolygon":
        return AdjointPolygon(tuple(Fraction(c) * s for s in self.slopes))


def adjoint_polygon(datum: RootDatum, x: Sequence) -> AdjointPolygon:
    x = datum.check_point(x)
    slopes = [pairing(x, chi) for chi in datum.roots]
    slopes += [Fraction(0)] * datum.dim_torus
    return AdjointPolygon(tuple(slopes))


def product_polygon(polygons: Iterable[AdjointPolygon]) -> AdjointPolygon:
    """Adjoint polygon of a product group: the union of the slope multisets."""
    slopes: list = []
    for p in polygons:
        slopes.extend(p.slopes)
    return AdjointPolygon(tuple(slopes))


def evaluate(p: AdjointPolygon, t) -> Fraction:
    return p.evaluate(t)


def max_value(p: AdjointPolygon) -> Fraction:
    return p.max_value()

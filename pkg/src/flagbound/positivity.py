"""Standard parabolics, their modular characters and the positivity pairing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Sequence, Tuple

from .root_data import (
    RootDatum,
    RootDataError,
    RootVector,
    is_positive_root,
    pairing,
    simple_root_coefficients,
)


@dataclass(frozen=True)
class StandardParabolic:
    """Parabolic containing the standard Borel.

    ``simple_subset`` holds 0-based indices of the simple roots whose
    negatives lie in the parabolic, so the empty set is the Borel and the
    full set is the whole group.
    """

    datum: RootDatum
    simple_subset: FrozenSet[int]
    phi_q: FrozenSet[RootVector]
    delta_q_on_torus: Tuple[int, ...]
    dim_q: int
    dim_rad_q: int

    @property
    def outside_roots(self) -> Tuple[RootVector, ...]:
        """Roots of the group not in the parabolic, in datum order."""
        return tuple(r for r in self.datum.roots if r not in self.phi_q)

    def label(self) -> list:
        return [i + 1 for i in sorted(self.simple_subset)]


def standard_parabolic(datum: RootDatum, simple_subset: Iterable[int]) -> StandardParabolic:
    subset = frozenset(simple_subset)
    r = len(datum.simple_roots)
    bad = [i for i in subset if not (isinstance(i, int) and 0 <= i < r)]
    if bad:
        raise RootDataError(f"{datum.family}: simple root index out of range: {bad} (have {r})")
    phi = []
    for chi in datum.roots:
        if is_positive_root(chi):
            phi.append(chi)
            continue
        coeffs = simple_root_coefficients(datum, tuple(-c for c in chi))
        if all(c == 0 or k in subset for k, c in enumerate(coeffs)):
            phi.append(chi)
    phi_q = frozenset(phi)
    delta = [0] * datum.coords
    outside = 0
    for chi in datum.roots:
        if chi not in phi_q:
            outside += 1
            for i, c in enumerate(chi):
                delta[i] -= c
    return StandardParabolic(
        datum=datum,
        simple_subset=subset,
        phi_q=phi_q,
        delta_q_on_torus=tuple(delta),
        dim_q=datum.dim_torus + len(phi_q),
        dim_rad_q=outside,
    )


def borel(datum: RootDatum) -> StandardParabolic:
    return standard_parabolic(datum, ())


def whole_group(datum: RootDatum) -> StandardParabolic:
    return standard_parabolic(datum, range(len(datum.simple_roots)))


def block_parabolic(datum: RootDatum, blocks: Sequence[int]) -> StandardParabolic:
    """GL parabolic stabilizing the standard flag with the given block sizes."""
    if datum.family.kind != "gl":
        raise RootDataError("block compositions only describe GL parabolics")
    if any(b < 1 for b in blocks) or sum(blocks) != datum.coords:
        raise RootDataError(f"blocks {list(blocks)} are not a composition of {datum.coords}")
    subset = []
    start = 0
    for b in blocks:
        subset.extend(range(start, start + b - 1))
        start += b
    return standard_parabolic(datum, subset)


def point_parabolic(datum: RootDatum, x: Sequence) -> StandardParabolic:
    """The standard parabolic P_x of a dominant point."""
    x = datum.check_point(x)
    vals = [pairing(x, a) for a in datum.simple_roots]
    if any(v < 0 for v in vals):
        raise RootDataError(f"point {fmt_point(x)} is not dominant for {datum.family}")
    return standard_parabolic(datum, [i for i, v in enumerate(vals) if v == 0])


def fmt_point(x) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


def positivity_pairing(datum: RootDatum, q: StandardParabolic, x: Sequence) -> Fraction:
    # An apartment point lies in a Levi of any standard parabolic, so the
    # projection to the Levi quotient does not move it.
    x = datum.check_point(x)
    return pairing(x, q.delta_q_on_torus)


def is_positive(datum: RootDatum, q: StandardParabolic, x: Sequence) -> bool:
    return positivity_pairing(datum, q, x) >= 0


def gl_block_positivity(block_dims: Sequence[int], block_weights: Sequence) -> Fraction:
    """Sum over i < j of dim_i * dim_j * (wt_i - wt_j)."""
    if len(block_dims) != len(block_weights):
        raise ValueError(
            f"{len(block_dims)} block dimensions but {len(block_weights)} block weights"
        )
    w = [Fraction(v) for v in block_weights]
    total = Fraction(0)
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            total += block_dims[i] * block_dims[j] * (w[i] - w[j])
    return total


def product_positivity(pairings: Iterable) -> Fraction:
    return sum((Fraction(p) for p in pairings), Fraction(0))


def restriction_positivity(pairing_value, degree: int) -> Fraction:
    if degree < 1:
        raise ValueError(f"field degree must be >= 1, got {degree}")
    return degree * Fraction(pairing_value)

"""Root data of the classical similitude families GL, GSp and GO.

Roots are integer vectors on the semisimple torus coordinates only. The
central (similitude) coordinate never pairs with a root, so it is tracked
through ``dim_torus`` alone.

Simple roots follow the Bourbaki numbering:

    GL(e)      A_{e-1}  e_i - e_{i+1}                      (i = 1..e-1)
    GSp(2n)    C_n      e_i - e_{i+1} (i < n),  2 e_n
    GO(2n+1)   B_n      e_i - e_{i+1} (i < n),  e_n
    GO(2n)     D_n      e_i - e_{i+1} (i < n),  e_{n-1} + e_n

Weyl elements are signed permutations ``w(e_i) = signs[i] * e_{perm[i]}``
with 0-based ``perm``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

RootVector = Tuple[int, ...]
ApartmentPoint = Tuple[Fraction, ...]

FAMILY_KINDS = ("gl", "gsp", "go")

# Soft cap on Weyl enumeration size.
MAX_WEYL_ORDER = 10**7


class RootDataError(ValueError):
    pass


def as_point(entries: Sequence) -> ApartmentPoint:
    """Coerce a sequence of ints/strings/Fractions to an exact point."""
    return tuple(Fraction(v) for v in entries)


@dataclass(frozen=True)
class GroupFamily:
    kind: str
    e: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise RootDataError(f"unknown group family {self.kind!r}")
        if not isinstance(self.e, int) or self.e < 1:
            raise RootDataError(f"{self.kind}: e must be a positive integer, got {self.e!r}")
        if self.kind == "gsp" and self.e % 2:
            raise RootDataError(f"gsp:{self.e}: symplectic similitude group needs even e")

    @classmethod
    def parse(cls, text: str) -> "GroupFamily":
        """Parse the ``gl:<e>`` / ``gsp:<e>`` / ``go:<e>`` micro-syntax."""
        kind, sep, num = text.strip().lower().partition(":")
        if not sep or not num.strip().isdigit():
            raise RootDataError(f"bad group spec {text!r}; expected e.g. gl:3, gsp:4, go:5")
        return cls(kind, int(num))

    @property
    def coords(self) -> int:
        if self.kind == "gl":
            return self.e
        return self.e // 2

    @property
    def cartan_type(self) -> str:
        if self.kind == "gl":
            return "A"
        if self.kind == "gsp":
            return "C"
        return "B" if self.e % 2 else "D"

    def __str__(self) -> str:
        return f"{self.kind}:{self.e}"


@dataclass(frozen=True)
class RootDatum:
    family: GroupFamily
    coords: int
    roots: Tuple[RootVector, ...]
    simple_roots: Tuple[RootVector, ...]
    dim_torus: int
    dim_group: int
    rank: int

    @property
    def positive_roots(self) -> Tuple[RootVector, ...]:
        return tuple(r for r in self.roots if is_positive_root(r))

    @property
    def weyl_order(self) -> int:
        n = self.coords
        t = self.family.cartan_type
        if t == "A":
            return _factorial(n)
        if t == "D":
            return 2 ** max(n - 1, 0) * _factorial(n)
        return 2**n * _factorial(n)

    def check_point(self, x: Sequence) -> ApartmentPoint:
        x = as_point(x)
        if len(x) != self.coords:
            raise RootDataError(
                f"{self.family}: point has {len(x)} coordinates, expected {self.coords}"
            )
        return x


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _unit(n: int, i: int, c: int = 1) -> list:
    v = [0] * n
    v[i] = c
    return v


def _pm_pairs(n: int) -> list:
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in ((1, -1), (-1, 1), (1, 1), (-1, -1)):
            v = [0] * n
            v[i], v[j] = si, sj
            out.append(tuple(v))
    return out


@lru_cache(maxsize=None)
def build_root_datum(family: GroupFamily) -> RootDatum:
    n = family.coords
    t = family.cartan_type
    if t == "A":
        roots = []
        for i, j in itertools.permutations(range(n), 2):
            v = [0] * n
            v[i], v[j] = 1, -1
            roots.append(tuple(v))
        dim_torus = n
    else:
        roots = _pm_pairs(n)
        if t == "C":
            roots += [tuple(_unit(n, i, s * 2)) for i in range(n) for s in (1, -1)]
        elif t == "B":
            roots += [tuple(_unit(n, i, s)) for i in range(n) for s in (1, -1)]
        dim_torus = n + 1

    simple = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simple.append(tuple(v))
    if t == "C" and n >= 1:
        simple.append(tuple(_unit(n, n - 1, 2)))
    elif t == "B" and n >= 1:
        simple.append(tuple(_unit(n, n - 1)))
    elif t == "D" and n >= 2:
        v = [0] * n
        v[n - 2], v[n - 1] = 1, 1
        simple.append(tuple(v))
    elif t == "D" and n == 1:
        simple = []

    roots = tuple(sorted(roots, reverse=True))
    return RootDatum(
        family=family,
        coords=n,
        roots=roots,
        simple_roots=tuple(simple),
        dim_torus=dim_torus,
        dim_group=len(roots) + dim_torus,
        rank=dim_torus,
    )


def datum(spec: str) -> RootDatum:
    """Shorthand: ``datum("gsp:4")``."""
    return build_root_datum(GroupFamily.parse(spec))


def pairing(x: Sequence, chi: Sequence) -> Fraction:
    if len(x) != len(chi):
        raise RootDataError(f"pairing length mismatch: {len(x)} vs {len(chi)}")
    return sum((Fraction(a) * b for a, b in zip(x, chi)), Fraction(0))


def is_positive_root(chi: Sequence) -> bool:
    # With Bourbaki simple roots the positive roots are exactly those whose
    # first nonzero coordinate is positive.
    for c in chi:
        if c:
            return c > 0
    raise RootDataError("zero vector is not a root")


def simple_root_coefficients(datum: RootDatum, chi: Sequence) -> Tuple[Fraction, ...]:
    """Exact coefficients of ``chi`` in the basis of simple roots."""
    simple = datum.simple_roots
    r, n = len(simple), datum.coords
    # Augmented n x (r+1) system, columns are simple roots.
    rows = [[Fraction(simple[k][i]) for k in range(r)] + [Fraction(chi[i])] for i in range(n)]
    pivots = []
    row = 0
    for col in range(r):
        piv = next((i for i in range(row, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        p = rows[row][col]
        rows[row] = [v / p for v in rows[row]]
        for i in range(n):
            if i != row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
    if any(rows[i][r] != 0 for i in range(row, n)):
        raise RootDataError(f"{chi} is not in the span of the simple roots")
    coeffs = [Fraction(0)] * r
    for i, col in enumerate(pivots):
        coeffs[col] = rows[i][r]
    return tuple(coeffs)


@dataclass(frozen=True)
class WeylElement:
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise RootDataError(f"not a permutation: {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise RootDataError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    def __call__(self, v: Sequence) -> tuple:
        if len(v) != len(self.perm):
            raise RootDataError(f"Weyl element of size {len(self.perm)} applied to length {len(v)}")
        out = [None] * len(v)
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            out[j] = s * v[i] if s < 0 else v[i]
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(v) = self(other(v))
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm)))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return WeylElement(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)

    def legal_for(self, datum: RootDatum) -> bool:
        if len(self.perm) != datum.coords:
            return False
        negs = sum(1 for s in self.signs if s < 0)
        t = datum.family.cartan_type
        if t == "A":
            return negs == 0
        if t == "D":
            return negs % 2 == 0
        return True

    def to_json(self) -> dict:
        return {"perm": [j + 1 for j in self.perm], "signs": list(self.signs)}


def weyl_elements(datum: RootDatum) -> Iterator[WeylElement]:
    """Deterministic enumeration: permutations in lex order, then sign patterns."""
    if datum.weyl_order > MAX_WEYL_ORDER:
        raise RootDataError(f"{datum.family}: Weyl group of order {datum.weyl_order} too large")
    n = datum.coords
    t = datum.family.cartan_type
    if t == "A":
        sign_patterns = [(1,) * n]
    else:
        sign_patterns = list(itertools.product((1, -1), repeat=n))
        if t == "D":
            sign_patterns = [s for s in sign_patterns if s.count(-1) % 2 == 0]
    for perm in itertools.permutations(range(n)):
        for signs in sign_patterns:
            yield WeylElement(perm, signs)


def apply_weyl(w: WeylElement, v: Sequence, datum: RootDatum | None = None) -> tuple:
    if datum is not None and not w.legal_for(datum):
        raise RootDataError(f"{w} is not a Weyl element of {datum.family}")
    return w(v)


def simple_reflection(datum: RootDatum, index: int) -> WeylElement:
    """Reflection in the simple root with 0-based ``index``, as a signed permutation."""
    alpha = datum.simple_roots[index]
    n = datum.coords
    support = [i for i, c in enumerate(alpha) if c]
    perm = list(range(n))
    signs = [1] * n
    if len(support) == 1:
        signs[support[0]] = -1
    else:
        i, j = support
        perm[i], perm[j] = j, i
        if alpha[i] == alpha[j]:
            signs[i] = signs[j] = -1
    return WeylElement(tuple(perm), tuple(signs))

"""Weighted projective planes attached to solution triples."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import CatalogueError, InvalidInput
from .markov import Triple, equation, is_solution
from .singularities import TClass, classify_T, milnor, normalize

Basket = tuple[TClass, ...]


@dataclass(frozen=True)
class WeightedPlane:
    w0: int
    w1: int
    w2: int

    def __post_init__(self):
        w = self.weights
        if min(w) < 1:
            raise InvalidInput(f"weights must be positive: {w}")
        if gcd(w[0], w[1]) != 1 or gcd(w[0], w[2]) != 1 or gcd(w[1], w[2]) != 1:
            raise InvalidInput(f"weights {w} are not pairwise coprime")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.w0, self.w1, self.w2)

    def __str__(self):
        return "P({},{},{})".format(*self.weights)


def make_basket(entries) -> Basket:
    """Sorted multiset of singular points; smooth entries are dropped."""
    return tuple(sorted((t for t in entries if t.kind != "smooth"), key=TClass.sort_key))


@dataclass(frozen=True)
class SurfaceRecord:
    family: int
    triple: Triple
    weights: WeightedPlane
    k2: int
    basket: Basket
    rho: int
    # per-point choices for a deformed record; empty for the toric root
    outcomes: tuple = field(default=(), compare=False)

    @property
    def milnor_sum(self) -> int:
        return sum(milnor(t) for t in self.basket)


_WEIGHT_FACTORS = {1: (1, 1, 1), 2: (1, 1, 2), 3: (1, 2, 3), 4: (1, 1, 5)}


def weights_from_triple(family, t: Triple) -> WeightedPlane:
    eq = equation(family)
    if not is_solution(eq, t):
        raise InvalidInput(f"{t} does not solve {eq}")
    f = _WEIGHT_FACTORS[eq.family]
    return WeightedPlane(*(fi * x * x for fi, x in zip(f, t)))


def k_squared(w: WeightedPlane) -> Fraction:
    """K^2 = (w0 + w1 + w2)^2 / (w0 w1 w2)."""
    return Fraction(sum(w.weights) ** 2, w.w0 * w.w1 * w.w2)


def point_classes(w: WeightedPlane) -> tuple[TClass, TClass, TClass]:
    """Classification at each coordinate vertex 1/wi(wj, wk), smooth ones included."""
    ws = w.weights
    out = []
    for i in range(3):
        j, k = (x for x in range(3) if x != i)
        out.append(classify_T(normalize(ws[i], ws[j], ws[k])))
    return tuple(out)


def singular_points(w: WeightedPlane) -> Basket:
    return make_basket(point_classes(w))


def _count_progression(lo: int, hi: int, residue: int, modulus: int) -> int:
    """Number of j in [lo, hi] with j = residue (mod modulus)."""
    if hi < lo:
        return 0
    first = lo + (residue - lo) % modulus
    return 0 if first > hi else (hi - first) // modulus + 1


def count_monomials(w: WeightedPlane, degree: int) -> int:
    """Dimension of the degree-``degree`` part of k[x0, x1, x2] with deg xi = wi."""
    w0, w1, w2 = sorted(w.weights)
    total = 0
    for k in range(degree // w2 + 1):
        rest = degree - k * w2
        # j*w1 = rest (mod w0), solvable uniquely mod w0 since gcd(w0, w1) = 1
        j0 = rest * pow(w1, -1, w0) % w0 if w0 > 1 else 0
        total += _count_progression(0, rest // w1, j0, w0)
    return total


def anticanonical_sections(w: WeightedPlane, check: bool = True) -> int:
    """h^0(-K) as the number of monomials of degree w0 + w1 + w2.

    With ``check`` the count is compared with 1 + K^2 whenever K^2 is integral.
    """
    count = count_monomials(w, sum(w.weights))
    k2 = k_squared(w)
    if check and k2.denominator == 1 and count != 1 + k2:
        raise CatalogueError(f"{w}: {count} anticanonical monomials but K^2 = {k2}")
    return count


def build_record(family, t: Triple) -> SurfaceRecord:
    eq = equation(family)
    w = weights_from_triple(eq, t)
    k2 = k_squared(w)
    if k2.denominator != 1:
        raise CatalogueError(f"{w}: K^2 = {k2} is not integral")
    k2 = int(k2)
    points = point_classes(w)
    basket = make_basket(points)
    bad = [str(p) for p in basket if not p.is_t]
    if bad:
        raise CatalogueError(f"{w} has non-T points: {bad}")
    rho = 10 - k2 - sum(milnor(p) for p in basket)
    if rho != 1:
        raise CatalogueError(f"{w}: Noether identity gives rho = {rho}")
    d_sum = sum(p.d if p.is_t else 1 for p in points)
    if d_sum + k2 != 12:
        raise CatalogueError(f"{w}: d0 + d1 + d2 + K^2 = {d_sum + k2}")
    return SurfaceRecord(eq.family, tuple(t), w, k2, basket, rho)


def d_profile(w: WeightedPlane) -> tuple[int, ...]:
    """Sorted T-parameters d of the three vertices (1 at smooth vertices)."""
    return tuple(sorted(p.d if p.is_t else 1 for p in point_classes(w)))

"""Re-derivation of the weighted-plane list from the degree equation.

If P(w0, w1, w2) has only T-singularities then wi = di ni^2 with
d0 + d1 + d2 + K^2 = 12, and K^2 = (sum w)^2 / (w0 w1 w2) becomes

    d0 n0^2 + d1 n1^2 + d2 n2^2 = L n0 n1 n2,   L^2 = d0 d1 d2 K^2.

We search this equation directly and match each hit to one of the four
Markov-type families.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import gcd, isqrt
from typing import Optional

from .errors import CatalogueError
from .markov import canonicalize, is_solution
from .wps import k_squared, weights_from_triple

# K^2 >= 5 and the d-sum identity force d0 + d1 + d2 <= 7
MAX_D_SUM = 7

_PATTERN_FAMILY = {(1, 1, 1): 1, (1, 1, 2): 2, (1, 2, 3): 3, (1, 1, 5): 4}


@dataclass(frozen=True, order=True)
class DegreeSolution:
    d: tuple[int, int, int]
    n: tuple[int, int, int]
    k2: int

    @property
    def weights(self) -> tuple[int, int, int]:
        return tuple(di * ni * ni for di, ni in zip(self.d, self.n))


def _exact_sqrt(x: int) -> Optional[int]:
    r = isqrt(x)
    return r if r * r == x else None


def degree_patterns() -> list[tuple[tuple[int, int, int], int, Optional[int]]]:
    """Every sorted d-pattern with sum <= 7, its K^2 and L (None when L^2 is not a square)."""
    out = []
    for d in combinations_with_replacement(range(1, MAX_D_SUM + 1), 3):
        if sum(d) > MAX_D_SUM:
            continue
        k2 = 12 - sum(d)
        out.append((d, k2, _exact_sqrt(d[0] * d[1] * d[2] * k2)))
    return out


def canonical_solution(d, n, k2) -> DegreeSolution:
    pairs = sorted(zip(d, n))
    return DegreeSolution(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), k2)


def solve_degree_equation(n_bound: int) -> list[DegreeSolution]:
    """All solutions with every ni <= n_bound and pairwise coprime weights, sorted.

    Patterns with irrational L are skipped: the left side is a positive
    integer, so L n0 n1 n2 cannot equal it.
    """
    found = set()
    for d, k2, L in degree_patterns():
        if L is None:
            continue
        for n in product(range(1, n_bound + 1), repeat=3):
            lhs = d[0] * n[0] ** 2 + d[1] * n[1] ** 2 + d[2] * n[2] ** 2
            if lhs != L * n[0] * n[1] * n[2]:
                continue
            w = [di * ni * ni for di, ni in zip(d, n)]
            if gcd(w[0], w[1]) == gcd(w[0], w[2]) == gcd(w[1], w[2]) == 1:
                found.add(canonical_solution(d, n, k2))
    return sorted(found)


def match_family(s: DegreeSolution) -> tuple[int, tuple[int, int, int]]:
    """The family and canonical triple realising ``s``; CatalogueError if none does."""
    family = _PATTERN_FAMILY.get(s.d)
    if family is None:
        raise CatalogueError(f"d-pattern {s.d} matches no family")
    # s is sorted by d, which is also each family's coefficient order
    triple = canonicalize(family, s.n)
    if not is_solution(family, triple):
        raise CatalogueError(f"{s} does not solve family {family}")
    w = weights_from_triple(family, triple)
    if sorted(w.weights) != sorted(s.weights):
        raise CatalogueError(f"{s}: weights {w} do not round-trip")
    if k_squared(w) != s.k2:
        raise CatalogueError(f"{s}: K^2 of {w} is {k_squared(w)}, expected {s.k2}")
    return family, triple

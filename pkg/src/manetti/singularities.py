"""Cyclic quotient singularities and their T-classification.

``CyclicQuotient(n, a)`` is 1/n(1, a): mu_n acting on the plane by
(u, v) -> (z u, z^a v).  ``TClass`` records the classification of such a point:
smooth, not T, or T with parameters (d, n, a), meaning 1/dn^2(1, dna - 1).
Du Val points A_{k} appear as T(d=k+1, n=1, a=1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

from .errors import InconsistencyError, InvalidInput
from .hj import HJString, check_string, evaluate_pair, hj_expand

SMOOTH = "smooth"
T_CYCLIC = "T"
NOT_T = "not-T"


@dataclass(frozen=True, order=True)
class CyclicQuotient:
    order: int
    weight: int

    def __post_init__(self):
        if self.order < 1:
            raise InvalidInput(f"order must be positive, got {self.order}")
        if self.order == 1:
            if self.weight != 0:
                raise InvalidInput("the smooth marker is 1/1(1, 0)")
        elif not (1 <= self.weight < self.order) or gcd(self.order, self.weight) != 1:
            raise InvalidInput(f"1/{self.order}(1,{self.weight}) is not an isolated cyclic quotient")

    @property
    def is_smooth(self) -> bool:
        return self.order == 1

    @property
    def inverse_weight(self) -> int:
        if self.is_smooth:
            return 0
        return pow(self.weight, -1, self.order)

    @property
    def is_canonical(self) -> bool:
        return self.weight <= self.inverse_weight

    def __str__(self):
        if self.is_smooth:
            return "smooth"
        return f"1/{self.order}(1,{self.weight})"


def normalize(order: int, q1: int, q2: int) -> CyclicQuotient:
    """Rewrite 1/n(q1, q2) as 1/n(1, a), choosing a <= a^-1 mod n."""
    if order < 1:
        raise InvalidInput(f"order must be positive, got {order}")
    if order == 1:
        return CyclicQuotient(1, 0)
    if gcd(q1, order) != 1 or gcd(q2, order) != 1:
        raise InvalidInput(f"1/{order}({q1},{q2}) has a non-isolated fixed locus")
    a = q2 * pow(q1, -1, order) % order
    return CyclicQuotient(order, min(a, pow(a, -1, order)))


@dataclass(frozen=True)
class TClass:
    kind: str
    d: int = 0
    n: int = 0
    a: int = 0

    @classmethod
    def smooth(cls) -> "TClass":
        return cls(SMOOTH)

    @classmethod
    def not_t(cls) -> "TClass":
        return cls(NOT_T)

    @classmethod
    def t(cls, d: int, n: int, a: int) -> "TClass":
        if d < 1 or n < 1 or not (1 <= a <= n) or gcd(a, n) != 1:
            raise InvalidInput(f"invalid T parameters (d,n,a)=({d},{n},{a})")
        if d == 1 and n == 1:
            return cls.smooth()
        return cls(T_CYCLIC, d, n, a)

    @classmethod
    def du_val_a(cls, rank: int) -> "TClass":
        """A_rank; A_0 is the smooth point."""
        return cls.t(rank + 1, 1, 1)

    @property
    def is_t(self) -> bool:
        return self.kind == T_CYCLIC

    @property
    def is_du_val(self) -> bool:
        return self.kind == T_CYCLIC and self.n == 1

    def quotient(self) -> CyclicQuotient:
        """The quotient 1/dn^2(1, dna-1), in canonical orientation."""
        if self.kind == SMOOTH:
            return CyclicQuotient(1, 0)
        if self.kind != T_CYCLIC:
            raise InvalidInput("a not-T class carries no quotient")
        order = self.d * self.n * self.n
        return normalize(order, 1, self.d * self.n * self.a - 1)

    def sort_key(self):
        return (self.kind != T_CYCLIC, self.d, self.n, self.a)

    def __str__(self):
        if self.kind != T_CYCLIC:
            return self.kind
        if self.n == 1:
            return f"A{self.d - 1}"
        return f"T{self.d}({self.quotient()})"


def t_matches(q: CyclicQuotient, orientation: Optional[int] = None) -> list[tuple[int, int, int]]:
    """Every (d, n, a) with q equal to 1/dn^2(1, dna-1) in the given orientation.

    ``orientation`` is the weight to test; by default both q.weight and its
    inverse are tried.
    """
    order = q.order
    weights = (q.weight, q.inverse_weight) if orientation is None else (orientation,)
    found = []
    for w in dict.fromkeys(weights):
        # dna - 1 = w (mod dn^2) needs k = dn = order/n to divide g = gcd(order, w + 1),
        # and n^2 | order means order | k^2, so k >= sqrt(order) and g/k <= g/sqrt(order)
        g = gcd(order, w + 1)
        for j in range(1, g // isqrt(order) + 1):
            if g % j:
                continue
            k = g // j
            if (k * k) % order:
                continue
            n = order // k
            d = k // n
            a = ((w + 1) // k) % n or n
            if gcd(a, n) == 1:
                found.append((d, n, a))
    return sorted(found)


def classify_T(q: CyclicQuotient) -> TClass:
    """T-classification of a cyclic quotient.

    The stored orientation is tried first and the inverse orientation only if
    it has no match.  Among matches the largest n, then the smallest a, wins.
    """
    if q.is_smooth:
        return TClass.smooth()
    stored = t_matches(q, q.weight)
    inverse = t_matches(q, q.inverse_weight) if q.inverse_weight != q.weight else stored
    matches = stored or inverse
    if not matches:
        return TClass.not_t()
    all_d = {d for d, _, _ in stored + inverse}
    if len(all_d) > 1:
        raise InconsistencyError(f"{q} admits T-descriptions with d in {sorted(all_d)}")
    d, n, a = min(matches, key=lambda m: (-m[1], m[2]))
    return TClass.t(d, n, a)


def milnor(t: TClass) -> int:
    """Milnor number of a Q-Gorenstein smoothing: d - 1 for T_d, 0 when smooth."""
    if t.kind == SMOOTH:
        return 0
    if t.kind != T_CYCLIC:
        raise InvalidInput("Milnor number is only defined for T-singularities")
    return t.d - 1


def index_and_cover(t: TClass) -> tuple[int, TClass]:
    """Index n and the canonical cover A_{dn-1}, itself returned as a TClass."""
    if t.kind != T_CYCLIC:
        raise InvalidInput("index and cover are defined for T-singularities")
    return t.n, TClass.du_val_a(t.d * t.n - 1)


def resolution_string(q: CyclicQuotient) -> HJString:
    if q.is_smooth:
        return ()
    return hj_expand(Fraction(q.order, q.weight))


def string_quotient(s: Sequence[int]) -> CyclicQuotient:
    """The cyclic quotient whose minimal resolution is the string ``s``."""
    n, a = evaluate_pair(s)
    if n == 1:
        return CyclicQuotient(1, 0)
    return CyclicQuotient(n, a)


def t_seed(d: int) -> HJString:
    if d < 1:
        raise InvalidInput(f"d must be positive, got {d}")
    if d == 1:
        return (4,)
    return (3,) + (2,) * (d - 2) + (3,)


def grow_t_string(s: HJString):
    """[b1+1, ..., br, 2] and [2, b1, ..., br+1]."""
    yield (s[0] + 1,) + s[1:] + (2,)
    yield (2,) + s[:-1] + (s[-1] + 1,)


def t_string_generate(d: int, max_len: int, seed: Sequence[int] | None = None) -> set[HJString]:
    """All T_d-strings of length <= max_len, closing the seed under both growth steps.

    ``seed`` overrides the standard seed; only test fixtures need it.
    """
    if max_len < 1:
        raise InvalidInput("max_len must be >= 1")
    start = t_seed(d) if seed is None else check_string(seed)
    if len(start) > max_len:
        return set()
    out = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        if len(s) >= max_len:
            continue
        for nxt in grow_t_string(s):
            if nxt not in out:
                out.add(nxt)
                queue.append(nxt)
    return out


def t_degree_arithmetic(s: Sequence[int]) -> Optional[int]:
    """d if the contraction of ``s`` is T_d with index n >= 2, else None."""
    t = classify_T(string_quotient(s))
    if t.is_t and t.n >= 2:
        return t.d
    return None


def t_degree_peeling(s: Sequence[int]) -> Optional[int]:
    """d found by undoing growth steps until a seed appears, else None."""
    s = list(check_string(s))
    lo, hi = 0, len(s) - 1
    while lo < hi:
        if s[lo] >= 3 and s[hi] == 2:
            s[lo] -= 1
            hi -= 1
        elif s[lo] == 2 and s[hi] >= 3:
            lo += 1
            s[hi] -= 1
        else:
            # no peel applies: a seed [3, 2, ..., 2, 3] or nothing
            if s[lo] == s[hi] == 3 and all(b == 2 for b in s[lo + 1:hi]):
                return hi - lo + 1
            return None
    if lo == hi and s[lo] == 4:
        return 1
    return None


def is_t_string(s: Sequence[int]) -> Optional[int]:
    """Return d when ``s`` is a T_d-string; Du Val strings [2,...,2] give None."""
    s = check_string(s)
    if not s:
        raise InvalidInput("is_t_string needs a nonempty string")
    by_value = t_degree_arithmetic(s)
    by_peeling = t_degree_peeling(s)
    if by_value != by_peeling:
        raise InconsistencyError(f"{list(s)}: arithmetic d={by_value}, peeling d={by_peeling}")
    return by_value


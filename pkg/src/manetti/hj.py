"""Hirzebruch-Jung continued fractions.

A fraction n/a with 1 <= a <= n and gcd(n, a) = 1 expands as

    n/a = b1 - 1/(b2 - 1/(... - 1/br)),   every bi >= 2.

Strings are plain tuples of ints.  Fractions are ``fractions.Fraction``; the
smooth point is 1/1, whose string is empty.
"""

from __future__ import annotations

import operator
from collections import deque
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .errors import InvalidInput

HJString = tuple[int, ...]

LEFT_RAISE = "left-raise"
RIGHT_PREPEND = "right-prepend"


def as_fraction(value, den: int | None = None) -> Fraction:
    """Coerce ``value`` (or ``value/den``) to a validated fraction n/a.

    Accepts a Fraction, an int, an ``(n, a)`` pair or a string ``"n/a"``.
    """
    if den is not None:
        n, a = int(value), int(den)
    elif isinstance(value, Fraction):
        n, a = value.numerator, value.denominator
    elif isinstance(value, int):
        n, a = value, 1
    elif isinstance(value, str):
        head, _, tail = value.strip().partition("/")
        try:
            n, a = int(head), int(tail or 1)
        except ValueError:
            raise InvalidInput(f"not a fraction: {value!r}") from None
    else:
        n, a = (int(x) for x in value)
    if n < 1 or a < 1:
        raise InvalidInput(f"{n}/{a}: numerator and denominator must be positive")
    if gcd(n, a) != 1:
        raise InvalidInput(f"{n}/{a} is not reduced")
    if a > n or (a == n and n != 1):
        raise InvalidInput(f"{n}/{a}: need a < n (or n = a = 1)")
    return Fraction(n, a)


def check_string(s: Sequence[int]) -> HJString:
    if type(s) is not tuple:
        s = tuple(map(operator.index, s))
    if s and min(s) < 2:
        raise InvalidInput(f"{list(s)}: entries must be >= 2")
    return s


def hj_expand(f) -> HJString:
    """Expand n/a by repeated ceiling division; 1/1 gives the empty string."""
    f = as_fraction(f)
    n, a = f.numerator, f.denominator
    if n == 1:
        return ()
    out = []
    while a:
        b = -(-n // a)
        out.append(b)
        n, a = a, b * a - n
    return tuple(out)


def evaluate_pair(s: Sequence[int]) -> tuple[int, int]:
    """(n, a) with [s] = n/a, already coprime; (1, 1) for the empty string."""
    s = check_string(s)
    num, den = 1, 0
    for b in reversed(s):
        num, den = b * num - den, num
    return (num, den) if s else (1, 1)


def hj_evaluate(s: Sequence[int]) -> Fraction:
    n, a = evaluate_pair(s)
    return Fraction(n, a)


def reverse_string(s: Sequence[int]) -> HJString:
    """Reverse a string.

    If ``s`` evaluates to n/a, the reversal evaluates to n/a' where a' is the
    inverse of a modulo n.
    """
    return check_string(s)[::-1]


def conjugate_fraction(f) -> Fraction:
    f = as_fraction(f)
    n, a = f.numerator, f.denominator
    if n == 1:
        raise InvalidInput("the smooth fraction 1/1 has no conjugate")
    return Fraction(n, n - a)


def is_conjugate_pair(s: Sequence[int], t: Sequence[int]) -> bool:
    s, t = check_string(s), check_string(t)
    if not s or not t:
        raise InvalidInput("conjugacy is defined for nonempty strings")
    (n, a), (m, c) = evaluate_pair(s), evaluate_pair(t)
    return n == m and a + c == n


def grow_conjugate_pair(s: Sequence[int], t: Sequence[int], side: str = LEFT_RAISE):
    """One growth step on a conjugate pair.

    ``left-raise`` maps ([b1,...], [c1,...]) to ([b1+1,...], [2,c1,...]);
    ``right-prepend`` is the mirror image with the roles of the sides swapped.
    """
    s, t = check_string(s), check_string(t)
    if not s or not t or not is_conjugate_pair(s, t):
        raise InvalidInput(f"{list(s)}, {list(t)} are not a conjugate pair")
    if side == LEFT_RAISE:
        return (s[0] + 1,) + s[1:], (2,) + t
    if side == RIGHT_PREPEND:
        return (2,) + s, (t[0] + 1,) + t[1:]
    raise InvalidInput(f"unknown growth side {side!r}")


def shrink_conjugate_pair(s: HJString, t: HJString):
    """Undo one growth step, or return None for the base pair ([2], [2])."""
    if s == (2,) and t == (2,):
        return None
    if s[0] >= 3 and t[0] == 2:
        return (s[0] - 1,) + s[1:], t[1:]
    if s[0] == 2 and t[0] >= 3:
        return s[1:], (t[0] - 1,) + t[1:]
    raise InvalidInput(f"{list(s)}, {list(t)} cannot be shrunk")


def conjugate_pairs(max_total_len: int) -> Iterator[tuple[HJString, HJString]]:
    """All conjugate pairs with len(s) + len(t) <= max_total_len, breadth first."""
    base = ((2,), (2,))
    if max_total_len < 2:
        return
    seen = {base}
    queue = deque([base])
    while queue:
        pair = queue.popleft()
        yield pair
        if len(pair[0]) + len(pair[1]) >= max_total_len:
            continue
        for side in (LEFT_RAISE, RIGHT_PREPEND):
            nxt = grow_conjugate_pair(*pair, side)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)


def conjugate_pairs_by_numerator(max_num: int) -> Iterator[tuple[HJString, HJString]]:
    """All conjugate pairs whose common numerator is at most ``max_num``.

    Growth sends n/a to (n+a)/a, so the numerator strictly increases and the
    bound prunes safely.
    """
    base = ((2,), (2,))
    if max_num < 2:
        return
    queue = deque([base])
    seen = {base}
    while queue:
        pair = queue.popleft()
        yield pair
        for side in (LEFT_RAISE, RIGHT_PREPEND):
            nxt = grow_conjugate_pair(*pair, side)
            if nxt not in seen and evaluate_pair(nxt[0])[0] <= max_num:
                seen.add(nxt)
                queue.append(nxt)

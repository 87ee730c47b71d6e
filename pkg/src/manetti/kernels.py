"""Exhaustive int64 search kernels.

Two implementations sit behind each entry point: a numba ``@njit`` kernel and
a vectorized numpy one.  Set ``MANETTI_DISABLE_NUMBA=1`` to force numpy; numpy
is also used when numba is not importable.  Both return identical results.

The kernels only run where int64 cannot overflow; callers pass bounds that
are checked here.
"""

from __future__ import annotations

import os

import numpy as np

try:
    if os.environ.get("MANETTI_DISABLE_NUMBA", "").lower() in ("1", "true", "yes"):
        raise ImportError("numba disabled by MANETTI_DISABLE_NUMBA")
    from numba import njit
except ImportError:
    njit = None

HAVE_NUMBA = njit is not None
BACKEND = "numba" if HAVE_NUMBA else "numpy"

_INT64_SAFE = 1 << 62
_NUMPY_BLOCK = 2_000_000


def _check_string_bounds(max_len: int, max_entry: int):
    if max_len < 1 or max_entry < 2:
        raise ValueError("need max_len >= 1 and max_entry >= 2")
    if (max_entry + 1) ** max_len >= _INT64_SAFE:
        raise ValueError(f"strings up to {max_entry}^{max_len} overflow int64")


def _t_degree_scalar(p, q, max_d):
    # d if p/q is 1/dm^2(1, dma-1) with m >= 2 and d <= max_d, else 0
    for d in range(1, max_d + 1):
        if p % d:
            continue
        m2 = p // d
        m = np.int64(np.sqrt(np.float64(m2)))
        while m * m > m2:
            m -= 1
        while (m + 1) * (m + 1) <= m2:
            m += 1
        if m < 2 or m * m != m2:
            continue
        dm = d * m
        if (q + 1) % dm:
            continue
        x = ((q + 1) // dm) % m
        y = m
        while y:
            x, y = y, x % y
        if x == 1:
            return d
    return 0


def _t_scan_dfs(max_len, max_entry, max_d, out_digits, out_d):
    # depth-first over strings built by prepending b: value(b + s) = (b p - q) / p
    p = np.zeros(max_len + 1, np.int64)
    q = np.zeros(max_len + 1, np.int64)
    digit = np.zeros(max_len + 1, np.int64)
    p[0] = 1
    q[0] = 0
    cap = out_d.shape[0]
    count = 0
    k = 0
    digit[0] = 1
    while k >= 0:
        digit[k] += 1
        if digit[k] > max_entry:
            k -= 1
            continue
        b = digit[k]
        p[k + 1] = b * p[k] - q[k]
        q[k + 1] = p[k]
        d = _t_degree_scalar(p[k + 1], q[k + 1], max_d)
        if d:
            if count < cap:
                # digit[k] is the first entry, digit[0] the last
                for i in range(k + 1):
                    out_digits[count, i] = digit[k - i]
                out_d[count] = d
            count += 1
        if k + 1 < max_len:
            k += 1
            digit[k] = 1
    return count


def _markov_scan(alpha, beta, gamma, lam, bound, out):
    # for each (a, b) solve gamma c^2 - lam ab c + alpha a^2 + beta b^2 = 0
    cap = out.shape[0]
    count = 0
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            s = lam * a * b
            disc = s * s - 4 * gamma * (alpha * a * a + beta * b * b)
            if disc < 0:
                continue
            r = np.int64(np.sqrt(np.float64(disc)))
            while r * r > disc:
                r -= 1
            while (r + 1) * (r + 1) <= disc:
                r += 1
            if r * r != disc:
                continue
            for sign in (-1, 1):
                num = s + sign * r
                if num <= 0 or num % (2 * gamma):
                    continue
                c = num // (2 * gamma)
                if c > bound or (sign == 1 and r == 0):
                    continue
                if count < cap:
                    out[count, 0] = a
                    out[count, 1] = b
                    out[count, 2] = c
                count += 1
    return count


if HAVE_NUMBA:
    _t_degree_scalar = njit(cache=True)(_t_degree_scalar)
    _t_scan_dfs = njit(cache=True)(_t_scan_dfs)
    _markov_scan = njit(cache=True)(_markov_scan)


def _isqrt_array(x: np.ndarray) -> np.ndarray:
    r = np.sqrt(x.astype(np.float64)).astype(np.int64)
    r -= (r * r > x).astype(np.int64)
    r += ((r + 1) * (r + 1) <= x).astype(np.int64)
    return r


def _t_degree_array(p: np.ndarray, q: np.ndarray, max_d: int) -> np.ndarray:
    out = np.zeros(p.shape, np.int64)
    for d in range(1, max_d + 1):
        idx = np.flatnonzero((out == 0) & (p % d == 0))
        if idx.size == 0:
            continue
        m2 = p[idx] // d
        m = _isqrt_array(m2)
        ok = (m >= 2) & (m * m == m2)
        idx, m = idx[ok], m[ok]
        dm = d * m
        qq = q[idx] + 1
        ok = qq % dm == 0
        idx, m, dm, qq = idx[ok], m[ok], dm[ok], qq[ok]
        ok = np.gcd((qq // dm) % m, m) == 1
        out[idx[ok]] = d
    return out


def _t_scan_numpy(max_len: int, max_entry: int, max_d: int):
    entries = np.arange(2, max_entry + 1, dtype=np.int64)
    base = entries.size
    strings, degrees = [], []

    def collect(p, q, length, index_offset, head):
        deg = _t_degree_array(p, q, max_d)
        for i in np.flatnonzero(deg):
            code = int(i) + index_offset
            tail = []
            # level arrays are laid out as first_entry_index * base**(L-1) + suffix_index
            for level in range(length, 0, -1):
                bi, code = divmod(code, base ** (level - 1))
                tail.append(int(entries[bi]))
            strings.append(tuple(head) + tuple(tail))
            degrees.append(int(deg[i]))

    p = np.ones(1, np.int64)
    q = np.zeros(1, np.int64)
    depth = 0
    while depth < max_len and p.size * base <= _NUMPY_BLOCK:
        p, q = (entries[:, None] * p[None, :] - q[None, :]).ravel(), np.tile(p, base)
        depth += 1
        collect(p, q, depth, 0, ())
    # deeper levels: prepend every head tuple to the stored block
    heads = [()]
    for extra in range(1, max_len - depth + 1):
        heads = [(int(b),) + h for b in entries for h in heads]
        for h in heads:
            hp, hq = p, q
            for b in reversed(h):
                hp, hq = b * hp - hq, hp
            collect(hp, hq, depth, 0, h)
    return strings, degrees


def t_string_scan(max_len: int, max_entry: int, max_d: int) -> dict[tuple[int, ...], int]:
    """Every string with 1 <= length <= max_len and entries in [2, max_entry] whose
    contraction is T_d with index >= 2 and d <= max_d, mapped to its d."""
    _check_string_bounds(max_len, max_entry)
    if not HAVE_NUMBA:
        strings, degrees = _t_scan_numpy(max_len, max_entry, max_d)
        return dict(zip(strings, degrees))
    cap = 1 << 14
    while True:
        digits = np.zeros((cap, max_len), np.int64)
        degs = np.zeros(cap, np.int64)
        count = _t_scan_dfs(max_len, max_entry, max_d, digits, degs)
        if count <= cap:
            break
        cap = count
    out = {}
    for row, d in zip(digits[:count], degs[:count]):
        out[tuple(int(x) for x in row if x)] = int(d)
    return out


def markov_scan(alpha: int, beta: int, gamma: int, lam: int, bound: int) -> set[tuple[int, int, int]]:
    """All (a, b, c) with entries in [1, bound] solving the equation, by grid search
    over (a, b) and the quadratic formula in c."""
    if bound < 1:
        return set()
    if (lam * bound * bound) ** 2 * 4 >= _INT64_SAFE:
        raise ValueError(f"bound {bound} overflows int64")
    if not HAVE_NUMBA:
        return _markov_scan_numpy(alpha, beta, gamma, lam, bound)
    cap = 1 << 12
    while True:
        out = np.zeros((cap, 3), np.int64)
        count = _markov_scan(alpha, beta, gamma, lam, bound, out)
        if count <= cap:
            break
        cap = count
    return {tuple(int(x) for x in row) for row in out[:count]}


def _markov_scan_numpy(alpha, beta, gamma, lam, bound):
    found = set()
    b = np.arange(1, bound + 1, dtype=np.int64)
    for a in range(1, bound + 1):
        s = lam * a * b
        disc = s * s - 4 * gamma * (alpha * a * a + beta * b * b)
        ok = disc >= 0
        bb, ss, disc = b[ok], s[ok], disc[ok]
        r = _isqrt_array(disc)
        ok = r * r == disc
        bb, ss, r = bb[ok], ss[ok], r[ok]
        for sign in (-1, 1):
            num = ss + sign * r
            keep = (num > 0) & (num % (2 * gamma) == 0)
            if sign == 1:
                keep &= r != 0
            c = num // (2 * gamma)
            keep &= c <= bound
            for x, y in zip(bb[keep], c[keep]):
                found.add((a, int(x), int(y)))
    return found

"""Degenerate fibres of a ruling of the minimal resolution, as strings.

Orientation: strings are stored starting from the curve adjacent to the
(-1)-curve (type I) or to the central curve (type II).  So a type I fibre
with ``left=[a1..ar]``, ``right=[b1..bs]`` has dual graph

    -ar ... -a1  -1  -b1 ... -bs

and a type II fibre with branch length t has dual graph

    -ar ... -a1  -(t+2)  -b1 ... -bs
                    |
                   -1  -2 ... -2      (t curves of self-intersection -2)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError, InvalidInput
from .hj import (
    HJString,
    check_string,
    conjugate_fraction,
    conjugate_pairs,
    hj_evaluate,
    hj_expand,
    is_conjugate_pair,
)
from .singularities import classify_T, grow_t_string, is_t_string, string_quotient


@dataclass(frozen=True)
class FibreI:
    left: HJString
    right: HJString

    def __post_init__(self):
        object.__setattr__(self, "left", check_string(self.left))
        object.__setattr__(self, "right", check_string(self.right))
        if not self.left or not self.right:
            raise InvalidInput("both sides of a type I fibre must be nonempty")

    @property
    def curve_count(self) -> int:
        return len(self.left) + len(self.right) + 1

    def self_intersections(self) -> list[int]:
        return [-b for b in reversed(self.left)] + [-1] + [-b for b in self.right]

    def to_dict(self) -> dict:
        return {
            "type": "I",
            "left": list(self.left),
            "right": list(self.right),
            "chain": self.self_intersections(),
        }


@dataclass(frozen=True)
class FibreII:
    a_string: HJString
    b_string: HJString
    t: int

    def __post_init__(self):
        object.__setattr__(self, "a_string", check_string(self.a_string))
        object.__setattr__(self, "b_string", check_string(self.b_string))
        if not self.a_string or not self.b_string:
            raise InvalidInput("both strings of a type II fibre must be nonempty")

    @property
    def curve_count(self) -> int:
        return len(self.a_string) + len(self.b_string) + 2 + self.t

    def to_dict(self) -> dict:
        chain = (
            [-b for b in reversed(self.a_string)]
            + [-(self.t + 2)]
            + [-b for b in self.b_string]
        )
        return {
            "type": "II",
            "a": list(self.a_string),
            "b": list(self.b_string),
            "t": self.t,
            "chain": chain,
            "branch": [-1] + [-2] * self.t,
        }


def validate_fibre_I(f: FibreI) -> bool:
    return is_conjugate_pair(f.left, f.right)


def validate_fibre_II(f: FibreII) -> bool:
    return f.t >= 0 and is_conjugate_pair(f.a_string, f.b_string)


def assemble_central_string(f: FibreII) -> HJString:
    """[ar, ..., a1, t+2, b1, ..., bs], the chain through the central curve."""
    return f.a_string[::-1] + (f.t + 2,) + f.b_string


def _require_valid(f: FibreII):
    if not validate_fibre_II(f):
        raise InvalidInput(f"invalid type II fibre {f}")


def lemma_T_check(f: FibreII) -> tuple[int, HJString]:
    """The conjugate of the central chain, which must be a T_{t+1}-string."""
    _require_valid(f)
    central = assemble_central_string(f)
    conj = hj_expand(conjugate_fraction(hj_evaluate(central)))
    d = is_t_string(conj)
    if d != f.t + 1:
        raise InconsistencyError(f"{f}: conjugate {list(conj)} has d={d}, expected {f.t + 1}")
    return d, conj


def associated_type_I(f: FibreII) -> FibreI:
    """The type I fibre replacing ``f`` on the toric model.

    Its left side, read from the (-1)-curve, is [bs, ..., b1, t+2, a1, ..., ar];
    the right side is forced by conjugacy and contracts to the same T_{t+1}
    point as in ``lemma_T_check``.
    """
    return associate_with_lemma_T(f)[2]


def associate_with_lemma_T(f: FibreII) -> tuple[int, HJString, FibreI]:
    """``lemma_T_check`` and ``associated_type_I`` sharing one computation."""
    d, t_string = lemma_T_check(f)
    left = assemble_central_string(f)[::-1]
    right = hj_expand(conjugate_fraction(hj_evaluate(left)))
    g = FibreI(left, right)
    if not validate_fibre_I(g):
        raise InconsistencyError(f"{g} is not a valid type I fibre")
    q_right, q_t = string_quotient(right), string_quotient(t_string)
    same_point = q_right.order == q_t.order and q_right.weight in (q_t.weight, q_t.inverse_weight)
    got = classify_T(q_right)
    if not same_point or not got.is_t or got.d != d:
        raise InconsistencyError(f"{g}: right side contracts to {q_right} ({got}), expected {q_t}")
    return d, t_string, g


def enumerate_fibres(max_curves: int) -> list:
    """All valid type I and type II fibres with at most ``max_curves`` components."""
    if max_curves < 3:
        raise InvalidInput("max_curves must be >= 3")
    out = []
    for s, t in conjugate_pairs(max_curves - 1):
        out.append(FibreI(s, t))
    for s, t in conjugate_pairs(max_curves - 2):
        for branch in range(max_curves - 2 - len(s) - len(t) + 1):
            out.append(FibreII(s, t, branch))
    return sorted(out, key=_fibre_key)


def _fibre_key(f):
    if isinstance(f, FibreI):
        return (f.curve_count, 0, f.left, f.right, 0)
    return (f.curve_count, 1, f.a_string, f.b_string, f.t)


def s_strings_from_pairs(t: int, max_len: int) -> set[HJString]:
    """Central chains [ar..a1, t+2, b1..bs] over all conjugate pairs, length <= max_len."""
    return {assemble_central_string(FibreII(a, b, t)) for a, b in conjugate_pairs(max_len - 1)}


def s_strings_by_growth(t: int, max_len: int) -> set[HJString]:
    """Closure of [2, t+2, 2] under the two T-string growth steps, length <= max_len."""
    seed = (2, t + 2, 2)
    if max_len < 3:
        return set()
    out = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for s in frontier:
            if len(s) >= max_len:
                continue
            for g in grow_t_string(s):
                if g not in out:
                    out.add(g)
                    nxt.append(g)
        frontier = nxt
    return out

"""Markov-type equations alpha a^2 + beta b^2 + gamma c^2 = lambda abc and their mutation graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations

from .errors import InvalidInput

Triple = tuple[int, int, int]
POSITIONS = ("a", "b", "c")


@dataclass(frozen=True)
class MarkovEquation:
    family: int
    alpha: int
    beta: int
    gamma: int
    lam: int

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self):
        return f"{self.alpha}a^2 + {self.beta}b^2 + {self.gamma}c^2 = {self.lam}abc"


FAMILIES = {
    1: MarkovEquation(1, 1, 1, 1, 3),
    2: MarkovEquation(2, 1, 1, 2, 4),
    3: MarkovEquation(3, 1, 2, 3, 6),
    4: MarkovEquation(4, 1, 1, 5, 5),
}

_MINIMAL = {
    1: {(1, 1, 1)},
    2: {(1, 1, 1)},
    3: {(1, 1, 1)},
    4: {(1, 2, 1), (2, 1, 1)},
}

# permutations of (a, b, c) preserving each equation
_SYMMETRIES = {
    1: tuple(permutations(range(3))),
    2: ((0, 1, 2), (1, 0, 2)),
    3: ((0, 1, 2),),
    4: ((0, 1, 2), (1, 0, 2)),
}


def equation(family) -> MarkovEquation:
    if isinstance(family, MarkovEquation):
        return family
    try:
        return FAMILIES[int(family)]
    except (KeyError, ValueError):
        raise InvalidInput(f"unknown family {family!r}; expected 1-4") from None


def is_solution(eq, t: Triple) -> bool:
    eq = equation(eq)
    a, b, c = t
    return eq.alpha * a * a + eq.beta * b * b + eq.gamma * c * c == eq.lam * a * b * c


def _position(pos) -> int:
    if isinstance(pos, int) and 0 <= pos < 3:
        return pos
    try:
        return POSITIONS.index(pos)
    except ValueError:
        raise InvalidInput(f"position must be one of a, b, c; got {pos!r}") from None


def mutate(eq, t: Triple, pos) -> Triple:
    """Replace one coordinate by the other root of the equation, viewed as a quadratic in it."""
    eq = equation(eq)
    if min(t) < 1 or not is_solution(eq, t):
        raise InvalidInput(f"{t} does not solve {eq}")
    i = _position(pos)
    j, k = (x for x in range(3) if x != i)
    new = list(t)
    new[i] = eq.lam // eq.coefficients[i] * t[j] * t[k] - t[i]
    return tuple(new)


def vieta_partner(eq, t: Triple, pos) -> int:
    """The mutated coordinate from the product of roots instead of their sum."""
    eq = equation(eq)
    i = _position(pos)
    j, k = (x for x in range(3) if x != i)
    co = eq.coefficients
    num = co[j] * t[j] ** 2 + co[k] * t[k] ** 2
    q, r = divmod(num, co[i] * t[i])
    if r:
        raise InvalidInput(f"{t} is not a solution: Vieta partner is not integral")
    return q


def canonicalize(eq, t: Triple) -> Triple:
    """Lexicographically smallest image of ``t`` under the equation's symmetry group."""
    eq = equation(eq)
    return min(tuple(t[p] for p in perm) for perm in _SYMMETRIES[eq.family])


def minimal_solutions(eq) -> set[Triple]:
    eq = equation(eq)
    sols = set(_MINIMAL[eq.family])
    for t in sols:
        assert is_solution(eq, t), (eq, t)
        for pos in POSITIONS:
            assert sum(mutate(eq, t, pos)) >= sum(t), (eq, t, pos)
    return sols


def descend(eq, t: Triple) -> list[Triple]:
    """Path of sum-decreasing mutations from ``t`` down to a minimal solution."""
    eq = equation(eq)
    path = [tuple(t)]
    while True:
        cur = path[-1]
        step = min((mutate(eq, cur, p) for p in POSITIONS), key=sum)
        if sum(step) >= sum(cur):
            return path
        path.append(step)


@dataclass
class MutationGraph:
    family: int
    bound: int
    nodes: list[Triple] = field(default_factory=list)
    # (source, position, target) for each retained mutation of each canonical node
    edges: list[tuple[Triple, str, Triple]] = field(default_factory=list)

    def degrees(self) -> dict[Triple, int]:
        deg = {v: 0 for v in self.nodes}
        for src, _, _ in self.edges:
            deg[src] += 1
        return deg

    def to_dot(self) -> str:
        lines = [f'digraph "family{self.family}" {{']
        for v in self.nodes:
            lines.append(f'  "{_label(v)}";')
        for src, pos, dst in self.edges:
            lines.append(f'  "{_label(src)}" -> "{_label(dst)}" [label="{pos}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label(t: Triple) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def solutions_up_to(eq, bound: int) -> set[Triple]:
    """Every solution (not canonicalized) with max entry <= bound.

    Frontier search from the minimal solutions.  Pruning at the bound is safe:
    a descending mutation path never increases the maximum entry.
    """
    eq = equation(eq)
    roots = [t for t in minimal_solutions(eq) if max(t) <= bound]
    seen = set(roots)
    queue = deque(roots)
    while queue:
        t = queue.popleft()
        for pos in POSITIONS:
            nxt = mutate(eq, t, pos)
            if max(nxt) <= bound and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def enumerate_graph(eq, bound: int) -> MutationGraph:
    eq = equation(eq)
    if bound < 1:
        raise InvalidInput("bound must be >= 1")
    nodes = sorted({canonicalize(eq, t) for t in solutions_up_to(eq, bound)})
    edges = []
    for v in nodes:
        for pos in POSITIONS:
            w = canonicalize(eq, mutate(eq, v, pos))
            if max(w) <= bound:
                edges.append((v, pos, w))
    return MutationGraph(eq.family, bound, nodes, edges)

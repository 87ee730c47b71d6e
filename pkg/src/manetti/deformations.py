"""Q-Gorenstein deformations: local outcomes at T-points and their global products.

A T_d point 1/dn^2(1, dna-1) deforms over a curve to a general fibre whose
singularities are, for a partition e1 >= ... >= es of d, either
A_{e1-1}, ..., A_{es-1} or T_{e1} of the same n, a together with A_{e2-1}, ..., A_{es-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import InconsistencyError, InvalidInput
from .markov import enumerate_graph
from .singularities import TClass, milnor
from .wps import Basket, SurfaceRecord, build_record, make_basket


def partitions(d: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of d as weakly decreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class LocalOutcome:
    source: TClass
    # the part carrying the surviving T-point, if any, is listed first
    partition: tuple[int, ...]
    keeps_t_part: bool
    basket: Basket

    @property
    def is_trivial(self) -> bool:
        return self.keeps_t_part and len(self.partition) == 1

    @property
    def is_full_a_conversion(self) -> bool:
        """T_d -> A_{d-1}."""
        return not self.keeps_t_part and len(self.partition) == 1

    @property
    def milnor_sum(self) -> int:
        return sum(milnor(t) for t in self.basket)


def _outcome(t: TClass, parts: tuple[int, ...], keep: bool) -> LocalOutcome:
    entries = [TClass.du_val_a(e - 1) for e in parts[keep:]]
    if keep:
        entries.append(TClass.t(parts[0], t.n, t.a))
    return LocalOutcome(t, parts, keep, make_basket(entries))


def local_outcomes(t: TClass) -> list[LocalOutcome]:
    """Every possible singularity set of the general fibre, one outcome per distinct basket.

    Order is deterministic: the trivial deformation comes first, then the
    partitions of d in reverse lexicographic order.
    """
    if not t.is_t:
        raise InvalidInput(f"local outcomes need a T-singularity, got {t}")
    candidates = [_outcome(t, (t.d,), True), _outcome(t, (t.d,), False)]
    for parts in partitions(t.d):
        if len(parts) == 1:
            continue
        candidates.append(_outcome(t, parts, False))
        for e in dict.fromkeys(parts):
            i = parts.index(e)
            candidates.append(_outcome(t, (e,) + parts[:i] + parts[i + 1:], True))
    seen = {}
    for c in candidates:
        seen.setdefault(c.basket, c)
    return list(seen.values())


@dataclass
class DeformationPoset:
    root: SurfaceRecord
    elements: list[SurfaceRecord]


def surface_outcomes(root: SurfaceRecord) -> DeformationPoset:
    """All Q-Gorenstein deformations of ``root``, deduplicated by basket."""
    if any(not p.is_t for p in root.basket):
        raise InvalidInput("every basket entry of the root must be a T-singularity")
    per_point = [local_outcomes(p) for p in root.basket]
    elements = {}
    for choice in product(*per_point):
        basket = make_basket(x for o in choice for x in o.basket)
        if basket in elements:
            continue
        rho = 10 - root.k2 - sum(milnor(x) for x in basket)
        elements[basket] = SurfaceRecord(
            root.family, root.triple, root.weights, root.k2, basket, rho, tuple(choice)
        )
    return DeformationPoset(root, list(elements.values()))


def rho_one_filter(p: DeformationPoset) -> list[SurfaceRecord]:
    """Elements where every point either persists or becomes A_{d-1}.

    The structural test is checked against rho = 1 from the Noether identity.
    """
    out = []
    for e in p.elements:
        structural = all(o.is_trivial or o.is_full_a_conversion for o in e.outcomes)
        if structural != (e.rho == 1):
            raise InconsistencyError(f"{e.basket}: structural={structural} but rho={e.rho}")
        if structural:
            out.append(e)
    return out


def manetti_enumerate(bound: int) -> list[SurfaceRecord]:
    """Every Manetti surface over family-1 triples with entries <= bound.

    Each canonical Markov triple contributes its weighted plane and all its
    Q-Gorenstein deformations; records carry the root triple.
    """
    if bound < 1:
        raise InvalidInput("bound must be >= 1")
    out = []
    for t in enumerate_graph(1, bound).nodes:
        out.extend(surface_outcomes(build_record(1, t)).elements)
    return out

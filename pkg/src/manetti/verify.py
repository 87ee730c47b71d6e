"""End-to-end invariant suite.

Each check returns how many objects it examined and a list of failures.
``verify_all`` runs them at the configured bounds and collects a report;
failures and exceptions are data, never raised.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd

from . import kernels
from .classifier import degree_patterns, match_family, solve_degree_equation
from .deformations import (
    local_outcomes,
    manetti_enumerate,
    partitions,
    rho_one_filter,
    surface_outcomes,
)
from .fibres import (
    FibreII,
    associate_with_lemma_T,
    s_strings_by_growth,
    s_strings_from_pairs,
    validate_fibre_I,
)
from .hj import (
    conjugate_fraction,
    conjugate_pairs_by_numerator,
    hj_evaluate,
    hj_expand,
    is_conjugate_pair,
    reverse_string,
)
from .markov import (
    FAMILIES,
    POSITIONS,
    canonicalize,
    descend,
    enumerate_graph,
    minimal_solutions,
    mutate,
    solutions_up_to,
    vieta_partner,
)
from .singularities import (
    CyclicQuotient,
    TClass,
    classify_T,
    index_and_cover,
    is_t_string,
    milnor,
    string_quotient,
    t_matches,
    t_string_generate,
)
from .wps import anticanonical_sections, build_record, d_profile, k_squared, weights_from_triple

FAMILY_K2 = {1: 9, 2: 8, 3: 6, 4: 5}
MAX_COUNTEREXAMPLES = 10


@dataclass
class VerifyBounds:
    hj_n: int = 500
    t_len: int = 8
    t_entry: int = 12
    t_d: int = 5
    t_class_len: int = 10
    t_order: int = 10_000
    markov_bound: int = 1000
    triple_bound: int = 100
    record_bound: int = 50
    manetti_bound: int = 50
    lemma_num: int = 300
    lemma_t: int = 5
    s_len: int = 10
    n_bound: int = 30

    @classmethod
    def quick(cls) -> "VerifyBounds":
        return cls(hj_n=60, t_len=5, t_class_len=7, t_order=500, markov_bound=100,
                   triple_bound=30, record_bound=20, manetti_bound=20, lemma_num=40,
                   lemma_t=2, s_len=7, n_bound=10)


def _fractions(n_max: int):
    for n in range(1, n_max + 1):
        for a in range(1, n + 1):
            if gcd(n, a) == 1 and (a < n or n == 1):
                yield Fraction(n, a)


def check_hj(b: VerifyBounds, seeds):
    bad, scope = [], 0
    for f in _fractions(b.hj_n):
        scope += 1
        s = hj_expand(f)
        n, a = f.numerator, f.denominator
        if hj_evaluate(s) != f:
            bad.append(f"round trip {f}")
        inv = pow(a, -1, n) if n > 1 else 1
        if hj_evaluate(reverse_string(s)) != Fraction(n, inv):
            bad.append(f"reversal {f}")
        if n >= 2 and conjugate_fraction(conjugate_fraction(f)) != f:
            bad.append(f"involution {f}")
        if sum(s) - len(s) >= max(n, 1) and n > 1:
            bad.append(f"length bound {f}")
    return scope, bad


def check_conjugate_closure(b: VerifyBounds, seeds):
    grown = set(conjugate_pairs_by_numerator(b.hj_n))
    expected = {
        (hj_expand(f), hj_expand(conjugate_fraction(f)))
        for f in _fractions(b.hj_n) if f.numerator >= 2
    }
    bad = [f"unreachable {p}" for p in sorted(expected - grown)]
    bad += [f"spurious {p}" for p in sorted(grown - expected)]
    for s, t in grown:
        if not is_conjugate_pair(s[::-1], t[::-1]):
            bad.append(f"reversal breaks conjugacy {s},{t}")
    return len(expected), bad


def check_t_duality(b: VerifyBounds, seeds):
    if b.t_len < 1 or b.t_d < 1:
        return 0, []
    seeds = seeds or {}
    recognised = kernels.t_string_scan(b.t_len, b.t_entry, b.t_d)
    generated = {}
    for d in range(1, b.t_d + 1):
        for s in t_string_generate(d, b.t_len, seeds.get(d)):
            if max(s) <= b.t_entry:
                generated[s] = d
    bad = [f"{list(s)} generated as T{d}, recognised as {recognised.get(s)}"
           for s, d in sorted(generated.items()) if recognised.get(s) != d]
    bad += [f"{list(s)} recognised as T{d} but not generated"
            for s, d in sorted(recognised.items()) if s not in generated]
    for s in recognised:
        if is_t_string(s) != recognised[s] or is_t_string(s[::-1]) != recognised[s]:
            bad.append(f"{list(s)}: library recognition disagrees with scan")
    return len(recognised) + len(generated), bad


def check_t_classification(b: VerifyBounds, seeds):
    bad, scope = [], 0
    for d in range(1, b.t_d + 1):
        for s in t_string_generate(d, b.t_class_len):
            scope += 1
            t = classify_T(string_quotient(s))
            if not t.is_t or t.d != d or milnor(t) != d - 1:
                bad.append(f"{list(s)} classifies as {t}, expected T{d}")
                continue
            index, cover = index_and_cover(t)
            if t.d * t.n ** 2 != index ** 2 * t.d or milnor(cover) != t.d * t.n - 1:
                bad.append(f"{list(s)}: index/cover mismatch")
    return scope, bad


def check_t_uniqueness(b: VerifyBounds, seeds):
    # every quotient with some T-match arises from a (d, n, a); visit exactly those
    seen = set()
    bad = []
    for order in range(2, b.t_order + 1):
        n = 1
        while n * n <= order:
            if order % (n * n) == 0:
                d = order // (n * n)
                for a in range(1, n + 1):
                    if gcd(a, n) == 1:
                        w = (d * n * a - 1) % order
                        if gcd(w, order) == 1:
                            seen.add((order, w))
            n += 1
    for order, w in seen:
        q = CyclicQuotient(order, w)
        ds = {d for d, _, _ in t_matches(q)}
        if len(ds) != 1:
            bad.append(f"{q}: d in {sorted(ds)}")
    return len(seen), bad


def check_markov_graphs(b: VerifyBounds, seeds):
    bad, scope = [], 0
    if b.triple_bound < 1:
        return 0, []
    for fam, eq in FAMILIES.items():
        sols = solutions_up_to(eq, b.triple_bound)
        brute = kernels.markov_scan(eq.alpha, eq.beta, eq.gamma, eq.lam, b.triple_bound)
        if sols != brute:
            bad.append(f"family {fam}: frontier {len(sols)} vs brute force {len(brute)}")
        graph = enumerate_graph(eq, b.triple_bound)
        if graph.nodes != sorted({canonicalize(eq, t) for t in brute}):
            bad.append(f"family {fam}: canonical node set differs from brute force")
        minimal = minimal_solutions(eq)
        for t in sols:
            scope += 1
            for pos in POSITIONS:
                m = mutate(eq, t, pos)
                if mutate(eq, m, pos) != t:
                    bad.append(f"family {fam}: involution fails at {t},{pos}")
                if m[POSITIONS.index(pos)] != vieta_partner(eq, t, pos):
                    bad.append(f"family {fam}: Vieta forms disagree at {t},{pos}")
            path = descend(eq, t)
            sums = [sum(x) for x in path]
            if path[-1] not in minimal or any(x <= y for x, y in zip(sums, sums[1:])):
                bad.append(f"family {fam}: descent from {t} ends at {path[-1]}")
    return scope, bad


def check_markov_family1(b: VerifyBounds, seeds):
    if b.markov_bound < 1:
        return 0, []
    graph = enumerate_graph(1, b.markov_bound)
    brute = kernels.markov_scan(1, 1, 1, 3, b.markov_bound)
    expected = sorted({tuple(sorted(t)) for t in brute})
    bad = [] if graph.nodes == expected else [
        f"graph has {len(graph.nodes)} nodes, brute force {len(expected)}"
    ]
    for t in graph.nodes:
        for pos in POSITIONS:
            if mutate(1, mutate(1, t, pos), pos) != t:
                bad.append(f"involution fails at {t},{pos}")
    return len(graph.nodes), bad


def _records(bound: int):
    for fam in FAMILIES:
        if bound < 1:
            continue
        for t in enumerate_graph(fam, bound).nodes:
            yield fam, t, build_record(fam, t)


def check_family_constants(b: VerifyBounds, seeds):
    bad, scope = [], 0
    for fam in FAMILIES:
        if b.triple_bound < 1:
            continue
        for t in solutions_up_to(fam, b.triple_bound):
            scope += 1
            k2 = k_squared(weights_from_triple(fam, t))
            if k2 != FAMILY_K2[fam]:
                bad.append(f"family {fam} {t}: K^2 = {k2}")
    return scope, bad


def check_records(b: VerifyBounds, seeds):
    """Noether, Riemann-Roch, T-only baskets, d-sum and mutation invariance."""
    bad, scope = [], 0
    profiles = {}
    for fam, t, rec in _records(b.record_bound):
        scope += 1
        if rec.k2 + rec.rho + rec.milnor_sum != 10:
            bad.append(f"Noether fails on {rec.weights}")
        if anticanonical_sections(rec.weights, check=False) != 1 + rec.k2:
            bad.append(f"Riemann-Roch fails on {rec.weights}")
        if not all(p.is_t for p in rec.basket):
            bad.append(f"non-T basket on {rec.weights}")
        prof = d_profile(rec.weights)
        if sum(prof) != 12 - rec.k2:
            bad.append(f"d-sum fails on {rec.weights}")
        profiles.setdefault(fam, set()).add((rec.k2, prof))
        for e in surface_outcomes(rec).elements:
            scope += 1
            if e.k2 != rec.k2 or e.k2 + e.rho + e.milnor_sum != 10:
                bad.append(f"Noether/K^2 fails on deformation {e.basket} of {rec.weights}")
    for fam, profs in profiles.items():
        if len(profs) != 1:
            bad.append(f"family {fam}: K^2/d-profile varies: {sorted(profs)}")
    return scope, bad


def check_deformations(b: VerifyBounds, seeds):
    bad = []
    got = {o.basket for o in local_outcomes(TClass.t(2, 2, 1))}
    want = {
        (TClass.t(2, 2, 1),), (TClass.t(1, 2, 1),), (TClass.du_val_a(1),), (),
    }
    if got != want:
        bad.append(f"local outcomes of 1/8(1,3): {sorted(map(str, got))}")
    scope = 1
    for d in range(1, 9):
        for n, a in ((1, 1), (2, 1), (3, 2)):
            if d == 1 and n == 1:
                continue
            scope += 1
            t = TClass.t(d, n, a)
            parts = list(partitions(d))
            if n == 1:
                expected = len(parts)
            else:
                expected = len(parts) + sum(len(set(p)) for p in parts)
            if len(local_outcomes(t)) != expected:
                bad.append(f"{t}: {len(local_outcomes(t))} outcomes, expected {expected}")
    for fam, t, rec in _records(b.record_bound):
        poset = surface_outcomes(rec)
        scope += 1
        try:
            selected = rho_one_filter(poset)
        except AssertionError as exc:
            bad.append(str(exc))
            continue
        if {e.basket for e in selected} != {e.basket for e in poset.elements if e.rho == 1}:
            bad.append(f"rho-one filter disagrees on {rec.weights}")
        root_mu = rec.milnor_sum
        for e in poset.elements:
            preserves = all(o.milnor_sum == o.source.d - 1 for o in e.outcomes)
            if e.milnor_sum > root_mu or (e.milnor_sum == root_mu) != preserves:
                bad.append(f"mu monotonicity fails on {e.basket}")
    return scope, bad


def check_manetti(b: VerifyBounds, seeds):
    if b.manetti_bound < 1:
        return 0, []
    by_root = Counter(r.triple for r in manetti_enumerate(b.manetti_bound))
    bad = []
    for t, count in sorted(by_root.items()):
        singular = len(build_record(1, t).basket)
        if count != 2 ** singular:
            bad.append(f"{t}: {count} surfaces, expected 2^{singular}")
    return len(by_root), bad


def check_fibres(b: VerifyBounds, seeds):
    bad, scope = [], 0
    for s, t in conjugate_pairs_by_numerator(b.lemma_num):
        for branch in range(b.lemma_t + 1):
            scope += 1
            f = FibreII(s, t, branch)
            try:
                d, conj, g = associate_with_lemma_T(f)
            except AssertionError as exc:
                bad.append(str(exc))
                continue
            if d != branch + 1 or not validate_fibre_I(g):
                bad.append(f"{f}: d={d}, type I valid={validate_fibre_I(g)}")
            q = classify_T(string_quotient(g.right))
            if not q.is_t or q.d != branch + 1:
                bad.append(f"{f}: right string contracts to {q}")
    for branch in range(min(b.lemma_t, 3) + 1):
        scope += 1
        if s_strings_from_pairs(branch, b.s_len) != s_strings_by_growth(branch, b.s_len):
            bad.append(f"S_{branch}-strings: pair assembly and growth closure differ")
    return scope, bad


def check_classification(b: VerifyBounds, seeds):
    if b.n_bound < 1:
        return 0, []
    bad = []
    square = sorted(d for d, _, L in degree_patterns() if L is not None)
    sols = solve_degree_equation(b.n_bound)
    found = sorted({s.d for s in sols})
    if square != [(1, 1, 1), (1, 1, 2), (1, 1, 5), (1, 2, 3)] or found != square:
        bad.append(f"d-patterns: square L {square}, with solutions {found}")
    matched = set()
    for s in sols:
        try:
            matched.add(match_family(s))
        except Exception as exc:
            bad.append(f"{s}: {exc}")
    expected = {(fam, t) for fam in FAMILIES for t in enumerate_graph(fam, b.n_bound).nodes}
    bad += [f"family triple {p} missing from degree search" for p in sorted(expected - matched)]
    bad += [f"degree solution {p} is not a family triple" for p in sorted(matched - expected)]
    if len(matched) != len(sols):
        bad.append("distinct degree solutions collapse to the same family triple")
    return len(sols), bad


CHECKS = {
    "hj_suite": check_hj,
    "conjugate_closure": check_conjugate_closure,
    "t_string_duality": check_t_duality,
    "t_classification": check_t_classification,
    "t_uniqueness": check_t_uniqueness,
    "markov_graphs": check_markov_graphs,
    "markov_family1": check_markov_family1,
    "family_constants": check_family_constants,
    "surface_records": check_records,
    "deformations": check_deformations,
    "manetti_count": check_manetti,
    "fibres_lemma_T": check_fibres,
    "classification": check_classification,
}


def run_check(name: str, bounds: VerifyBounds | None = None, seeds=None) -> dict:
    bounds = bounds or VerifyBounds()
    try:
        scope, failures = CHECKS[name](bounds, seeds)
        error = None
    except Exception as exc:  # failures are data
        scope, failures, error = 0, [], f"{type(exc).__name__}: {exc}"
    return {
        "name": name,
        "passed": error is None and not failures,
        "scope": scope,
        "failures": len(failures),
        "counterexamples": failures[:MAX_COUNTEREXAMPLES],
        "error": error,
    }


def verify_all(bounds: VerifyBounds | None = None, seeds=None, only=None) -> dict:
    """Run every check; ``seeds`` maps d to a replacement T_d seed (test fixtures)."""
    bounds = bounds or VerifyBounds()
    names = list(CHECKS) if only is None else list(only)
    results = [run_check(n, bounds, seeds) for n in names]
    return {
        "passed": all(r["passed"] for r in results),
        "bounds": asdict(bounds),
        "backend": kernels.BACKEND,
        "checks": results,
    }

from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from manetti import InconsistencyError, InvalidInput
from manetti.singularities import (
    CyclicQuotient,
    TClass,
    classify_T,
    grow_t_string,
    index_and_cover,
    is_t_string,
    milnor,
    normalize,
    resolution_string,
    string_quotient,
    t_degree_arithmetic,
    t_degree_peeling,
    t_matches,
    t_seed,
    t_string_generate,
)

import oracles


@pytest.mark.parametrize(
    "args, expected",
    [((4, 1, 25), (4, 1)), ((1, 1, 1), (1, 0)), ((25, 1, 4), (25, 4)), ((5, 1, 4), (5, 4))],
)
def test_normalize_examples(args, expected):
    q = normalize(*args)
    assert (q.order, q.weight) == expected


def test_normalize_rejects_non_isolated():
    with pytest.raises(InvalidInput):
        normalize(6, 2, 1)
    with pytest.raises(InvalidInput):
        normalize(0, 1, 1)
    with pytest.raises(InvalidInput):
        CyclicQuotient(6, 4)


@given(st.integers(2, 5000), st.data())
def test_normalize_is_canonical_and_orientation_free(order, data):
    a = data.draw(st.integers(1, order - 1).filter(lambda a: gcd(a, order) == 1))
    q = normalize(order, 1, a)
    assert q.is_canonical
    assert q == normalize(order, a, 1)
    assert q.weight in (a, pow(a, -1, order))


@pytest.mark.parametrize(
    "order, weight, expected",
    [
        (4, 1, TClass.t(1, 2, 1)),
        (9, 5, TClass.t(1, 3, 2)),
        (8, 3, TClass.t(2, 2, 1)),
        (5, 4, TClass.t(5, 1, 1)),
        (5, 1, TClass.not_t()),
        (1, 0, TClass.smooth()),
    ],
)
def test_classify_examples(order, weight, expected):
    assert classify_T(CyclicQuotient(order, weight)) == expected


def test_classify_both_orientations():
    # 1/9(1,2) is the inverse orientation of 1/9(1,5)
    assert classify_T(normalize(9, 1, 5)) == TClass.t(1, 3, 1)
    assert classify_T(normalize(5, 1, 1)).kind == "not-T"


def test_t_matches_against_naive_search():
    for order in range(2, 400):
        for w in range(1, order):
            if gcd(w, order) != 1:
                continue
            q = CyclicQuotient(order, w)
            assert t_matches(q, w) == sorted(oracles.t_descriptions(order, w)), (order, w)


@given(st.integers(1, 30), st.integers(1, 40), st.data())
def test_classification_recovers_parameters(d, n, data):
    a = data.draw(st.integers(1, n).filter(lambda a: gcd(a, n) == 1))
    t = TClass.t(d, n, a)
    if not t.is_t:
        return
    got = classify_T(t.quotient())
    assert (got.d, got.n) == (d, n)
    assert got.quotient() == t.quotient()
    assert oracles.t_degree(t.quotient().order, t.quotient().weight) == d


def test_tclass_validation():
    with pytest.raises(InvalidInput):
        TClass.t(1, 4, 2)
    assert TClass.t(1, 1, 1) == TClass.smooth()
    assert TClass.du_val_a(0) == TClass.smooth()
    assert str(TClass.du_val_a(3)) == "A3"
    assert str(TClass.t(2, 2, 1)) == "T2(1/8(1,3))"


def test_milnor_examples():
    assert milnor(TClass.t(1, 2, 1)) == 0
    assert milnor(TClass.t(5, 1, 1)) == 4
    assert milnor(TClass.smooth()) == 0
    with pytest.raises(InvalidInput):
        milnor(TClass.not_t())


@pytest.mark.parametrize(
    "t, index, cover",
    [(TClass.t(1, 2, 1), 2, 1), (TClass.t(2, 2, 1), 2, 3), (TClass.t(3, 1, 1), 1, 2)],
)
def test_index_and_cover(t, index, cover):
    assert index_and_cover(t) == (index, TClass.du_val_a(cover))


def test_resolution_string_examples():
    assert resolution_string(CyclicQuotient(4, 1)) == (4,)
    assert resolution_string(CyclicQuotient(1, 0)) == ()
    assert resolution_string(CyclicQuotient(25, 14)) == (2, 5, 3)
    assert string_quotient((3, 3)) == CyclicQuotient(8, 3)


def test_generate_examples():
    assert t_string_generate(1, 2) == {(4,), (5, 2), (2, 5)}
    assert t_string_generate(2, 2) == {(3, 3)}
    assert t_string_generate(1, 3) == {(4,), (5, 2), (2, 5), (6, 2, 2), (2, 5, 3), (3, 5, 2), (2, 2, 6)}
    assert t_seed(4) == (3, 2, 2, 3)
    with pytest.raises(InvalidInput):
        t_seed(0)


def test_generated_counts_are_powers_of_two():
    # from a length-k seed there are 2^j strings of length k + j
    for d in range(1, 6):
        strings = t_string_generate(d, d + 5)
        base = len(t_seed(d))
        for extra in range(0, 5):
            assert sum(len(s) == base + extra for s in strings) == 2 ** extra


@pytest.mark.parametrize("s, d", [((4,), 1), ((3, 3), 2), ((3, 2), None), ((2, 2, 2), None), ((5, 2), 1)])
def test_is_t_string_examples(s, d):
    assert is_t_string(s) == d


def test_is_t_string_rejects_empty():
    with pytest.raises(InvalidInput):
        is_t_string(())


@settings(max_examples=300)
@given(st.lists(st.integers(2, 8), min_size=1, max_size=8))
def test_peeling_agrees_with_arithmetic(s):
    d = t_degree_arithmetic(s)
    assert d == t_degree_peeling(s)
    assert d == oracles.t_string_degree(s)


@given(st.integers(1, 6), st.lists(st.booleans(), max_size=8))
def test_growth_keeps_degree(d, steps):
    s = t_seed(d)
    for left in steps:
        s = list(grow_t_string(s))[0 if left else 1]
    assert is_t_string(s) == d
    t = classify_T(string_quotient(s))
    assert milnor(t) == d - 1


def test_inconsistent_recognition_raises(monkeypatch):
    import manetti.singularities as sing

    monkeypatch.setattr(sing, "t_degree_peeling", lambda s: None)
    with pytest.raises(InconsistencyError):
        sing.is_t_string((4,))

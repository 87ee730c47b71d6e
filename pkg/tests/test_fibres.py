import pytest
from hypothesis import given, strategies as st

from manetti import InvalidInput
from manetti.fibres import (
    FibreI,
    FibreII,
    assemble_central_string,
    associate_with_lemma_T,
    associated_type_I,
    enumerate_fibres,
    lemma_T_check,
    s_strings_by_growth,
    s_strings_from_pairs,
    validate_fibre_I,
    validate_fibre_II,
)
from manetti.hj import LEFT_RAISE, RIGHT_PREPEND, grow_conjugate_pair, hj_evaluate
from manetti.singularities import classify_T, string_quotient

import oracles


@pytest.mark.parametrize(
    "left, right, ok", [((2, 2, 2), (4,), True), ((2,), (2,), True), ((3,), (3,), False)]
)
def test_validate_type_I(left, right, ok):
    assert validate_fibre_I(FibreI(left, right)) is ok


@pytest.mark.parametrize(
    "a, b, t, ok", [((2,), (2,), 0, True), ((2,), (2,), 1, True), ((2, 2), (2,), 0, False)]
)
def test_validate_type_II(a, b, t, ok):
    assert validate_fibre_II(FibreII(a, b, t)) is ok


def test_fibre_shapes():
    f = FibreI((2, 3), (2, 2, 2))
    assert f.curve_count == 6
    assert f.self_intersections() == [-3, -2, -1, -2, -2, -2]
    g = FibreII((2,), (2,), 2)
    assert g.curve_count == 6
    assert g.to_dict()["branch"] == [-1, -2, -2]
    with pytest.raises(InvalidInput):
        FibreI((), (2,))


@pytest.mark.parametrize(
    "a, b, t, central",
    [((2,), (2,), 0, (2, 2, 2)), ((2,), (2,), 1, (2, 3, 2)), ((2, 2), (3,), 0, (2, 2, 2, 3))],
)
def test_central_string_examples(a, b, t, central):
    assert assemble_central_string(FibreII(a, b, t)) == central


def test_lemma_T_examples():
    assert lemma_T_check(FibreII((2,), (2,), 0)) == (1, (4,))
    assert lemma_T_check(FibreII((2,), (2,), 1)) == (2, (3, 3))
    d, s = lemma_T_check(FibreII((2, 2), (3,), 0))
    assert d == 1 and s == (5, 2)
    with pytest.raises(InvalidInput):
        lemma_T_check(FibreII((2, 2), (2,), 0))


def test_associated_type_I_examples():
    assert associated_type_I(FibreII((2,), (2,), 0)) == FibreI((2, 2, 2), (4,))
    assert associated_type_I(FibreII((2,), (2,), 1)) == FibreI((2, 3, 2), (3, 3))
    g = associated_type_I(FibreII((2, 2), (3,), 0))
    # the right side contracts to the same point as [5, 2], read from the (-1)-curve
    assert hj_evaluate(g.right).numerator == 9
    assert string_quotient(g.right) == string_quotient((5, 2)[::-1])


@st.composite
def type_II(draw):
    pair = ((2,), (2,))
    for side in draw(st.lists(st.sampled_from([LEFT_RAISE, RIGHT_PREPEND]), max_size=10)):
        pair = grow_conjugate_pair(*pair, side)
    return FibreII(pair[0], pair[1], draw(st.integers(0, 6)))


@given(type_II())
def test_lemma_T_property(f):
    d, t_string, g = associate_with_lemma_T(f)
    assert d == f.t + 1
    assert oracles.t_string_degree(t_string) == d
    assert validate_fibre_I(g)
    right = classify_T(string_quotient(g.right))
    assert right.is_t and right.d == d
    assert g.left == assemble_central_string(f)[::-1]


def test_enumerate_counts():
    assert len(enumerate_fibres(3)) == 1
    assert len(enumerate_fibres(4)) == 4
    five = enumerate_fibres(5)
    assert len(five) == 11
    assert FibreII((2,), (2,), 1) in five
    assert all(f.curve_count <= 5 for f in five)
    with pytest.raises(InvalidInput):
        enumerate_fibres(2)


@pytest.mark.parametrize("t", range(4))
def test_s_string_constructions_agree(t):
    assert s_strings_from_pairs(t, 9) == s_strings_by_growth(t, 9)

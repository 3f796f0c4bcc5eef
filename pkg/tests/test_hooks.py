from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from piecewise_rsk import (
    ContentWeights,
    NTableau,
    Partition,
    TruncatedSeries,
    check_weight_formula,
    check_whlf,
    rpp_gf,
    rpp_gf_brute,
    syt_enumerate,
    t_x_value,
    weighted_rpp_gf_check,
    x_hook_length,
)
from piecewise_rsk.errors import (
    BoxOutOfShape,
    CapExceeded,
    InvalidInput,
    MissingWeight,
    NonPositiveWeight,
    ZeroDenominator,
)
from piecewise_rsk.hooks import hook_product, syt_from_extension, weighted_rpp_gf, whlf_sides
from piecewise_rsk.partitions import partitions_up_to

from .strategies import partitions, tableaux

CHOICES = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


def weights_for(shape, values):
    return ContentWeights({c: values[(c - 1 + shape.rows) % len(values)] for c in range(1 - shape.rows, shape.cols)})


def test_series_arithmetic():
    assert TruncatedSeries.geometric(2, 6).to_list() == [1, 0, 1, 0, 1, 0, 1]
    one = TruncatedSeries.geometric(1, 4)
    assert (one * one).to_list() == [1, 2, 3, 4, 5]
    assert (one + one).to_list() == [2, 2, 2, 2, 2]
    assert (one * TruncatedSeries.one(2)).degree == 2
    assert TruncatedSeries((1, 2, 3), 1).to_list() == [1, 2]
    with pytest.raises(IndexError):
        one[5]
    with pytest.raises(ZeroDenominator):
        TruncatedSeries.geometric(0, 3)
    with pytest.raises(InvalidInput):
        TruncatedSeries((), -1)


def test_hook_product_series():
    expected = [1, 2, 3, 5, 7, 9, 12]
    shape = Partition((2, 1))
    assert rpp_gf(shape, 6).to_list() == expected
    assert rpp_gf_brute(shape, 6).to_list() == expected
    assert rpp_gf(Partition((1,)), 5).to_list() == [1] * 6


@pytest.mark.parametrize('shape', list(partitions_up_to(4)))
def test_generating_function_matches_enumeration(shape):
    assert rpp_gf(shape, 6) == rpp_gf_brute(shape, 6)


def test_series_caps():
    with pytest.raises(CapExceeded):
        rpp_gf(Partition((1,)), 41)
    with pytest.raises(CapExceeded):
        rpp_gf_brute(Partition((13,)), 2)


def test_content_weights():
    weights = ContentWeights.from_dict({'-1': '1/2', '0': 2, '1': '3'})
    assert weights[-1] == Fraction(1, 2)
    assert weights.to_dict() == {'-1': '1/2', '0': '2', '1': '3'}
    assert not weights.is_integral()
    with pytest.raises(MissingWeight):
        weights[2]
    with pytest.raises(NonPositiveWeight):
        ContentWeights({0: 0})
    with pytest.raises(InvalidInput):
        ContentWeights.from_dict({'0': 'x'})
    with pytest.raises(MissingWeight):
        ContentWeights({0: 1}).validate(Partition((2,)))


def test_x_hook_length():
    shape = Partition((2, 1))
    weights = ContentWeights({-1: 1, 0: 2, 1: 3})
    assert x_hook_length(shape, (1, 1), weights) == 6
    assert x_hook_length(shape, (1, 2), weights) == 3
    uniform = ContentWeights.uniform(shape)
    assert all(x_hook_length(shape, b, uniform) == shape.hook_length(b) for b in shape.boxes())
    with pytest.raises(BoxOutOfShape):
        x_hook_length(shape, (2, 2), weights)


def test_weighted_series():
    shape = Partition((2, 1))
    weights = ContentWeights({-1: 1, 0: 2, 1: 3})
    assert weighted_rpp_gf_check(shape, weights, 10)
    with pytest.raises(NonPositiveWeight):
        weighted_rpp_gf(shape, ContentWeights({-1: 1, 0: Fraction(1, 2), 1: 3}), 4)


@given(tableaux(), st.sampled_from(CHOICES), st.sampled_from(CHOICES))
def test_weighted_size_of_image(tableau, a, b):
    assert check_weight_formula(tableau, weights_for(tableau.shape, (a, b)))


def test_standard_tableaux():
    shape = Partition((3, 2))
    syt = list(syt_enumerate(shape))
    assert len(syt) == shape.count_syt() == 5
    assert len(syt) * hook_product(shape) == 120
    t = syt_from_extension([(1, 1), (2, 1), (1, 2), (1, 3), (2, 2)])
    assert t.to_lists() == [[1, 3, 4], [2, 5]]
    assert t_x_value(t, ContentWeights.uniform(shape)) == Fraction(1, 120)


def test_weighted_hook_length_example():
    shape = Partition((2, 1))
    weights = ContentWeights({-1: 1, 0: 2, 1: 3})
    t1 = NTableau.from_rows([[1, 2], [3]])
    t2 = NTableau.from_rows([[1, 3], [2]])
    assert t_x_value(t1, weights) == Fraction(1, 24)
    assert t_x_value(t2, weights) == Fraction(1, 72)
    assert whlf_sides(shape, weights) == (Fraction(1, 18), Fraction(1, 18))


@given(partitions(max_rows=3, max_cols=3), st.lists(st.sampled_from(CHOICES), min_size=1, max_size=5))
def test_weighted_hook_length_formula(shape, values):
    assert check_whlf(shape, weights_for(shape, values))

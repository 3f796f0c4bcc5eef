import pytest
from hypothesis import given

from piecewise_rsk import (
    LatticePath,
    NTableau,
    Partition,
    PathFamily,
    enumerate_ncpath,
    gk_value,
    path_weight,
    verify_gk,
)
from piecewise_rsk.errors import (
    CapExceeded,
    EndpointOutOfShape,
    InvalidInput,
    PathOutOfShape,
    SizeMismatch,
)
from piecewise_rsk.greene_kleitman import (
    check_greene,
    endpoints,
    enumerate_paths,
    greene_partial_sums,
    verify_gk_transposed,
)

from .strategies import tableaux


def test_example_path_maxima(example_matrix):
    assert [gk_value(example_matrix, (3, 3), k) for k in (1, 2, 3)] == [4, 6, 7]
    assert verify_gk(example_matrix) == []
    assert verify_gk_transposed(example_matrix) == []


def test_endpoints():
    assert endpoints((3, 3), 2) == ([(1, 1), (1, 2)], [(3, 2), (3, 3)])
    assert endpoints((3, 3), 2, transposed=True) == ([(1, 1), (2, 1)], [(2, 3), (3, 3)])


@pytest.mark.parametrize('n, count', [(1, 1), (2, 2), (3, 6)])
def test_single_paths_in_square(n, count):
    shape = Partition.square(n)
    assert len(list(enumerate_paths(shape, (1, 1), (n, n)))) == count


def test_families_are_noncrossing():
    shape = Partition.square(3)
    families = list(enumerate_ncpath(shape, [(1, 1), (1, 2)], [(3, 2), (3, 3)]))
    assert families
    for family in families:
        first, second = family.paths
        assert not first.crosses(second)
        assert family.sources == ((1, 1), (1, 2))
    assert len(set(families)) == len(families)


def test_path_validation():
    with pytest.raises(InvalidInput):
        LatticePath([(1, 1), (2, 2)])
    with pytest.raises(InvalidInput):
        LatticePath([])
    path = LatticePath([(1, 1), (1, 2), (2, 2)])
    with pytest.raises(InvalidInput):
        PathFamily([path, LatticePath([(1, 2), (2, 2)])])
    with pytest.raises(PathOutOfShape):
        path_weight(NTableau.from_rows([[1, 2], [3]]), path)


def test_enumeration_errors():
    shape = Partition.square(2)
    with pytest.raises(SizeMismatch):
        enumerate_ncpath(shape, [(1, 1)], [])
    with pytest.raises(EndpointOutOfShape):
        enumerate_ncpath(shape, [(1, 1)], [(3, 3)])
    with pytest.raises(EndpointOutOfShape):
        list(enumerate_paths(shape, (1, 1), (3, 1)))
    with pytest.raises(CapExceeded):
        enumerate_ncpath(Partition((21,)), [(1, 1)], [(1, 21)])
    with pytest.raises(InvalidInput):
        gk_value(NTableau.from_rows([[1, 2]]), (1, 2), 2)


def test_cap_applies_to_verification():
    with pytest.raises(CapExceeded):
        verify_gk(NTableau.zero(Partition((21,))))


def test_permutation_shape_sums():
    maxima, sums = greene_partial_sums([2, 3, 1])
    assert maxima == sums == [2, 3, 3]
    assert check_greene([2, 3, 1]) == []
    assert check_greene([3, 1, 4, 2]) == []
    assert check_greene([]) == []


@given(tableaux(max_entry=3))
def test_path_maxima_match_partial_sums(tableau):
    assert verify_gk(tableau) == []


@given(tableaux(max_entry=2))
def test_column_convention_matches_transpose(tableau):
    assert verify_gk_transposed(tableau) == []

import pytest
from hypothesis import given

from piecewise_rsk import Box, NTableau, Partition, SSYTView, all_rpps, all_tableaux
from piecewise_rsk.errors import (
    BoxOutOfShape,
    EntryOutOfRange,
    InvalidInput,
    InvalidTableau,
    NotRPP,
    NotSquare,
    NotSSYT,
    RectangleNotInShape,
    ShapeMismatch,
)

from .strategies import matrices, tableaux


def test_from_rows_reads_shape():
    t = NTableau.from_rows([[1, 2, 3], [4], []])
    assert t.shape == Partition((3, 1))
    assert t[Box(2, 1)] == 4
    assert t.to_dict() == {'shape': [3, 1], 'rows': [[1, 2, 3], [4]]}


def test_from_data_accepts_both_forms():
    rows = [[0, 1], [2]]
    assert NTableau.from_data(rows) == NTableau.from_data({'shape': [2, 1], 'rows': rows})
    with pytest.raises(InvalidInput):
        NTableau.from_data({'rows': rows})
    with pytest.raises(InvalidInput):
        NTableau.from_data(5)


@pytest.mark.parametrize('rows', [[[1, -1]], [[True]], [[1.5]]])
def test_entries_must_be_naturals(rows):
    with pytest.raises(InvalidTableau):
        NTableau.from_rows(rows)


def test_rows_must_match_shape():
    with pytest.raises(InvalidTableau):
        NTableau(Partition((2, 1)), [[1], [2, 3]])


def test_entry_access():
    t = NTableau.from_rows([[1, 2], [3]])
    assert t.entry_or_zero((0, 1)) == 0
    assert t.entry_or_zero((2, 2)) == 0
    with pytest.raises(BoxOutOfShape):
        t.entry((2, 2))
    with pytest.raises(BoxOutOfShape):
        NTableau.from_mapping(Partition((1,)), {Box(1, 2): 1})


def test_sums(example_matrix):
    assert example_matrix.weight() == 7
    assert example_matrix.row_sums() == (3, 2, 2)
    assert example_matrix.col_sums() == (2, 3, 2)
    assert example_matrix.rect_sum((2, 2)) == 3
    assert example_matrix.rect_sum((3, 3)) == 7
    assert example_matrix.diag_sum((3, 3)) == 3
    assert example_matrix.diag_sum((3, 1)) == 1


def test_col_sums_of_ragged_shape():
    assert NTableau.from_rows([[1, 2], [3]]).col_sums() == (4, 2)


def test_rect_sum_outside_shape():
    t = NTableau.from_rows([[1, 2], [3]])
    with pytest.raises(RectangleNotInShape):
        t.rect_sum((2, 2))
    assert t.rect_sum_or_zero((2, 2)) == 0


@given(matrices(3, max_entry=3))
def test_border_walk_matches_rectangle(matrix):
    for box in matrix.shape.border_boxes():
        assert matrix.border_walk_rect(box) == matrix.rect_sum(box)


def test_border_walk_needs_square():
    with pytest.raises(NotSquare):
        NTableau.from_rows([[1, 2]]).border_walk_rect((1, 1))


@given(tableaux())
def test_diagonal_sums_follow_transpose(t):
    flipped = t.transpose()
    for box in t.shape.boxes():
        assert t.diag_sum(box) == flipped.diag_sum(box.transposed())


@given(tableaux())
def test_transpose_is_an_involution(t):
    assert t.transpose().transpose() == t
    assert t.transpose().shape == t.shape.conjugate()


def test_rpp_checks():
    assert NTableau.from_rows([[0, 1], [1, 2]]).is_rpp()
    bad = NTableau.from_rows([[0, 2], [1, 1]])
    assert bad.first_descent() == Box(2, 2)
    with pytest.raises(NotRPP):
        bad.validate_rpp()


def test_grow_shrink_and_restrict():
    t = NTableau.from_rows([[1, 2], [3]])
    assert t.with_box((2, 2), 5).to_lists() == [[1, 2], [3, 5]]
    assert t.without_box((2, 1)).to_lists() == [[1, 2]]
    assert t.restrict(Partition((1, 1))).to_lists() == [[1], [3]]
    with pytest.raises(ShapeMismatch):
        t.restrict(Partition((3,)))


def test_ssyt_view():
    p = SSYTView.from_rows([[1, 1, 2], [2, 3]], 3)
    assert p.type_vector() == (2, 2, 1)
    assert SSYTView.is_ssyt(p.tableau, 3)
    with pytest.raises(NotSSYT):
        SSYTView.from_rows([[1, 1], [1]], 3)
    with pytest.raises(NotSSYT):
        SSYTView.from_rows([[2, 1]], 3)
    with pytest.raises(EntryOutOfRange):
        SSYTView.from_rows([[1, 4]], 3)


def test_enumerations():
    assert len(list(all_tableaux(Partition((2, 1)), 2))) == 27
    assert len(list(all_rpps(Partition((1,)), 2))) == 3
    assert len(list(all_rpps(Partition.square(2), 1))) == 6
    shape = Partition((2, 1))
    assert set(all_rpps(shape, 2)) == {t for t in all_tableaux(shape, 2) if t.is_rpp()}

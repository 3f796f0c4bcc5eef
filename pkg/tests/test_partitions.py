import pytest
from hypothesis import given

from piecewise_rsk import Box, Partition, partitions_of, partitions_up_to
from piecewise_rsk.errors import (
    CapExceeded,
    InvalidInput,
    InvalidPartition,
    NotCorner,
    NotLinearExtension,
)

from .strategies import partitions


def test_trailing_zeros_are_dropped():
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert Partition((0,)) == Partition.empty()


@pytest.mark.parametrize('parts', [(1, 2), (2, -1), (3, 0, 1), ('a',), (2.5, 1.9), (True,), 5])
def test_invalid_parts(parts):
    with pytest.raises(InvalidPartition):
        Partition(parts)


def test_factories():
    assert Partition.square(3).parts == (3, 3, 3)
    assert Partition.rectangle(2, 4).parts == (4, 4)
    assert Partition.square(3).is_square()
    assert not Partition((3, 2)).is_rectangle()
    assert Partition.from_boxes([Box(1, 1), Box(1, 2), Box(2, 1)]) == Partition((2, 1))


def test_from_boxes_rejects_skew_sets():
    with pytest.raises(InvalidPartition):
        Partition.from_boxes([Box(1, 1), Box(2, 2)])


def test_boxes_in_reading_order():
    assert Partition((2, 1)).boxes() == (Box(1, 1), Box(1, 2), Box(2, 1))


def test_corner_border_and_addable_boxes():
    shape = Partition((3, 1))
    assert shape.corner_boxes() == {Box(1, 3), Box(2, 1)}
    assert Partition((2, 1)).addable_boxes() == {Box(1, 3), Box(2, 2), Box(3, 1)}
    border = Partition.square(3).border_boxes()
    assert border == {Box(3, 1), Box(3, 2), Box(3, 3), Box(1, 3), Box(2, 3)}


def test_hook_lengths_of_square():
    shape = Partition.square(3)
    expected = {
        (1, 1): 5, (1, 2): 4, (1, 3): 3,
        (2, 1): 4, (2, 2): 3, (2, 3): 2,
        (3, 1): 3, (3, 2): 2, (3, 3): 1,
    }
    assert {tuple(b): shape.hook_length(b) for b in shape.boxes()} == expected
    assert shape.hook_length((4, 1)) == 0


@pytest.mark.parametrize('parts, count', [((2, 2), 2), ((3, 2), 5), ((3, 3, 3), 42), ((1,), 1)])
def test_count_syt(parts, count):
    assert Partition(parts).count_syt() == count


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))


@given(partitions())
def test_conjugate_is_an_involution(shape):
    assert shape.conjugate().conjugate() == shape
    assert shape.conjugate().size == shape.size


def test_add_and_remove_box():
    shape = Partition((2, 1))
    assert shape.add_box(Box(3, 1)) == Partition((2, 1, 1))
    assert shape.remove_box(Box(1, 2)) == Partition((1, 1))
    with pytest.raises(NotCorner):
        shape.add_box(Box(2, 3))
    with pytest.raises(NotCorner):
        shape.remove_box(Box(1, 1))


def test_linear_extension_validation():
    shape = Partition((2, 1))
    assert shape.is_linear_extension([(1, 1), (2, 1), (1, 2)])
    assert not shape.is_linear_extension([(1, 2), (1, 1), (2, 1)])
    with pytest.raises(NotLinearExtension):
        shape.validate_linear_extension([(1, 1), (1, 2)])


@given(partitions(max_rows=3, max_cols=3))
def test_linear_extensions_match_hook_length_count(shape):
    extensions = list(shape.linear_extensions())
    assert len(extensions) == shape.count_syt()
    assert len(set(extensions)) == len(extensions)
    assert all(shape.is_linear_extension(e) for e in extensions)


def test_linear_extensions_respect_cap():
    with pytest.raises(CapExceeded):
        Partition((13,)).linear_extensions()


def test_partition_enumeration():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions_up_to(3))) == 6
    assert list(partitions_up_to(0, include_empty=True)) == [Partition.empty()]


def test_box_from_data():
    assert Box.from_data([2, 3]) == Box(2, 3)
    assert Box(2, 3).content == 1
    with pytest.raises(InvalidInput):
        Box.from_data('nope')


@pytest.mark.parametrize('data', [[1.7, 2.2], [True, 1], [1, '2'], [1, 2, 3]])
def test_box_from_data_needs_integers(data):
    with pytest.raises(InvalidInput):
        Box.from_data(data)


@pytest.mark.parametrize('parts, box, cells', [
    ((2, 2), Box(1, 1), {Box(1, 1), Box(1, 2), Box(2, 1)}),
    ((3, 2, 1), Box(3, 1), {Box(3, 1)}),
    ((2, 2), Box(3, 3), set()),
])
def test_hook_cells(parts, box, cells):
    assert Partition(parts).hook_cells(box) == cells


@given(partitions())
def test_hook_cells_match_hook_lengths(shape):
    for box in shape.boxes():
        cells = shape.hook_cells(box)
        assert len(cells) == shape.hook_length(box)
        assert all(c.row == box.row or c.col == box.col for c in cells)
        assert all(shape.contains(c) for c in cells)


@given(partitions(max_rows=4, max_cols=4))
def test_corner_boxes(shape):
    corners = shape.corner_boxes()
    assert len(corners) == len(set(shape.parts))
    assert corners <= shape.border_boxes()

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from piecewise_rsk import (
    NTableau,
    Partition,
    hat_2x2,
    insert_corner,
    iter_toggle_rsk,
    remove_corner,
    toggle,
    toggle_context,
    toggle_rsk,
    toggle_rsk_inverse,
)
from piecewise_rsk.errors import InvalidInput, NotCorner, NotLinearExtension, NotRPP
from piecewise_rsk.sampling import random_linear_extension
from piecewise_rsk.toggles import (
    check_bijection,
    check_diag_rect,
    check_oracle,
    check_transpose,
    check_welldefined,
)

from .strategies import matrices, tableaux


@given(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20))
def test_toggle_is_an_involution(beta, lower, upper):
    assert toggle(toggle(beta, lower, upper), lower, upper) == beta


def test_example_image(example_matrix, example_image):
    image = toggle_rsk(example_matrix)
    assert image == example_image
    assert image.weight() == 22


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_two_by_two_closed_form(a, b, c, d):
    matrix = NTableau.from_rows([[a, b], [c, d]])
    assert toggle_rsk(matrix) == hat_2x2(a, b, c, d)


def test_toggle_context():
    context = toggle_context(NTableau.from_rows([[1, 2], [3, 4]]), (2, 2))
    assert context.alpha == (2, 0)
    assert context.beta == (1, 0)
    assert context.gamma == (3, 0)
    assert context.bounds(1) == (0, 2)
    assert context.is_admissible()
    assert context.toggled() == (1,)
    assert context.seed == 3


def test_insert_and_remove_corner():
    rpp = NTableau.from_rows([[1, 1], [1]])
    grown = insert_corner(rpp, (2, 2), 5)
    assert grown.to_lists() == [[0, 1], [1, 6]]
    assert remove_corner(grown, (2, 2)) == (rpp, 5)


def test_insert_corner_errors():
    rpp = NTableau.from_rows([[1, 1], [1]])
    with pytest.raises(NotCorner):
        insert_corner(rpp, (2, 3), 1)
    with pytest.raises(InvalidInput):
        insert_corner(rpp, (2, 2), -1)
    for value in (True, 1.5):
        with pytest.raises(InvalidInput):
            insert_corner(rpp, (2, 2), value)
    with pytest.raises(NotRPP):
        insert_corner(NTableau.from_rows([[2, 1]]), (1, 3), 0)
    with pytest.raises(NotCorner):
        remove_corner(rpp, (1, 1))


def test_order_must_be_a_linear_extension(example_matrix):
    order = [[1, 2], [1, 1], [1, 3], [2, 1], [2, 2], [2, 3], [3, 1], [3, 2], [3, 3]]
    with pytest.raises(NotLinearExtension):
        toggle_rsk(example_matrix, order)


def test_column_order_gives_same_image(example_matrix, example_image):
    order = [(i, j) for j in range(1, 4) for i in range(1, 4)]
    assert toggle_rsk(example_matrix, order) == example_image


def test_empty_tableau():
    empty = NTableau.zero(Partition.empty())
    assert toggle_rsk(empty) == empty
    assert toggle_rsk_inverse(empty) == empty


def test_inverse_needs_rpp():
    with pytest.raises(NotRPP):
        toggle_rsk_inverse(NTableau.from_rows([[1, 0]]))


def test_iter_toggle_rsk_stages(example_matrix, example_image):
    stages = list(iter_toggle_rsk(example_matrix))
    assert len(stages) == example_matrix.shape.size
    assert all(partial.is_rpp() for _, partial in stages)
    assert stages[0][1].to_lists() == [[1]]
    assert stages[-1][1] == example_image


@given(tableaux(), st.integers(0, 2 ** 32))
def test_image_does_not_depend_on_order(tableau, seed):
    rng = random.Random(seed)
    orders = [random_linear_extension(rng, tableau.shape) for _ in range(3)]
    assert check_welldefined(tableau, orders) == []


@given(tableaux())
def test_bijection(tableau):
    assert check_bijection(tableau) == []


@given(tableaux(max_entry=2))
def test_rpp_inputs_round_trip_through_inverse(tableau):
    if tableau.is_rpp():
        assert toggle_rsk(toggle_rsk_inverse(tableau)) == tableau


@given(tableaux())
def test_border_diagonals_are_rectangle_sums(tableau):
    assert check_diag_rect(tableau) == []


@given(tableaux())
def test_commutes_with_transpose(tableau):
    assert check_transpose(tableau) == []


@given(matrices(3))
def test_agrees_with_classical_rsk(matrix):
    assert check_oracle(matrix) == []


@given(tableaux(max_rows=4, max_cols=4))
def test_image_size_is_hook_weighted(tableau):
    shape = tableau.shape
    expected = sum(v * shape.hook_length(box) for box, v in tableau.items())
    assert toggle_rsk(tableau).weight() == expected

import pytest
from hypothesis import given

from piecewise_rsk import (
    NTableau,
    PyramidArray,
    build_arrays,
    build_U,
    build_Ubar,
    build_Utilde,
    check_octahedron,
    extract_rpp,
    render_levels,
    toggle_rsk,
)
from piecewise_rsk.enums import PyramidKind
from piecewise_rsk.errors import DomainMismatch, KindMismatch, ShapeMismatch
from piecewise_rsk.octahedron import check_arrays, check_restriction, in_domain

from .strategies import tableaux


def grid(array, k, lo, hi):
    return [[array[(i, j, k)] for j in range(lo, hi + 1)] for i in range(lo, hi + 1)]


def test_u_levels(example_matrix):
    u = build_U(example_matrix)
    assert grid(u, 0, -1, 3) == [[0] * 5] * 5
    assert grid(u, 1, 0, 3) == [[0, 0, 0, 0], [0, 1, 1, 3], [0, 1, 3, 3], [0, 2, 4, 4]]
    assert grid(u, 2, 1, 3) == [[0, 0, 0], [0, 0, 2], [0, 1, 2]]
    assert grid(u, 3, 2, 3) == [[0, 0], [0, 1]]
    assert u[(3, 3, 4)] == 0


def test_partial_sum_levels(example_matrix):
    _, ubar, utilde = build_arrays(example_matrix)
    assert grid(ubar, 0, 0, 3) == [[0] * 4] * 4
    assert grid(ubar, 1, 1, 3) == [[1, 1, 3], [1, 3, 3], [2, 4, 4]]
    assert grid(ubar, 2, 2, 3) == [[3, 5], [5, 6]]
    assert ubar[(3, 3, 3)] == 7

    assert grid(utilde, 0, 0, 3) == [[0, 0, 0, 0], [0, -1, -1, -3], [0, -1, -3, -5], [0, -2, -5, -7]]
    assert grid(utilde, 1, 1, 3) == [[0, 0, 0], [0, 0, -2], [0, -1, -3]]
    assert grid(utilde, 2, 2, 3) == [[0, 0], [0, -1]]
    assert utilde[(3, 3, 3)] == 0


def test_example_satisfies_recurrence(example_matrix, example_image):
    u, _, utilde = build_arrays(example_matrix)
    assert check_octahedron(utilde) == []
    assert extract_rpp(u, example_matrix.shape) == example_image


def test_tampered_array_is_caught(example_matrix):
    _, _, utilde = build_arrays(example_matrix)
    entries = dict(utilde.entries)
    entries[(3, 3, 1)] += 1
    tampered = PyramidArray(PyramidKind.Utilde, utilde.shape, entries, source=utilde.source)
    violations = check_octahedron(tampered)
    assert any(v.detail['rule'] == 'recurrence' and (v.detail['i'], v.detail['j'], v.detail['k']) == (3, 3, 1)
               for v in violations)


def test_domains():
    shape = NTableau.from_rows([[1, 2], [3]]).shape
    assert in_domain(PyramidKind.U, shape, (-1, -1, 0))
    assert not in_domain(PyramidKind.Ubar, shape, (-1, -1, 0))
    assert in_domain(PyramidKind.Ubar, shape, (2, 1, 1))
    assert not in_domain(PyramidKind.Ubar, shape, (2, 1, 2))
    assert not in_domain(PyramidKind.Ubar, shape, (2, 2, 0))


def test_kind_and_shape_checks(example_matrix):
    u, ubar, _ = build_arrays(example_matrix)
    with pytest.raises(KindMismatch):
        build_Ubar(ubar)
    with pytest.raises(KindMismatch):
        extract_rpp(ubar, example_matrix.shape)
    with pytest.raises(ShapeMismatch):
        build_Utilde(ubar, NTableau.from_rows([[1]]))
    with pytest.raises(DomainMismatch):
        u[(9, 9, 1)]
    assert u.get((9, 9, 1)) == 0


def test_dict_form(example_matrix):
    u = build_U(example_matrix)
    data = u.to_dict()
    assert data['kind'] == 'U'
    assert data['entries'][0] == {'i': -1, 'j': -1, 'k': 0, 'v': 0}
    assert PyramidArray.from_dict(data) == u


def test_render_levels(example_matrix):
    text = render_levels(build_Ubar(build_U(example_matrix)))
    assert text.startswith('Ubar k=0')
    assert 'Ubar k=3' in text


@given(tableaux())
def test_array_invariants(tableau):
    assert check_arrays(tableau) == []
    assert extract_rpp(build_U(tableau), tableau.shape) == toggle_rsk(tableau)


@given(tableaux())
def test_removing_a_corner_restricts_u(tableau):
    for box in sorted(tableau.shape.corner_boxes()):
        assert check_restriction(tableau, box) == []

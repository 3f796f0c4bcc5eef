import pytest

from piecewise_rsk.enums import ExitCode, PyramidKind, Suite, try_enum


def test_members_iterate_in_declaration_order():
    assert [str(s) for s in Suite][-3:] == ['gf', 'whlf', 'all']
    assert [k.value for k in PyramidKind] == ['U', 'Ubar', 'Utilde']


def test_lookup_by_value():
    assert PyramidKind('Ubar') is PyramidKind.Ubar
    assert isinstance(PyramidKind.U, PyramidKind)
    assert not isinstance(Suite.gk, PyramidKind)
    with pytest.raises(ValueError):
        PyramidKind('V')


def test_methods_move_onto_members():
    assert str(Suite.octahedron) == 'octahedron'
    assert int(ExitCode.validation) == 3


def test_try_enum_falls_back_to_the_value():
    assert try_enum(Suite, 'gk') is Suite.gk
    assert try_enum(Suite, 'nope') == 'nope'
    assert try_enum(Suite, ['unhashable']) == ['unhashable']

# -*- coding: utf-8 -*-

"""
The MIT License (MIT)

Copyright (c) 2024-present piecewise-rsk developers

Permission is hereby granted, free of charge, to any person obtaining a
copy of this software and associated documentation files (the "Software"),
to deal in the Software without restriction, including without limitation
the rights to use, copy, modify, merge, publish, distribute, sublicense,
and/or sell copies of the Software, and to permit persons to whom the
Software is furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
DEALINGS IN THE SOFTWARE.
"""

import logging

from .classical import check_classical_transpose, check_diagonal_properties, classical_hat
from .enums import Suite
from .errors import InvalidInput, NotCorner
from .partitions import Box, Partition
from .report import Violation
from .tableau import NTableau

__all__ = (
    'ToggleContext',
    'toggle',
    'toggle_context',
    'insert_corner',
    'remove_corner',
    'iter_toggle_rsk',
    'toggle_rsk',
    'toggle_rsk_inverse',
    'hat_2x2',
    'check_welldefined',
    'check_bijection',
    'check_diag_rect',
    'check_transpose',
    'check_oracle',
)

log = logging.getLogger(__name__)


def toggle(beta, lower, upper):
    """The toggle ``beta -> lower + upper - beta``.

    It is an involution, and maps the interval ``[lower, upper]`` onto itself.
    """
    return lower + upper - beta


class ToggleContext:
    """The neighbourhood of the diagonal through a box ``(i, j)``.

    For ``k >= 1``, ``beta[k-1]`` is the entry at ``(i-k, j-k)``, ``alpha[k-1]``
    the entry to its right at ``(i-k, j-k+1)`` and ``gamma[k-1]`` the entry below
    it at ``(i-k+1, j-k)``. Positions outside the shape, including those with a
    zero coordinate, read as ``0``. Each sequence has ``min(i, j)`` terms.

    Attributes
    ------------
    box: :class:`Box`
        The box ``(i, j)``.
    alpha: Tuple[:class:`int`, ...]
    beta: Tuple[:class:`int`, ...]
    gamma: Tuple[:class:`int`, ...]
    """

    __slots__ = ('box', 'alpha', 'beta', 'gamma')

    def __init__(self, box, alpha, beta, gamma):
        self.box = box
        self.alpha = tuple(alpha)
        self.beta = tuple(beta)
        self.gamma = tuple(gamma)

    @classmethod
    def from_reader(cls, box, read):
        depth = min(box)
        ks = range(1, depth + 1)
        return cls(
            box,
            [read(box.shifted(-k, 1 - k)) for k in ks],
            [read(box.shifted(-k, -k)) for k in ks],
            [read(box.shifted(1 - k, -k)) for k in ks],
        )

    def __repr__(self):
        return '<ToggleContext box=%s alpha=%s beta=%s gamma=%s>' % (self.box, self.alpha, self.beta, self.gamma)

    @property
    def depth(self):
        return len(self.beta)

    def bounds(self, k):
        """Returns the admissible interval ``(max(alpha[k+1], gamma[k+1]), min(alpha[k], gamma[k]))``
        of ``beta[k]``, ``k`` counted from 1."""
        if k < self.depth:
            lower = max(self.alpha[k], self.gamma[k])
        else:
            lower = 0
        return lower, min(self.alpha[k - 1], self.gamma[k - 1])

    def is_admissible(self):
        """Checks that every ``beta[k]`` lies in its interval."""
        for k in range(1, self.depth):
            lower, upper = self.bounds(k)
            if not lower <= self.beta[k - 1] <= upper:
                return False
        return True

    def toggled(self):
        """Tuple[:class:`int`, ...]: The toggled values ``beta'[k]`` for ``1 <= k < min(i, j)``."""
        return tuple(toggle(self.beta[k - 1], *self.bounds(k)) for k in range(1, self.depth))

    @property
    def seed(self):
        """:class:`int`: ``max(alpha[1], gamma[1])``, the value a new box starts from."""
        if not self.depth:
            return 0
        return max(self.alpha[0], self.gamma[0])


def _read(entries):
    return lambda box: entries.get(box, 0)


def _insert(entries, box, value):
    context = ToggleContext.from_reader(box, _read(entries))
    for k, beta in enumerate(context.toggled(), 1):
        entries[box.shifted(-k, -k)] = beta
    entries[box] = context.seed + value


def _remove(entries, box):
    value = entries.pop(box)
    context = ToggleContext.from_reader(box, _read(entries))
    for k, beta in enumerate(context.toggled(), 1):
        entries[box.shifted(-k, -k)] = beta
    return value - context.seed


def toggle_context(tableau, box):
    """Returns the :class:`ToggleContext` of ``box`` read from ``tableau``."""
    return ToggleContext.from_reader(Box(*box), tableau.entry_or_zero)


def insert_corner(tableau, box, value):
    """Adds the box ``box`` holding ``value`` to a reverse plane partition.

    Every entry on the diagonal through ``box`` is toggled and the new box is
    set to ``max(alpha[1], gamma[1]) + value``; no other entry changes.

    Parameters
    ------------
    tableau: :class:`NTableau`
        A reverse plane partition.
    box: :class:`Box`
        An addable box of ``tableau.shape``.
    value: :class:`int`
        A nonnegative integer.

    Raises
    -------
    NotCorner
        ``box`` cannot be added to the shape.
    NotRPP
        ``tableau`` is not a reverse plane partition.
    """
    box = Box(*box)
    shape = tableau.shape.add_box(box)
    tableau.validate_rpp()
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidInput('the inserted value must be a nonnegative integer, not %r' % (value,))

    entries = tableau.to_mapping()
    _insert(entries, box, value)
    log.debug('Inserted corner %s with x=%s.', box, value)
    return NTableau.from_mapping(shape, entries)


def remove_corner(tableau, box):
    """Inverts :func:`insert_corner`.

    Returns
    --------
    Tuple[:class:`NTableau`, :class:`int`]
        The smaller reverse plane partition and the value ``x`` that was inserted.

    Raises
    -------
    NotCorner
        ``box`` is not a corner box of ``tableau.shape``.
    NotRPP
        ``tableau`` is not a reverse plane partition.
    """
    box = Box(*box)
    shape = tableau.shape.remove_box(box)
    tableau.validate_rpp()

    entries = tableau.to_mapping()
    value = _remove(entries, box)
    log.debug('Removed corner %s with x=%s.', box, value)
    return NTableau.from_mapping(shape, entries), value


def _resolve_order(shape, order):
    if order is None:
        return shape.boxes()
    order = [Box.from_data(b) for b in order]
    shape.validate_linear_extension(order)
    return order


def iter_toggle_rsk(tableau, order=None):
    """Yields ``(box, partial)`` after each box has been inserted, ``partial``
    being the reverse plane partition built so far.

    Raises
    -------
    NotLinearExtension
        ``order`` is not a linear extension of the box poset.
    """
    order = _resolve_order(tableau.shape, order)
    entries = {}
    boxes = []
    for box in order:
        _insert(entries, box, tableau.entry(box))
        boxes.append(box)
        yield box, NTableau.from_mapping(Partition.from_boxes(boxes), entries)


def toggle_rsk(tableau, order=None):
    """Maps an ℕ-tableau to the reverse plane partition of the same shape
    obtained by inserting its boxes one by one along ``order``.

    Parameters
    ------------
    tableau: :class:`NTableau`
        The input tableau.
    order: Optional[Sequence[:class:`Box`]]
        A linear extension of the box poset; defaults to reading order.
        The result does not depend on it.

    Raises
    -------
    NotLinearExtension
        ``order`` is not a linear extension of the box poset.
    """
    order = _resolve_order(tableau.shape, order)
    entries = {}
    for box in order:
        _insert(entries, box, tableau.entry(box))
    return NTableau.from_mapping(tableau.shape, entries)


def toggle_rsk_inverse(tableau):
    """Recovers the ℕ-tableau whose image under :func:`toggle_rsk` is ``tableau``.

    Corners are removed in reverse reading order.

    Raises
    -------
    NotRPP
        ``tableau`` is not a reverse plane partition.
    """
    tableau.validate_rpp()
    entries = tableau.to_mapping()
    original = {}
    for box in reversed(tableau.shape.boxes()):
        original[box] = _remove(entries, box)
    return NTableau.from_mapping(tableau.shape, original)


def hat_2x2(a, b, c, d):
    """The image of ``[[a, b], [c, d]]`` in closed form."""
    return NTableau(Partition.square(2), [[min(b, c), a + b], [a + c, a + max(b, c) + d]])


def check_welldefined(tableau, orders):
    """Compares the image along each of ``orders`` with the reading order image."""
    expected = toggle_rsk(tableau)
    violations = []
    for order in orders:
        found = toggle_rsk(tableau, order)
        if found != expected:
            violations.append(Violation(Suite.welldefined, tableau.to_dict(), {
                'order': [list(b) for b in order],
                'expected': expected.to_lists(),
                'found': found.to_lists(),
            }))
    return violations


def check_bijection(tableau):
    """Checks that the inverse undoes the map, and, when ``tableau`` is itself a
    reverse plane partition, that the map undoes the inverse."""
    violations = []
    image = toggle_rsk(tableau)
    if not image.is_rpp():
        violations.append(Violation(Suite.bijection, tableau.to_dict(), {
            'reason': 'image is not a reverse plane partition', 'image': image.to_lists(),
        }))
        return violations

    back = toggle_rsk_inverse(image)
    if back != tableau:
        violations.append(Violation(Suite.bijection, tableau.to_dict(), {
            'reason': 'inverse of image differs', 'found': back.to_lists(),
        }))

    if tableau.is_rpp():
        again = toggle_rsk(toggle_rsk_inverse(tableau))
        if again != tableau:
            violations.append(Violation(Suite.bijection, tableau.to_dict(), {
                'reason': 'image of inverse differs', 'found': again.to_lists(),
            }))
    return violations


def check_diag_rect(tableau, image=None):
    """Checks that every border box's diagonal sum in the image equals the
    rectangle sum of the input."""
    if image is None:
        image = toggle_rsk(tableau)
    violations = []
    for box in sorted(tableau.shape.border_boxes()):
        diagonal = image.diag_sum(box)
        rectangle = tableau.rect_sum(box)
        if diagonal != rectangle:
            violations.append(Violation(Suite.diagrect, tableau.to_dict(), {
                'box': box.to_list(), 'diag': diagonal, 'rect': rectangle,
            }))
    return violations


def check_transpose(tableau):
    """Checks that the map commutes with transposition."""
    left = toggle_rsk(tableau.transpose())
    right = toggle_rsk(tableau).transpose()
    if left == right:
        return []
    return [Violation(Suite.transpose, tableau.to_dict(), {
        'of_transpose': left.to_lists(), 'transpose_of': right.to_lists(),
    })]


def check_oracle(matrix):
    """Checks the toggle image of a square matrix against classical RSK
    followed by gluing, together with the diagonal properties of the result
    and its behaviour under transposition."""
    expected = classical_hat(matrix)
    found = toggle_rsk(matrix)
    violations = []
    if found != expected:
        violations.append(Violation(Suite.oracle, matrix.to_lists(), {
            'classical': expected.to_lists(), 'toggle': found.to_lists(),
        }))
    violations.extend(check_diagonal_properties(matrix, expected))
    violations.extend(check_classical_transpose(matrix, expected))
    return violations

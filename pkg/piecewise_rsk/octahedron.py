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

from .enums import PyramidKind, Suite, try_enum
from .errors import DomainMismatch, InvalidInput, KindMismatch, ShapeMismatch
from .partitions import Box, Partition
from .report import Violation
from .tableau import NTableau
from .toggles import toggle_rsk

__all__ = (
    'PyramidArray',
    'in_domain',
    'build_U',
    'build_Ubar',
    'build_Utilde',
    'build_arrays',
    'check_octahedron',
    'check_arrays',
    'check_restriction',
    'extract_rpp',
    'render_levels',
)

log = logging.getLogger(__name__)


def _reach(kind):
    return 2 if kind is PyramidKind.U else 1


def in_domain(kind, shape, point):
    """Checks whether ``(i, j, k)`` is a coordinate of a ``kind`` array over ``shape``.

    Some ``(i + a, j + b)`` must be a box of ``shape`` with ``a, b`` ranging
    over ``{0, 1, 2}`` for :attr:`PyramidKind.U` and ``{0, 1}`` otherwise;
    ``k`` ranges from ``0`` to ``min(i, j) + 1`` for :attr:`PyramidKind.U`
    and to ``min(i, j)`` otherwise.
    """
    i, j, k = point
    reach = _reach(kind)
    top = min(i, j) + (1 if kind is PyramidKind.U else 0)
    if not 0 <= k <= top:
        return False
    return any(shape.contains((i + a, j + b)) for a in range(reach + 1) for b in range(reach + 1))


def _domain(kind, shape):
    reach = _reach(kind)
    extra = 1 if kind is PyramidKind.U else 0
    points = []
    for k in range(0, max(shape.rows, shape.cols) + extra + 1):
        for i in range(1 - reach, shape.rows + 1):
            for j in range(1 - reach, shape.cols + 1):
                if in_domain(kind, shape, (i, j, k)):
                    points.append((i, j, k))
    return points


class PyramidArray:
    """A sparse three-dimensional integer array over a pyramid-shaped domain.

    .. container:: operations

        .. describe:: x[i, j, k]

            Returns the entry at ``(i, j, k)``; raises :exc:`DomainMismatch`
            outside the domain.

        .. describe:: (i, j, k) in x

            Checks if the point is in the domain.

        .. describe:: x == y

            Checks if both arrays have the same kind, shape and entries.

    Attributes
    ------------
    kind: :class:`PyramidKind`
        Which of the three arrays this is.
    shape: :class:`Partition`
        The shape of the tableau the array was built from.
    entries: Dict[Tuple[:class:`int`, :class:`int`, :class:`int`], :class:`int`]
        Every entry, keyed by ``(i, j, k)``.
    source: Optional[:class:`NTableau`]
        The tableau the array was built from, if known.
    """

    __slots__ = ('kind', 'shape', 'entries', 'source')

    def __init__(self, kind, shape, entries, source=None):
        self.kind = try_enum(PyramidKind, kind)
        if not isinstance(self.kind, PyramidKind):
            raise InvalidInput('%r is not an array kind' % (kind,))
        self.shape = shape
        self.entries = dict(entries)
        self.source = source

    def __repr__(self):
        return '<PyramidArray kind=%s shape=%s points=%s>' % (self.kind, self.shape, len(self.entries))

    def __eq__(self, other):
        return (isinstance(other, PyramidArray) and self.kind is other.kind
                and self.shape == other.shape and self.entries == other.entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __contains__(self, point):
        return tuple(point) in self.entries

    def __getitem__(self, point):
        try:
            return self.entries[tuple(point)]
        except KeyError:
            raise DomainMismatch(tuple(point)) from None

    def get(self, point, default=0):
        """Returns the entry at ``point``, or ``default`` outside the domain."""
        return self.entries.get(tuple(point), default)

    def in_domain(self, point):
        return in_domain(self.kind, self.shape, point)

    def levels(self):
        """List[:class:`int`]: Every ``k`` that occurs, ascending."""
        return sorted({k for _, _, k in self.entries})

    def level(self, k):
        """Dict[Tuple[:class:`int`, :class:`int`], :class:`int`]: The ``(i, j) -> value`` map at height ``k``."""
        return {(i, j): v for (i, j, kk), v in self.entries.items() if kk == k}

    def restrict(self, shape):
        """Returns the array restricted to the domain of the same kind over ``shape``."""
        return PyramidArray(self.kind, shape, {
            p: v for p, v in self.entries.items() if in_domain(self.kind, shape, p)
        })

    def to_list(self):
        """The ``[{"i": ..., "j": ..., "k": ..., "v": ...}, ...]`` records, ordered by ``k`` then ``(i, j)``."""
        return [
            {'i': i, 'j': j, 'k': k, 'v': v}
            for (i, j, k), v in sorted(self.entries.items(), key=lambda item: (item[0][2], item[0][0], item[0][1]))
        ]

    def to_dict(self):
        return {'kind': str(self.kind), 'shape': self.shape.to_list(), 'entries': self.to_list()}

    @classmethod
    def from_dict(cls, data):
        try:
            kind = PyramidKind(data['kind'])
            shape = Partition.from_data(data['shape'])
            entries = {(r['i'], r['j'], r['k']): r['v'] for r in data['entries']}
        except (KeyError, TypeError, ValueError):
            raise InvalidInput('an array needs "kind", "shape" and "entries" records') from None
        return cls(kind, shape, entries)


def build_U(tableau):
    """Builds the array recording every stage of the toggle construction.

    Boundary values ``u(i, j, 0)`` and ``u(i, j, min(i, j) + 1)`` are ``0``;
    in between

    ``u(i,j,k) = min(u(i-1,j,k-1), u(i,j-1,k-1)) + max(u(i-1,j,k), u(i,j-1,k)) - u(i-1,j-1,k-1)``

    plus ``t(i, j)`` when ``k == 1``. Points are filled by increasing ``k``
    and then in reading order.
    """
    shape = tableau.shape
    u = {}
    for point in _domain(PyramidKind.U, shape):
        i, j, k = point
        if k == 0 or k == min(i, j) + 1:
            u[point] = 0
            continue
        value = (min(u.get((i - 1, j, k - 1), 0), u.get((i, j - 1, k - 1), 0))
                 + max(u.get((i - 1, j, k), 0), u.get((i, j - 1, k), 0))
                 - u.get((i - 1, j - 1, k - 1), 0))
        if k == 1:
            value += tableau.entry_or_zero((i, j))
        u[point] = value

    log.debug('Built U over %s with %s points.', shape, len(u))
    return PyramidArray(PyramidKind.U, shape, u, source=tableau)


def _require_kind(array, kind):
    if array.kind is not kind:
        raise KindMismatch(kind, array.kind)


def build_Ubar(array):
    """Builds the partial sums ``ubar(i, j, k) = u(i, j, 0) + ... + u(i, j, k)``
    over the smaller domain.

    Raises
    -------
    KindMismatch
        ``array`` is not a :attr:`PyramidKind.U` array.
    """
    _require_kind(array, PyramidKind.U)
    ubar = {}
    for i, j, k in _domain(PyramidKind.Ubar, array.shape):
        ubar[(i, j, k)] = sum(array.get((i, j, l)) for l in range(k + 1))
    return PyramidArray(PyramidKind.Ubar, array.shape, ubar, source=array.source)


def build_Utilde(array, tableau):
    """Subtracts ``rect(i, j)`` from every entry of a :attr:`PyramidKind.Ubar`
    array, reading the rectangle sum as ``0`` off the shape.

    Raises
    -------
    KindMismatch
        ``array`` is not a :attr:`PyramidKind.Ubar` array.
    ShapeMismatch
        ``tableau`` has a different shape.
    """
    _require_kind(array, PyramidKind.Ubar)
    if array.shape != tableau.shape:
        raise ShapeMismatch(array.shape, tableau.shape)
    utilde = {
        (i, j, k): v - tableau.rect_sum_or_zero((i, j))
        for (i, j, k), v in array.entries.items()
    }
    return PyramidArray(PyramidKind.Utilde, array.shape, utilde, source=tableau)


def build_arrays(tableau):
    """Returns the three arrays ``(U, Ubar, Utilde)`` of ``tableau``."""
    u = build_U(tableau)
    ubar = build_Ubar(u)
    return u, ubar, build_Utilde(ubar, tableau)


def check_octahedron(array):
    """Checks the tropical octahedron recurrence

    ``f(i,j,k) = max(f(i-1,j,k) + f(i,j-1,k-1), f(i-1,j,k-1) + f(i,j-1,k)) - f(i-1,j-1,k-1)``

    for ``0 < k < min(i, j)``, the top boundary ``f(i, j, min(i, j)) = 0`` and,
    when the source tableau is known, the bottom boundary ``f(i, j, 0) = -rect(i, j)``.

    Returns
    --------
    List[:class:`Violation`]
        One entry per failing point.
    """
    _require_kind(array, PyramidKind.Utilde)
    source = array.source
    subject = source.to_dict() if source is not None else None
    f = array.get
    violations = []

    def fail(point, rule, expected, found):
        i, j, k = point
        violations.append(Violation(Suite.octahedron, subject, {
            'i': i, 'j': j, 'k': k, 'rule': rule, 'expected': expected, 'found': found,
        }))

    for point, value in sorted(array.entries.items()):
        i, j, k = point
        top = min(i, j)
        if k == top and value != 0:
            fail(point, 'top', 0, value)
        if k == 0 and source is not None:
            expected = -source.rect_sum_or_zero((i, j))
            if value != expected:
                fail(point, 'bottom', expected, value)
        if 0 < k < top:
            expected = max(f((i - 1, j, k)) + f((i, j - 1, k - 1)),
                           f((i - 1, j, k - 1)) + f((i, j - 1, k))) - f((i - 1, j - 1, k - 1))
            if value != expected:
                fail(point, 'recurrence', expected, value)
    return violations


def extract_rpp(array, shape):
    """Reads the toggle image off a :attr:`PyramidKind.U` array:
    ``that(i, j) = u(i+m, j+m, m+1)`` where ``(i+m, j+m)`` is the border box
    on the diagonal of ``(i, j)``.

    Raises
    -------
    KindMismatch
        ``array`` is not a :attr:`PyramidKind.U` array.
    DomainMismatch
        A required point is missing from the array.
    """
    _require_kind(array, PyramidKind.U)
    entries = {}
    for box in shape.boxes():
        m = 0
        while shape.contains(box.shifted(m + 1, m + 1)):
            m += 1
        entries[box] = array[(box.row + m, box.col + m, m + 1)]
    return NTableau.from_mapping(shape, entries)


def check_arrays(tableau):
    """Runs every array invariant on ``tableau``: extraction reproduces the
    toggle image, the renormalised array satisfies the octahedron recurrence,
    ``U`` is nonnegative and the partial sums grow with ``k``."""
    u, ubar, utilde = build_arrays(tableau)
    violations = []
    subject = tableau.to_dict()

    extracted = extract_rpp(u, tableau.shape)
    image = toggle_rsk(tableau)
    if extracted != image:
        violations.append(Violation(Suite.octahedron, subject, {
            'rule': 'extraction', 'expected': image.to_lists(), 'found': extracted.to_lists(),
        }))

    violations.extend(check_octahedron(utilde))

    for (i, j, k), v in sorted(u.entries.items()):
        if v < 0:
            violations.append(Violation(Suite.octahedron, subject, {
                'rule': 'nonnegative', 'i': i, 'j': j, 'k': k, 'found': v,
            }))
    for (i, j, k), v in sorted(ubar.entries.items()):
        if k > 0 and v < ubar.get((i, j, k - 1)):
            violations.append(Violation(Suite.octahedron, subject, {
                'rule': 'monotone', 'i': i, 'j': j, 'k': k, 'found': v,
            }))
    return violations


def check_restriction(tableau, box):
    """Checks that deleting the corner ``box`` restricts ``U`` to the common domain."""
    smaller = tableau.without_box(Box(*box))
    restricted = build_U(tableau).restrict(smaller.shape)
    direct = build_U(smaller)
    if restricted.entries == direct.entries:
        return []
    differing = sorted(p for p in set(restricted.entries) | set(direct.entries)
                       if restricted.entries.get(p) != direct.entries.get(p))
    return [Violation(Suite.octahedron, tableau.to_dict(), {
        'rule': 'restriction', 'box': list(box), 'points': [list(p) for p in differing],
    })]


def render_levels(array):
    """Renders each level ``k`` as a matrix, all levels on one grid so the
    bottom-right corners line up. Points outside a level are left blank."""
    if not array.entries:
        return ''
    width = max(len(str(v)) for v in array.entries.values())
    i_range = range(min(i for i, _, _ in array.entries), max(i for i, _, _ in array.entries) + 1)
    j_range = range(min(j for _, j, _ in array.entries), max(j for _, j, _ in array.entries) + 1)

    blocks = []
    for k in array.levels():
        level = array.level(k)
        lines = ['%s k=%s' % (array.kind, k)]
        for i in i_range:
            if not any((i, j) in level for j in j_range):
                continue
            cells = [str(level[(i, j)]).rjust(width) if (i, j) in level else ' ' * width for j in j_range]
            lines.append(' '.join(cells).rstrip())
        blocks.append('\n'.join(lines))
    return '\n\n'.join(blocks)

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

from . import utils
from .classical import longest_increasing_subsequence, permutation_matrix, rsk_insert
from .config import MAX_PATH_BOXES
from .enums import Suite
from .errors import (
    CapExceeded,
    EndpointOutOfShape,
    InvalidInput,
    NoFamily,
    PathOutOfShape,
    SizeMismatch,
)
from .octahedron import build_Ubar, build_U
from .partitions import Box
from .report import Violation
from .utils import prefix_sums

__all__ = (
    'LatticePath',
    'PathFamily',
    'path_weight',
    'enumerate_paths',
    'enumerate_ncpath',
    'endpoints',
    'gk_value',
    'verify_gk',
    'verify_gk_transposed',
    'greene_partial_sums',
    'check_greene',
)

log = logging.getLogger(__name__)


class LatticePath:
    """A path of boxes, each step going one row down or one column right.

    .. container:: operations

        .. describe:: len(x)

            Returns the number of boxes.

        .. describe:: iter(x)

            Iterates over the boxes from start to end.

    Attributes
    ------------
    boxes: Tuple[:class:`Box`, ...]
        The boxes from start to end.
    """

    __slots__ = ('boxes', '_cs_box_set')

    def __init__(self, boxes):
        boxes = tuple(Box(*b) for b in boxes)
        if not boxes:
            raise InvalidInput('a path has at least one box')
        for a, b in zip(boxes, boxes[1:]):
            if (b.row - a.row, b.col - a.col) not in ((1, 0), (0, 1)):
                raise InvalidInput('step from %s to %s is neither down nor right' % (a, b))
        self.boxes = boxes

    @property
    def start(self):
        return self.boxes[0]

    @property
    def end(self):
        return self.boxes[-1]

    @utils.cached_slot_property('_cs_box_set')
    def box_set(self):
        return frozenset(self.boxes)

    def crosses(self, other):
        """Checks whether the two paths share a box."""
        return not self.box_set.isdisjoint(other.box_set)

    def __len__(self):
        return len(self.boxes)

    def __iter__(self):
        return iter(self.boxes)

    def __eq__(self, other):
        return isinstance(other, LatticePath) and self.boxes == other.boxes

    def __hash__(self):
        return hash(self.boxes)

    def __repr__(self):
        return '<LatticePath start=%s end=%s length=%s>' % (self.start, self.end, len(self.boxes))

    def to_list(self):
        return [b.to_list() for b in self.boxes]


class PathFamily:
    """Pairwise noncrossing paths, path ``l`` running from ``sources[l]`` to ``targets[l]``.

    Attributes
    ------------
    paths: Tuple[:class:`LatticePath`, ...]
    sources: Tuple[:class:`Box`, ...]
    targets: Tuple[:class:`Box`, ...]
    """

    __slots__ = ('paths', 'sources', 'targets')

    def __init__(self, paths):
        self.paths = tuple(paths)
        for index, path in enumerate(self.paths):
            for other in self.paths[index + 1:]:
                if path.crosses(other):
                    raise InvalidInput('paths from %s and %s cross' % (path.start, other.start))
        self.sources = tuple(p.start for p in self.paths)
        self.targets = tuple(p.end for p in self.paths)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __eq__(self, other):
        return isinstance(other, PathFamily) and frozenset(self.paths) == frozenset(other.paths)

    def __hash__(self):
        return hash(frozenset(self.paths))

    def __repr__(self):
        return '<PathFamily sources=%s targets=%s>' % (list(self.sources), list(self.targets))

    def weight(self, tableau):
        return sum(path_weight(tableau, p) for p in self.paths)


def path_weight(tableau, path):
    """Sums the entries of ``tableau`` along ``path``.

    Raises
    -------
    PathOutOfShape
        A box of the path is not a box of the tableau.
    """
    total = 0
    for box in path:
        if not tableau.shape.contains(box):
            raise PathOutOfShape(box)
        total += tableau.entry(box)
    return total


def _walks(shape, start, end, blocked):
    trail = [start]

    def extend(box):
        if box == end:
            yield tuple(trail)
            return
        for step in (box.shifted(1, 0), box.shifted(0, 1)):
            if step.row > end.row or step.col > end.col:
                continue
            if not shape.contains(step) or step in blocked:
                continue
            trail.append(step)
            yield from extend(step)
            trail.pop()

    if start in blocked or start.row > end.row or start.col > end.col:
        return
    yield from extend(start)


def enumerate_paths(shape, start, end):
    """Yields every :class:`LatticePath` inside ``shape`` from ``start`` to ``end``.

    Raises
    -------
    EndpointOutOfShape
        ``start`` or ``end`` is not a box of ``shape``.
    """
    start, end = Box(*start), Box(*end)
    for box in (start, end):
        if not shape.contains(box):
            raise EndpointOutOfShape(box)
    for boxes in _walks(shape, start, end, frozenset()):
        yield LatticePath(boxes)


def enumerate_ncpath(shape, sources, targets, *, cap=MAX_PATH_BOXES):
    """Yields every family of pairwise noncrossing paths connecting
    ``sources[l]`` to ``targets[l]``, each family exactly once.

    Paths are chosen in the order of their sources, each avoiding the boxes
    taken by the paths before it.

    Raises
    -------
    SizeMismatch
        ``sources`` and ``targets`` differ in length.
    EndpointOutOfShape
        An endpoint is not a box of ``shape``.
    CapExceeded
        ``shape`` has more than ``cap`` boxes.
    """
    sources = [Box(*b) for b in sources]
    targets = [Box(*b) for b in targets]
    if len(sources) != len(targets):
        raise SizeMismatch(len(sources), len(targets))
    for box in sources + targets:
        if not shape.contains(box):
            raise EndpointOutOfShape(box)
    if shape.size > cap:
        raise CapExceeded('number of boxes', shape.size, cap)

    chosen = []

    def backtrack(index, blocked):
        if index == len(sources):
            yield PathFamily(LatticePath(p) for p in chosen)
            return
        for walk in _walks(shape, sources[index], targets[index], blocked):
            chosen.append(walk)
            yield from backtrack(index + 1, blocked | frozenset(walk))
            chosen.pop()

    return backtrack(0, frozenset())


def endpoints(box, k, *, transposed=False):
    """Returns the endpoint lists ``([(1, l)], [(i, j-k+l)])``, ``l = 1..k``, for the value at ``box``.

    With ``transposed`` the roles of rows and columns swap, giving
    ``([(l, 1)], [(i-k+l, j)])``.
    """
    i, j = box
    ls = range(1, k + 1)
    if transposed:
        return [Box(l, 1) for l in ls], [Box(i - k + l, j) for l in ls]
    return [Box(1, l) for l in ls], [Box(i, j - k + l) for l in ls]


def gk_value(tableau, box, k, *, cap=MAX_PATH_BOXES, transposed=False):
    """The largest total weight of ``k`` noncrossing paths from the first
    ``k`` boxes of row 1 to the last ``k`` boxes of row ``i`` ending at column ``j``.

    Parameters
    ------------
    tableau: :class:`NTableau`
        The weights.
    box: :class:`Box`
        The box ``(i, j)``.
    k: :class:`int`
        The number of paths, ``1 <= k <= min(i, j)``.
    cap: :class:`int`
        Largest shape in which families are enumerated.
    transposed: :class:`bool`
        Whether to start in column 1 instead of row 1.

    Raises
    -------
    NoFamily
        No noncrossing family connects the endpoints.
    CapExceeded
        The shape has more than ``cap`` boxes.
    """
    box = Box(*box)
    if not 1 <= k <= min(box):
        raise InvalidInput('k must lie in [1, %s], not %r' % (min(box), k))
    sources, targets = endpoints(box, k, transposed=transposed)
    best = None
    for family in enumerate_ncpath(tableau.shape, sources, targets, cap=cap):
        weight = family.weight(tableau)
        if best is None or weight > best:
            best = weight
    if best is None:
        raise NoFamily(sources, targets)
    return best


def verify_gk(tableau, *, cap=MAX_PATH_BOXES):
    """Compares :func:`gk_value` with the partial sums array at every box and every ``k``.

    Returns
    --------
    List[:class:`Violation`]
        Records carrying ``i``, ``j``, ``k``, the path maximum ``m`` and ``ubar``.

    Raises
    -------
    CapExceeded
        The shape has more than ``cap`` boxes.
    """
    if tableau.shape.size > cap:
        raise CapExceeded('number of boxes', tableau.shape.size, cap)
    ubar = build_Ubar(build_U(tableau))
    violations = []
    for box in tableau.shape.boxes():
        for k in range(1, min(box) + 1):
            m = gk_value(tableau, box, k, cap=cap)
            expected = ubar[(box.row, box.col, k)]
            if m != expected:
                violations.append(Violation(Suite.gk, tableau.to_dict(), {
                    'i': box.row, 'j': box.col, 'k': k, 'm': m, 'ubar': expected,
                }))
    log.debug('Checked path maxima of %s: %s violations.', tableau.shape, len(violations))
    return violations


def verify_gk_transposed(tableau, *, cap=MAX_PATH_BOXES):
    """The column-1 convention: paths from ``(l, 1)`` to ``(i-k+l, j)`` in ``tableau``
    against the partial sums array of the transposed tableau at ``(j, i, k)``."""
    if tableau.shape.size > cap:
        raise CapExceeded('number of boxes', tableau.shape.size, cap)
    ubar = build_Ubar(build_U(tableau.transpose()))
    violations = []
    for box in tableau.shape.boxes():
        for k in range(1, min(box) + 1):
            m = gk_value(tableau, box, k, cap=cap, transposed=True)
            expected = ubar[(box.col, box.row, k)]
            if m != expected:
                violations.append(Violation(Suite.gk, tableau.to_dict(), {
                    'i': box.row, 'j': box.col, 'k': k, 'm': m, 'ubar': expected, 'transposed': True,
                }))
    return violations


def greene_partial_sums(permutation, *, cap=MAX_PATH_BOXES):
    """For the matrix of ``permutation``, returns the path maxima at ``(n, n)``
    for ``k = 1..n`` together with the partial sums ``λ1 + ... + λk`` of the
    classical insertion shape.

    Returns
    --------
    Tuple[List[:class:`int`], List[:class:`int`]]
    """
    matrix = permutation_matrix(permutation)
    n = matrix.shape.rows
    p, _ = rsk_insert(matrix)
    parts = list(p.shape.parts) + [0] * n
    sums = prefix_sums(parts[:n])
    maxima = [gk_value(matrix, (n, n), k, cap=cap) for k in range(1, n + 1)]
    return maxima, sums


def check_greene(permutation, *, cap=MAX_PATH_BOXES):
    """Checks the path maxima of a permutation matrix against the insertion
    shape and, for one path, against the longest increasing subsequence."""
    permutation = list(permutation)
    if not permutation:
        return []
    maxima, sums = greene_partial_sums(permutation, cap=cap)
    violations = []
    if maxima != sums:
        violations.append(Violation(Suite.gk, permutation, {'paths': maxima, 'shape_sums': sums}))
    lis = longest_increasing_subsequence(permutation)
    if maxima[0] != lis:
        violations.append(Violation(Suite.gk, permutation, {'paths': maxima[0], 'lis': lis}))
    return violations

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
import math
from collections import namedtuple

from . import utils
from .config import MAX_BOXES
from .errors import CapExceeded, InvalidInput, InvalidPartition, NotCorner, NotLinearExtension

__all__ = (
    'Box',
    'Partition',
    'partitions_of',
    'partitions_up_to',
)

log = logging.getLogger(__name__)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


class Box(namedtuple('Box', 'row col')):
    """A box ``(row, col)`` of a Young diagram in 1-based matrix coordinates.

    The upper-left box is ``(1, 1)``; rows grow downwards and columns to the right.
    Boxes compare in row-major reading order.
    """

    __slots__ = ()

    def __str__(self):
        return '(%s,%s)' % (self.row, self.col)

    @property
    def content(self):
        """:class:`int`: ``col - row``, the diagonal the box lies on."""
        return self.col - self.row

    def shifted(self, drow, dcol):
        """Returns the box moved by ``drow`` rows and ``dcol`` columns."""
        return Box(self.row + drow, self.col + dcol)

    def transposed(self):
        return Box(self.col, self.row)

    def to_list(self):
        return [self.row, self.col]

    @classmethod
    def from_data(cls, data):
        """Builds a box from its ``[row, col]`` JSON form."""
        try:
            row, col = data
        except (TypeError, ValueError):
            raise InvalidInput('%r is not a [row, col] pair' % (data,)) from None
        if not (_is_int(row) and _is_int(col)):
            raise InvalidInput('%r is not a [row, col] pair of integers' % (data,))
        return cls(row, col)


class Partition:
    """Represents an integer partition, i.e. the shape of a Young diagram.

    .. container:: operations

        .. describe:: x == y

            Checks if two partitions have the same parts.

        .. describe:: hash(x)

            Returns the partition's hash.

        .. describe:: b in x

            Checks if the :class:`Box` ``b`` is a box of the partition.

        .. describe:: len(x)

            Returns the number of rows.

        .. describe:: iter(x)

            Iterates over the parts.

    An n×n matrix is the partition ``(n, ..., n)``; there is no separate matrix type.

    Attributes
    ------------
    parts: Tuple[:class:`int`, ...]
        The positive, weakly decreasing row lengths. Trailing zeros are dropped.
    """

    __slots__ = ('parts', '_cs_boxes', '_cs_column_lengths')

    def __init__(self, parts=()):
        try:
            parts = tuple(parts)
        except TypeError:
            raise InvalidPartition((parts,), 'parts must be a sequence of integers') from None
        if not all(_is_int(p) for p in parts):
            raise InvalidPartition(parts, 'parts must be integers')

        while parts and parts[-1] == 0:
            parts = parts[:-1]

        if any(p <= 0 for p in parts):
            raise InvalidPartition(parts, 'parts must be positive')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition(parts, 'parts must weakly decrease')

        self.parts = parts

    @classmethod
    def empty(cls):
        return cls(())

    @classmethod
    def square(cls, n):
        """A factory method that returns the n×n square ``(n, ..., n)``."""
        return cls((n,) * n)

    @classmethod
    def rectangle(cls, rows, cols):
        return cls((cols,) * rows if cols else ())

    @classmethod
    def from_boxes(cls, boxes):
        """Rebuilds a partition from its set of boxes.

        Raises
        -------
        InvalidPartition
            The boxes do not form a Young diagram.
        """
        boxes = set(boxes)
        lengths = {}
        for box in boxes:
            lengths[box.row] = lengths.get(box.row, 0) + 1
        parts = tuple(lengths.get(i, 0) for i in range(1, max(lengths, default=0) + 1))
        shape = cls(parts)
        if set(shape.boxes()) != boxes:
            raise InvalidPartition(parts, 'boxes do not form a Young diagram')
        return shape

    @classmethod
    def from_data(cls, data):
        """Builds a partition from its JSON form, a list of parts."""
        if not isinstance(data, (list, tuple)):
            raise InvalidInput('a partition must be a list of parts, not %r' % (data,))
        return cls(data)

    def to_list(self):
        return list(self.parts)

    def __repr__(self):
        return '<Partition parts=%r>' % (self.parts,)

    def __str__(self):
        return '(%s)' % ','.join(map(str, self.parts))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __contains__(self, box):
        return self.contains(box)

    @property
    def size(self):
        """:class:`int`: The number of boxes ``|λ|``."""
        return sum(self.parts)

    @property
    def rows(self):
        return len(self.parts)

    @property
    def cols(self):
        return self.parts[0] if self.parts else 0

    def row_length(self, row):
        """:class:`int`: ``λ_row`` (1-based), ``0`` past the last row."""
        if 1 <= row <= len(self.parts):
            return self.parts[row - 1]
        return 0

    @utils.cached_slot_property('_cs_column_lengths')
    def column_lengths(self):
        """Tuple[:class:`int`, ...]: The column lengths, i.e. the parts of the conjugate."""
        return tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.cols + 1))

    def column_length(self, col):
        if 1 <= col <= self.cols:
            return self.column_lengths[col - 1]
        return 0

    def is_rectangle(self):
        return len(set(self.parts)) <= 1

    def is_square(self):
        return self.is_rectangle() and self.rows == self.cols

    def contains(self, box):
        """Checks whether ``box`` is a box of the partition.

        A box is valid iff ``row <= len(parts)`` and ``col <= parts[row]``.
        """
        row, col = box
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]

    @utils.cached_slot_property('_cs_boxes')
    def _boxes(self):
        return tuple(Box(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1))

    def boxes(self):
        """Tuple[:class:`Box`, ...]: Every box in row-major reading order.

        This is also the default insertion order of the toggle construction.
        """
        return self._boxes

    def corner_boxes(self):
        """FrozenSet[:class:`Box`]: Boxes ``(i, j)`` such that neither ``(i+1, j)``
        nor ``(i, j+1)`` is a box, i.e. the boxes that can be removed."""
        return frozenset(
            Box(i, p) for i, p in enumerate(self.parts, 1)
            if self.row_length(i + 1) < p
        )

    def border_boxes(self):
        """FrozenSet[:class:`Box`]: Boxes ``(i, j)`` such that ``(i+1, j+1)`` is not a box."""
        return frozenset(b for b in self.boxes() if not self.contains(b.shifted(1, 1)))

    def addable_boxes(self):
        """FrozenSet[:class:`Box`]: Boxes whose addition leaves a partition."""
        result = set()
        for i in range(1, len(self.parts) + 2):
            col = self.row_length(i) + 1
            if i == 1 or self.row_length(i - 1) >= col:
                result.add(Box(i, col))
        return frozenset(result)

    def hook_cells(self, box):
        """FrozenSet[:class:`Box`]: The hook at ``box``, every box weakly below or
        weakly to the right of it. Empty when ``box`` is not a box of the partition."""
        if not self.contains(box):
            return frozenset()
        row, col = box
        arm = (Box(row, j) for j in range(col, self.parts[row - 1] + 1))
        leg = (Box(i, col) for i in range(row + 1, self.column_length(col) + 1))
        return frozenset((*arm, *leg))

    def arm_length(self, box):
        return self.row_length(box.row) - box.col if self.contains(box) else 0

    def leg_length(self, box):
        return self.column_length(box.col) - box.row if self.contains(box) else 0

    def hook_length(self, box):
        """:class:`int`: The number of boxes in the hook at ``box``, ``0`` outside the shape."""
        box = Box(*box)
        if not self.contains(box):
            return 0
        return self.arm_length(box) + self.leg_length(box) + 1

    def count_syt(self):
        """:class:`int`: The number of standard Young tableaux of this shape,
        ``n! / prod(hook lengths)``."""
        return math.factorial(self.size) // math.prod(self.hook_length(b) for b in self.boxes())

    def conjugate(self):
        """:class:`Partition`: The transposed shape, ``λ'_j = #{i : λ_i >= j}``."""
        return Partition(self.column_lengths)

    def add_box(self, box):
        """Returns the partition grown by ``box``.

        Raises
        -------
        NotCorner
            ``box`` is not an addable box.
        """
        if box not in self.addable_boxes():
            raise NotCorner(box, self)
        parts = list(self.parts)
        if box.row > len(parts):
            parts.append(1)
        else:
            parts[box.row - 1] += 1
        return Partition(parts)

    def remove_box(self, box):
        """Returns the partition with the corner ``box`` removed.

        Raises
        -------
        NotCorner
            ``box`` is not a corner box.
        """
        if box not in self.corner_boxes():
            raise NotCorner(box, self)
        parts = list(self.parts)
        parts[box.row - 1] -= 1
        return Partition(parts)

    def is_subpartition(self, other):
        """Checks whether this diagram is contained in ``other``."""
        return len(self.parts) <= len(other.parts) and all(p <= q for p, q in zip(self.parts, other.parts))

    def is_linear_extension(self, order):
        """Checks whether ``order`` lists every box once, each after the boxes above and left of it."""
        try:
            self.validate_linear_extension(order)
        except NotLinearExtension:
            return False
        return True

    def validate_linear_extension(self, order):
        """Raises :exc:`NotLinearExtension` unless ``order`` is a linear extension of
        the box poset ``(i, j) <= (k, l)`` iff ``i <= k`` and ``j <= l``."""
        order = [Box(*b) for b in order]
        if len(order) != self.size or set(order) != set(self.boxes()):
            raise NotLinearExtension('it must list each of the %s boxes exactly once' % self.size)

        seen = set()
        for box in order:
            for above in (box.shifted(-1, 0), box.shifted(0, -1)):
                if self.contains(above) and above not in seen:
                    raise NotLinearExtension('%s comes before %s' % (box, above))
            seen.add(box)

    def linear_extensions(self, *, cap=MAX_BOXES):
        """Yields every linear extension of the box poset as a tuple of boxes.

        The enumeration backtracks over the currently minimal boxes; their number
        equals the number of standard Young tableaux of this shape.

        Parameters
        ------------
        cap: :class:`int`
            Largest admissible number of boxes.

        Raises
        -------
        CapExceeded
            The partition has more than ``cap`` boxes.
        """
        if self.size > cap:
            raise CapExceeded('number of boxes', self.size, cap)
        log.debug('Enumerating linear extensions of %s.', self)

        indegree = {b: sum(self.contains(p) for p in (b.shifted(-1, 0), b.shifted(0, -1))) for b in self.boxes()}
        prefix = []

        def backtrack(available):
            if not available:
                yield tuple(prefix)
                return
            for box in sorted(available):
                prefix.append(box)
                released = []
                for succ in (box.shifted(1, 0), box.shifted(0, 1)):
                    if succ in indegree:
                        indegree[succ] -= 1
                        if indegree[succ] == 0:
                            released.append(succ)
                yield from backtrack((available - {box}) | set(released))
                for succ in (box.shifted(1, 0), box.shifted(0, 1)):
                    if succ in indegree:
                        indegree[succ] += 1
                prefix.pop()

        start = frozenset(b for b, d in indegree.items() if d == 0)
        return backtrack(start)


def partitions_of(n):
    """Yields every partition of ``n`` in reverse lexicographic order."""
    def generate(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for head in range(min(remaining, largest), 0, -1):
            for tail in generate(remaining - head, head):
                yield (head,) + tail

    for parts in generate(n, n):
        yield Partition(parts)


def partitions_up_to(n, *, include_empty=False):
    """Yields every partition of size at most ``n``, smallest sizes first."""
    for size in range(0 if include_empty else 1, n + 1):
        yield from partitions_of(size)

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

import itertools

from .errors import (
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
from .partitions import Box, Partition

__all__ = (
    'NTableau',
    'SSYTView',
    'all_tableaux',
    'all_rpps',
)


def _check_entry(value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidTableau('entries must be nonnegative integers, not %r' % (value,))
    return value


class NTableau:
    """An assignment of nonnegative integers to the boxes of a :class:`Partition`.

    Both the input and the output of the toggle correspondence are ℕ-tableaux;
    an n×n ℕ-matrix is an ℕ-tableau of square shape. Instances are immutable,
    every "update" returns a new tableau.

    .. container:: operations

        .. describe:: x == y

            Checks if two tableaux have the same shape and entries.

        .. describe:: hash(x)

            Returns the tableau's hash.

        .. describe:: x[b]

            Returns the entry at the :class:`Box` ``b``.

    Attributes
    ------------
    shape: :class:`Partition`
        The shape of the tableau.
    rows: Tuple[Tuple[:class:`int`, ...], ...]
        The entries, row ``r`` listing ``shape.parts[r]`` values left to right.
    """

    __slots__ = ('shape', 'rows')

    def __init__(self, shape, rows):
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        rows = tuple(tuple(_check_entry(v) for v in row) for row in rows)
        if len(rows) != len(shape) or any(len(r) != p for r, p in zip(rows, shape.parts)):
            raise InvalidTableau('row lengths %r do not match shape %s' % ([len(r) for r in rows], shape))
        self.shape = shape
        self.rows = rows

    @classmethod
    def from_rows(cls, rows):
        """Builds a tableau whose shape is read off the row lengths."""
        rows = [list(r) for r in rows]
        while rows and not rows[-1]:
            rows.pop()
        return cls(Partition(len(r) for r in rows), rows)

    @classmethod
    def zero(cls, shape):
        """A factory method that returns the all-zero tableau of ``shape``."""
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        return cls(shape, [[0] * p for p in shape.parts])

    @classmethod
    def from_mapping(cls, shape, entries):
        """Builds a tableau from a mapping of :class:`Box` to entry; missing boxes are ``0``."""
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        extra = [b for b in entries if not shape.contains(b)]
        if extra:
            raise BoxOutOfShape(Box(*extra[0]), shape)
        return cls(shape, [[entries.get(Box(i, j), 0) for j in range(1, p + 1)] for i, p in enumerate(shape.parts, 1)])

    @classmethod
    def from_dict(cls, data):
        """Builds a tableau from ``{"shape": [...], "rows": [[...], ...]}``."""
        try:
            shape = Partition.from_data(data['shape'])
            rows = data['rows']
        except (KeyError, TypeError):
            raise InvalidInput('a tableau needs "shape" and "rows" keys') from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise InvalidInput('"rows" must be a list of lists')
        return cls(shape, rows)

    @classmethod
    def from_data(cls, data):
        """Accepts either the tableau object form or a bare list of rows."""
        if isinstance(data, dict):
            return cls.from_dict(data)
        if isinstance(data, list) and all(isinstance(r, list) for r in data):
            return cls.from_rows(data)
        raise InvalidInput('expected a tableau object or a list of rows, not %r' % (data,))

    def to_dict(self):
        return {'shape': self.shape.to_list(), 'rows': [list(r) for r in self.rows]}

    def to_lists(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return '<NTableau shape=%s rows=%r>' % (self.shape, self.to_lists())

    def __str__(self):
        width = max((len(str(v)) for v in self.values()), default=1)
        return '\n'.join(' '.join(str(v).rjust(width) for v in row) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, NTableau) and self.shape == other.shape and self.rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __getitem__(self, box):
        return self.entry(box)

    def entry(self, box):
        """Returns the entry at ``box``.

        Raises
        -------
        BoxOutOfShape
            ``box`` is not a box of the shape.
        """
        if not self.shape.contains(box):
            raise BoxOutOfShape(box, self.shape)
        return self.rows[box[0] - 1][box[1] - 1]

    def entry_or_zero(self, box):
        """Returns the entry at ``box``, or ``0`` for positions outside the shape
        (including nonpositive coordinates)."""
        row, col = box
        if 1 <= row <= len(self.rows) and 1 <= col <= len(self.rows[row - 1]):
            return self.rows[row - 1][col - 1]
        return 0

    def items(self):
        """Iterates over ``(Box, entry)`` pairs in reading order."""
        for i, row in enumerate(self.rows, 1):
            for j, v in enumerate(row, 1):
                yield Box(i, j), v

    def values(self):
        return itertools.chain.from_iterable(self.rows)

    def to_mapping(self):
        return dict(self.items())

    def with_box(self, box, value):
        """Returns the tableau grown by the addable ``box`` holding ``value``."""
        shape = self.shape.add_box(Box(*box))
        rows = [list(r) for r in self.rows]
        if box[0] > len(rows):
            rows.append([])
        rows[box[0] - 1].append(value)
        return NTableau(shape, rows)

    def without_box(self, box):
        """Returns the tableau with the corner ``box`` removed."""
        shape = self.shape.remove_box(Box(*box))
        rows = [list(r) for r in self.rows]
        rows[box[0] - 1].pop()
        return NTableau(shape, [r for r in rows if r])

    def restrict(self, shape):
        """Returns the restriction to a sub-diagram ``shape``.

        Raises
        -------
        ShapeMismatch
            ``shape`` is not contained in this tableau's shape.
        """
        if not isinstance(shape, Partition):
            shape = Partition(shape)
        if not shape.is_subpartition(self.shape):
            raise ShapeMismatch(self.shape, shape)
        return NTableau(shape, [row[:p] for row, p in zip(self.rows, shape.parts)])

    def weight(self):
        """:class:`int`: ``|T|``, the sum of all entries."""
        return sum(self.values())

    def first_descent(self):
        """Returns the first box (reading order) whose entry is smaller than the
        entry above or to the left of it, or ``None`` for a reverse plane partition."""
        for box, v in self.items():
            if v < self.entry_or_zero(box.shifted(-1, 0)) or v < self.entry_or_zero(box.shifted(0, -1)):
                return box
        return None

    def is_rpp(self):
        """Checks whether entries weakly increase along every row and every column."""
        return self.first_descent() is None

    def validate_rpp(self):
        """Raises :exc:`NotRPP` unless this is a reverse plane partition."""
        box = self.first_descent()
        if box is not None:
            raise NotRPP(box)

    def row_sums(self):
        """Tuple[:class:`int`, ...]: One total per row."""
        return tuple(sum(r) for r in self.rows)

    def col_sums(self):
        """Tuple[:class:`int`, ...]: One total per column, as many as the first row is long."""
        return tuple(
            sum(row[j] for row in self.rows if len(row) > j)
            for j in range(self.shape.cols)
        )

    def diag_sum(self, box):
        """Sums the northwest diagonal ending at ``box``,
        ``t(i,j) + t(i-1,j-1) + ... `` down to the first row or column.

        Raises
        -------
        BoxOutOfShape
            ``box`` is not a box of the shape.
        """
        box = Box(*box)
        if not self.shape.contains(box):
            raise BoxOutOfShape(box, self.shape)
        return sum(self.rows[box.row - 1 - k][box.col - 1 - k] for k in range(min(box)))

    def rect_sum(self, box):
        """Sums the ``i × j`` upper-left rectangle of entries ending at ``box``.

        Raises
        -------
        RectangleNotInShape
            Part of the rectangle lies outside the shape.
        """
        box = Box(*box)
        if box.row < 1 or box.col < 1 or any(self.shape.row_length(k) < box.col for k in range(1, box.row + 1)):
            raise RectangleNotInShape(box, self.shape)
        return sum(sum(row[:box.col]) for row in self.rows[:box.row])

    def rect_sum_or_zero(self, box):
        """The rectangle sum at ``box``, read as ``0`` when ``box`` is not a box of the shape."""
        if not self.shape.contains(box):
            return 0
        return self.rect_sum(box)

    def border_walk_rect(self, box):
        """The rectangle sum of a square tableau rewritten as a walk along the border:
        add the first ``j`` column sums, subtract the last ``n - i`` row sums.
        It agrees with :meth:`rect_sum` at border boxes, where ``i == n`` or ``j == n``.

        Raises
        -------
        NotSquare
            The tableau is not an n×n matrix.
        """
        if not self.shape.is_square():
            raise NotSquare(self.shape)
        n = self.shape.rows
        row, col = box
        rows = self.row_sums()
        return sum(self.col_sums()[:col]) - sum(rows[n - k] for k in range(1, n - row + 1))

    def transpose(self):
        """Returns the transposed tableau, entry ``(i, j)`` moving to ``(j, i)``."""
        shape = self.shape.conjugate()
        return NTableau(shape, [[self.rows[i - 1][j - 1] for i in range(1, p + 1)] for j, p in enumerate(shape.parts, 1)])


class SSYTView:
    """A validated semistandard Young tableau with entries in ``[1, n]``.

    Rows weakly increase and columns strictly increase.

    Attributes
    ------------
    tableau: :class:`NTableau`
        The underlying filling.
    max_entry: :class:`int`
        The alphabet bound ``n``.
    """

    __slots__ = ('tableau', 'max_entry')

    def __init__(self, tableau, max_entry):
        if not isinstance(max_entry, int) or max_entry < 0:
            raise InvalidInput('the alphabet bound must be a nonnegative integer, not %r' % (max_entry,))
        for box, v in tableau.items():
            if not 1 <= v <= max_entry:
                raise EntryOutOfRange(v, max_entry)
            if box.col > 1 and tableau.entry(box.shifted(0, -1)) > v:
                raise NotSSYT(box, 'row decreases')
            if box.row > 1 and tableau.entry(box.shifted(-1, 0)) >= v:
                raise NotSSYT(box, 'column does not strictly increase')
        self.tableau = tableau
        self.max_entry = max_entry

    @classmethod
    def from_rows(cls, rows, max_entry):
        return cls(NTableau.from_rows(rows), max_entry)

    @property
    def shape(self):
        return self.tableau.shape

    @property
    def rows(self):
        return self.tableau.rows

    def __eq__(self, other):
        return isinstance(other, SSYTView) and self.tableau == other.tableau and self.max_entry == other.max_entry

    def __hash__(self):
        return hash((self.tableau, self.max_entry))

    def __repr__(self):
        return '<SSYTView max_entry=%s rows=%r>' % (self.max_entry, self.tableau.to_lists())

    def type_vector(self):
        """Tuple[:class:`int`, ...]: ``type(T)_i``, the number of entries equal to ``i``, for ``i`` in ``[1, n]``."""
        counts = [0] * self.max_entry
        for v in self.tableau.values():
            counts[v - 1] += 1
        return tuple(counts)

    def to_dict(self):
        return self.tableau.to_dict()

    @staticmethod
    def is_ssyt(tableau, max_entry):
        try:
            SSYTView(tableau, max_entry)
        except (NotSSYT, EntryOutOfRange):
            return False
        return True


def all_tableaux(shape, max_entry):
    """Yields every ℕ-tableau of ``shape`` with entries in ``[0, max_entry]``."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    for values in itertools.product(range(max_entry + 1), repeat=shape.size):
        it = iter(values)
        yield NTableau(shape, [[next(it) for _ in range(p)] for p in shape.parts])


def all_rpps(shape, max_entry):
    """Yields every reverse plane partition of ``shape`` with entries in ``[0, max_entry]``."""
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    boxes = shape.boxes()
    filling = {}

    def backtrack(index):
        if index == len(boxes):
            yield NTableau.from_mapping(shape, filling)
            return
        box = boxes[index]
        low = max(filling.get(box.shifted(-1, 0), 0), filling.get(box.shifted(0, -1), 0))
        for v in range(low, max_entry + 1):
            filling[box] = v
            yield from backtrack(index + 1)
        del filling[box]

    if not boxes:
        yield NTableau.zero(shape)
        return
    yield from backtrack(0)

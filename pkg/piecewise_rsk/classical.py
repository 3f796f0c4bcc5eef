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

import bisect
import logging

from .enums import Suite
from .errors import EntryOutOfRange, FirstRowMismatch, InvalidInput, NotSquare, SizeMismatch
from .partitions import Box, Partition
from .report import Violation
from .tableau import NTableau, SSYTView
from .utils import prefix_sums

__all__ = (
    'Biword',
    'GTPattern',
    'matrix_to_biword',
    'row_insert',
    'rsk_insert',
    'gt_pattern',
    'glue',
    'classical_hat',
    'check_diagonal_properties',
    'check_classical_transpose',
    'permutation_matrix',
    'longest_increasing_subsequence',
)

log = logging.getLogger(__name__)


class Biword:
    """The two-line array of a square ℕ-matrix.

    The pair ``(i, j)`` occurs ``a_ij`` times; pairs are sorted by top entry,
    ties broken by bottom entry.

    .. container:: operations

        .. describe:: len(x)

            Returns the number of pairs.

        .. describe:: iter(x)

            Iterates over the ``(top, bottom)`` pairs.

    Attributes
    ------------
    pairs: Tuple[Tuple[:class:`int`, :class:`int`], ...]
        The sorted pairs.
    """

    __slots__ = ('pairs',)

    def __init__(self, pairs):
        self.pairs = tuple(sorted((int(t), int(b)) for t, b in pairs))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        return isinstance(other, Biword) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return '<Biword pairs=%r>' % (self.pairs,)

    @property
    def top(self):
        return tuple(t for t, _ in self.pairs)

    @property
    def bottom(self):
        return tuple(b for _, b in self.pairs)

    def to_list(self):
        return [list(p) for p in self.pairs]


class GTPattern:
    """A Gelfand-Tsetlin pattern ``g(i, j)``, ``1 <= i <= j <= n``.

    Row ``i`` holds ``g(i, i), ..., g(i, n)``, so the first row has ``n``
    entries and the last row one. Row ``i`` is the shape of the tableau
    obtained by deleting every entry larger than ``n + 1 - i``.

    Attributes
    ------------
    rows: Tuple[Tuple[:class:`int`, ...], ...]
        The rows, row ``i`` having ``n + 1 - i`` entries.
    n: :class:`int`
        The number of rows.
    """

    __slots__ = ('rows', 'n')

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(rows)
        if any(len(row) != n - i for i, row in enumerate(rows)):
            raise InvalidInput('pattern rows must have lengths %s' % list(range(n, 0, -1)))
        if any(v < 0 for row in rows for v in row):
            raise InvalidInput('pattern entries must be nonnegative')
        self.rows = rows
        self.n = n

    @classmethod
    def zero(cls, n):
        return cls([[0] * (n - i) for i in range(n)])

    @classmethod
    def from_list(cls, data):
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise InvalidInput('a pattern is a list of rows')
        return cls(data)

    def to_list(self):
        return [list(r) for r in self.rows]

    def __getitem__(self, key):
        i, j = key
        return self.g(i, j)

    def g(self, i, j):
        """Returns ``g(i, j)`` in the 1-based indexing of the rows above."""
        if not 1 <= i <= j <= self.n:
            raise IndexError('g(%s, %s) is outside the pattern' % (i, j))
        return self.rows[i - 1][j - i]

    def __eq__(self, other):
        return isinstance(other, GTPattern) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return '<GTPattern n=%s rows=%r>' % (self.n, self.to_list())

    def is_valid(self):
        """Checks the interlacing ``g(i, j) >= g(i+1, j+1) >= g(i, j+1)``."""
        g = self.g
        return all(
            g(i, j) >= g(i + 1, j + 1) >= g(i, j + 1)
            for j in range(1, self.n)
            for i in range(1, j + 1)
        )

    def shapes(self):
        """List[:class:`Partition`]: The shapes of the tableaux restricted to
        entries ``<= 1, <= 2, ..., <= n``, smallest alphabet first."""
        return [Partition(row) for row in reversed(self.rows)]

    @property
    def first_row(self):
        return self.rows[0] if self.rows else ()


def _require_square(matrix):
    if not matrix.shape.is_square():
        raise NotSquare(matrix.shape)
    return matrix.shape.rows


def matrix_to_biword(matrix):
    """Expands a square ℕ-matrix into its :class:`Biword`.

    Raises
    -------
    NotSquare
        The tableau is not an n×n matrix.
    """
    _require_square(matrix)
    return Biword((box.row, box.col) for box, v in matrix.items() for _ in range(v))


def _insert(rows, value):
    for index, row in enumerate(rows):
        position = bisect.bisect_right(row, value)
        if position == len(row):
            row.append(value)
            return index
        row[position], value = value, row[position]
    rows.append([value])
    return len(rows) - 1


def row_insert(tableau, value):
    """Row-inserts ``value`` into a semistandard filling.

    ``value`` replaces the leftmost entry of the first row strictly greater
    than it; the bumped entry is inserted into the next row, and so on.

    Returns
    --------
    Tuple[:class:`NTableau`, :class:`int`]
        The new tableau and the 1-based row of the box that was created.
    """
    rows = [list(r) for r in tableau.rows]
    index = _insert(rows, value)
    return NTableau.from_rows(rows), index + 1


def rsk_insert(matrix):
    """Runs textbook RSK on a square ℕ-matrix.

    The bottom line of the biword is inserted into ``P`` while ``Q`` records
    the top line, so ``type(P)`` is the column sums and ``type(Q)`` the row
    sums of ``matrix``.

    Returns
    --------
    Tuple[:class:`SSYTView`, :class:`SSYTView`]
        The insertion tableau ``P`` and the recording tableau ``Q``.
    """
    n = _require_square(matrix)
    p_rows, q_rows = [], []
    for top, bottom in matrix_to_biword(matrix):
        index = _insert(p_rows, bottom)
        if index == len(q_rows):
            q_rows.append([])
        q_rows[index].append(top)

    log.debug('Row insertion of %s finished with shape %s.', matrix.to_lists(), [len(r) for r in p_rows])
    return SSYTView(NTableau.from_rows(p_rows), n), SSYTView(NTableau.from_rows(q_rows), n)


def gt_pattern(tableau, n):
    """Returns the Gelfand-Tsetlin pattern of a semistandard tableau,
    ``g(i, j) = #entries <= n + 1 - i in row j - i + 1``.

    Parameters
    ------------
    tableau: Union[:class:`SSYTView`, :class:`NTableau`]
        The tableau.
    n: :class:`int`
        The alphabet bound.

    Raises
    -------
    EntryOutOfRange
        An entry is larger than ``n``.
    """
    if isinstance(tableau, SSYTView):
        tableau = tableau.tableau
    for v in tableau.values():
        if not 1 <= v <= n:
            raise EntryOutOfRange(v, n)

    rows = tableau.rows
    def count(row, bound):
        return sum(1 for v in rows[row - 1] if v <= bound) if row <= len(rows) else 0

    return GTPattern([
        [count(j - i + 1, n + 1 - i) for j in range(i, n + 1)]
        for i in range(1, n + 1)
    ])


def glue(gp, gq):
    """Glues two patterns with a common first row into a weakly increasing
    n×n matrix: the lower triangle comes from ``gp``, the upper from ``gq``.

    Raises
    -------
    SizeMismatch
        The patterns have different sizes.
    FirstRowMismatch
        The patterns' first rows differ.
    """
    if gp.n != gq.n:
        raise SizeMismatch(gp.n, gq.n)
    if gp.first_row != gq.first_row:
        raise FirstRowMismatch(list(gp.first_row), list(gq.first_row))

    n = gp.n
    return NTableau(Partition.square(n), [
        [gp.g(i - j + 1, n + 1 - j) if i >= j else gq.g(j - i + 1, n + 1 - i) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ])


def classical_hat(matrix):
    """Composes :func:`rsk_insert`, :func:`gt_pattern` and :func:`glue`."""
    n = _require_square(matrix)
    p, q = rsk_insert(matrix)
    return glue(gt_pattern(p, n), gt_pattern(q, n))


def check_diagonal_properties(matrix, hat=None):
    """Checks that the diagonals of the glued matrix ending in the last row
    record the column sums of ``matrix`` and those ending in the last column
    record its row sums.

    Returns
    --------
    List[:class:`Violation`]
        One entry per disagreeing diagonal.
    """
    n = _require_square(matrix)
    if hat is None:
        hat = classical_hat(matrix)
    violations = []
    columns = prefix_sums(matrix.col_sums())
    rows = prefix_sums(matrix.row_sums())
    for i in range(1, n + 1):
        for box, expected in ((Box(n, i), columns[i - 1]), (Box(i, n), rows[i - 1])):
            found = hat.diag_sum(box)
            if found != expected:
                violations.append(Violation(Suite.oracle, matrix.to_lists(), {
                    'box': box.to_list(), 'expected': expected, 'found': found,
                }))
    return violations


def check_classical_transpose(matrix, hat=None):
    """Checks that transposing the matrix transposes its glued matrix,
    that is P and Q trade places."""
    if hat is None:
        hat = classical_hat(matrix)
    flipped = classical_hat(matrix.transpose())
    expected = hat.transpose()
    if flipped == expected:
        return []
    return [Violation(Suite.oracle, matrix.to_lists(), {
        'of_transpose': flipped.to_lists(), 'transpose_of': expected.to_lists(),
    })]


def permutation_matrix(permutation):
    """Returns the n×n matrix with a ``1`` at ``(i, permutation[i-1])``.

    Raises
    -------
    InvalidInput
        ``permutation`` is not a permutation of ``1..n``.
    """
    permutation = list(permutation)
    n = len(permutation)
    if sorted(permutation) != list(range(1, n + 1)):
        raise InvalidInput('%r is not a permutation of 1..%s' % (permutation, n))
    return NTableau(Partition.square(n), [[int(permutation[i] == j) for j in range(1, n + 1)] for i in range(n)])


def longest_increasing_subsequence(sequence):
    """:class:`int`: Length of a longest strictly increasing subsequence."""
    tails = []
    for value in sequence:
        position = bisect.bisect_left(tails, value)
        if position == len(tails):
            tails.append(value)
        else:
            tails[position] = value
    return len(tails)

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
from fractions import Fraction

from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_trunc
from sympy.polys.rings import ring

from .config import MAX_BOXES, MAX_DEGREE
from .errors import (
    BoxOutOfShape,
    CapExceeded,
    InvalidInput,
    MissingWeight,
    NonPositiveWeight,
    ZeroDenominator,
)
from .partitions import Box, Partition
from .tableau import NTableau
from .toggles import toggle_rsk
from .utils import format_fraction, parse_fraction

__all__ = (
    'TruncatedSeries',
    'ContentWeights',
    'hook_length',
    'hook_lengths',
    'hook_product',
    'x_hook_length',
    'weighted_weight',
    'check_weight_formula',
    'check_weight_formula_plain',
    'rpp_gf',
    'rpp_gf_brute',
    'weighted_rpp_gf',
    'weighted_rpp_gf_brute',
    'weighted_rpp_gf_check',
    'syt_from_extension',
    'syt_enumerate',
    't_x_value',
    'whlf_sides',
    'check_whlf',
)

log = logging.getLogger(__name__)

_RING, _Q = ring('q', ZZ)


class TruncatedSeries:
    """A power series in ``q`` with integer coefficients, known modulo ``q^(N+1)``.

    .. container:: operations

        .. describe:: x + y

            Adds two series, truncating at the smaller degree.

        .. describe:: x * y

            Multiplies two series, truncating at the smaller degree.

        .. describe:: x == y

            Checks if two series have the same degree and coefficients.

        .. describe:: x[d]

            Returns the coefficient of ``q^d``.

    Attributes
    ------------
    degree: :class:`int`
        The truncation degree ``N``.
    """

    __slots__ = ('degree', '_poly')

    def __init__(self, coefficients=(), degree=0):
        if not isinstance(degree, int) or degree < 0:
            raise InvalidInput('truncation degree must be a nonnegative integer, not %r' % (degree,))
        self.degree = degree
        poly = _RING.zero
        for d, c in enumerate(coefficients):
            if d > degree:
                break
            if c:
                poly += int(c) * _Q ** d
        self._poly = poly

    @classmethod
    def _from_poly(cls, poly, degree):
        self = cls.__new__(cls)
        self.degree = degree
        self._poly = rs_trunc(poly, _Q, degree + 1)
        return self

    @classmethod
    def one(cls, degree):
        """A factory method that returns the series ``1``."""
        return cls((1,), degree)

    @classmethod
    def geometric(cls, step, degree):
        """A factory method that returns ``1 / (1 - q^step) = 1 + q^step + q^(2 step) + ...``.

        Raises
        -------
        ZeroDenominator
            ``step`` is not positive.
        """
        if step <= 0:
            raise ZeroDenominator(step)
        poly = _RING.zero
        for e in range(0, degree + 1, step):
            poly += _Q ** e
        return cls._from_poly(poly, degree)

    def __getitem__(self, d):
        if not 0 <= d <= self.degree:
            raise IndexError('degree %s is outside [0, %s]' % (d, self.degree))
        return int(self._poly.get((d,), 0))

    @property
    def coefficients(self):
        """Tuple[:class:`int`, ...]: ``c_0, ..., c_N``."""
        return tuple(self[d] for d in range(self.degree + 1))

    def to_list(self):
        return list(self.coefficients)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        degree = min(self.degree, other.degree)
        return TruncatedSeries._from_poly(self._poly + other._poly, degree)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        degree = min(self.degree, other.degree)
        return TruncatedSeries._from_poly(rs_mul(self._poly, other._poly, _Q, degree + 1), degree)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.degree == other.degree
                and self.coefficients == other.coefficients)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.degree, self.coefficients))

    def __repr__(self):
        return '<TruncatedSeries degree=%s coefficients=%s>' % (self.degree, self.to_list())

    def __str__(self):
        return '%s + O(q^%s)' % (self._poly.as_expr(), self.degree + 1)


def _check_degree(degree, cap):
    if degree > cap:
        raise CapExceeded('series degree', degree, cap)


def _check_boxes(shape, cap):
    if shape.size > cap:
        raise CapExceeded('number of boxes', shape.size, cap)


class ContentWeights:
    """Positive rational weights ``x_c`` indexed by the content ``c = col - row``.

    Attributes
    ------------
    values: Dict[:class:`int`, :class:`fractions.Fraction`]
        The weight of each content.
    """

    __slots__ = ('values',)

    def __init__(self, values):
        checked = {}
        for content, value in dict(values).items():
            value = Fraction(value)
            if value <= 0:
                raise NonPositiveWeight(content, value)
            checked[int(content)] = value
        self.values = checked

    @classmethod
    def uniform(cls, shape, value=1):
        """A factory method giving every content of ``shape`` the weight ``value``."""
        return cls({c: value for c in range(1 - shape.rows, shape.cols)})

    @classmethod
    def from_dict(cls, data):
        """Builds weights from ``{"content": "num/den", ...}``; keys may be strings."""
        try:
            return cls({int(c): parse_fraction(v) for c, v in data.items()})
        except (AttributeError, ValueError):
            raise InvalidInput('weights must map integer contents to rationals') from None

    def to_dict(self):
        return {str(c): format_fraction(v) for c, v in sorted(self.values.items())}

    def __getitem__(self, content):
        try:
            return self.values[content]
        except KeyError:
            raise MissingWeight(content) from None

    def __eq__(self, other):
        return isinstance(other, ContentWeights) and self.values == other.values

    def __hash__(self):
        return hash(frozenset(self.values.items()))

    def __repr__(self):
        return '<ContentWeights %s>' % self.to_dict()

    def validate(self, shape):
        """Raises :exc:`MissingWeight` unless every content of ``shape`` has a weight."""
        for c in range(1 - shape.rows, shape.cols):
            if c not in self.values:
                raise MissingWeight(c)

    def is_integral(self):
        return all(v.denominator == 1 for v in self.values.values())

    def as_integers(self):
        """Dict[:class:`int`, :class:`int`]: The weights, which must be positive integers.

        Raises
        -------
        NonPositiveWeight
            A weight is not an integer.
        """
        for c, v in self.values.items():
            if v.denominator != 1:
                raise NonPositiveWeight(c, v)
        return {c: int(v) for c, v in self.values.items()}


def hook_length(shape, box):
    """:class:`int`: The size of the hook at ``box``, ``0`` when ``box`` is not in ``shape``."""
    return shape.hook_length(box)


def hook_lengths(shape):
    """Dict[:class:`Box`, :class:`int`]: The hook length of every box."""
    return {b: shape.hook_length(b) for b in shape.boxes()}


def hook_product(shape):
    return math.prod(hook_lengths(shape).values())


def x_hook_length(shape, box, weights):
    """Sums the content weights over the hook at ``box``.

    Raises
    -------
    BoxOutOfShape
        ``box`` is not a box of ``shape``.
    MissingWeight
        A content in the hook has no weight.
    """
    box = Box(*box)
    if not shape.contains(box):
        raise BoxOutOfShape(box, shape)
    return sum((weights[b.content] for b in shape.hook_cells(box)), Fraction(0))


def weighted_weight(tableau, weights):
    """:class:`fractions.Fraction`: ``sum t(i,j) x_(j-i)`` over the boxes of ``tableau``."""
    return sum((v * weights[box.content] for box, v in tableau.items() if v), Fraction(0))


def check_weight_formula(tableau, weights):
    """Checks that the weighted size of the toggle image equals
    ``sum t(i,j) h(i,j; x)`` over the input."""
    shape = tableau.shape
    left = weighted_weight(toggle_rsk(tableau), weights)
    right = sum((v * x_hook_length(shape, box, weights) for box, v in tableau.items() if v), Fraction(0))
    return left == right


def check_weight_formula_plain(tableau):
    """Checks ``|image| == sum t(i,j) h(i,j)``."""
    shape = tableau.shape
    return toggle_rsk(tableau).weight() == sum(v * shape.hook_length(box) for box, v in tableau.items())


def rpp_gf(shape, degree, *, cap=MAX_DEGREE):
    """The product ``prod 1 / (1 - q^h)`` over the hook lengths of ``shape``, truncated at ``degree``.

    Raises
    -------
    CapExceeded
        ``degree`` is larger than ``cap``.
    """
    _check_degree(degree, cap)
    series = TruncatedSeries.one(degree)
    for h in hook_lengths(shape).values():
        series = series * TruncatedSeries.geometric(h, degree)
    return series


def _rpp_histogram(shape, degree, cost):
    boxes = shape.boxes()
    counts = [0] * (degree + 1)
    filling = {}

    def backtrack(index, total):
        if index == len(boxes):
            counts[total] += 1
            return
        box = boxes[index]
        low = max(filling.get(box.shifted(-1, 0), 0), filling.get(box.shifted(0, -1), 0))
        step = cost(box)
        value = low
        while total + value * step <= degree:
            filling[box] = value
            backtrack(index + 1, total + value * step)
            value += 1
        filling.pop(box, None)

    backtrack(0, 0)
    return TruncatedSeries(counts, degree)


def rpp_gf_brute(shape, degree, *, cap=MAX_DEGREE, max_boxes=MAX_BOXES):
    """Counts the reverse plane partitions of ``shape`` by size up to ``degree``.

    Raises
    -------
    CapExceeded
        ``degree`` or the number of boxes exceeds its cap.
    """
    _check_degree(degree, cap)
    _check_boxes(shape, max_boxes)
    return _rpp_histogram(shape, degree, lambda box: 1)


def weighted_rpp_gf(shape, weights, degree, *, cap=MAX_DEGREE):
    """The product ``prod 1 / (1 - q^h(i,j; x))`` for positive integer weights."""
    _check_degree(degree, cap)
    weights.validate(shape)
    weights.as_integers()
    series = TruncatedSeries.one(degree)
    for box in shape.boxes():
        series = series * TruncatedSeries.geometric(int(x_hook_length(shape, box, weights)), degree)
    return series


def weighted_rpp_gf_brute(shape, weights, degree, *, cap=MAX_DEGREE, max_boxes=MAX_BOXES):
    """Counts reverse plane partitions by their content-weighted size up to ``degree``."""
    _check_degree(degree, cap)
    _check_boxes(shape, max_boxes)
    weights.validate(shape)
    integral = weights.as_integers()
    return _rpp_histogram(shape, degree, lambda box: integral[box.content])


def weighted_rpp_gf_check(shape, weights, degree, *, cap=MAX_DEGREE, max_boxes=MAX_BOXES):
    """Checks the content-weighted generating function identity with every
    ``z_c`` specialised to ``q^(x_c)``.

    Raises
    -------
    NonPositiveWeight
        A weight is not a positive integer.
    CapExceeded
        ``degree`` or the number of boxes exceeds its cap.
    """
    brute = weighted_rpp_gf_brute(shape, weights, degree, cap=cap, max_boxes=max_boxes)
    return brute == weighted_rpp_gf(shape, weights, degree, cap=cap)


def syt_from_extension(order):
    """Returns the standard Young tableau with entry ``k`` in the ``k``-th box of ``order``."""
    order = [Box(*b) for b in order]
    shape = Partition.from_boxes(order)
    shape.validate_linear_extension(order)
    return NTableau.from_mapping(shape, {box: k for k, box in enumerate(order, 1)})


def syt_enumerate(shape, *, cap=MAX_BOXES):
    """Yields every standard Young tableau of ``shape`` once.

    Raises
    -------
    CapExceeded
        ``shape`` has more than ``cap`` boxes.
    """
    for order in shape.linear_extensions(cap=cap):
        yield NTableau.from_mapping(shape, {box: k for k, box in enumerate(order, 1)})


def t_x_value(tableau, weights):
    """Evaluates ``prod_k 1 / (x_(c(n)) + x_(c(n-1)) + ... + x_(c(n+1-k)))``
    where ``c(m)`` is the content of the box holding ``m``.

    Raises
    -------
    ZeroDenominator
        A partial sum vanishes.
    """
    by_entry = sorted(tableau.items(), key=lambda item: item[1], reverse=True)
    result = Fraction(1)
    partial = Fraction(0)
    for step, (box, _) in enumerate(by_entry, 1):
        partial += weights[box.content]
        if partial == 0:
            raise ZeroDenominator(step)
        result /= partial
    return result


def whlf_sides(shape, weights, *, cap=MAX_BOXES):
    """Returns ``(sum of T_x over SYT, prod 1 / h(i,j; x))`` as exact rationals."""
    weights.validate(shape)
    total = sum((t_x_value(t, weights) for t in syt_enumerate(shape, cap=cap)), Fraction(0))
    product = Fraction(1)
    for box in shape.boxes():
        product /= x_hook_length(shape, box, weights)
    return total, product


def check_whlf(shape, weights, *, cap=MAX_BOXES):
    """Checks the content-weighted hook-length formula on ``shape``."""
    total, product = whlf_sides(shape, weights, cap=cap)
    if total != product:
        log.debug('Hook-length identity fails on %s: %s != %s.', shape, total, product)
    return total == product

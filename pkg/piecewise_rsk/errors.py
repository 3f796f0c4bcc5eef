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

__all__ = (
    'RSKException',
    'InvalidInput',
    'InvalidPartition',
    'InvalidTableau',
    'NotSquare',
    'SizeMismatch',
    'FirstRowMismatch',
    'KindMismatch',
    'ShapeMismatch',
    'DomainMismatch',
    'ValidationError',
    'BoxOutOfShape',
    'RectangleNotInShape',
    'NotRPP',
    'NotSSYT',
    'NotCorner',
    'NotLinearExtension',
    'EntryOutOfRange',
    'PathOutOfShape',
    'EndpointOutOfShape',
    'NoFamily',
    'MissingWeight',
    'NonPositiveWeight',
    'ZeroDenominator',
    'CapExceeded',
    'ConfigError',
)


class RSKException(Exception):
    """Base exception class for piecewise_rsk

    Ideally speaking, this could be caught to handle any exceptions thrown from this library.
    """
    pass


class InvalidInput(RSKException):
    """Exception that's thrown when the data handed to the library is malformed.

    These are usually for exceptions that happened due to user input, for
    example a ragged row list or a JSON document of the wrong form.
    """
    pass


class InvalidPartition(InvalidInput):
    """Exception that's thrown when a sequence of parts is not a partition.

    Attributes
    -----------
    parts: Tuple[:class:`int`, ...]
        The offending parts.
    """
    def __init__(self, parts, reason='parts must be positive and weakly decreasing'):
        self.parts = tuple(parts)
        super().__init__('%r is not a partition: %s' % (self.parts, reason))


class InvalidTableau(InvalidInput):
    """Exception that's thrown when rows of entries do not fill a shape."""
    pass


class NotSquare(InvalidInput):
    """Exception that's thrown when an operation that needs an n×n matrix
    receives some other shape.

    Attributes
    -----------
    shape: :class:`~piecewise_rsk.Partition`
        The shape that was received.
    """
    def __init__(self, shape):
        self.shape = shape
        super().__init__('expected a square matrix, got shape %s' % (list(shape.parts),))


class SizeMismatch(InvalidInput):
    """Exception that's thrown when two Gelfand-Tsetlin patterns have
    a different number of rows."""
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__('patterns have %s and %s rows' % (left, right))


class FirstRowMismatch(InvalidInput):
    """Exception that's thrown when two Gelfand-Tsetlin patterns that should be
    glued along their first row disagree there."""
    def __init__(self, left, right):
        self.left = tuple(left)
        self.right = tuple(right)
        super().__init__('first rows differ: %r != %r' % (self.left, self.right))


class KindMismatch(InvalidInput):
    """Exception that's thrown when a pyramid array of the wrong kind is passed."""
    def __init__(self, expected, received):
        self.expected = expected
        self.received = received
        super().__init__('expected a %s array, received %s' % (expected, received))


class ShapeMismatch(InvalidInput):
    """Exception that's thrown when a tableau and an array disagree on their shape."""
    def __init__(self, expected, received):
        self.expected = expected
        self.received = received
        super().__init__('shape %r does not match %r' % (list(received), list(expected)))


class DomainMismatch(InvalidInput):
    """Exception that's thrown when an array lacks a point a computation needs."""
    def __init__(self, point):
        self.point = point
        super().__init__('point %r is outside the array domain' % (point,))


class ValidationError(RSKException):
    """Exception that's thrown when well-formed input violates the precondition
    of an operation, e.g. a non weakly increasing tableau handed to the inverse map.
    """
    pass


class BoxOutOfShape(ValidationError):
    """Exception that's thrown when a box is not part of a shape.

    Attributes
    -----------
    box: :class:`~piecewise_rsk.Box`
        The offending box.
    """
    def __init__(self, box, shape):
        self.box = box
        self.shape = shape
        super().__init__('box %s is not a box of %s' % (box, list(shape)))


class RectangleNotInShape(ValidationError):
    """Exception that's thrown when the upper-left rectangle ending at a box
    does not fit in a shape."""
    def __init__(self, box, shape):
        self.box = box
        self.shape = shape
        super().__init__('the rectangle ending at %s does not fit in %s' % (box, list(shape)))


class NotRPP(ValidationError):
    """Exception that's thrown when a tableau is not weakly increasing along
    rows and columns.

    Attributes
    -----------
    box: :class:`~piecewise_rsk.Box`
        The first box whose entry is smaller than a neighbour above or to the left.
    """
    def __init__(self, box):
        self.box = box
        super().__init__('not a reverse plane partition: entry at %s decreases' % (box,))


class NotSSYT(ValidationError):
    """Exception that's thrown when a tableau is not semistandard."""
    def __init__(self, box, reason):
        self.box = box
        super().__init__('not semistandard at %s: %s' % (box, reason))


class NotCorner(ValidationError):
    """Exception that's thrown when a box cannot be added to (or removed from)
    a shape while keeping it a partition."""
    def __init__(self, box, shape):
        self.box = box
        self.shape = shape
        super().__init__('%s is not a corner of %s' % (box, list(shape)))


class NotLinearExtension(ValidationError):
    """Exception that's thrown when an insertion order is not a linear extension
    of the box poset."""
    def __init__(self, reason):
        super().__init__('order is not a linear extension: %s' % reason)


class EntryOutOfRange(ValidationError):
    """Exception that's thrown when a tableau entry is outside ``[1, n]``."""
    def __init__(self, value, n):
        self.value = value
        self.n = n
        super().__init__('entry %s is outside [1, %s]' % (value, n))


class PathOutOfShape(ValidationError):
    """Exception that's thrown when a lattice path leaves the shape it is weighted in."""
    def __init__(self, box):
        self.box = box
        super().__init__('path box %s is outside the shape' % (box,))


class EndpointOutOfShape(ValidationError):
    """Exception that's thrown when a path endpoint is not a box of the shape."""
    def __init__(self, box):
        self.box = box
        super().__init__('endpoint %s is outside the shape' % (box,))


class NoFamily(ValidationError):
    """Exception that's thrown when no family of noncrossing paths connects
    the requested endpoints."""
    def __init__(self, sources, targets):
        self.sources = tuple(sources)
        self.targets = tuple(targets)
        super().__init__('no noncrossing paths connect %s to %s' % (list(self.sources), list(self.targets)))


class MissingWeight(ValidationError):
    """Exception that's thrown when a content occurring in a shape has no weight."""
    def __init__(self, content):
        self.content = content
        super().__init__('no weight given for content %s' % content)


class NonPositiveWeight(ValidationError):
    """Exception that's thrown when a content weight is zero or negative
    (or, where integers are required, not an integer)."""
    def __init__(self, content, value):
        self.content = content
        self.value = value
        super().__init__('weight %s for content %s is not admissible' % (value, content))


class ZeroDenominator(ValidationError):
    """Exception that's thrown when a product of reciprocal partial sums meets a zero sum."""
    def __init__(self, step):
        self.step = step
        super().__init__('partial sum %s vanishes' % step)


class CapExceeded(RSKException):
    """Exception that's thrown when an enumeration would exceed its configured cap.

    Attributes
    -----------
    what: :class:`str`
        The quantity that is capped.
    value: :class:`int`
        The requested value.
    cap: :class:`int`
        The configured cap.
    """
    def __init__(self, what, value, cap):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__('%s %s exceeds the cap of %s' % (what, value, cap))


class ConfigError(RSKException):
    """Exception that's thrown when a run configuration is invalid."""
    pass

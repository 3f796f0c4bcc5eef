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

from fractions import Fraction
from functools import lru_cache

from .config import ENTRY_MAX
from .errors import ConfigError
from .hooks import ContentWeights
from .partitions import Partition, partitions_up_to
from .tableau import NTableau

__all__ = (
    'RATIONAL_WEIGHTS',
    'random_partition',
    'random_tableau',
    'random_matrix',
    'random_permutation',
    'random_linear_extension',
    'random_weights',
    'random_integer_weights',
)

RATIONAL_WEIGHTS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


@lru_cache(maxsize=32)
def _shapes_up_to(max_boxes):
    return tuple(partitions_up_to(max_boxes))


def random_partition(rng, max_boxes):
    """Draws a partition uniformly among those with ``1 <= |λ| <= max_boxes``."""
    if max_boxes < 1:
        raise ConfigError('shapes need at least one box, not %r' % (max_boxes,))
    return rng.choice(_shapes_up_to(max_boxes))


def random_tableau(rng, shape, max_entry=ENTRY_MAX):
    """Fills ``shape`` with independent entries uniform on ``[0, max_entry]``."""
    return NTableau(shape, [[rng.randint(0, max_entry) for _ in range(p)] for p in shape.parts])


def random_matrix(rng, n, max_entry=ENTRY_MAX):
    return random_tableau(rng, Partition.square(n), max_entry)


def random_permutation(rng, n):
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return values


def random_linear_extension(rng, shape):
    """Builds a linear extension by repeatedly picking one of the currently
    minimal boxes at random. Not uniform, but never enumerates."""
    order = []
    taken = set()
    available = {b for b in shape.boxes() if b == (1, 1)}
    while available:
        box = rng.choice(sorted(available))
        available.remove(box)
        taken.add(box)
        order.append(box)
        for succ in (box.shifted(1, 0), box.shifted(0, 1)):
            if not shape.contains(succ):
                continue
            above, left = succ.shifted(-1, 0), succ.shifted(0, -1)
            if (above.row < 1 or above in taken) and (left.col < 1 or left in taken):
                available.add(succ)
    return order


def random_weights(rng, shape, choices=RATIONAL_WEIGHTS):
    """Draws a weight for every content of ``shape`` from ``choices``."""
    return ContentWeights({c: rng.choice(choices) for c in range(1 - shape.rows, shape.cols)})


def random_integer_weights(rng, shape, high=3):
    """Draws a positive integer weight in ``[1, high]`` for every content of ``shape``."""
    return ContentWeights({c: rng.randint(1, high) for c in range(1 - shape.rows, shape.cols)})

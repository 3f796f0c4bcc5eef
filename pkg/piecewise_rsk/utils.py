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

import json
import re
from fractions import Fraction
from itertools import accumulate

from .errors import InvalidInput

__all__ = (
    'cached_slot_property',
    'to_json',
    'to_pretty_json',
    'prefix_sums',
    'format_fraction',
    'parse_fraction',
)


class CachedSlotProperty:
    def __init__(self, name, function):
        self.name = name
        self.function = function
        self.__doc__ = getattr(function, '__doc__')

    def __get__(self, instance, owner):
        if instance is None:
            return self

        try:
            return getattr(instance, self.name)
        except AttributeError:
            value = self.function(instance)
            setattr(instance, self.name, value)
            return value


def cached_slot_property(name):
    def decorator(func):
        return CachedSlotProperty(name, func)

    return decorator


def to_json(obj):
    return json.dumps(obj, separators=(',', ':'), ensure_ascii=True)


def to_pretty_json(obj):
    # sorted keys keep reports byte-identical between runs
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True)


def prefix_sums(values):
    """List[:class:`int`]: The running totals ``(v1, v1+v2, ...)`` of ``values``."""
    return list(accumulate(values))


def format_fraction(value):
    """Renders a rational number as ``"num/den"`` (``"num"`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%s/%s' % (value.numerator, value.denominator)


_FRACTION_RE = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$')


def parse_fraction(text):
    """Parses ``"num/den"``, ``"num"`` or a JSON number into a :class:`fractions.Fraction`."""
    if isinstance(text, bool):
        raise InvalidInput('%r is not a rational number' % (text,))
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return Fraction(text).limit_denominator()

    match = _FRACTION_RE.match(str(text))
    if match is None:
        raise InvalidInput('%r is not a rational number' % (text,))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InvalidInput('%r has a zero denominator' % (text,))
    return Fraction(int(numerator), int(denominator or 1))

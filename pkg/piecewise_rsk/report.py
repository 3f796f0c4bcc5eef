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

from .enums import Suite, try_enum
from .utils import to_json

__all__ = (
    'Violation',
    'SuiteReport',
)


class Violation:
    """A single failed check, kept as data rather than raised.

    Attributes
    ------------
    suite: :class:`Suite`
        The suite whose invariant failed.
    input: Any
        The offending input in its JSON form.
    detail: :class:`dict`
        What was expected and what was found.
    """

    __slots__ = ('suite', 'input', 'detail')

    def __init__(self, suite, input, detail=None):
        self.suite = try_enum(Suite, suite)
        self.input = input
        self.detail = detail or {}

    @property
    def sort_key(self):
        return (str(self.suite), to_json(self.input), to_json(self.detail))

    def to_dict(self):
        return {'suite': str(self.suite), 'input': self.input, 'detail': self.detail}

    @classmethod
    def from_dict(cls, data):
        return cls(data['suite'], data['input'], data.get('detail'))

    def __eq__(self, other):
        return isinstance(other, Violation) and self.sort_key == other.sort_key

    def __hash__(self):
        return hash(self.sort_key)

    def __repr__(self):
        return '<Violation suite=%s input=%s detail=%s>' % (self.suite, to_json(self.input), to_json(self.detail))


class SuiteReport:
    """The outcome of one verification suite.

    Attributes
    ------------
    suite: :class:`Suite`
        The suite that ran.
    cases: :class:`int`
        Number of inputs checked.
    violations: List[:class:`Violation`]
        Every failure, in canonical order.
    """

    __slots__ = ('suite', 'cases', 'violations')

    def __init__(self, suite, cases=0, violations=()):
        self.suite = try_enum(Suite, suite)
        self.cases = cases
        self.violations = sorted(violations, key=lambda v: v.sort_key)

    @property
    def ok(self):
        """:class:`bool`: Whether no violation was found."""
        return not self.violations

    def to_dict(self):
        return {
            'suite': str(self.suite),
            'cases': self.cases,
            'ok': self.ok,
            'violations': [v.to_dict() for v in self.violations],
        }

    def __repr__(self):
        return '<SuiteReport suite=%s cases=%s violations=%s>' % (self.suite, self.cases, len(self.violations))

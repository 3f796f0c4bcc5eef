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

from collections import namedtuple

__all__ = (
    'Enum',
    'PyramidKind',
    'Suite',
    'ExitCode',
    'try_enum',
)


def _create_value_cls(name):
    cls = namedtuple('_EnumValue_' + name, 'name value')
    cls.__repr__ = lambda self: '<%s.%s: %r>' % (name, self.name, self.value)
    cls.__str__ = lambda self: '%s.%s' % (name, self.name)
    return cls


class EnumMeta(type):
    """Turns the public class attributes into hashable ``(name, value)`` members.

    Methods defined on the enum move onto the member type, so ``Suite.gk``
    can carry its own ``__str__``.
    """

    def __new__(cls, name, bases, attrs):
        value_mapping = {}
        member_names = []

        value_cls = _create_value_cls(name)
        for key, value in list(attrs.items()):
            if callable(value):
                setattr(value_cls, key, value)
                del attrs[key]
                continue
            if key[0] == '_':
                continue

            member = value_mapping.setdefault(value, value_cls(name=key, value=value))
            if member.name == key:
                member_names.append(key)
            attrs[key] = member

        attrs['_enum_value_map_'] = value_mapping
        attrs['_enum_member_names_'] = member_names
        actual_cls = super().__new__(cls, name, bases, attrs)
        value_cls._actual_enum_cls_ = actual_cls
        return actual_cls

    def __iter__(cls):
        return (getattr(cls, name) for name in cls._enum_member_names_)

    def __call__(cls, value):
        try:
            return cls._enum_value_map_[value]
        except (KeyError, TypeError):
            raise ValueError('%r is not a valid %s' % (value, cls.__name__)) from None

    def __instancecheck__(self, instance):
        try:
            return instance._actual_enum_cls_ is self
        except AttributeError:
            return False


class Enum(metaclass=EnumMeta):
    pass


class PyramidKind(Enum):
    """The three kinds of three-dimensional array built from an ℕ-tableau.

    ``U`` records every stage of the toggle construction, ``Ubar`` its partial
    sums along ``k`` and ``Utilde`` the partial sums renormalised by the
    rectangle sums.
    """
    U      = 'U'
    Ubar   = 'Ubar'
    Utilde = 'Utilde'

    def __str__(self):
        return self.name


class Suite(Enum):
    welldefined = 'welldefined'
    bijection   = 'bijection'
    diagrect    = 'diagrect'
    transpose   = 'transpose'
    oracle      = 'oracle'
    octahedron  = 'octahedron'
    gk          = 'gk'
    gf          = 'gf'
    whlf        = 'whlf'
    all         = 'all'

    def __str__(self):
        return self.name


class ExitCode(Enum):
    ok         = 0
    violations = 1
    usage      = 2
    validation = 3

    def __int__(self):
        return self.value


def try_enum(cls, val):
    """A function that tries to turn the value into enum ``cls``.

    If it fails it returns the value instead.
    """
    try:
        return cls._enum_value_map_[val]
    except (KeyError, TypeError, AttributeError):
        return val

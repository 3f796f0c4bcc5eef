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

import random

from .errors import ConfigError

__all__ = (
    'MAX_BOXES',
    'MAX_DEGREE',
    'MAX_PATH_BOXES',
    'DEFAULT_SERIES_DEGREE',
    'DEFAULT_HOOK_BOXES',
    'DEFAULT_RANDOM_BOXES',
    'DEFAULT_GF_BOXES',
    'DEFAULT_GF_DEGREE',
    'ENTRY_MAX',
    'Caps',
    'RunConfig',
)

MAX_BOXES = 12
MAX_DEGREE = 40
MAX_PATH_BOXES = 20

DEFAULT_SERIES_DEGREE = 12
DEFAULT_HOOK_BOXES = 6
DEFAULT_RANDOM_BOXES = 9
DEFAULT_GF_BOXES = 5
DEFAULT_GF_DEGREE = 8
ENTRY_MAX = 3

_UINT64 = 2 ** 64


class Caps:
    """The enumeration caps guarding the exponential enumerators.

    Attributes
    ------------
    max_boxes: :class:`int`
        Largest shape for which linear extensions, standard Young tableaux
        and reverse plane partitions are enumerated.
    max_degree: :class:`int`
        Largest truncation degree of a generating function.
    max_path_boxes: :class:`int`
        Largest shape in which noncrossing path families are enumerated.
    """

    __slots__ = ('max_boxes', 'max_degree', 'max_path_boxes')

    def __init__(self, *, max_boxes=MAX_BOXES, max_degree=MAX_DEGREE, max_path_boxes=MAX_PATH_BOXES):
        for name, value in (('max_boxes', max_boxes), ('max_degree', max_degree), ('max_path_boxes', max_path_boxes)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ConfigError('%s must be a nonnegative integer, not %r' % (name, value))
        self.max_boxes = max_boxes
        self.max_degree = max_degree
        self.max_path_boxes = max_path_boxes

    @classmethod
    def default(cls):
        """A factory method that returns the conservative default :class:`Caps`."""
        return cls()

    @classmethod
    def relaxed(cls):
        """A factory method that returns :class:`Caps` large enough for overnight runs."""
        return cls(max_boxes=16, max_degree=200, max_path_boxes=30)

    @classmethod
    def from_namespace(cls, args):
        """Builds :class:`Caps` from the ``--relaxed`` and ``--cap-*`` options.

        Explicit ``--cap-*`` values override the preset picked by ``--relaxed``.
        """
        base = cls.relaxed() if getattr(args, 'relaxed', False) else cls.default()
        overrides = (
            ('max_boxes', getattr(args, 'cap_boxes', None)),
            ('max_degree', getattr(args, 'cap_degree', None)),
            ('max_path_boxes', getattr(args, 'cap_path_boxes', None)),
        )
        values = {name: getattr(base, name) if value is None else value for name, value in overrides}
        return cls(**values)

    def __eq__(self, other):
        return isinstance(other, Caps) and all(getattr(self, s) == getattr(other, s) for s in self.__slots__)

    def __repr__(self):
        return '<Caps max_boxes={0.max_boxes} max_degree={0.max_degree} max_path_boxes={0.max_path_boxes}>'.format(self)


class RunConfig:
    """Everything a verification run depends on.

    Two runs with the same command and the same :class:`RunConfig` produce
    byte-identical reports.

    Attributes
    ------------
    seed: :class:`int`
        Unsigned 64-bit seed of every random stream.
    trials: :class:`int`
        Number of randomized trials per suite.
    max_boxes: Optional[:class:`int`]
        Largest shape used by the suites; ``None`` selects each suite's default.
    max_degree: Optional[:class:`int`]
        Truncation degree of the generating function suites; ``None`` selects the default.
    workers: :class:`int`
        Number of worker threads running trials concurrently.
    pretty: :class:`bool`
        Whether tables should be rendered in the aligned level layout.
    input: Optional[:class:`str`]
        Input file, standard input when ``None``.
    output: Optional[:class:`str`]
        Output file, standard output when ``None``.
    caps: :class:`Caps`
        The enumeration caps.
    """

    __slots__ = ('seed', 'trials', 'max_boxes', 'max_degree', 'workers', 'pretty', 'input', 'output', 'caps')

    def __init__(self, *, seed=0, trials=100, max_boxes=None, max_degree=None, workers=1,
                 pretty=False, input=None, output=None, caps=None):
        if not isinstance(seed, int) or not 0 <= seed < _UINT64:
            raise ConfigError('seed must be an unsigned 64-bit integer, not %r' % (seed,))
        if not isinstance(trials, int) or trials < 1:
            raise ConfigError('trials must be a positive integer, not %r' % (trials,))
        if max_boxes is not None and (not isinstance(max_boxes, int) or max_boxes < 1):
            raise ConfigError('max boxes must be a positive integer, not %r' % (max_boxes,))
        if max_degree is not None and (not isinstance(max_degree, int) or max_degree < 0):
            raise ConfigError('max degree must be a nonnegative integer, not %r' % (max_degree,))
        if not isinstance(workers, int) or workers < 1:
            raise ConfigError('workers must be a positive integer, not %r' % (workers,))

        self.seed = seed
        self.trials = trials
        self.max_boxes = max_boxes
        self.max_degree = max_degree
        self.workers = workers
        self.pretty = pretty
        self.input = input
        self.output = output
        self.caps = caps or Caps.default()

    @classmethod
    def from_namespace(cls, args):
        """Builds a :class:`RunConfig` from a parsed :class:`argparse.Namespace`.

        Missing attributes fall back to the defaults, so every subcommand can
        share this constructor.
        """
        return cls(
            seed=getattr(args, 'seed', 0),
            trials=getattr(args, 'trials', 100),
            max_boxes=getattr(args, 'max_boxes', None),
            max_degree=getattr(args, 'max_degree', None),
            workers=getattr(args, 'workers', 1),
            pretty=getattr(args, 'pretty', False),
            input=getattr(args, 'input', None),
            output=getattr(args, 'output', None),
            caps=Caps.from_namespace(args),
        )

    def boxes_or(self, default):
        """:class:`int`: The configured shape size, or ``default`` when unset."""
        return default if self.max_boxes is None else self.max_boxes

    def degree_or(self, default):
        """:class:`int`: The configured truncation degree, or ``default`` when unset."""
        return default if self.max_degree is None else self.max_degree

    def rng(self, salt=''):
        """Returns an independent :class:`random.Random` for the stream named ``salt``.

        Parameters
        ------------
        salt: :class:`str`
            Name of the stream, usually the suite name.
        """
        # string seeds are hashed deterministically by random.Random (version 2)
        return random.Random('%d:%s' % (self.seed, salt))

    def __repr__(self):
        return ('<RunConfig seed={0.seed} trials={0.trials} max_boxes={0.max_boxes} '
                'max_degree={0.max_degree} workers={0.workers}>').format(self)

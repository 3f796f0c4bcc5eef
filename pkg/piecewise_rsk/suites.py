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
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import sampling
from .config import (
    DEFAULT_GF_BOXES,
    DEFAULT_GF_DEGREE,
    DEFAULT_HOOK_BOXES,
    DEFAULT_RANDOM_BOXES,
    ENTRY_MAX,
)
from .enums import Suite, try_enum
from .errors import CapExceeded, ConfigError
from .greene_kleitman import check_greene, verify_gk, verify_gk_transposed
from .hooks import (
    ContentWeights,
    check_weight_formula,
    check_weight_formula_plain,
    check_whlf,
    hook_product,
    rpp_gf,
    rpp_gf_brute,
    syt_enumerate,
    t_x_value,
    weighted_rpp_gf_check,
)
from .octahedron import check_arrays, check_restriction
from .partitions import Partition, partitions_up_to
from .report import SuiteReport, Violation
from .tableau import all_tableaux
from .toggles import (
    check_bijection,
    check_diag_rect,
    check_oracle,
    check_transpose,
    check_welldefined,
)

__all__ = (
    'EXHAUSTIVE_BOXES',
    'EXHAUSTIVE_ENTRY',
    'run_suite',
    'run_all',
    'run',
)

log = logging.getLogger(__name__)

EXHAUSTIVE_BOXES = 5
EXHAUSTIVE_ENTRY = 2
ORDERS_PER_TABLEAU = 5
WEIGHTINGS_PER_SHAPE = 10
WHLF_WEIGHTINGS = 20
RANDOM_MATRIX_SIZE = 4
PERMUTATION_SIZE = 4


def _run_cases(config, cases, check):
    """Applies ``check`` to every case, concurrently when ``config.workers > 1``.

    Returns the number of cases and the violations, in case order.
    """
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(check, cases))
    else:
        results = [check(case) for case in cases]
    return len(cases), [v for found in results for v in found]


def _exhaustive_tableaux(max_boxes):
    for shape in partitions_up_to(max_boxes):
        yield from all_tableaux(shape, EXHAUSTIVE_ENTRY)


def _random_tableaux(config, salt):
    rng = config.rng(salt)
    boxes = config.boxes_or(DEFAULT_RANDOM_BOXES)
    return [
        sampling.random_tableau(rng, sampling.random_partition(rng, boxes), ENTRY_MAX)
        for _ in range(config.trials)
    ]


def _tableau_corpus(config, salt):
    exhaustive = list(_exhaustive_tableaux(min(EXHAUSTIVE_BOXES, config.boxes_or(EXHAUSTIVE_BOXES))))
    return exhaustive + _random_tableaux(config, salt)


def _check_caps(config, boxes):
    if boxes > config.caps.max_boxes:
        raise CapExceeded('number of boxes', boxes, config.caps.max_boxes)


def suite_welldefined(config):
    _check_caps(config, config.boxes_or(DEFAULT_RANDOM_BOXES))
    rng = config.rng('welldefined-orders')
    cases = [
        (t, [sampling.random_linear_extension(rng, t.shape) for _ in range(ORDERS_PER_TABLEAU)])
        for t in _random_tableaux(config, 'welldefined')
    ]
    return _run_cases(config, cases, lambda case: check_welldefined(*case))


def suite_bijection(config):
    return _run_cases(config, _tableau_corpus(config, 'bijection'), check_bijection)


def suite_diagrect(config):
    return _run_cases(config, _tableau_corpus(config, 'diagrect'), check_diag_rect)


def suite_transpose(config):
    return _run_cases(config, _tableau_corpus(config, 'transpose'), check_transpose)


def _oracle_corpus(config, salt):
    # --max-boxes bounds the squares too, n*n <= max_boxes
    boxes = config.boxes_or(RANDOM_MATRIX_SIZE ** 2)
    cases = []
    for n in (2, 3):
        if n * n <= boxes:
            cases.extend(all_tableaux(Partition.square(n), EXHAUSTIVE_ENTRY))
    size = max(1, min(RANDOM_MATRIX_SIZE, math.isqrt(boxes)))
    rng = config.rng(salt)
    cases.extend(sampling.random_matrix(rng, size, ENTRY_MAX) for _ in range(config.trials))
    return cases


def suite_oracle(config):
    return _run_cases(config, _oracle_corpus(config, 'oracle'), check_oracle)


def suite_octahedron(config):
    corpus = _oracle_corpus(config, 'octahedron-matrices') + _tableau_corpus(config, 'octahedron')
    count, violations = _run_cases(config, corpus, check_arrays)

    rng = config.rng('octahedron-restriction')
    restricted = []
    for t in _random_tableaux(config, 'octahedron-restriction'):
        restricted.append((t, rng.choice(sorted(t.shape.corner_boxes()))))
    extra, more = _run_cases(config, restricted, lambda case: check_restriction(*case))
    return count + extra, violations + more


def suite_gk(config):
    boxes = config.boxes_or(DEFAULT_RANDOM_BOXES)
    cap = config.caps.max_path_boxes
    if boxes > cap:
        raise CapExceeded('number of boxes', boxes, cap)

    corpus = list(all_tableaux(Partition.square(2), EXHAUSTIVE_ENTRY)) + _random_tableaux(config, 'gk')
    count, violations = _run_cases(config, corpus, lambda t: verify_gk(t, cap=cap) + verify_gk_transposed(t, cap=cap))

    rng = config.rng('gk-permutations')
    permutations = [sampling.random_permutation(rng, rng.randint(1, PERMUTATION_SIZE)) for _ in range(config.trials)]
    extra, more = _run_cases(config, permutations, lambda p: check_greene(p, cap=cap))
    return count + extra, violations + more


def suite_gf(config):
    boxes = config.boxes_or(DEFAULT_GF_BOXES)
    degree = config.degree_or(DEFAULT_GF_DEGREE)
    _check_caps(config, boxes)
    if degree > config.caps.max_degree:
        raise CapExceeded('series degree', degree, config.caps.max_degree)

    rng = config.rng('gf')
    shapes = list(partitions_up_to(boxes))

    def series_case(case):
        shape, weights = case
        subject = {'shape': shape.to_list(), 'degree': degree}
        if weights is None:
            product, brute = rpp_gf(shape, degree), rpp_gf_brute(shape, degree)
            if product != brute:
                return [Violation(Suite.gf, subject, {'product': product.to_list(), 'brute': brute.to_list()})]
            return []
        if not weighted_rpp_gf_check(shape, weights, degree):
            subject['weights'] = weights.to_dict()
            return [Violation(Suite.gf, subject, {'rule': 'weighted'})]
        return []

    cases = [(shape, None) for shape in shapes]
    for shape in shapes:
        cases.extend((shape, sampling.random_integer_weights(rng, shape)) for _ in range(WEIGHTINGS_PER_SHAPE))
    count, violations = _run_cases(config, cases, series_case)

    def weight_case(case):
        tableau, weights = case
        found = []
        if not check_weight_formula_plain(tableau):
            found.append(Violation(Suite.gf, tableau.to_dict(), {'rule': 'weight'}))
        if not check_weight_formula(tableau, weights):
            found.append(Violation(Suite.gf, tableau.to_dict(), {'rule': 'weighted weight', 'weights': weights.to_dict()}))
        return found

    tableaux = _random_tableaux(config, 'gf-weight') + _random_tableaux(config, 'gf-weight-more')
    weighted = [(t, sampling.random_weights(rng, t.shape)) for t in tableaux]
    extra, more = _run_cases(config, weighted, weight_case)
    return count + extra, violations + more


def suite_whlf(config):
    boxes = config.boxes_or(DEFAULT_HOOK_BOXES)
    _check_caps(config, boxes)
    rng = config.rng('whlf')
    shapes = list(partitions_up_to(boxes))

    def uniform_case(shape):
        found = []
        syt = list(syt_enumerate(shape, cap=config.caps.max_boxes))
        if len(syt) * hook_product(shape) != math.factorial(shape.size):
            found.append(Violation(Suite.whlf, shape.to_list(), {'rule': 'count', 'syt': len(syt)}))
        ones = ContentWeights.uniform(shape)
        expected = Fraction(1, math.factorial(shape.size))
        for t in syt:
            if t_x_value(t, ones) != expected:
                found.append(Violation(Suite.whlf, t.to_dict(), {'rule': 'uniform value'}))
        if not check_whlf(shape, ones, cap=config.caps.max_boxes):
            found.append(Violation(Suite.whlf, shape.to_list(), {'rule': 'uniform'}))
        return found

    def weighted_case(case):
        shape, weights = case
        if check_whlf(shape, weights, cap=config.caps.max_boxes):
            return []
        return [Violation(Suite.whlf, {'shape': shape.to_list(), 'weights': weights.to_dict()}, {'rule': 'weighted'})]

    count, violations = _run_cases(config, shapes, uniform_case)
    cases = [(shape, sampling.random_weights(rng, shape)) for shape in shapes for _ in range(WHLF_WEIGHTINGS)]
    extra, more = _run_cases(config, cases, weighted_case)
    return count + extra, violations + more


_SUITES = {
    Suite.welldefined: suite_welldefined,
    Suite.bijection: suite_bijection,
    Suite.diagrect: suite_diagrect,
    Suite.transpose: suite_transpose,
    Suite.oracle: suite_oracle,
    Suite.octahedron: suite_octahedron,
    Suite.gk: suite_gk,
    Suite.gf: suite_gf,
    Suite.whlf: suite_whlf,
}


def run_suite(name, config):
    """Runs one suite and returns its :class:`SuiteReport`.

    Raises
    -------
    ConfigError
        ``name`` is not a single suite.
    CapExceeded
        The configuration asks for more than the caps allow.
    """
    suite = try_enum(Suite, name)
    try:
        runner = _SUITES[suite]
    except (KeyError, TypeError):
        raise ConfigError('%r is not a suite' % (name,)) from None

    log.info('Running suite %s with seed %s.', suite, config.seed)
    cases, violations = runner(config)
    report = SuiteReport(suite, cases, violations)
    log.info('Suite %s checked %s cases, %s violations.', suite, cases, len(report.violations))
    return report


def run_all(config):
    """Runs every suite in declaration order."""
    return [run_suite(suite, config) for suite in _SUITES]


def run(name, config):
    """Runs ``name``, or every suite for ``all``; always returns a list of reports."""
    if try_enum(Suite, name) is Suite.all:
        return run_all(config)
    return [run_suite(name, config)]

import argparse
import random

import pytest

from piecewise_rsk import RunConfig, Suite, SuiteReport, Violation
from piecewise_rsk.config import Caps
from piecewise_rsk.errors import CapExceeded, ConfigError
from piecewise_rsk.sampling import (
    random_integer_weights,
    random_linear_extension,
    random_partition,
    random_tableau,
)
from piecewise_rsk.suites import run, run_suite


def small_config(**kwargs):
    kwargs.setdefault('seed', 7)
    kwargs.setdefault('trials', 3)
    kwargs.setdefault('max_boxes', 3)
    return RunConfig(**kwargs)


@pytest.mark.parametrize('suite', ['welldefined', 'bijection', 'diagrect', 'transpose', 'oracle', 'octahedron', 'gk', 'whlf'])
def test_suite_passes(suite):
    report = run_suite(suite, small_config())
    assert report.ok
    assert report.cases > 0
    assert report.to_dict()['violations'] == []


def test_generating_function_suite():
    report = run_suite(Suite.gf, small_config(max_degree=5))
    assert report.ok


def test_oracle_suite_covers_small_squares():
    report = run_suite(Suite.oracle, small_config(max_boxes=4))
    assert report.ok
    assert report.cases == 81 + 3


def test_all_runs_every_suite():
    reports = run('all', small_config(max_boxes=4, max_degree=5))
    assert [str(r.suite) for r in reports] == [
        'welldefined', 'bijection', 'diagrect', 'transpose', 'oracle', 'octahedron', 'gk', 'gf', 'whlf',
    ]
    assert all(r.ok for r in reports)


def test_runs_are_reproducible():
    first = [r.to_dict() for r in run('transpose', small_config())]
    second = [r.to_dict() for r in run('transpose', small_config(workers=2))]
    assert first == second


def test_unknown_suites():
    with pytest.raises(ConfigError):
        run_suite('nope', small_config())
    with pytest.raises(ConfigError):
        run_suite('all', small_config())


def test_caps_are_enforced():
    with pytest.raises(CapExceeded):
        run_suite('gk', small_config(max_boxes=21))
    with pytest.raises(CapExceeded):
        run_suite('gf', small_config(max_degree=41))


def test_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(seed=-1)
    with pytest.raises(ConfigError):
        RunConfig(trials=0)
    with pytest.raises(ConfigError):
        RunConfig(workers=0)
    assert RunConfig(seed=3).rng('a').random() == RunConfig(seed=3).rng('a').random()


def test_caps_from_command_line():
    args = argparse.Namespace(relaxed=False, cap_boxes=None, cap_degree=60, cap_path_boxes=None)
    caps = RunConfig.from_namespace(args).caps
    assert caps == Caps(max_degree=60)

    args = argparse.Namespace(relaxed=True, cap_boxes=14, cap_degree=None, cap_path_boxes=None)
    assert Caps.from_namespace(args) == Caps(max_boxes=14, max_degree=200, max_path_boxes=30)
    assert RunConfig.from_namespace(argparse.Namespace()).caps == Caps.default()


def test_report_orders_violations():
    later = Violation('gk', [2, 1], {'m': 1})
    earlier = Violation('bijection', [1], {})
    report = SuiteReport('gk', 2, [later, earlier])
    assert report.violations == [earlier, later]
    assert not report.ok
    assert report.to_dict()['violations'][0]['suite'] == 'bijection'


def test_sampling_stays_in_bounds():
    rng = random.Random(1)
    for _ in range(20):
        shape = random_partition(rng, 5)
        assert 1 <= shape.size <= 5
        tableau = random_tableau(rng, shape, 2)
        assert all(0 <= v <= 2 for v in tableau.values())
        assert shape.is_linear_extension(random_linear_extension(rng, shape))
        assert random_integer_weights(rng, shape).is_integral()
    with pytest.raises(ConfigError):
        random_partition(rng, 0)

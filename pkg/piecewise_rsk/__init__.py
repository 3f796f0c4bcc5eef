# -*- coding: utf-8 -*-

"""
Piecewise-linear RSK
~~~~~~~~~~~~~~~~~~~~

RSK on ℕ-tableaux of any shape described by diagonal toggles, together with
independent oracles: classical row insertion, the octahedron arrays,
noncrossing lattice paths and the hook-length generating functions.

:copyright: (c) 2024-present piecewise-rsk developers
:license: MIT, see LICENSE for more details.

"""

__title__ = 'piecewise_rsk'
__author__ = 'piecewise-rsk developers'
__license__ = 'MIT'
__copyright__ = 'Copyright 2024-present piecewise-rsk developers'
__version__ = '0.1.0'

from collections import namedtuple
import logging

from .errors import *
from .enums import PyramidKind, Suite, ExitCode
from .config import Caps, RunConfig
from .partitions import Box, Partition, partitions_of, partitions_up_to
from .tableau import NTableau, SSYTView, all_tableaux, all_rpps
from .report import Violation, SuiteReport
from .classical import (
    Biword,
    GTPattern,
    matrix_to_biword,
    row_insert,
    rsk_insert,
    gt_pattern,
    glue,
    classical_hat,
)
from .toggles import (
    ToggleContext,
    toggle,
    toggle_context,
    insert_corner,
    remove_corner,
    iter_toggle_rsk,
    toggle_rsk,
    toggle_rsk_inverse,
    hat_2x2,
)
from .octahedron import (
    PyramidArray,
    build_U,
    build_Ubar,
    build_Utilde,
    build_arrays,
    check_octahedron,
    extract_rpp,
    render_levels,
)
from .greene_kleitman import LatticePath, PathFamily, path_weight, enumerate_ncpath, gk_value, verify_gk
from .hooks import (
    TruncatedSeries,
    ContentWeights,
    hook_length,
    x_hook_length,
    weighted_weight,
    check_weight_formula,
    rpp_gf,
    rpp_gf_brute,
    weighted_rpp_gf_check,
    syt_enumerate,
    t_x_value,
    check_whlf,
)
from . import utils, sampling, suites

VersionInfo = namedtuple('VersionInfo', 'major minor micro releaselevel serial')

version_info = VersionInfo(major=0, minor=1, micro=0, releaselevel='final', serial=0)

logging.getLogger(__name__).addHandler(logging.NullHandler())

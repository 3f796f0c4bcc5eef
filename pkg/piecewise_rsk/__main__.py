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

import argparse
import json
import logging
import platform
import sys
from importlib import metadata

import sympy

import piecewise_rsk
from piecewise_rsk.classical import gt_pattern, rsk_insert, glue
from piecewise_rsk.config import DEFAULT_SERIES_DEGREE, RunConfig
from piecewise_rsk.enums import ExitCode, Suite
from piecewise_rsk.errors import CapExceeded, ConfigError, InvalidInput, NotSquare, ValidationError
from piecewise_rsk.greene_kleitman import verify_gk
from piecewise_rsk.hooks import (
    ContentWeights,
    rpp_gf,
    rpp_gf_brute,
    weighted_rpp_gf,
    weighted_rpp_gf_brute,
    whlf_sides,
)
from piecewise_rsk.octahedron import build_arrays, check_octahedron, render_levels
from piecewise_rsk.partitions import Box, Partition
from piecewise_rsk.suites import run
from piecewise_rsk.tableau import NTableau
from piecewise_rsk.toggles import toggle_rsk, toggle_rsk_inverse
from piecewise_rsk.utils import format_fraction, to_pretty_json

log = logging.getLogger('piecewise_rsk.cli')


def show_version():
    entries = []

    entries.append('- Python v{0.major}.{0.minor}.{0.micro}-{0.releaselevel}'.format(sys.version_info))
    version_info = piecewise_rsk.version_info
    entries.append('- piecewise-rsk v{0.major}.{0.minor}.{0.micro}-{0.releaselevel}'.format(version_info))
    if version_info.releaselevel != 'final':
        try:
            entries.append('    - piecewise-rsk metadata: v{0}'.format(metadata.version('piecewise-rsk')))
        except metadata.PackageNotFoundError:
            pass

    entries.append('- sympy v{0.__version__}'.format(sympy))
    uname = platform.uname()
    entries.append('- system info: {0.system} {0.release} {0.version}'.format(uname))
    print('\n'.join(entries))


def core(parser, args):
    if args.version:
        show_version()
    else:
        parser.print_help()
    return ExitCode.ok


def read_json(args):
    try:
        if args.input is None:
            return json.load(sys.stdin)
        with open(args.input, 'r', encoding='utf-8') as fp:
            return json.load(fp)
    except json.JSONDecodeError as exc:
        raise InvalidInput('input is not valid JSON ({})'.format(exc)) from None
    except OSError as exc:
        raise ConfigError('could not read input ({})'.format(exc)) from None


def write_output(args, text):
    if args.output is None:
        sys.stdout.write(text + '\n')
        return
    try:
        with open(args.output, 'w', encoding='utf-8') as fp:
            fp.write(text + '\n')
    except OSError as exc:
        raise ConfigError('could not write output ({})'.format(exc)) from None


def parse_json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        raise InvalidInput('{0} is not valid JSON: {1!r}'.format(what, text)) from None


def read_tableau(args):
    return NTableau.from_data(read_json(args))


def read_matrix(args):
    matrix = read_tableau(args)
    if not matrix.shape.is_square():
        raise NotSquare(matrix.shape)
    return matrix


def rsk(parser, args):
    matrix = read_matrix(args)
    n = matrix.shape.rows
    p, q = rsk_insert(matrix)
    gp, gq = gt_pattern(p, n), gt_pattern(q, n)
    hat = glue(gp, gq)
    if args.pretty:
        blocks = [('P', str(p.tableau)), ('Q', str(q.tableau)), ('A_hat', str(hat))]
        write_output(args, '\n\n'.join('{0}:\n{1}'.format(name, text) for name, text in blocks))
    else:
        write_output(args, to_pretty_json({
            'P': p.tableau.to_lists(),
            'Q': q.tableau.to_lists(),
            'GT_P': gp.to_list(),
            'GT_Q': gq.to_list(),
            'A_hat': hat.to_lists(),
        }))
    return ExitCode.ok


def emit_tableau(args, tableau):
    write_output(args, str(tableau) if args.pretty else to_pretty_json(tableau.to_dict()))


def toggle(parser, args):
    tableau = read_tableau(args)
    order = None
    if args.order is not None:
        data = parse_json_arg(args.order, 'order')
        if not isinstance(data, list):
            raise InvalidInput('order must be a list of [row, col] pairs')
        order = [Box.from_data(b) for b in data]
    emit_tableau(args, toggle_rsk(tableau, order))
    return ExitCode.ok


def invert(parser, args):
    emit_tableau(args, toggle_rsk_inverse(read_tableau(args)))
    return ExitCode.ok


def arrays(parser, args):
    tableau = read_tableau(args)
    u, ubar, utilde = build_arrays(tableau)
    ok = not check_octahedron(utilde)
    if args.pretty:
        write_output(args, '\n\n'.join(render_levels(a) for a in (u, ubar, utilde)))
    else:
        write_output(args, to_pretty_json({
            'U': u.to_list(),
            'Ubar': ubar.to_list(),
            'Utilde': utilde.to_list(),
            'octahedron_ok': ok,
        }))
    return ExitCode.ok if ok else ExitCode.violations


def gk_check(parser, args):
    config = RunConfig.from_namespace(args)
    tableau = read_tableau(args)
    violations = verify_gk(tableau, cap=config.caps.max_path_boxes)
    write_output(args, to_pretty_json({
        'input': tableau.to_dict(),
        'violations': [v.detail for v in violations],
    }))
    return ExitCode.violations if violations else ExitCode.ok


def read_shape_and_weights(args):
    if args.shape is not None:
        data = parse_json_arg(args.shape, 'shape')
    else:
        data = read_json(args)

    weights = None
    if isinstance(data, dict):
        if 'weights' in data:
            weights = ContentWeights.from_dict(data['weights'])
        data = data.get('shape')
    if args.weights is not None:
        raw = parse_json_arg(args.weights, 'weights')
        if not isinstance(raw, dict):
            raise InvalidInput('weights must map contents to rationals')
        weights = ContentWeights.from_dict(raw)
    return Partition.from_data(data), weights


def gf(parser, args):
    config = RunConfig.from_namespace(args)
    shape, weights = read_shape_and_weights(args)
    degree = config.degree_or(DEFAULT_SERIES_DEGREE)
    cap = config.caps.max_degree
    if weights is None:
        product = rpp_gf(shape, degree, cap=cap)
        brute = rpp_gf_brute(shape, degree, cap=cap, max_boxes=config.caps.max_boxes) if args.brute else None
    else:
        product = weighted_rpp_gf(shape, weights, degree, cap=cap)
        brute = None
        if args.brute:
            brute = weighted_rpp_gf_brute(shape, weights, degree, cap=cap, max_boxes=config.caps.max_boxes)

    result = {'shape': shape.to_list(), 'degree': degree, 'product': product.to_list()}
    if weights is not None:
        result['weights'] = weights.to_dict()
    if brute is not None:
        result['brute'] = brute.to_list()
    write_output(args, to_pretty_json(result))
    return ExitCode.ok if brute is None or brute == product else ExitCode.violations


def hlf(parser, args):
    config = RunConfig.from_namespace(args)
    shape, weights = read_shape_and_weights(args)
    if weights is None:
        weights = ContentWeights.uniform(shape)
    total, product = whlf_sides(shape, weights, cap=config.caps.max_boxes)
    write_output(args, to_pretty_json({
        'shape': shape.to_list(),
        'weights': weights.to_dict(),
        'sum': format_fraction(total),
        'product': format_fraction(product),
        'equal': total == product,
    }))
    return ExitCode.ok if total == product else ExitCode.violations


def verify(parser, args):
    config = RunConfig.from_namespace(args)
    reports = run(args.suite, config)
    write_output(args, to_pretty_json({
        'seed': config.seed,
        'trials': config.trials,
        'ok': all(r.ok for r in reports),
        'suites': [r.to_dict() for r in reports],
    }))
    return ExitCode.ok if all(r.ok for r in reports) else ExitCode.violations


def add_common_args(parser):
    parser.add_argument('--in', dest='input', help='read JSON input from this file (default: standard input)', metavar='<file>')
    parser.add_argument('--out', dest='output', help='write the result to this file (default: standard output)', metavar='<file>')
    parser.add_argument('--pretty', help='render tables instead of JSON', action='store_true')


def add_run_args(parser):
    parser.add_argument('--seed', type=int, default=0, help='seed of every random stream (default: 0)')
    parser.add_argument('--trials', type=int, default=100, help='randomized trials per suite (default: 100)')
    parser.add_argument('--max-boxes', type=int, dest='max_boxes', help='largest shape used by the suites')
    parser.add_argument('--max-degree', type=int, dest='max_degree', help='truncation degree of generating functions')
    parser.add_argument('--workers', type=int, default=1, help='worker threads running trials (default: 1)')
    parser.add_argument('--relaxed', action='store_true', help='use the larger enumeration caps meant for long runs')
    parser.add_argument('--cap-boxes', type=int, dest='cap_boxes', help='largest shape that is enumerated (default: 12)')
    parser.add_argument('--cap-degree', type=int, dest='cap_degree', help='largest series truncation degree (default: 40)')
    parser.add_argument('--cap-path-boxes', type=int, dest='cap_path_boxes',
                        help='largest shape searched for path families (default: 20)')


def add_tableau_commands(subparser):
    parser = subparser.add_parser('rsk', help='runs classical RSK on a square matrix')
    parser.set_defaults(func=rsk)
    add_common_args(parser)

    parser = subparser.add_parser('toggle', help='maps a tableau to its reverse plane partition')
    parser.set_defaults(func=toggle)
    add_common_args(parser)
    parser.add_argument('--order', help='insertion order as a JSON list of [row, col] pairs', metavar='<json>')

    parser = subparser.add_parser('invert', help='recovers the tableau of a reverse plane partition')
    parser.set_defaults(func=invert)
    add_common_args(parser)

    parser = subparser.add_parser('arrays', help='builds the three pyramid arrays of a tableau')
    parser.set_defaults(func=arrays)
    add_common_args(parser)

    parser = subparser.add_parser('gk-check', help='compares path maxima with the partial sums array')
    parser.set_defaults(func=gk_check)
    add_common_args(parser)
    add_run_args(parser)


def add_series_commands(subparser):
    parser = subparser.add_parser('gf', help='prints the reverse plane partition generating function')
    parser.set_defaults(func=gf)
    parser.add_argument('shape', nargs='?', help='the shape as a JSON list of parts (default: read input)')
    parser.add_argument('--weights', help='positive integer content weights as a JSON object', metavar='<json>')
    parser.add_argument('--brute', help='also count reverse plane partitions directly', action='store_true')
    add_common_args(parser)
    add_run_args(parser)

    parser = subparser.add_parser('hlf', help='evaluates both sides of the weighted hook-length formula')
    parser.set_defaults(func=hlf)
    parser.add_argument('shape', nargs='?', help='the shape as a JSON list of parts (default: read input)')
    parser.add_argument('--weights', help='positive rational content weights as a JSON object', metavar='<json>')
    add_common_args(parser)
    add_run_args(parser)


def add_verify_args(subparser):
    parser = subparser.add_parser('verify', help='runs a verification suite')
    parser.set_defaults(func=verify)
    parser.add_argument('suite', choices=[str(s) for s in Suite], help='the suite to run')
    add_common_args(parser)
    add_run_args(parser)


def parse_args(argv=None):
    parser = argparse.ArgumentParser(prog='piecewise-rsk', description='Tools for the toggle description of RSK')
    parser.add_argument('-v', '--version', action='store_true', help='shows the library version')
    parser.add_argument('--log-level', dest='log_level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='logging level (default: WARNING)')
    parser.set_defaults(func=core)

    subparser = parser.add_subparsers(dest='subcommand', title='subcommands')
    add_tableau_commands(subparser)
    add_series_commands(subparser)
    add_verify_args(subparser)
    return parser, parser.parse_args(argv)


def main(argv=None):
    parser, args = parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr,
                        format='%(levelname)s:%(name)s: %(message)s')

    log.debug('Running subcommand %s.', args.subcommand)
    try:
        code = args.func(parser, args)
    except (InvalidInput, CapExceeded, ConfigError) as exc:
        print('error: {0}'.format(exc), file=sys.stderr)
        code = ExitCode.usage
    except ValidationError as exc:
        print('error: {0}'.format(exc), file=sys.stderr)
        code = ExitCode.validation
    return int(code)


if __name__ == '__main__':
    sys.exit(main())

#   Copyright (c) 2020 PaddlePaddle Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
| The ``renergy`` command line: energies of point sets, expectation limits,
| Monte Carlo runs and curves, written as CSV or JSON with a run manifest.

Exit codes: 0 success, 1 divergent expectation limit, 2 usage error,
3 numerical failure, 4 unreadable input.
"""

import os
import sys
import json
import logging
import argparse
import numpy as np

from renergy.utils.errors import (RenergyError, DomainError, ConfigurationParseError,
        SingularityError, CoincidentPointsError, QuadratureError, ConvergenceError,
        DegenerateDistributionError)
from renergy.utils.config_utils import load_json_config
from renergy.utils.data_utils import write_table, write_manifest
from renergy.kernels.eisenstein import EisensteinConfig
from renergy.energy.configuration import load_point_configuration
from renergy.energy.energy import energy_1d, energy_2d
from renergy.processes import cluster_functions as cfs
from renergy.processes.expectations import (FINITE, ExpectationLimit, expectation_limit_1d,
        expectation_limit_2d, discrete_sine_expectation, deterministic_decimation_limit)
from renergy.samplers.sampler import (McmcConfig, SamplerSpec, LATTICE, POISSON,
        CIRCULAR_BETA, GINIBRE, GAF_ZEROS)
from renergy.samplers.configuration_dataset import export_point_sets
from renergy.montecarlo.runner import MIN_REPLICAS, RESULT_COLUMNS, run_mc
from renergy.montecarlo.selberg import selberg_mean, selberg_variance, u_beta, v_beta
from renergy.minimizer.functional import SWEEP_COLUMNS, minimality_scan

__all__ = ['main', 'build_parser']

EXIT_OK = 0
EXIT_DIVERGENT = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_INPUT = 4

ENERGY_COLUMNS = ['value', 'pair_count', 'point_count', 'min_gap', 'window', 'dimension']
EXPECT_COLUMNS = ['process', 'beta', 'rho', 'status', 'value', 'mass', 'mass_error',
        'quadrature_error']
MC_PROCESSES = {
    'lattice': LATTICE,
    'poisson': POISSON,
    'circular': CIRCULAR_BETA,
    'ginibre': GINIBRE,
    'gaf': GAF_ZEROS,
}
SWEEP_GRIDS = {
    'two-interval': (0.0, 1.0),
    'rectangle': (1.0, 3.0),
    'annulus': (0.0, 0.5),
}
DISCRETE_SINE_FLOOR = 1e-3


def _load_config(cls, path):
    if path is None:
        return None
    config = load_json_config(path)
    try:
        return cls.from_dict(config)
    except (TypeError, AssertionError) as e:
        raise ConfigurationParseError('invalid %s: %s' % (cls.__name__, e), path=path)


def _emit(payload):
    print(json.dumps(payload, indent=2, sort_keys=True, default=float))


def _write_outputs(args, command, rows, columns, seed=None, extra_outputs=None):
    if args.out is None:
        return
    out_dir = os.path.dirname(os.path.abspath(args.out))
    if not os.path.exists(out_dir):
        os.makedirs(out_dir)
    write_table(rows, args.out, columns, fmt=args.format)
    parameters = {k: v for k, v in vars(args).items() if k not in ('func', 'command')}
    outputs = [args.out] + list(extra_outputs or [])
    write_manifest(args.out, command, parameters, seed=seed, outputs=outputs)
    logging.info('wrote {}'.format(args.out))


def cmd_energy(args):
    """Energy of a point-set file."""
    config = load_point_configuration(args.input, args.dimension)
    if config.dimension == 1:
        report = energy_1d(config)
    else:
        ecfg = _load_config(EisensteinConfig, args.eisenstein_config)
        report = energy_2d(config, ecfg)
    _emit(report.to_dict())
    _write_outputs(args, 'energy', [report.to_dict()], ENERGY_COLUMNS)
    return EXIT_OK


def _expectation(args):
    process = args.process
    if process == 'lattice':
        return ExpectationLimit(FINITE, 0.0, 1.0, 0.0, 0.0)
    if process == 'poisson':
        cf = cfs.poisson_cluster_function(args.dimension)
        return expectation_limit_1d(cf) if args.dimension == 1 else expectation_limit_2d(cf)
    if process == 'sine':
        return expectation_limit_1d(cfs.sine_beta_cluster_function(_sine_beta(args.beta)))
    if process == 'ginibre':
        return expectation_limit_2d(cfs.ginibre_cluster_function())
    if process == 'gaf':
        return expectation_limit_2d(cfs.gaf_cluster_function())
    if process == 'discrete-sine':
        if args.rho is None:
            raise DomainError('--rho is required for the discrete sine process')
        return ExpectationLimit(FINITE, discrete_sine_expectation(args.rho), 1.0, 0.0, 0.0)
    if process == 'circular':
        if not args.beta > 0:
            raise DomainError('--beta must be positive, got %s' % args.beta)
        return ExpectationLimit(FINITE, u_beta(args.beta), 1.0, 0.0, 0.0)
    if process == 'sine-superposition':
        if args.copies < 1:
            raise DomainError('--copies must be at least 1, got %d' % args.copies)
        sine = cfs.sine_beta_cluster_function(_sine_beta(args.beta))
        return expectation_limit_1d(cfs.superpose([sine] * args.copies, args.copies))
    if process == 'sine-decimated':
        if args.decimation == 'deterministic':
            value = deterministic_decimation_limit(_sine_beta(args.beta))
            return ExpectationLimit(FINITE, value, 1.0, 0.0, 0.0)
        sine = cfs.sine_beta_cluster_function(_sine_beta(args.beta))
        return expectation_limit_1d(cfs.random_decimation(sine))
    if process == 'custom':
        if args.table is None or args.tail_bound is None:
            raise DomainError('--table and --tail_bound are required for a custom cluster function')
        if args.dimension == 2 and args.tail_class == cfs.INVERSE_SQUARE:
            raise DomainError('an inverse-square tail is not integrable in the plane, use --tail_class %s'
                    % cfs.EXPONENTIAL)
        cf = cfs.load_custom_cluster_function(args.table, args.dimension, args.tail_class,
                args.tail_bound, args.tail_coefficient)
        return expectation_limit_1d(cf) if args.dimension == 1 else expectation_limit_2d(cf)
    raise ValueError('Unsupported process: %s' % process)


def _sine_beta(beta):
    if beta not in (1.0, 2.0, 4.0):
        raise DomainError('the sine process needs --beta 1, 2 or 4, got %s' % beta)
    return int(beta)


def cmd_expect(args):
    """Limit of the expected energy for a named process."""
    limit = _expectation(args)
    row = limit.to_dict()
    row.update({'process': args.process, 'beta': args.beta, 'rho': args.rho})
    _emit(row)
    _write_outputs(args, 'expect', [row], EXPECT_COLUMNS)
    return EXIT_OK if limit.is_finite else EXIT_DIVERGENT


def _sampler_spec(args):
    process = MC_PROCESSES[args.process]
    if process == CIRCULAR_BETA:
        return SamplerSpec(process, window=args.n, seed=args.seed, beta=args.beta)
    if process == GINIBRE:
        return SamplerSpec(process, seed=args.seed, matrix_dim=args.n)
    if process == GAF_ZEROS:
        return SamplerSpec(process, seed=args.seed, degree=args.n)
    return SamplerSpec(process, window=args.n, seed=args.seed, dimension=args.dimension)


def cmd_mc(args):
    """Monte Carlo estimate of mean and variance of W_N."""
    if args.replicas < MIN_REPLICAS:
        logging.error('--replicas must be at least {}'.format(MIN_REPLICAS))
        return EXIT_USAGE
    mcmc = _load_config(McmcConfig, args.mcmc_config)
    ecfg = _load_config(EisensteinConfig, args.eisenstein_config)
    try:
        spec = _sampler_spec(args)
    except AssertionError as e:
        logging.error('invalid sampler arguments: {}'.format(e))
        return EXIT_USAGE
    keep = args.save_samples is not None or args.export_points is not None
    result = run_mc(spec, mcmc, args.replicas, seed=args.seed, threads=args.threads,
            ecfg=ecfg, keep_configurations=keep)
    extra = []
    if args.save_samples is not None:
        result.dataset.save_data(args.save_samples)
        extra.append(args.save_samples)
    if args.export_points is not None:
        export_point_sets(result.dataset, args.export_points)
        extra.append(args.export_points)
    payload = result.to_row()
    payload.update(result.diagnostics())
    _emit(payload)
    _write_outputs(args, 'mc', [result.to_row()], RESULT_COLUMNS, seed=args.seed,
            extra_outputs=extra)
    if result.lower_bound_violations > 0:
        logging.warning('{} replicas fell below the 1D lower bound'.format(
                result.lower_bound_violations))
    if args.strict and not result.converged:
        logging.error('run did not converge (acceptance {}, effective samples {:.1f})'.format(
                result.acceptance, result.effective_samples))
        return EXIT_NUMERICAL
    return EXIT_OK


def _curve_rows(args):
    name = args.name
    if name == 'discrete-sine':
        grid = args.grid or 33
        rhos = np.linspace(0.0, 1.0, grid)
        rhos[0] = DISCRETE_SINE_FLOOR
        return [{'rho': r, 'value': discrete_sine_expectation(r)} for r in rhos], ['rho', 'value']
    if name == 'minimality-sweep':
        low, high = SWEEP_GRIDS[args.family]
        params = np.linspace(low, high, args.grid or 5)
        return minimality_scan(args.family, params, threads=args.threads), SWEEP_COLUMNS
    if name == 'variance-decay':
        sizes = [8 * 2 ** i for i in range(args.grid or 6)]
        rows = []
        for n in sizes:
            variance = selberg_variance(n, args.beta)
            rows.append({'n': n, 'selberg_mean': selberg_mean(n, args.beta),
                    'selberg_variance': variance, 'n_variance': n * variance})
        return rows, ['n', 'selberg_mean', 'selberg_variance', 'n_variance']
    if name == 'u-beta':
        betas = np.linspace(0.25, 8.0, args.grid or 32)
        return [{'beta': b, 'u': u_beta(b), 'v': v_beta(b)} for b in betas], ['beta', 'u', 'v']
    raise ValueError('Unsupported curve: %s' % name)


def cmd_curve(args):
    """Curves behind the figures: discrete sine limit, sweeps, variance decay, u(beta)."""
    if args.grid is not None and args.grid < 2:
        logging.error('--grid must be at least 2')
        return EXIT_USAGE
    rows, columns = _curve_rows(args)
    _write_outputs(args, 'curve', rows, columns)
    _emit({'name': args.name, 'points': len(rows), 'out': args.out})
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='renergy',
            description='Renormalized energy of point processes.')
    parser.add_argument('--verbose', action='store_true', default=False)
    parser.add_argument('--quiet', action='store_true', default=False)
    sub = parser.add_subparsers(dest='command')

    energy = sub.add_parser('energy', help='W_N of a point-set file')
    energy.add_argument('--input', type=str, required=True)
    energy.add_argument('--dimension', type=int, choices=[1, 2], default=None)
    energy.add_argument('--eisenstein_config', type=str, default=None)
    energy.add_argument('--format', choices=['csv', 'json'], default='csv')
    energy.add_argument('--out', type=str, default=None)
    energy.set_defaults(func=cmd_energy)

    expect = sub.add_parser('expect', help='limit of the expected energy')
    expect.add_argument('--process', required=True, choices=['lattice', 'poisson', 'sine', 'circular',
            'ginibre', 'gaf', 'discrete-sine', 'sine-superposition', 'sine-decimated', 'custom'])
    expect.add_argument('--beta', type=float, default=2.0)
    expect.add_argument('--rho', type=float, default=None)
    expect.add_argument('--dimension', type=int, choices=[1, 2], default=1)
    expect.add_argument('--copies', type=int, default=2)
    expect.add_argument('--decimation', choices=['random', 'deterministic'], default='random')
    expect.add_argument('--table', type=str, default=None)
    expect.add_argument('--tail_class', choices=[cfs.INVERSE_SQUARE, cfs.EXPONENTIAL],
            default=cfs.INVERSE_SQUARE)
    expect.add_argument('--tail_bound', type=float, default=None)
    expect.add_argument('--tail_coefficient', type=float, default=0.0)
    expect.add_argument('--format', choices=['csv', 'json'], default='csv')
    expect.add_argument('--out', type=str, default=None)
    expect.set_defaults(func=cmd_expect)

    mc = sub.add_parser('mc', help='Monte Carlo mean and variance of W_N')
    mc.add_argument('--process', required=True, choices=sorted(MC_PROCESSES))
    mc.add_argument('--n', type=int, default=32)
    mc.add_argument('--beta', type=float, default=2.0)
    mc.add_argument('--dimension', type=int, choices=[1, 2], default=1)
    mc.add_argument('--replicas', type=int, default=1000)
    mc.add_argument('--seed', type=int, default=0)
    mc.add_argument('--threads', type=int, default=1)
    mc.add_argument('--mcmc_config', type=str, default=None)
    mc.add_argument('--eisenstein_config', type=str, default=None)
    mc.add_argument('--save_samples', type=str, default=None)
    mc.add_argument('--export_points', type=str, default=None)
    mc.add_argument('--strict', action='store_true', default=False)
    mc.add_argument('--format', choices=['csv', 'json'], default='csv')
    mc.add_argument('--out', type=str, required=True)
    mc.set_defaults(func=cmd_mc)

    curve = sub.add_parser('curve', help='curve data as CSV')
    curve.add_argument('--name', required=True,
            choices=['discrete-sine', 'minimality-sweep', 'variance-decay', 'u-beta'])
    curve.add_argument('--grid', type=int, default=None)
    curve.add_argument('--beta', type=float, default=2.0)
    curve.add_argument('--family', choices=sorted(SWEEP_GRIDS), default='two-interval')
    curve.add_argument('--threads', type=int, default=1)
    curve.add_argument('--format', choices=['csv', 'json'], default='csv')
    curve.add_argument('--out', type=str, required=True)
    curve.set_defaults(func=cmd_curve)
    return parser


def main(argv=None):
    """
    Entry point of the ``renergy`` console script.

    Returns:
        the process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(
            format='%(asctime)s [%(filename)s:%(lineno)d] %(message)s',
            datefmt='%Y-%m-%d:%H:%M:%S',
            level=level)
    logging.getLogger().setLevel(level)

    try:
        return args.func(args)
    except ConfigurationParseError as e:
        logging.error('cannot parse input: {}'.format(e))
        return EXIT_INPUT
    except (IOError, OSError) as e:
        logging.error('cannot read input: {}'.format(e))
        return EXIT_INPUT
    except DomainError as e:
        logging.error('invalid argument: {}'.format(e))
        return EXIT_USAGE
    except (SingularityError, CoincidentPointsError, QuadratureError, ConvergenceError,
            DegenerateDistributionError) as e:
        logging.error('numerical failure: {}'.format(e))
        return EXIT_NUMERICAL
    except RenergyError as e:
        logging.error(str(e))
        return 1
    except (ValueError, AssertionError) as e:
        logging.error('invalid argument: {}'.format(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())

"""command line interface

    python -m abm_evi estimate --input data.txt --method abm --k 50
    python -m abm_evi simulate --experiment fig3a-student-t2 --out results/
    python -m abm_evi verify --what covariance-mc --gamma 1 --reps 100000
    python -m abm_evi weights --n 1000 --m 10
    python -m abm_evi path --dgp fig3a-student-t2 --n 10000 --k-grid 20:1000:20

Every run reports the git blob SHA-1 of what it produced on stderr.
Exit codes are 0 on success, 2 for invalid input, 3 when a single
estimate cannot be fitted and 4 for file system errors.
"""

import argparse
import dataclasses
import json
import logging
from pathlib import Path
import sys


from .. import __version__
from ..errors import AbmEviError, FitError, InvalidArgument
from ..asymptotics import (
    AsymptoticMatrices,
    abm_variance_constant,
    competitor_variance_constants,
    covariance_mc_check,
    sigma_matrix,
)
from ..distributions import make_stream
from ..estimators import Method, SWEEP_COLUMNS, estimate, k_sweep
from ..simulation import SUMMARY_COLUMNS, run_experiment, single_sample_path
from ..weights import abm_weights
from ._config import parse_config, parse_dgp
from ._table import FORMATS, ResultTable, git_blob_sha1, read_observations, write_table, format_value


log = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FIT = 3
EXIT_IO = 4

ESTIMATE_COLUMNS = ('method', 'm', 'k_effective', 'gamma_hat', 'sigma_hat', 'iterations', 'residual')
VERIFY_TARGETS = ('matrices', 'covariance-mc', 'variance-constant')


def k_grid_type(text):
    """'a:b:step' -> [a, a+step, ..., b], b included when it lies on the grid"""
    try:
        start, stop, step = (int(part) for part in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected start:stop:step, got {text!r}') from None
    if step < 1 or start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f'need 1 <= start <= stop and step >= 1, got {text!r}')
    return list(range(start, stop + 1, step))


def _manifest(**extra):
    return {'tool': 'abm-evi', 'version': __version__, **extra}


def _emit(table, args):
    """write the table where asked and report its hash"""
    if args.out is None:
        sys.stdout.write(table.serialize(args.format))
    else:
        write_table(table, args.out, args.format)
    print(f'content hash {table.content_hash}', file=sys.stderr)


def cmd_estimate(args):
    x = read_observations(args.input)
    manifest = _manifest(input=str(args.input), method=args.method, c=args.c)
    if args.k_grid is not None:
        rows = k_sweep(x, args.method, args.k_grid, c=args.c)
        table = ResultTable.from_records(SWEEP_COLUMNS, [row.to_row() for row in rows], manifest)
    else:
        result = estimate(x, args.method, m=args.m, k=args.k, c=args.c)
        table = ResultTable.from_records(ESTIMATE_COLUMNS, [result.to_row()], manifest)
    _emit(table, args)


def _overrides(config, args):
    changes = {}
    if args.reps is not None:
        changes['reps'] = args.reps
    if args.seed is not None:
        changes['base_seed'] = args.seed
    return dataclasses.replace(config, **changes) if changes else config


def cmd_simulate(args):
    if args.dgp is not None:
        return _simulate_series(args)
    config = _overrides(parse_config(args.experiment or args.config), args)
    summary = run_experiment(config, threads=args.threads)
    table = ResultTable.from_records(
        SUMMARY_COLUMNS,
        summary.to_rows(),
        _manifest(config=config.to_dict(), base_seed=config.base_seed),
    )
    if args.out is None:
        sys.stdout.write(table.serialize('csv'))
    else:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        write_table(table, out / 'summary.csv', 'csv')
        (out / 'manifest.json').write_text(
            json.dumps(table.full_manifest(), indent=2) + '\n', encoding='utf-8'
        )
    print(f'content hash {table.content_hash}', file=sys.stderr)


def _simulate_series(args):
    """dump one raw series, one value per line, readable by estimate --input"""
    if args.n is None:
        raise InvalidArgument('simulate --dgp needs --n')
    dgp = parse_dgp(args.dgp)
    seed = 0 if args.seed is None else args.seed
    x = dgp.sample(args.n, make_stream(seed, 0))
    header = f'# {json.dumps(dgp.to_dict(), sort_keys=True)} n={args.n} seed={seed}\n'
    text = header + ''.join(format_value(float(v)) + '\n' for v in x)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding='utf-8')
    print(f'content hash {git_blob_sha1(text)}', file=sys.stderr)


def cmd_verify(args):
    if args.what == 'matrices':
        result = AsymptoticMatrices.from_gamma(args.gamma).to_dict()
    elif args.what == 'variance-constant':
        result = {
            'gamma': args.gamma,
            'variance_constant_a': abm_variance_constant(args.gamma),
            'competitors': competitor_variance_constants(),
        }
    else:
        check = covariance_mc_check(args.gamma, args.reps, args.seed, threads=args.threads)
        result = {
            **check.to_dict(),
            'closed_form': sigma_matrix(args.gamma).tolist(),
            'z_scores': check.z_scores(sigma_matrix(args.gamma)).tolist(),
        }
    text = json.dumps(result, indent=2) + '\n'
    sys.stdout.write(text)
    print(f'content hash {git_blob_sha1(text)}', file=sys.stderr)


def cmd_weights(args):
    w = abm_weights(args.n, args.m)
    table = ResultTable(
        schema=('index', 'weight'),
        rows=[(i, float(p)) for i, p in enumerate(w.values, start=1)],
        manifest=_manifest(n=args.n, m=args.m),
    )
    _emit(table, args)


def cmd_path(args):
    dgp = parse_dgp(args.dgp)
    paths = single_sample_path(dgp, args.n, args.k_grid, args.methods, args.seed, c=args.c)
    records = [row.to_row() for rows in paths.values() for row in rows]
    table = ResultTable.from_records(
        SWEEP_COLUMNS, records, _manifest(dgp=dgp.to_dict(), n=args.n, seed=args.seed),
    )
    _emit(table, args)


def _add_output(parser, out_help = 'output file, stdout when omitted'):
    parser.add_argument('--format', choices=FORMATS, default='csv', help='table format')
    parser.add_argument('--out', type=Path, default=None, help=out_help)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='abm-evi',
        description='all block maxima estimation of a positive extreme value index',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging')
    parser.add_argument('--threads', type=int, default=None, help='worker threads, overrides ABM_EVI_THREADS')
    sub = parser.add_subparsers(dest='command', required=True)
    methods = [m.value for m in Method]

    p = sub.add_parser('estimate', help='estimate gamma from observations in a file')
    p.add_argument('--input', type=Path, required=True, help='one observation per line, # starts a comment')
    p.add_argument('--method', choices=methods, default='abm')
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument('--m', type=int, help='block size')
    which.add_argument('--k', type=int, help='number of blocks (upper order statistics for hill)')
    which.add_argument('--k-grid', type=k_grid_type, help='sweep over k given as start:stop:step')
    p.add_argument('--c', type=float, default=1e-3, help='left-truncation constant')
    _add_output(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser('simulate', help='run an experiment or draw a raw series')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--experiment', help='name of a registered experiment')
    source.add_argument('--config', help='JSON experiment file')
    source.add_argument('--dgp', help='JSON file (or experiment name) whose series to dump')
    p.add_argument('--n', type=int, help='series length for --dgp')
    p.add_argument('--reps', type=int, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--out', type=Path, default=None, help='directory for experiments, file for --dgp')
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('verify', help='check the asymptotic theory numerically, JSON output')
    p.add_argument('--what', choices=VERIFY_TARGETS, required=True)
    p.add_argument('--gamma', type=float, default=1.0)
    p.add_argument('--reps', type=int, default=100_000)
    p.add_argument('--seed', type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('weights', help='all block maxima weights of the order statistics')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--m', type=int, required=True)
    _add_output(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser('path', help='estimates over k on one simulated sample')
    p.add_argument('--dgp', required=True, help='JSON file or experiment name')
    p.add_argument('--n', type=int, default=10_000)
    p.add_argument('--k-grid', type=k_grid_type, default=k_grid_type('20:1000:20'))
    p.add_argument('--methods', nargs='+', choices=methods, default=['abm', 'bm'])
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--c', type=float, default=1e-3)
    _add_output(p)
    p.set_defaults(func=cmd_path)
    return parser


def main(argv = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        args.func(args)
    except InvalidArgument as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INVALID
    except FitError as e:
        print(f'fit failed: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_FIT
    except AbmEviError as e:
        print(f'error: {type(e).__name__}: {e}', file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_IO
    return EXIT_OK

# -*- coding: utf-8 -*-
"""
Main Application Entry Point
Order-dividing bijections onto cyclic groups: construct, verify, search

Exit status:
    0  success / verdict true / feasible / conjecture held
    1  verdict false / infeasible / counterexample found
    2  usage, parse, precondition or domain error
    3  resource bound exceeded (raise it with --bound)
"""

import sys
import logging
import argparse
from pathlib import Path
from typing import List, Optional

# Add project root to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from config.settings import LOG_LEVEL, DEFAULT_JOBS
from modules.group_schema import ComparisonMode, DomainError, ResourceBoundError, GroupError
from modules.descriptor_parser import parse_group, GRAMMAR_HELP
from modules.group_core import order_spectrum
from modules.linear_maps import dihedral_map, product_map, coprime_product_map, dihedral_linear_map, verify
from modules.existence import exists_bijection, realize_bijection, survey_solvable
from modules.conjecture_search import sweep_conjecture
from modules.report_schema import (
    spectrum_out, elements_out, verification_out, certificate_out, sweep_out, survey_out,
)
from modules.report_formatter import (
    OutputFormat, render_spectrum, render_elements, render_verification,
    render_certificate, render_sweep, render_survey,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


# ==================== COMMANDS ====================
# Each command returns (rendered report, exit status)

def cmd_spectrum(args):
    g = parse_group(args.group)
    out = spectrum_out(g, order_spectrum(g, args.bound))
    return render_spectrum(out, args.format), EXIT_OK


def cmd_elements(args):
    g = parse_group(args.group)
    return render_elements(elements_out(g, args.bound), args.format), EXIT_OK


def cmd_map(args):
    if args.family == "dihedral":
        spec = dihedral_map(args.n, args.k)
    elif args.family == "product":
        spec = product_map(args.p, args.k, args.m)
    else:
        spec = coprime_product_map(args.p, args.k)

    report = verify(spec, args.mode, args.bound)
    status = EXIT_OK if report.verdict else EXIT_FALSE
    return render_verification(verification_out(report), args.format), status


def cmd_verify(args):
    report = verify(dihedral_linear_map(args.n, args.x, args.y), args.mode, args.bound)
    status = EXIT_OK if report.verdict else EXIT_FALSE
    return render_verification(verification_out(report), args.format), status


def cmd_exists(args):
    src, dst = parse_group(args.source), parse_group(args.target)
    cert = exists_bijection(order_spectrum(src, args.bound), order_spectrum(dst, args.bound), args.mode)

    table = None
    if args.realize and cert.feasible:
        table = realize_bijection(src, dst, cert, args.bound)

    ok = cert.feasible and (table is None or table.verdict)
    return render_certificate(certificate_out(src, dst, cert, table), args.format), EXIT_OK if ok else EXIT_FALSE


def cmd_conjecture(args):
    n_max = args.n_max if args.n_max is not None else args.n_min
    result = sweep_conjecture(args.n_min, n_max, jobs=args.jobs, bound=args.bound)
    status = EXIT_OK if result.summary.conjecture_holds else EXIT_FALSE
    return render_sweep(sweep_out(result), args.format), status


def cmd_survey(args):
    outcomes = survey_solvable(args.max_order, args.mode, args.bound)
    out = survey_out(args.max_order, args.mode.value, outcomes)
    return render_survey(out, args.format), EXIT_OK if out.all_feasible else EXIT_FALSE


# ==================== PARSER ====================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', '-f', type=OutputFormat, choices=list(OutputFormat),
                        metavar="{table,csv,json}", default=OutputFormat.TABLE,
                        help='Output format (table, csv, json)')
    common.add_argument('--output', '-o', help='Write the report to this file instead of stdout')
    common.add_argument('--bound', type=int, default=None,
                        help='Override the enumeration/search bound for this run')
    common.add_argument('--log-level', default=LOG_LEVEL, type=str.upper,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help='Log level for stderr diagnostics')

    with_mode = argparse.ArgumentParser(add_help=False)
    with_mode.add_argument('--mode', type=ComparisonMode, choices=list(ComparisonMode),
                           metavar="{divides,divided-by,geq,leq}", default=ComparisonMode.DIVIDES,
                           help='Order predicate checked per element')

    parser = argparse.ArgumentParser(
        description="Order-dividing bijections from non-cyclic groups onto cyclic groups",
        epilog=f"Group descriptors: {GRAMMAR_HELP}",
    )
    subparsers = parser.add_subparsers(dest='command', required=True, help='Available commands')

    p = subparsers.add_parser('spectrum', parents=[common], help='Order spectrum of a group')
    p.add_argument('group', help='Group descriptor, e.g. D8 or Z3xZ6')
    p.set_defaults(handler=cmd_spectrum)

    p = subparsers.add_parser('elements', parents=[common], help='Every element with its order')
    p.add_argument('group', help='Group descriptor')
    p.set_defaults(handler=cmd_elements)

    map_parser = subparsers.add_parser('map', help='Build and verify a constructed bijection')
    families = map_parser.add_subparsers(dest='family', required=True)

    p = families.add_parser('dihedral', parents=[common, with_mode], help='D_2n -> Z_2n, s^a r^b -> k*a + 2*b')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True, help='Odd coefficient on the reflection')
    p.set_defaults(handler=cmd_map)

    p = families.add_parser('product', parents=[common, with_mode], help='Z_p x Z_kp -> Z_kp^2, (a, b) -> m*k*a + p*b')
    p.add_argument('--p', type=int, required=True, help='Odd prime')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--m', type=int, default=1)
    p.set_defaults(handler=cmd_map)

    p = families.add_parser('coprime', parents=[common, with_mode], help='Z_p x Z_k -> Z_pk, (a, b) -> k*a + p*b')
    p.add_argument('--p', type=int, required=True, help='Odd prime')
    p.add_argument('--k', type=int, required=True)
    p.set_defaults(handler=cmd_map)

    p = subparsers.add_parser('verify', parents=[common, with_mode],
                              help='Verify s^a r^b -> x*a + y*b on D_2n -> Z_2n')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--x', type=int, required=True)
    p.add_argument('--y', type=int, required=True)
    p.set_defaults(handler=cmd_verify)

    p = subparsers.add_parser('exists', parents=[common, with_mode],
                              help='Decide existence of a bijection from order spectra')
    p.add_argument('source', help='Source group descriptor')
    p.add_argument('target', help='Target group descriptor')
    p.add_argument('--realize', action='store_true', help='Also build and recheck an explicit element table')
    p.set_defaults(handler=cmd_exists)

    p = subparsers.add_parser('conjecture', parents=[common], help='Exhaustive swap-conjecture sweep')
    p.add_argument('--n-min', type=int, default=2)
    p.add_argument('--n-max', type=int, default=None, help='Defaults to --n-min')
    p.add_argument('--jobs', '-j', type=int, default=DEFAULT_JOBS, help='Worker processes (output is identical)')
    p.set_defaults(handler=cmd_conjecture)

    p = subparsers.add_parser('survey', parents=[common, with_mode],
                              help='Every non-cyclic catalog group against the cyclic group of its order')
    p.add_argument('--max-order', type=int, default=60)
    p.set_defaults(handler=cmd_survey)

    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.info(f"Report saved to: {output}")
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    logging.basicConfig(
        level=str(args.log_level).upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        text, status = args.handler(args)
    except ResourceBoundError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, GroupError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        _emit(text, args.output)
    except OSError as e:
        print(f"Error: cannot write report to {args.output}: {e}", file=sys.stderr)
        return EXIT_USAGE
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface for tubings.

Every sub-command reads JSON inputs, prints its result through a text or JSON
formatter on stdout and logs progress on stderr.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from typing import Any

from tubings.census import TubingCache, resolve_cache_dir
from tubings.chains import boundary, prelie_coproduct
from tubings.colors import ColorConfig, determine_color_mode
from tubings.dtub import apply_op, differential, l_left, l_perp, l_right
from tubings.errors import InputError, TubingError
from tubings.formatters import JsonReportFormatter, ReportFormatter, TextReportFormatter
from tubings.graph import FAMILIES, Graph, nodeset
from tubings.opcat import OcdMorphism, axiom_suite, cardinality_of_morphism, fiber
from tubings.serialization import decode_dtubing, decode_graph, decode_tubing, load_json
from tubings.substitution import LabeledTubing, gamma_full, gamma_t
from tubings.suites import SuiteOptions, run_suite
from tubings.tubing import Tubing, enumerate_tubings, face_counts
from tubings.types import DTubOp, SuiteName

logger = logging.getLogger(__name__)

# Exit codes
EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

DTUB_COMMANDS = ['vdash', 'dashv', 'times', 'd', 'lright', 'lleft', 'lperp']
CONVERT_FORMATS = ['polymake', 'sage']

_FAMILY_PATTERN = re.compile(r'^(K|L|Cy)(\d+)$')
_SHORTHAND = {'K': 'complete', 'L': 'linear', 'Cy': 'cycle'}


def load_graph(source: str) -> Graph:
    """A graph from a family shorthand (K4, L3, Cy5) or a graph JSON file."""
    match = _FAMILY_PATTERN.match(source)
    if match:
        return FAMILIES[_SHORTHAND[match.group(1)]](int(match.group(2)))
    return decode_graph(load_json(source))


def load_tubing(path: str) -> Tubing:
    return decode_tubing(load_json(path))


def _labeled(path: str) -> LabeledTubing:
    """A tubing with its tube labels; the canonical labelling unless the file lists ``labels``."""
    data: Any = load_json(path)
    T = decode_tubing(data)
    if not isinstance(data, dict) or 'labels' not in data:
        return LabeledTubing.canonical(T)
    labels = data['labels']
    if not isinstance(labels, list) or not all(isinstance(t, list) for t in labels):
        raise InputError("Field 'labels' must be a list of node lists")
    labeled = LabeledTubing(T, tuple(nodeset(t) for t in labels))
    labeled.validate()
    return labeled


def _tubings_of(g: Graph, args: argparse.Namespace) -> tuple[Tubing, ...]:
    cache_dir = resolve_cache_dir(args.cache_dir)
    if cache_dir is None:
        return enumerate_tubings(g, args.workers)
    cache = TubingCache(cache_dir)
    result = cache.tubings(g, args.workers)
    logger.debug(f"Cache {cache_dir}: {cache.hits} hits, {cache.misses} misses")
    return result


def _cmd_enumerate(args: argparse.Namespace, out: ReportFormatter) -> int:
    g = load_graph(args.graph)
    tubings = _tubings_of(g, args)
    logger.info(f"{len(tubings)} tubings of {g!r}")
    out.format_tubings(g, tubings)
    return EXIT_SUCCESS


def _cmd_fvector(args: argparse.Namespace, out: ReportFormatter) -> int:
    g = load_graph(args.graph)
    out.format_f_vector(g, face_counts(g, _tubings_of(g, args)))
    return EXIT_SUCCESS


def _cmd_boundary(args: argparse.Namespace, out: ReportFormatter) -> int:
    out.format_chain(boundary(load_tubing(args.tubing)))
    return EXIT_SUCCESS


def _cmd_coproduct(args: argparse.Namespace, out: ReportFormatter) -> int:
    out.format_coproduct(prelie_coproduct(load_tubing(args.tubing)))
    return EXIT_SUCCESS


def _cmd_substitute(args: argparse.Namespace, out: ReportFormatter) -> int:
    labeled = _labeled(args.tubing)
    if args.full is not None:
        result = gamma_full(labeled, [load_tubing(p) for p in args.full])
    else:
        slot, path = args.slot
        try:
            i = int(slot)
        except ValueError:
            raise InputError(f"Slot must be an integer, got '{slot}'") from None
        if not 0 <= i < len(labeled.labels):
            raise InputError(f"Slot {i} is outside 0..{len(labeled.labels) - 1}")
        result = gamma_t(labeled.base, labeled.labels[i], load_tubing(path))
    out.format_tubing(result)
    return EXIT_SUCCESS


def _cmd_convert(args: argparse.Namespace, out: ReportFormatter) -> int:
    logger.error(f"Error: conversion to {args.to} is not implemented")
    return EXIT_INPUT_ERROR


def _cmd_dtub(args: argparse.Namespace, out: ReportFormatter) -> int:
    op = args.op
    if op == 'd':
        out.format_dchain(op, differential(decode_dtubing(load_json(args.a))))
    elif op in ('lright', 'lleft', 'lperp'):
        product = {'lright': l_right, 'lleft': l_left, 'lperp': l_perp}[op]
        out.format_tubing(product(load_tubing(args.a), load_tubing(args.b)))
    else:
        a, b = decode_dtubing(load_json(args.a)), decode_dtubing(load_json(args.b))
        out.format_dchain(op, apply_op(DTubOp(op), a, b))
    return EXIT_SUCCESS


def _cmd_opcat(args: argparse.Namespace, out: ReportFormatter) -> int:
    if args.opcat_command == 'fiber':
        f = OcdMorphism.between(load_tubing(args.source), load_tubing(args.target))
        obj = fiber(f, args.i)
        out.format_fiber(args.i, obj.graph, obj.tubing, cardinality_of_morphism(f))
        return EXIT_SUCCESS
    g = load_graph(args.graph)
    results = axiom_suite(g)
    out.format_axioms(g, results)
    return EXIT_SUCCESS if all(r.passed for r in results) else EXIT_VERIFICATION_FAILED


def _cmd_verify(args: argparse.Namespace, out: ReportFormatter) -> int:
    options = SuiteOptions(max_n=args.max_n, seed=args.seed, samples=args.samples, workers=args.workers)
    report = run_suite(args.suite, options)
    out.format_report(report)
    return EXIT_SUCCESS if report.passed else EXIT_VERIFICATION_FAILED


COMMANDS = {
    'enumerate': _cmd_enumerate,
    'fvector': _cmd_fvector,
    'boundary': _cmd_boundary,
    'coproduct': _cmd_coproduct,
    'substitute': _cmd_substitute,
    'convert': _cmd_convert,
    'dtub': _cmd_dtub,
    'opcat': _cmd_opcat,
    'verify': _cmd_verify,
}


def _common_options() -> argparse.ArgumentParser:
    """Flags accepted by every sub-command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-n', type=int, metavar='K',
                        help='Largest node count for exhaustive suites (default: per suite)')
    common.add_argument('--seed', type=int, default=0,
                        help='Seed for sampled suites (default: 0)')
    common.add_argument('--samples', type=int, metavar='N',
                        help='Random cases per sampled regime (default: per suite)')
    common.add_argument('--cache-dir', type=str, metavar='PATH',
                        help='Directory caching tubing enumerations (default: $TUBINGS_CACHE_DIR)')
    common.add_argument('--workers', type=int, metavar='N',
                        help='Worker threads for enumeration and suites')
    common.add_argument('--json', '-j', action='store_true',
                        help='Output results in JSON format')
    common.add_argument('--pretty', action='store_true',
                        help='Indent JSON output')
    common.add_argument('--quiet', '-q', action='store_true',
                        help='Only log errors')
    common.add_argument('--verbose', '-v', action='store_true',
                        help='Log per-graph and per-tubing progress')
    common.add_argument('--color', dest='color_mode', action='store_const', const='always',
                        help='Force color output (even when piped)')
    common.add_argument('--no-color', dest='color_mode', action='store_const', const='never',
                        help='Disable color output')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog='tubings',
                                     description='Tubings of graphs: enumeration, substitution, chains and checks.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('enumerate', parents=[common], help='List every tubing of a graph')
    p.add_argument('graph', help='Graph JSON file or K<n>, L<n>, Cy<n>')

    p = sub.add_parser('fvector', parents=[common], help='Face counts by dimension')
    p.add_argument('graph', help='Graph JSON file or K<n>, L<n>, Cy<n>')

    p = sub.add_parser('boundary', parents=[common], help='Signed boundary of a tubing')
    p.add_argument('tubing', help='Tubing JSON file')

    p = sub.add_parser('coproduct', parents=[common], help='Pre-Lie coproduct of a tubing')
    p.add_argument('tubing', help='Tubing JSON file')

    p = sub.add_parser('substitute', parents=[common], help='Substitute tubings into the tubes of a tubing')
    p.add_argument('tubing', help='Tubing JSON file, optionally with "labels"')
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument('--slot', nargs=2, metavar=('I', 'S.json'),
                      help='Substitute S at the tube labelled I')
    mode.add_argument('--full', nargs='+', metavar='S.json',
                      help='Substitute S^0 ... S^k at every label')

    p = sub.add_parser('convert', parents=[common], help='Export to another format (not implemented)')
    p.add_argument('tubing', help='Tubing JSON file')
    p.add_argument('--to', choices=CONVERT_FORMATS, required=True, help='Target format')

    p = sub.add_parser('dtub', parents=[common], help='Trialgebra and L-algebra operations')
    p.add_argument('op', choices=DTUB_COMMANDS, help='Operation')
    p.add_argument('a', help='First operand JSON file')
    p.add_argument('b', nargs='?', help='Second operand JSON file (not used by d)')

    p = sub.add_parser('opcat', help='Operadic category of tubings')
    opcat = p.add_subparsers(dest='opcat_command', metavar='ACTION')
    opcat.required = True
    f = opcat.add_parser('fiber', parents=[common], help='Fiber of the morphism T → S over index i')
    f.add_argument('source', help='Finer tubing T JSON file')
    f.add_argument('target', help='Coarser tubing S JSON file')
    f.add_argument('--i', type=int, required=True, metavar='K', help='Index of the tube of S')
    v = opcat.add_parser('verify', parents=[common], help='Check the operadic category axioms on a graph')
    v.add_argument('graph', help='Graph JSON file or K<n>, L<n>, Cy<n>')

    p = sub.add_parser('verify', parents=[common], help='Run a verification suite')
    p.add_argument('suite', choices=[s.value for s in SuiteName], help='Suite name')
    return parser


def _validate_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    """Validate argument combinations, call parser.error() on invalid combinations."""
    if args.quiet and args.verbose:
        parser.error("--quiet and --verbose are mutually exclusive")
    if args.pretty and not args.json:
        parser.error("--pretty requires --json")
    if args.samples is not None and args.samples < 1:
        parser.error("--samples must be at least 1")
    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be at least 1")
    if args.max_n is not None and args.max_n < 1:
        parser.error("--max-n must be at least 1")
    if args.command == 'dtub':
        if args.op == 'd' and args.b is not None:
            parser.error("dtub d takes a single operand")
        if args.op != 'd' and args.b is None:
            parser.error(f"dtub {args.op} takes two operands")


def _setup_logging(args: argparse.Namespace) -> logging.Handler:
    """Configure logging based on args. Returns the handler for potential cleanup."""
    if args.quiet:
        log_level = logging.ERROR
    elif args.verbose:
        log_level = logging.DEBUG
    else:
        log_level = logging.INFO

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(message)s'))

    # Re-installed on each call so repeated main() runs write to the current stderr
    package_logger = logging.getLogger('tubings')
    package_logger.handlers.clear()
    package_logger.addHandler(handler)
    package_logger.setLevel(log_level)
    package_logger.propagate = False
    return handler


def _command_label(args: argparse.Namespace) -> str:
    if args.command == 'dtub':
        return f"dtub {args.op}"
    if args.command == 'opcat':
        return f"opcat {args.opcat_command}"
    if args.command == 'verify':
        return f"verify {args.suite}"
    return args.command


def main() -> int:
    """Main entry point. Returns 0 on success, 1 on a failed check, 2 on bad input."""
    parser = build_parser()
    args = parser.parse_args()
    _validate_args(args, parser)
    _setup_logging(args)

    if args.json:
        formatter: ReportFormatter = JsonReportFormatter(_command_label(args), args.seed, pretty=args.pretty)
    else:
        color_config = ColorConfig(mode=determine_color_mode(args), stream=sys.stdout)
        formatter = TextReportFormatter(_command_label(args), args.seed, color_config=color_config)

    try:
        status = COMMANDS[args.command](args, formatter)
    except (TubingError, OSError) as e:
        logger.error(f"Error: {e}")
        return EXIT_INPUT_ERROR

    if status != EXIT_INPUT_ERROR:
        formatter.finalize()
    return status


if __name__ == "__main__":
    sys.exit(main())

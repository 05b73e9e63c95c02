#!/usr/bin/env python3
"""
perm-grammar-calc

Command-line interface for grammar derivations, permutation statistic
distributions, generating function identities and the fixed-set bijection.

    python -m src.cli derive --grammar dumont --word a --n 3
    python -m src.cli verify --suite all --max-n 7
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .core.bijection import correspondence_table, phi, phi_inverse, phi_trace
from .core.errors import GrammarCalcError, SizeTooLarge
from .core.grammar import BUILTIN_GRAMMARS, Grammar, get_grammar
from .core.identities import SOURCES, get_identity, identity_ids
from .core.labeling import Variant, extract_history, label_slots
from .core.perms import CycleForm, MAX_ENUMERATION_SIZE, Permutation, distribution, parse_spec
from .core.poly import LaurentPolynomial
from .core.series import MAX_SERIES_ORDER
from .core.trees import LabeledTree, decode, encode, tree_weight
from .core.verifier import SUITE_NAMES, IdentityVerifier
from .utils import AppConfig, ConfigLoader, ReportGenerator

logger = logging.getLogger(__name__)

MAX_DERIVE_ORDER = 12
MAX_VERIFY_SIZE = 8


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--json', action='store_true', help="Machine-readable output")

    parser = argparse.ArgumentParser(
        prog='perm-grammar-calc',
        description="Grammar calculus and permutation statistics verification",
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="-v for progress, -vv for derivation and replay detail")
    parser.add_argument('--config', type=Path, help="YAML configuration file")
    commands = parser.add_subparsers(dest='command', required=True)

    derive = commands.add_parser('derive', parents=[output], help="Apply D^n to a word")
    derive.add_argument('--grammar', default='dumont', help=f"One of {', '.join(sorted(BUILTIN_GRAMMARS))}")
    derive.add_argument('--grammar-file', type=Path, help="Rules file, one `var -> poly` per line")
    derive.add_argument('--word', default='a', help="Polynomial word, e.g. a*b or a*x^-1")
    derive.add_argument('--n', type=int, required=True)

    dist = commands.add_parser('dist', parents=[output], help="Distribution polynomial over S_n")
    dist.add_argument('--n', type=int, required=True)
    dist.add_argument('--spec', required=True, help="statistic:variable pairs, e.g. jump:x,des:y,suc:z")

    map_ = commands.add_parser('map', parents=[output], help="Apply the fixed-set bijection")
    target = map_.add_mutually_exclusive_group(required=True)
    target.add_argument('--perm', help="One-line permutation, e.g. \"1 6 3 2 4 5\"")
    target.add_argument('--table', type=int, metavar='N', help="Print the correspondence table for S_N")
    map_.add_argument('--inverse', action='store_true', help="Apply the inverse map")
    map_.add_argument('--trace', action='store_true', help="Show every growth step")

    verify = commands.add_parser('verify', parents=[output], help="Run verification suites")
    verify.add_argument('--suite', default='all', choices=('all',) + SUITE_NAMES)
    verify.add_argument('--max-n', type=int)
    verify.add_argument('--allow-large', action='store_true', help=f"Permit max-n = {MAX_ENUMERATION_SIZE}")
    verify.add_argument('--workers', type=int)
    verify.add_argument('--save', action='store_true', help="Write text and HTML reports")

    gf = commands.add_parser('gf', parents=[output], help="Check a generating function identity")
    gf.add_argument('--id', required=True, dest='identity', help=f"One of {', '.join(identity_ids())}")
    gf.add_argument('--order', type=int)
    gf.add_argument('--source', default='grammar', choices=SOURCES)

    label = commands.add_parser('label', parents=[output], help="Slot labeling of a permutation")
    label.add_argument('--perm', required=True)
    label.add_argument('--variant', default='L', choices=[v.value for v in Variant])
    label.add_argument('--history', action='store_true', help="Also list the insertion history")

    tree = commands.add_parser('tree', parents=[output], help="Encode cycles as a tree or decode a tree")
    source = tree.add_mutually_exclusive_group(required=True)
    source.add_argument('--cycles', help="Cycle form, e.g. \"(1 8 4 9 6)(2)(3 5)(7)\"")
    source.add_argument('--decode', help="Tree serialization, e.g. \"(1 z (2 z a))\"")

    return parser


def _emit(args, payload, lines: List[str]) -> None:
    if args.json:
        print(ReportGenerator.to_json(payload))
    else:
        print('\n'.join(lines))


def cmd_derive(args, config: AppConfig) -> int:
    if not 0 <= args.n <= MAX_DERIVE_ORDER:
        raise SizeTooLarge(f"--n must be between 0 and {MAX_DERIVE_ORDER}, got {args.n}")
    grammar = Grammar.from_file(args.grammar_file) if args.grammar_file else get_grammar(args.grammar)
    word = LaurentPolynomial.parse(args.word)
    result = grammar.derive_n(word, args.n)
    _emit(args, {
        'grammar': grammar.name,
        'word': str(word),
        'n': args.n,
        'result': str(result),
        'terms': result.to_json(),
    }, [str(result)])
    return 0


def cmd_dist(args, config: AppConfig) -> int:
    spec = parse_spec(args.spec)
    result = distribution(args.n, spec)
    _emit(args, {
        'n': args.n,
        'spec': [f"{s}:{v}" for s, v in spec],
        'result': str(result),
        'terms': result.to_json(),
    }, [str(result)])
    return 0


def cmd_map(args, config: AppConfig) -> int:
    if args.table is not None:
        rows = correspondence_table(args.table)
        _emit(args, [row.to_json() for row in rows], ReportGenerator.format_table(rows))
        return 0

    given = Permutation.parse(args.perm)
    if args.inverse:
        source, image = phi_inverse(given), given
        result = source
    else:
        source, image = given, phi(given)
        result = image

    lines = [f"{result}  =  {result.to_cycles()}"]
    lines.extend(ReportGenerator.format_transport(source, image))
    steps = phi_trace(source) if args.trace else []
    lines.extend(ReportGenerator.format_trace(steps))
    _emit(args, {
        'input': str(given),
        'direction': 'inverse' if args.inverse else 'forward',
        'output': str(result),
        'output_cycles': str(result.to_cycles()),
        'jump_des': [source.stat('jump'), source.stat('des')],
        'exc_drop': [image.stat('exc'), image.stat('drop')],
        'Lbar': sorted(source.set_stat('Lbar')),
        'F': sorted(image.set_stat('F')),
        'Jumpbar': sorted(source.set_stat('Jumpbar')),
        'Excbar': sorted(image.set_stat('Excbar')),
        'trace': [
            {'n': step.size, 'slot': step.slot, 'label': step.label,
             'labeling': step.labeling, 'tree': step.tree}
            for step in steps
        ],
    }, lines)
    return 0


def cmd_verify(args, config: AppConfig) -> int:
    settings = config.verification
    max_n = settings.max_n if args.max_n is None else args.max_n
    allow_large = args.allow_large or settings.allow_large
    limit = MAX_ENUMERATION_SIZE if allow_large else MAX_VERIFY_SIZE
    if not 0 <= max_n <= limit:
        hint = '' if allow_large else f" (use --allow-large for up to {MAX_ENUMERATION_SIZE})"
        raise SizeTooLarge(f"--max-n must be between 0 and {limit}, got {max_n}{hint}")
    workers = settings.workers if args.workers is None else args.workers
    if workers < 1:
        raise GrammarCalcError(f"--workers must be at least 1, got {workers}")

    verifier = IdentityVerifier(max_n=max_n, series_order=settings.series_order, workers=workers)
    report = verifier.run(args.suite)
    _emit(args, report.to_json(), [ReportGenerator.generate_text_report(report)])

    if args.save:
        text_path, html_path = verifier.save_reports(report, config.output.report_dir)
        print("\nReports generated:", file=sys.stderr)
        print(f"- HTML report: {html_path}", file=sys.stderr)
        print(f"- Text report: {text_path}", file=sys.stderr)
    return report.exit_code


def cmd_gf(args, config: AppConfig) -> int:
    order = config.verification.series_order if args.order is None else args.order
    if not 0 <= order <= MAX_SERIES_ORDER:
        raise SizeTooLarge(f"--order must be between 0 and {MAX_SERIES_ORDER}, got {order}")
    identity = get_identity(args.identity)
    series = identity.coefficients(order, args.source)
    mismatches = identity.mismatches(order, args.source)
    lines = [
        f"{identity.id}: {identity.formula}",
        f"coefficients of t^n/n!: {identity.coefficients_label} from {args.source}",
    ]
    lines.extend(ReportGenerator.format_series(series, mismatches))
    _emit(args, {
        'id': identity.id,
        'formula': identity.formula,
        'source': args.source,
        'order': order,
        'coefficients': series.to_json(),
        'mismatches': mismatches,
    }, lines)
    return 1 if mismatches else 0


def cmd_label(args, config: AppConfig) -> int:
    p = Permutation.parse(args.perm)
    labeling = label_slots(p, Variant(args.variant))
    lines = [labeling.to_text(), f"weight: {labeling.weight()}"]
    payload = labeling.to_json()
    if args.history:
        history = extract_history(p)
        lines.extend(f"insert {k} at slot {slot} ({symbol})" for k, (slot, symbol) in enumerate(history, 2))
        payload['history'] = [{'slot': slot, 'label': symbol} for slot, symbol in history]
    _emit(args, payload, lines)
    return 0


def cmd_tree(args, config: AppConfig) -> int:
    if args.cycles is not None:
        cycles = CycleForm.parse(args.cycles)
        t = encode(cycles)
    else:
        t = LabeledTree.parse(args.decode)
        cycles = decode(t)
    _emit(args, {
        'tree': t.to_json(),
        'cycles': str(cycles),
        'permutation': str(cycles.to_permutation()),
        'weight': str(tree_weight(t)),
    }, [
        t.to_text(),
        f"{cycles}  =  {cycles.to_permutation()}",
        f"weight: {tree_weight(t)}",
    ])
    return 0


COMMANDS = {
    'derive': cmd_derive,
    'dist': cmd_dist,
    'map': cmd_map,
    'verify': cmd_verify,
    'gf': cmd_gf,
    'label': cmd_label,
    'tree': cmd_tree,
}


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = ConfigLoader.load_config(args.config) if args.config else ConfigLoader.default()
        if config.output.format == 'json':
            args.json = True
        return COMMANDS[args.command](args, config)
    except (ValueError, FileNotFoundError) as exc:
        # GrammarCalcError is a ValueError; so are configuration problems
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())

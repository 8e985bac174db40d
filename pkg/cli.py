"""Command-line front end; the handlers are shared with the HTTP API."""
import argparse
import json
import logging
import sys

from adams_skein import Inconsistent, P, PatternSystem, solve_pattern, torus_invariant
from annulus import AnnulusElement, Q, closure, theta, theta_diagrams
from chords import format_tally, psi_chords
from config import Config
from diagram_ring import DiagramVector, psi
from errors import ParseError, PatternError, SkeinError
from hecke import decorate, from_word
from models import CommandResult
from partitions import alpha, lr_mult
from scalars import Scalar, format_rational, quantum_int
from utils import parse_braid_word, parse_expression, parse_matching, parse_partition
from verify import DEFAULT_MAX, SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def configure_logging():
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')


def _element_result(element):
    return CommandResult(str(element), element.to_json())


def cmd_qint(i):
    value = quantum_int(i)
    return CommandResult(str(value), value.to_json())


def cmd_alpha(partition):
    value = alpha(parse_partition(partition))
    return CommandResult(str(value), value.to_json())


def cmd_lr(first, second):
    product = DiagramVector(lr_mult(parse_partition(first), parse_partition(second)))
    return _element_result(product)


def cmd_adams(m, as_diagrams=False):
    poly, diagrams = psi(m)
    return _element_result(diagrams if as_diagrams else poly)


def cmd_theta(cpoly):
    return _element_result(theta(parse_expression(cpoly, 'cpoly')))


def cmd_q(partition):
    return _element_result(Q(parse_partition(partition)))


def cmd_closure(word, strands=None):
    return _element_result(closure(from_word(parse_braid_word(word, strands))))


def cmd_pm(m):
    return _element_result(P(m))


def cmd_torus(m, p, sl=None, h_order=None, normalize=False):
    value = torus_invariant(m, p, N=sl, normalize=normalize, h_order=h_order)
    if h_order is not None:
        coefficients = [format_rational(c) for c in value]
        text = " + ".join(f"{c}*h^{k}" if k else c for k, c in enumerate(coefficients))
        return CommandResult(text, coefficients)
    return CommandResult(str(value), value.to_json())


def _pattern_element(record):
    """One target or pattern entry of a pattern file."""
    if isinstance(record, list):
        return AnnulusElement.from_json(record)
    if not isinstance(record, dict):
        raise PatternError(f"Cannot read pattern entry {record!r}")
    if 'text' in record:
        return parse_expression(record['text'], 'annulus')
    if 'diagrams' in record:
        return theta_diagrams(parse_expression(record['diagrams'], 'diagram'))
    if 'word' in record:
        word = parse_braid_word(record['word'], record.get('strands'))
        if record.get('decoration'):
            return closure(decorate(word, parse_partition(str(record['decoration']))))
        return closure(from_word(word))
    raise PatternError(f"Pattern entry needs one of text, diagrams, word: {record!r}")


def load_pattern_system(data):
    if 'target' not in data or 'patterns' not in data:
        raise PatternError("A pattern file needs 'target' and 'patterns'")
    return PatternSystem(_pattern_element(data['target']),
                         [_pattern_element(record) for record in data['patterns']])


def _scalar_texts(values):
    return [str(value) for value in values]


def solve_pattern_data(data):
    result = solve_pattern(load_pattern_system(data))
    if isinstance(result, Inconsistent):
        if result.unknown is None:
            text = (f"Inconsistent: the {AnnulusElement().format_key(result.second_equations[0])} "
                    f"equation reads 0 = nonzero")
        else:
            text = (f"Inconsistent: u{result.unknown + 1} differs between equations "
                    f"{[AnnulusElement().format_key(k) for k in result.first_equations]} -> "
                    f"{_scalar_texts(result.first_values)} and "
                    f"{[AnnulusElement().format_key(k) for k in result.second_equations]} -> "
                    f"{_scalar_texts(result.second_values)}")
        payload = {
            'status': 'inconsistent',
            'unknown': result.unknown,
            'first_equations': [list(k) for k in result.first_equations],
            'first_values': [Scalar.coerce(v).to_json() for v in result.first_values],
            'second_equations': [list(k) for k in result.second_equations],
            'second_values': [Scalar.coerce(v).to_json() for v in result.second_values],
        }
        return CommandResult(text, payload)
    text = ", ".join(f"u{j + 1} = {value}" for j, value in enumerate(result.coefficients))
    if result.free:
        text += f" (free: {', '.join(f'u{j + 1}' for j in result.free)})"
    payload = {
        'status': 'solved',
        'coefficients': [value.to_json() for value in result.coefficients],
        'free': list(result.free),
    }
    return CommandResult(text, payload)


def cmd_solve_pattern(file):
    try:
        with open(file) as handle:
            data = json.load(handle)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", e.doc, e.pos)
    return solve_pattern_data(data)


def cmd_psi_chords(matching, m):
    tally = psi_chords(parse_matching(matching), m)
    payload = [[str(diagram), count] for diagram, count in
               sorted(tally.items(), key=lambda item: (-item[1], item[0]))]
    return CommandResult(format_tally(tally), payload)


def cmd_verify(suite='all', max_size=None):
    report = run_suite(suite, max_size)
    return CommandResult("\n".join(report.lines()), report.to_dict(),
                         EXIT_OK if report.passed else EXIT_FAILED)


HANDLERS = {
    'qint': cmd_qint,
    'alpha': cmd_alpha,
    'lr': cmd_lr,
    'adams': cmd_adams,
    'theta': cmd_theta,
    'q': cmd_q,
    'closure': cmd_closure,
    'pm': cmd_pm,
    'torus': cmd_torus,
    'solve-pattern': cmd_solve_pattern,
    'psi-chords': cmd_psi_chords,
    'verify': cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(prog='skein', description="Exact Homfly skein and Adams operator engine")
    parser.add_argument('--format', choices=['text', 'json'], default='text')
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('qint', help="quantum integer [i]").add_argument('i', type=int)
    sub.add_parser('alpha', help="alpha_lambda").add_argument('partition')
    lr = sub.add_parser('lr', help="Littlewood-Richardson product of two diagrams")
    lr.add_argument('first')
    lr.add_argument('second')
    adams = sub.add_parser('adams', help="psi_m(c_1)")
    adams.add_argument('m', type=int)
    shape = adams.add_mutually_exclusive_group()
    shape.add_argument('--as-diagrams', dest='as_diagrams', action='store_true')
    shape.add_argument('--as-cpoly', dest='as_diagrams', action='store_false')
    sub.add_parser('theta', help="theta of a c-polynomial").add_argument('cpoly')
    sub.add_parser('q', help="the closed idempotent Q_lambda").add_argument('partition')
    closure_parser = sub.add_parser('closure', help="annulus closure of a braid word")
    closure_parser.add_argument('word')
    closure_parser.add_argument('--strands', type=int)
    sub.add_parser('pm', help="the braid element P_m").add_argument('m', type=int)
    torus = sub.add_parser('torus', help="torus knot invariant")
    torus.add_argument('m', type=int)
    torus.add_argument('p', type=int)
    torus.add_argument('--sl', type=int)
    torus.add_argument('--h-order', dest='h_order', type=int)
    torus.add_argument('--normalize', action='store_true')
    sub.add_parser('solve-pattern', help="solve a pattern system from a JSON file").add_argument('file')
    chords = sub.add_parser('psi-chords', help="lift a chord diagram to the m-fold cover")
    chords.add_argument('matching')
    chords.add_argument('m', type=int)
    verify = sub.add_parser('verify', help="run verification suites")
    verify.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    verify.add_argument('--max', dest='max_size', type=int,
                        help=f"size cap (defaults: {', '.join(f'{k}={v}' for k, v in DEFAULT_MAX.items())})")
    return parser


def run(argv=None):
    """Parse argv, run one command and print its output; returns the exit code."""
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    params = {key: value for key, value in vars(args).items() if key not in ('command', 'format')}
    try:
        result = HANDLERS[args.command](**params)
    except ParseError as e:
        logger.error(f"Parse error in {args.command}: {str(e)}")
        print(e.annotated(), file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        logger.error(f"Invalid input to {args.command}: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except SkeinError as e:
        logger.error(f"Error in {args.command}: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_FAILED

    if args.format == 'json':
        print(json.dumps(result.payload))
    else:
        print(result.text)
    return result.exit_code


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()

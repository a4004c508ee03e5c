"""
Command line front end.

    stoimenow <validate|encode|decode|enumerate|count|sample|trace|render|verify> [options] [ARG]

ARG, or stdin when ARG is missing, carries a matching ("3 4 1 2 6 5" or "1-3,2-4,5-6") or an ascent sequence ("0,1,2").
Exit codes: 0 success, 1 domain failure, 2 usage error.
"""
import argparse
import io
import logging
import sys
import warnings
from contextlib import redirect_stdout, redirect_stderr
from typing import List, Tuple, TextIO, Optional

from .ascent import parse_sequence, count_sequences, enumerate_sequences, sample_sequences
from .bijection import encode, decode, trace_encode, trace_decode, BijectionError
from .core import parse_matching, find_violations
from .enumeration import enumerate_matchings, count_matchings, verify_bijection
from .render import render, FORMATS

COMMANDS = ('validate', 'encode', 'decode', 'enumerate', 'count', 'sample', 'trace', 'render', 'verify')
MATCHINGS = 'matchings'
SEQUENCES = 'sequences'


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='stoimenow', description="Stoimenow matchings and ascent sequences")
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('arg', nargs='?', help="matching or ascent sequence, read from stdin if omitted")
    parser.add_argument('--n', type=int, help="number of arcs / sequence length")
    parser.add_argument('--kind', choices=(MATCHINGS, SEQUENCES), default=None, help="object family, default depends on the command")
    parser.add_argument('--seed', type=int, help="random seed, required by 'sample'")
    parser.add_argument('--count', type=int, default=1, help="number of samples")
    parser.add_argument('--format', choices=FORMATS, default='ascii', help="render format")
    parser.add_argument('--output', help="write rendered output to this file, required for png")
    parser.add_argument('--max-size', type=int, nargs=2, metavar=('WIDTH', 'HEIGHT'), help="shrink png output to fit into this box")
    parser.add_argument('--jobs', type=int, default=1, help="worker processes for enumeration")
    parser.add_argument('--large', action='store_true', help="allow enumeration beyond the default census limit")
    parser.add_argument('--verbose', '-v', action='store_true', help="log steps to stderr")
    return parser


def _text_arg(args, stdin: Optional[TextIO]) -> str:
    text = args.arg if args.arg is not None else (stdin.read() if stdin is not None else '')
    text = text.strip()
    if not text:
        raise UsageError(f"'{args.command}' needs an argument or input on stdin")
    return text


def _require_n(args) -> int:
    if args.n is None:
        raise UsageError(f"'{args.command}' needs --n")
    return args.n


def _execute(args, stdin: Optional[TextIO], out: List[str], err: List[str]) -> int:
    command = args.command
    kind = args.kind or (SEQUENCES if command in ('decode', 'sample') else MATCHINGS)
    if command == 'validate':
        if kind == SEQUENCES:
            parse_sequence(_text_arg(args, stdin))
            out.append('ok')
            return 0
        m = parse_matching(_text_arg(args, stdin))
        violations = find_violations(m)
        if violations:
            err.append(f"{m} is not a Stoimenow matching")
            err.extend(str(v) for v in violations)
            return 1
        out.append('ok')
    elif command == 'encode':
        out.append(str(encode(parse_matching(_text_arg(args, stdin)))))
    elif command == 'decode':
        out.append(str(decode(parse_sequence(_text_arg(args, stdin)))))
    elif command == 'enumerate':
        n = _require_n(args)
        items = enumerate_sequences(n) if kind == SEQUENCES else enumerate_matchings(n, args.jobs, args.large)
        out.extend(str(item) for item in items)
    elif command == 'count':
        n = _require_n(args)
        out.append(str(count_sequences(n) if kind == SEQUENCES else count_matchings(n, args.jobs, args.large)))
    elif command == 'sample':
        n = _require_n(args)
        if args.seed is None:
            raise UsageError("'sample' needs an explicit --seed")
        if args.count < 1:
            raise UsageError(f"--count must be positive but got {args.count}")
        for x in sample_sequences(n, args.count, args.seed):
            out.append(str(decode(x)) if kind == MATCHINGS else str(x))
    elif command == 'trace':
        text = _text_arg(args, stdin)
        steps = trace_decode(parse_sequence(text)) if kind == SEQUENCES else trace_encode(parse_matching(text))
        out.extend(str(step) for step in steps)
    elif command == 'render':
        m = parse_matching(_text_arg(args, stdin))
        if args.format == 'png' and not args.output:
            raise UsageError("png rendering needs --output")
        if args.max_size and min(args.max_size) < 1:
            raise UsageError(f"--max-size must be positive but got {args.max_size[0]} {args.max_size[1]}")
        drawing = render(m, args.format, max_size=args.max_size)
        if isinstance(drawing, bytes):
            with open(args.output, 'wb') as file:
                file.write(drawing)
        elif args.output:
            with open(args.output, 'w', encoding='utf-8') as file:
                file.write(drawing)
        else:
            out.append(drawing.rstrip('\n'))
    elif command == 'verify':
        report = verify_bijection(_require_n(args), args.jobs, args.large)
        out.append(str(report))
        return 0 if report.bijective else 1
    return 0


def run(argv: List[str], stdin: Optional[TextIO] = None) -> Tuple[int, str, str]:
    """
    Executes one command.

    Returns:
        exit code, stdout text, stderr text
    """
    parser = build_parser()
    parse_out, parse_err = io.StringIO(), io.StringIO()
    try:
        with redirect_stdout(parse_out), redirect_stderr(parse_err):
            args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors and --help this way
        return int(exc.code or 0), parse_out.getvalue(), parse_err.getvalue()
    log_stream = io.StringIO()
    handler = None
    package_logger = logging.getLogger('stoimenow')
    previous_level = package_logger.level
    if args.verbose:
        handler = logging.StreamHandler(log_stream)
        handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
        package_logger.addHandler(handler)
        package_logger.setLevel(logging.DEBUG)
    out, err = [], []
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            code = _execute(args, stdin, out, err)
        err.extend(f"stoimenow: warning: {w.message}" for w in caught)
    except UsageError as exc:
        parser.print_usage(parse_err)
        err.append(f"stoimenow: error: {exc}")
        code = 2
    except (ValueError, BijectionError, OSError) as exc:
        err.append(f"stoimenow: {exc}")
        code = 1
    finally:
        if handler is not None:
            package_logger.removeHandler(handler)
            package_logger.setLevel(previous_level)
    stdout = ''.join(line + '\n' for line in out)
    stderr = parse_err.getvalue() + log_stream.getvalue() + ''.join(line + '\n' for line in err)
    return code, stdout, stderr


def main():
    code, stdout, stderr = run(sys.argv[1:], sys.stdin)
    sys.stdout.write(stdout)
    sys.stderr.write(stderr)
    sys.exit(code)


if __name__ == '__main__':
    main()

"""Command-line front end: format, pyramid, parse, analyze, check.

Input is read line by line from the named files (or stdin) and each result
is written as soon as it is ready.  Exit status is 0 on success, 1 if any
line failed, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO

from .binconv import BinaryFormat, ConversionOverflow, format_by_name, to_hex
from .factoring import Style, render
from .infoyield import DEFAULT_THRESHOLD, Policy, analyze, select_digits
from .interval_model import DecimalInterval, available_digits, pyramid
from .notation_parser import (
    ConventionMode,
    NotationError,
    ParseError,
    outward_binary,
    parse,
    to_decimal_interval,
)
from .selfcheck import run_check

DIGIT_WORDS = {"auto": Policy.DEFAULT, "threshold": Policy.THRESHOLD, "max": Policy.MAX_INFO}


@dataclass
class CliConfig:
    mode: ConventionMode = ConventionMode.POINT
    style: Style = Style.FACTORED
    digits: object = "auto"  # int, "full", or a key of DIGIT_WORDS
    threshold: float = DEFAULT_THRESHOLD
    fmt: BinaryFormat = format_by_name("binary64")
    json: bool = False


class LineError(Exception):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(message)


def _digits_arg(text: str):
    if text in DIGIT_WORDS or text == "full":
        return text
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, 'full', or one of {sorted(DIGIT_WORDS)}")
    if k < 1:
        raise argparse.ArgumentTypeError("digits must be at least 1")
    return k


def _threshold_arg(text: str) -> float:
    try:
        t = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("threshold must be a number")
    if not t > 0:
        raise argparse.ArgumentTypeError("threshold must be positive")
    return t


def _format_arg(text: str) -> BinaryFormat:
    try:
        return format_by_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def resolve_digits(interval: DecimalInterval, config: CliConfig) -> Optional[int]:
    if config.digits == "full":
        return None
    if isinstance(config.digits, int):
        return config.digits
    return select_digits(interval, DIGIT_WORDS[config.digits], config.threshold)


def _lines(paths: list[str]) -> Iterator[tuple[int, str]]:
    sources: Iterable[TextIO]
    if not paths or paths == ["-"]:
        yield from enumerate(sys.stdin, start=1)
        return
    for path in paths:
        with open(path, encoding="ascii", errors="replace") as fh:
            yield from enumerate(fh, start=1)


def _read_interval(lineno: int, text: str, config: CliConfig) -> DecimalInterval:
    try:
        ast = parse(text, config.mode)
        return to_decimal_interval(ast, config.mode, config.fmt)
    except ParseError as exc:
        raise LineError(lineno, exc.column, str(exc).split(": ", 1)[1]) from None
    except (NotationError, ConversionOverflow) as exc:
        raise LineError(lineno, 1, str(exc)) from None


def _parse_mode_for(style: Style, config: CliConfig) -> ConventionMode:
    return ConventionMode.SINGLE_NUMBER if style is Style.SINGLE_NUMBER else config.mode


def _record(source: str, text: Optional[str], meaning: DecimalInterval, config: CliConfig, style, k) -> dict:
    enclosure = outward_binary(meaning, config.fmt, saturate=True)
    rec = {
        "input": source,
        "lower": "-inf" if meaning.lower is None else str(meaning.lower),
        "upper": "inf" if meaning.upper is None else str(meaning.upper),
        "binary_lower_hex": to_hex(enclosure.lower),
        "binary_upper_hex": to_hex(enclosure.upper),
        "style": style,
        "k": k,
    }
    if text is not None:
        rec["output"] = text
    return rec


def _format_one(source: str, interval: DecimalInterval, config: CliConfig, k: Optional[int], style: Style) -> tuple[str, dict]:
    text = render(interval, style, k)
    meaning = to_decimal_interval(parse(text, _parse_mode_for(style, config)), _parse_mode_for(style, config), config.fmt)
    shown_k = None if style is Style.SINGLE_NUMBER else (k if k is not None else available_digits(interval) if interval.bounded else None)
    return text, _record(source, text, meaning, config, style.value, shown_k)


def cmd_format(paths: list[str], config: CliConfig, out: TextIO, err: TextIO) -> int:
    status = 0
    for lineno, raw in _lines(paths):
        line = raw.strip()
        if not line:
            continue
        try:
            iv = _read_interval(lineno, line, config)
            k = resolve_digits(iv, config) if iv.bounded else None
            text, rec = _format_one(line, iv, config, k, config.style)
        except LineError as exc:
            _diagnose(err, exc)
            status = 1
            continue
        out.write((json.dumps(rec) if config.json else text) + "\n")
        out.flush()
    return status


def cmd_pyramid(paths: list[str], config: CliConfig, out: TextIO, err: TextIO) -> int:
    status = 0
    first = True
    for lineno, raw in _lines(paths):
        line = raw.strip()
        if not line:
            continue
        try:
            iv = _read_interval(lineno, line, config)
            if not iv.bounded:
                raise LineError(lineno, 1, "a pyramid needs finite bounds")
            rows = pyramid(iv)
        except LineError as exc:
            _diagnose(err, exc)
            status = 1
            continue
        if not first and not config.json:
            out.write("\n")
        first = False
        kmax = len(rows)
        for i, row in enumerate(rows):
            k = kmax - i
            text, rec = _format_one(line, row, config, k, Style.FACTORED)
            if iv.is_point:
                text = render(iv, Style.FACTORED)
                rec["output"] = text
            out.write((json.dumps(rec) if config.json else text) + "\n")
            if iv.is_point:
                break
        out.flush()
    return status


def cmd_parse(paths: list[str], config: CliConfig, out: TextIO, err: TextIO) -> int:
    status = 0
    for lineno, raw in _lines(paths):
        line = raw.strip()
        if not line:
            continue
        try:
            iv = _read_interval(lineno, line, config)
            rec = _record(line, None, iv, config, None, None)
            if iv.bounded:
                outward_binary(iv, config.fmt)  # surface overflow as an error
        except LineError as exc:
            _diagnose(err, exc)
            status = 1
            continue
        except ConversionOverflow as exc:
            _diagnose(err, LineError(lineno, 1, str(exc)))
            status = 1
            continue
        if config.json:
            out.write(json.dumps(rec) + "\n")
        else:
            out.write(f"[{rec['lower']},{rec['upper']}] {rec['binary_lower_hex']} {rec['binary_upper_hex']}\n")
        out.flush()
    return status


def _num(x: float):
    return x if math.isfinite(x) else str(x)


def cmd_analyze(paths: list[str], config: CliConfig, out: TextIO, err: TextIO) -> int:
    status = 0
    for lineno, raw in _lines(paths):
        line = raw.strip()
        if not line:
            continue
        try:
            iv = _read_interval(lineno, line, config)
            if not iv.bounded:
                raise LineError(lineno, 1, "analysis needs finite bounds")
            report = analyze(iv)
        except LineError as exc:
            _diagnose(err, exc)
            status = 1
            continue
        rows = [
            {
                "k": r.k,
                "form": render(r.enclosure, Style.FACTORED, r.k),
                "width": str(r.width),
                "uncertainty": _num(r.uncertainty),
                "marginal_yield": _num(r.marginal_yield),
            }
            for r in report.rows
        ]
        if config.json:
            out.write(json.dumps({"input": line, "exact": report.exact, "rows": rows}) + "\n")
        else:
            out.write(f"# {line}\n")
            if report.exact:
                out.write("# exact: point interval, zero width\n")
            else:
                out.write(f"{'k':>3}  {'form':<40} {'width':<16} {'uncertainty':>14} {'yield':>14}\n")
                for r in rows:
                    out.write(
                        f"{r['k']:>3}  {r['form']:<40} {r['width']:<16} "
                        f"{r['uncertainty']:>14.6f} {r['marginal_yield']:>14.6g}\n"
                    )
        out.flush()
    return status


def cmd_check(samples: int, seed: int, mutation: bool, config: CliConfig, out: TextIO, err: TextIO) -> int:
    summary = run_check(samples, config.fmt, seed=seed, mutation=mutation, exp_span=None)
    for iv, style, k, text in summary.failures[:20]:
        err.write(f"enclosure lost: [{iv.lower.hex()},{iv.upper.hex()}] style={style.value} k={k} -> {text}\n")
    if mutation:
        line = f"check: {summary.intervals} intervals, {summary.mutations} mutations, {summary.survivors} still enclosing"
    else:
        line = f"check: {summary.intervals} intervals, {summary.checks} round trips, {len(summary.failures)} failures"
    if config.json:
        out.write(json.dumps({
            "intervals": summary.intervals,
            "checks": summary.checks,
            "failures": len(summary.failures),
            "mutations": summary.mutations,
            "survivors": summary.survivors,
            "ok": summary.ok,
        }) + "\n")
    else:
        out.write(line + (" -- ok\n" if summary.ok else " -- FAILED\n"))
    return 0 if summary.ok else 1


def _diagnose(err: TextIO, exc: LineError) -> None:
    err.write(f"line {exc.line}, column {exc.column}: {exc}\n")
    err.flush()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[m.value for m in ConventionMode], default="point",
                        help="meaning of a bare numeral (default: point)")
    common.add_argument("--style", choices=[s.value for s in Style], default="factored")
    common.add_argument("--digits", type=_digits_arg, default="auto",
                        help="suffix digits: N, full, auto (3), threshold, or max (1)")
    common.add_argument("--threshold", type=_threshold_arg, default=DEFAULT_THRESHOLD,
                        help="yield cut-off in dits for --digits threshold")
    common.add_argument("--format", dest="fmt", type=_format_arg, default="binary64",
                        help="binary format: binary64, binary32, reduced, or BITS,EMIN,EMAX")
    common.add_argument("--json", action="store_true", help="one JSON object per line")

    parser = argparse.ArgumentParser(prog="intervalfmt", description="Read and write intervals in factored notation.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("format", "render each input interval"),
        ("pyramid", "print the nested sequence of shorter enclosures"),
        ("parse", "show exact decimal and binary bounds"),
        ("analyze", "tabulate the information yield of each digit"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("files", nargs="*", help="input files (default: stdin)")
    p = sub.add_parser("check", parents=[common], help="randomized round-trip enclosure self-test")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mutation", action="store_true", help="check tightness instead of enclosure")
    return parser


def main(argv: Optional[list[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    fmt = args.fmt if isinstance(args.fmt, BinaryFormat) else format_by_name(args.fmt)
    config = CliConfig(
        mode=ConventionMode(args.mode),
        style=Style(args.style),
        digits=args.digits,
        threshold=args.threshold,
        fmt=fmt,
        json=args.json,
    )
    try:
        if args.command == "check":
            if args.samples < 0:
                err.write("intervalfmt: --samples must not be negative\n")
                return 2
            return cmd_check(args.samples, args.seed, args.mutation, config, out, err)
        handler = {"format": cmd_format, "pyramid": cmd_pyramid, "parse": cmd_parse, "analyze": cmd_analyze}
        return handler[args.command](args.files, config, out, err)
    except OSError as exc:
        err.write(f"intervalfmt: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

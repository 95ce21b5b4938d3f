"""Command-line front end.

Usage:
    aptriples explicit --i 4 --t 5 --format json
    aptriples solve --ppt 3,4,5
    aptriples verify --triple 36,127,132
    aptriples oracle --max-z 100 --include-trivial --format csv
    aptriples seq --terms 30 [--bfile]
    aptriples coverage --max-z 50

Exit status: 0 on success, 1 when `verify` rejects its triple or the solver
finds no unique answer, 2 on invalid input.  Data goes to stdout (or
``--output``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, TextIO

from .core import Triple, TripleKind, classify, is_ppt
from .errors import AptError, InvalidTripleError, SolverError
from .explicit import apt_pair, emit_bfile, sequence_a261654
from .frink import solve_constants
from .oracle import coverage, enumerate_apts

__all__ = ["CliRequest", "UsageError", "build_parser", "parse_args", "run", "main"]

FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    """Bad command line; maps to exit status 2."""

    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


@dataclass
class CliRequest:
    subcommand: str
    params: dict[str, Any] = field(default_factory=dict)
    format: str = "plain"
    output_path: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message, self.format_usage())


def _int_at_least(minimum: int, what: str) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            value = int(text, 10)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{what} must be an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{what} must be >= {minimum}, got {value}")
        return value

    convert.__name__ = what
    return convert


def _triple(text: str) -> Triple:
    try:
        return Triple.parse(text)
    except InvalidTripleError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    common.add_argument("--output", metavar="PATH", help="write data to PATH instead of stdout")

    parser = _Parser(prog="aptriples", description="Almost Pythagorean triples: x^2 + y^2 = z^2 + 1")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("explicit", parents=[common], help="closed-form APT pair for (i, t)")
    p.add_argument("--i", required=True, type=_int_at_least(2, "i"))
    p.add_argument("--t", required=True, type=_int_at_least(1, "t"))

    p = sub.add_parser("solve", parents=[common], help="offset constants for a PPT")
    p.add_argument("--ppt", required=True, type=_triple, metavar="A,B,C")

    p = sub.add_parser("verify", parents=[common], help="classify a triple")
    p.add_argument("--triple", required=True, type=_triple, metavar="X,Y,Z")

    p = sub.add_parser("oracle", parents=[common], help="enumerate all APTs with z <= max-z")
    p.add_argument("--max-z", required=True, type=_int_at_least(1, "max-z"))
    p.add_argument("--include-trivial", action="store_true", help="keep (1, z, z) solutions")

    p = sub.add_parser("seq", parents=[common], help="terms of OEIS A261654")
    p.add_argument("--terms", required=True, type=_int_at_least(0, "terms"))
    p.add_argument("--bfile", action="store_true", help="emit OEIS b-file text")

    p = sub.add_parser("coverage", parents=[common], help="generator coverage report")
    p.add_argument("--max-z", required=True, type=_int_at_least(8, "max-z"))
    return parser


def parse_args(argv: list[str]) -> CliRequest:
    parser = build_parser()
    ns = parser.parse_args(argv)
    params = {
        k: v for k, v in vars(ns).items() if k not in ("subcommand", "format", "output")
    }
    if ns.subcommand == "seq" and ns.bfile:
        if ns.format != "plain":
            raise UsageError("--bfile cannot be combined with --format", parser.format_usage())
        if ns.terms < 1:
            raise UsageError("argument --terms: a b-file needs at least 1 term", parser.format_usage())
    return CliRequest(ns.subcommand, params, ns.format, ns.output)


# --- rendering ---


@dataclass
class _Rendered:
    """One result in all three shapes."""

    doc: dict[str, Any]
    header: list[str]
    rows: list[list[Any]]
    lines: list[str]

    def text(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.doc) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return "".join(line + "\n" for line in self.lines)


def _words(values) -> str:
    return " ".join(str(v) for v in values)


def _explicit(params: dict[str, Any], err: TextIO) -> tuple[_Rendered, int]:
    i, t = params["i"], params["t"]
    pair = apt_pair(i, t)
    ppt = pair.source.ppt
    doc = {
        "i": i,
        "t": t,
        "ppt": ppt.as_list(),
        "lead": pair.lead.as_list(),
        "colead": pair.colead.as_list(),
    }
    header = ["i", "t", "a", "b", "c", "lead_x", "lead_y", "lead_z", "colead_x", "colead_y", "colead_z"]
    row = [i, t, *ppt, *pair.lead, *pair.colead]
    lines = [f"i: {i}", f"t: {t}", f"ppt: {_words(ppt)}", f"lead: {_words(pair.lead)}", f"colead: {_words(pair.colead)}"]
    return _Rendered(doc, header, [row], lines), 0


def _solve(params: dict[str, Any], err: TextIO) -> tuple[_Rendered | None, int]:
    ppt: Triple = params["ppt"]
    if not is_ppt(ppt):
        raise UsageError(f"argument --ppt: {ppt} is not a primitive Pythagorean triple")
    if ppt.y % 2:
        ppt = ppt.swapped()
        print(f"note: legs swapped to put the even leg second: {ppt}", file=err)
    try:
        k = solve_constants(ppt)
    except SolverError as exc:
        print(f"error: {exc}", file=err)
        return None, 1
    doc = {
        "ppt": ppt.as_list(),
        "p": k.p,
        "q": k.q,
        "r": k.r,
        "p_prime": k.p_c,
        "q_prime": k.q_c,
        "r_prime": k.r_c,
    }
    header = ["a", "b", "c", "p", "q", "r", "p_prime", "q_prime", "r_prime"]
    row = [*ppt, *k.lead_offsets, *k.colead_offsets]
    lines = [
        f"ppt: {_words(ppt)}",
        f"p q r: {_words(k.lead_offsets)}",
        f"p' q' r': {_words(k.colead_offsets)}",
    ]
    return _Rendered(doc, header, [row], lines), 0


def _verify(params: dict[str, Any], err: TextIO) -> tuple[_Rendered, int]:
    triple: Triple = params["triple"]
    kind = classify(triple)
    rendered = _Rendered(
        {"triple": triple.as_list(), "kind": kind.value},
        ["x", "y", "z", "kind"],
        [[*triple, kind.value]],
        [f"{_words(triple)}: {kind.value}"],
    )
    if kind is TripleKind.ALMOST_PYTHAGOREAN:
        return rendered, 0
    if kind is TripleKind.PYTHAGOREAN:
        print(f"{triple} is Pythagorean, not almost-Pythagorean", file=err)
    else:
        print(f"{triple} is not almost-Pythagorean", file=err)
    return rendered, 1


def _oracle(params: dict[str, Any], err: TextIO) -> tuple[_Rendered, int]:
    max_z = params["max_z"]
    records = enumerate_apts(max_z, include_trivial=params["include_trivial"])
    doc = {
        "max_z": max_z,
        "records": [
            {"x": r.triple.x, "y": r.triple.y, "z": r.triple.z, "trivial": r.trivial} for r in records
        ],
    }
    rows = [[*r.triple, str(r.trivial).lower()] for r in records]
    lines = [_words(r.triple) + (" trivial" if r.trivial else "") for r in records]
    return _Rendered(doc, ["x", "y", "z", "trivial"], rows, lines), 0


def _seq(params: dict[str, Any], err: TextIO) -> tuple[_Rendered, int]:
    terms = sequence_a261654(params["terms"])
    rows = [[idx, term] for idx, term in enumerate(terms, start=1)]
    return _Rendered({"terms": terms}, ["index", "term"], rows, [str(t) for t in terms]), 0


def _coverage(params: dict[str, Any], err: TextIO) -> tuple[_Rendered, int]:
    report = coverage(params["max_z"])
    samples = [r.triple for r in report.uncovered_samples]
    doc = {
        "max_z": report.max_z,
        "total": report.total,
        "covered": report.covered,
        "uncovered": [s.as_list() for s in samples],
    }
    head = [report.max_z, report.total, report.covered]
    # one row per uncovered sample; a single row with empty sample cells if none
    rows = [[*head, *s] for s in samples] or [[*head, "", "", ""]]
    lines = [
        f"max_z: {report.max_z}",
        f"total: {report.total}",
        f"covered: {report.covered}",
        f"uncovered: {report.uncovered}",
        *(_words(s) for s in samples),
    ]
    return _Rendered(doc, ["max_z", "total", "covered", "x", "y", "z"], rows, lines), 0


_HANDLERS = {
    "explicit": _explicit,
    "solve": _solve,
    "verify": _verify,
    "oracle": _oracle,
    "seq": _seq,
    "coverage": _coverage,
}


def run(request: CliRequest, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Execute a parsed request; returns the exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        if request.subcommand == "seq" and request.params.get("bfile"):
            text = emit_bfile(request.params["terms"])
            status = 0
        else:
            rendered, status = _HANDLERS[request.subcommand](request.params, err)
            if rendered is None:
                return status
            text = rendered.text(request.format)
    except UsageError as exc:
        print(f"aptriples: error: {exc}", file=err)
        return 2
    except AptError as exc:
        print(f"aptriples: error: {exc}", file=err)
        return 2

    if request.output_path:
        with open(request.output_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return status


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        request = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(exc.usage)
        print(f"aptriples: error: {exc}", file=sys.stderr)
        return 2
    return run(request)


if __name__ == "__main__":
    sys.exit(main())

"""``crn`` command line.

Exit codes: 0 success, 2 parse error, 3 precondition error (e.g. a transform
on a file without kinetics).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report
from .decomp import ClassificationError
from .kinetics import TransformError, check_transform_invariants, cf_rm, verify_dynamic_equivalence
from .parser import ParseError, has_kinetics, parse_kinetic_system, parse_network
from .verdict import analyze_multistationarity

EXIT_PARSE = 2
EXIT_PRECONDITION = 3

KIND_FLAGS = {"o": "O", "p": "P", "ptilde": "P-tilde", "f": "F"}
VARIANT_FLAGS = {"cf-rm": "generic", "cf-rm-plus": "plus", "cf-ri-plus": "ri_plus"}
KINETICS_FLAGS = {"arbitrary": "arbitrary", "mass-action": "mass_action"}


class CommandError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None


def _emit(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2) + "\n"
    return report.render_text(rep)


def cmd_analyze(path: str, fmt: str = "text") -> str:
    net = parse_network(_read(path))
    return _emit(report.analyze_report(net, path), fmt)


def cmd_decompose(path: str, kind: str, fmt: str = "text") -> str:
    net = parse_network(_read(path))
    return _emit(report.decompose_report(net, KIND_FLAGS[kind], path), fmt)


def cmd_verdict(path: str, kinetics: str, fmt: str = "text") -> str:
    net = parse_network(_read(path))
    v = analyze_multistationarity(net, KINETICS_FLAGS[kinetics])
    return _emit(report.verdict_report(net, v, path), fmt)


def cmd_transform(path: str, variant: str, fmt: str = "text", out: str | None = None,
                  fresh_products: bool = False) -> str:
    text = _read(path)
    if not has_kinetics(text):
        parse_network(text)  # surface parse errors first
        raise CommandError("transform needs a kinetics block", EXIT_PRECONDITION)
    ks = parse_kinetic_system(text)
    try:
        after, rec = cf_rm(ks, VARIANT_FLAGS[variant], fresh_products=fresh_products)
    except TransformError as exc:
        raise CommandError(str(exc), EXIT_PRECONDITION) from None
    rep = report.transform_report(ks, after, rec, check_transform_invariants(ks, after),
                                  verify_dynamic_equivalence(ks, after, rec), path)
    if out is not None:
        Path(out).write_text(rep["network"], encoding="utf-8")
        return _emit(rep, fmt)
    if fmt == "json":
        return _emit(rep, fmt)
    commented = "".join(f"# {line}\n" for line in report.render_text(rep).splitlines())
    return rep["network"] + commented


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crn", description="Fundamental decomposition analysis "
                                                         "of chemical reaction networks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="network file in .crn format, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add("analyze", "structural numbers and the F-decomposition")
    p = add("decompose", "one decomposition with its independence flags")
    p.add_argument("--kind", choices=tuple(KIND_FLAGS), required=True)
    p = add("transform", "reactant-multiple transform of a power-law system")
    p.add_argument("--variant", choices=tuple(VARIANT_FLAGS), required=True)
    p.add_argument("--out", help="write the transformed network here")
    p.add_argument("--fresh-products", action="store_true",
                   help="also require new product complexes to be new (plus variants)")
    p = add("verdict", "multistationarity verdict")
    p.add_argument("--kinetics", choices=tuple(KINETICS_FLAGS), required=True)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            text = cmd_analyze(args.file, args.format)
        elif args.command == "decompose":
            text = cmd_decompose(args.file, args.kind, args.format)
        elif args.command == "transform":
            text = cmd_transform(args.file, args.variant, args.format, args.out,
                                 args.fresh_products)
        else:
            text = cmd_verdict(args.file, args.kinetics, args.format)
    except ParseError as exc:
        print(f"crn: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CommandError as exc:
        print(f"crn: {exc}", file=sys.stderr)
        return exc.code
    except ClassificationError as exc:  # pragma: no cover - indicates a bug
        print(f"crn: internal error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

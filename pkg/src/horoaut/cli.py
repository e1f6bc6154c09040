"""Command-line surface.

    horoaut fan-roots FILE [--json|--text] [--oracle-radius N]
    horoaut horo-aut  FILE [--json|--text]
    horoaut bundle    FILE [--json|--text] [--check-pipeline]

FILE is a JSON document (see schema module); "-" reads stdin.  Exit codes:
0 success, 2 schema error, 3 validation error, 4 oracle or cross-path
mismatch.  On failure stdout stays empty and stderr names the violated
invariant.  Set HOROAUT_COLOR=never to force plain output.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import schema
from .bundles import bundle_report, to_horospherical_datum
from .errors import HoroautError, SchemaError
from .fan import (
    classify_roots,
    demazure_roots,
    demazure_roots_bruteforce,
    toric_aut_report,
    validate_fan,
)
from .horospherical import aut_report, extendable_fiber_roots, validate_datum

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_INVALID = 3
EXIT_MISMATCH = 4


class _Mismatch(Exception):
    """Oracle or cross-path disagreement (exit 4)."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _want_color() -> bool:
    if os.environ.get("HOROAUT_COLOR") == "never":
        return False
    return sys.stdout.isatty()


def _emit(lines: list[str]):
    if _want_color():
        styled = []
        for line in lines:
            line = line.replace(": true", ": \x1b[32mtrue\x1b[0m")
            line = line.replace(": false", ": \x1b[31mfalse\x1b[0m")
            styled.append(line)
        lines = styled
    sys.stdout.write("\n".join(lines) + "\n")


def _load(path: str, kind: str) -> schema.InputDocument:
    doc = schema.parse_text(_read(path))
    allowed = (kind,) if kind != "bundle" else ("bundle", "bundle_batch")
    if doc.kind not in allowed:
        raise SchemaError(f"expected a document of kind {allowed}, got {doc.kind!r}")
    return doc


def cmd_fan_roots(path: str, json_out: bool = False, oracle_radius: int | None = None) -> int:
    doc = _load(path, "fan")
    fan = validate_fan(schema.build_fan(doc.payload))
    roots = demazure_roots(fan)
    if oracle_radius is not None:
        brute = demazure_roots_bruteforce(fan, oracle_radius)
        if set(roots) != set(brute):
            raise _Mismatch(
                f"OracleMismatch: enumeration found {len(roots)} roots, "
                f"brute force at radius {oracle_radius} found {len(brute)}"
            )
    ss, _ = classify_roots(roots)
    report = toric_aut_report(fan)
    if json_out:
        sys.stdout.write(schema.dump_json(schema.fan_report_obj(fan, roots, ss, report)))
    else:
        _emit(schema.fan_report_text(fan, roots, ss, report))
    return EXIT_OK


def cmd_horo_aut(path: str, json_out: bool = False) -> int:
    doc = _load(path, "horospherical")
    datum = validate_datum(schema.build_datum(doc.payload))
    report = aut_report(datum)
    ext = extendable_fiber_roots(datum)
    if json_out:
        sys.stdout.write(schema.dump_json(schema.aut_report_obj(report, ext)))
    else:
        _emit(schema.aut_report_text(report, ext))
    return EXIT_OK


def _check_pipeline(spec, rep):
    """Cross-check the closed-form report against the general pipeline."""
    horo = aut_report(to_horospherical_datum(spec))
    mismatches = []
    if horo.dim_aut_total != rep.dim_aut_total:
        mismatches.append(f"dim {rep.dim_aut_total} vs {horo.dim_aut_total}")
    if horo.reductive != rep.reductive:
        mismatches.append("reductive flag")
    n_iso = sum(1 for p in rep.pair_roots if p.iso)
    if horo.n_semisimple != n_iso:
        mismatches.append(f"semisimple count {n_iso} vs {horo.n_semisimple}")
    unip = sorted(p.v_dim for p in rep.pair_roots if p.nef and not p.iso)
    if sorted(horo.unipotent_dims) != unip:
        mismatches.append(f"unipotent dims {unip} vs {sorted(horo.unipotent_dims)}")
    if mismatches:
        raise _Mismatch("PipelineMismatch: " + "; ".join(mismatches))


def cmd_bundle(path: str, json_out: bool = False, check_pipeline: bool = False) -> int:
    doc = _load(path, "bundle")
    if doc.kind == "bundle":
        spec = schema.build_bundle(doc.payload)
        rep = bundle_report(spec)
        if check_pipeline:
            _check_pipeline(spec, rep)
        if json_out:
            sys.stdout.write(schema.dump_json(schema.bundle_report_obj(rep)))
        else:
            _emit(schema.bundle_report_text(rep))
        return EXIT_OK
    # batch: everything is computed before anything is printed, so a failing
    # spec cannot leave a truncated stream behind
    specs = schema.build_bundle_batch(doc.payload)
    reports = []
    for spec in specs:
        rep = bundle_report(spec)
        if check_pipeline:
            _check_pipeline(spec, rep)
        reports.append(rep)
    for rep in reports:
        sys.stdout.write(schema.dump_json_line(schema.bundle_report_obj(rep)))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horoaut",
        description="automorphism groups of toric bundles over rational homogeneous spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("path", help="input JSON file, or - for stdin")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="machine-readable report")
        fmt.add_argument("--text", action="store_true", help="human-readable report (default)")

    p_fan = sub.add_parser("fan-roots", help="Demazure roots of a smooth complete fan")
    common(p_fan)
    p_fan.add_argument(
        "--oracle-radius",
        type=int,
        default=None,
        metavar="N",
        help="also run the brute-force oracle at this radius and assert equality",
    )

    p_horo = sub.add_parser("horo-aut", help="automorphism report for a horospherical datum")
    common(p_horo)

    p_bundle = sub.add_parser("bundle", help="report for a projectivized sum of line bundles")
    common(p_bundle)
    p_bundle.add_argument(
        "--check-pipeline",
        action="store_true",
        help="cross-check against the general horospherical pipeline",
    )
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "fan-roots":
            return cmd_fan_roots(args.path, args.json, args.oracle_radius)
        if args.command == "horo-aut":
            return cmd_horo_aut(args.path, args.json)
        return cmd_bundle(args.path, args.json, args.check_pipeline)
    except SchemaError as exc:
        print(f"SchemaError: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except _Mismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MISMATCH
    except HoroautError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

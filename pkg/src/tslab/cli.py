"""Command line interface: one subcommand per pipeline, JSON or text out.

Reports are deterministic: same input, same bytes.  The only
nondeterministic channel is the --verbose timing line on standard
error.  Exit codes: 0 success, 1 invalid input or violated
precondition, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import catalog as catalog_mod
from . import jsonio
from .ehrhart import ehrhart_polynomial, weight_polynomial
from .errors import InvalidInput, TslabError, exit_code_for
from .fano import chow_obstruction_report
from .hilbert import laurent_functionals, level_dimensions, span_compare
from .obstructions import (
    chow_level_test,
    f_ell,
    hilbert_weight_table,
    ono_vectors,
    toric_expansions,
)
from .polytope import Fan, LatticePolytope, measure, moment_polytope
from .projbundle import bundle_measures, chow_weight_bundle, f_ell_bundle

SUBCOMMANDS = ("ehrhart", "weights", "obstruct", "fano", "hilbert",
               "projbundle", "catalog")


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns exit codes."""

    def error(self, message):
        raise InvalidInput(f"usage: {message}")


@dataclass(frozen=True)
class RunReport:
    command: tuple[str, ...]
    input_digest: str | None
    results: dict
    warnings: tuple[str, ...]
    exit_code: int
    error: dict | None = None

    def to_object(self) -> dict:
        obj = {
            "command": list(self.command),
            "input_digest": self.input_digest,
            "results": self.results,
            "warnings": list(self.warnings),
            "exit_code": self.exit_code,
        }
        if self.error is not None:
            obj["error"] = self.error
        return obj


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tslab", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", metavar="|".join(SUBCOMMANDS))
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="path to a JSON input file")
        p.add_argument("--catalog", help="name of a built-in catalog entry")
        p.add_argument("--max-level", type=int, dest="max_level", default=None,
                       help="highest dilation/exponent probed")
        p.add_argument("--order", type=int, default=None,
                       help="number of Laurent coefficients")
        p.add_argument("--budget", type=int, default=None,
                       help="enumeration work cap (overrides TSL_BUDGET)")
        p.add_argument("--direction", default=None,
                       help="comma-separated rational direction, e.g. 1,1")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default=None,
                       help="write the report to this file instead of stdout")
        p.add_argument("--verbose", action="store_true",
                       help="timing information on standard error")
    return parser


# ---------------------------------------------------------------------------
# input plumbing


def _load_data(args) -> tuple[str, dict]:
    """(kind, raw JSON data) from --input or --catalog."""
    if args.input and args.catalog:
        raise InvalidInput("use exactly one of --input and --catalog")
    if args.catalog:
        entry = catalog_mod.lookup(args.catalog)
        return entry.kind, entry.data
    if args.input:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InvalidInput(f"cannot read {args.input}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{args.input} is not valid JSON: {exc}") from exc
        return jsonio.input_kind(data), data
    raise InvalidInput("an input is required: --input FILE or --catalog NAME")


def _load_polytope(args) -> tuple[LatticePolytope, dict]:
    kind, data = _load_data(args)
    if kind == "fan":
        return moment_polytope(jsonio.parse_fan(data)), data
    if kind == "polytope":
        return jsonio.parse_polytope(data), data
    raise InvalidInput(f"this subcommand needs a fan or polytope, got {kind}")


def _load_fan(args) -> tuple[Fan, dict]:
    kind, data = _load_data(args)
    if kind != "fan":
        raise InvalidInput(f"this subcommand needs a fan, got {kind}")
    return jsonio.parse_fan(data), data


def _load_bundle(args):
    kind, data = _load_data(args)
    if kind != "bundle":
        raise InvalidInput(f"this subcommand needs a bundle spec, got {kind}")
    return jsonio.parse_bundle(data), data


def _parse_direction(text: str, dim: int) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise InvalidInput(f"direction needs {dim} comma-separated entries")
    return tuple(jsonio.parse_rational(p, "direction entry") for p in parts)


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (results dict, raw input data or None)


def _cmd_ehrhart(args, warnings):
    P, data = _load_polytope(args)
    E = ehrhart_polynomial(P, args.budget)
    top = args.max_level if args.max_level is not None else P.dim + 2
    if top < 0:
        raise InvalidInput("--max-level must be nonnegative")
    results = {
        "dim": jsonio.render_int(P.dim),
        "polynomial": jsonio.encode_polynomial(E),
        "volume": jsonio.render_rational(measure(P).volume),
        "values": [jsonio.render_int(int(E(k))) for k in range(top + 1)],
    }
    return results, data


def _cmd_weights(args, warnings):
    P, data = _load_polytope(args)
    s = weight_polynomial(P, args.budget)
    mes = measure(P)
    results = {
        "dim": jsonio.render_int(P.dim),
        "weight_polynomial": jsonio.encode_vector_polynomial(s),
        "moment": jsonio.render_vector(mes.moment),
        "barycenter": jsonio.render_vector(mes.barycenter),
        "volume": jsonio.render_rational(mes.volume),
    }
    return results, data


def _cmd_obstruct(args, warnings):
    P, data = _load_polytope(args)
    report = ono_vectors(P, args.budget)
    results = {"dim": jsonio.render_int(P.dim)}
    results.update(jsonio.encode_obstruction_report(report))
    if args.max_level is not None:
        if args.max_level < 1:
            raise InvalidInput("--max-level must be at least 1")
        results["level_tests"] = [
            {"level": jsonio.render_int(i),
             "passes": chow_level_test(P, i, args.budget)}
            for i in range(1, args.max_level + 1)
        ]
    if args.direction is not None:
        c = _parse_direction(args.direction, P.dim)
        e = toric_expansions(P, c, args.budget)
        results["direction"] = jsonio.render_vector(c)
        results["expansion"] = jsonio.encode_expansion_pair(e)
        results["f_ell"] = jsonio.render_vector(
            [f_ell(e, ell) for ell in range(1, P.dim + 1)])
        if args.order is not None:
            if args.order < 1:
                raise InvalidInput("--order must be at least 1")
            table = hilbert_weight_table(e, args.order, args.order)
            results["hilbert_weight"] = jsonio.encode_hilbert_weight_report(table)
    return results, data


def _cmd_fano(args, warnings):
    fan, data = _load_fan(args)
    report = chow_obstruction_report(fan, args.order, args.budget)
    return jsonio.encode_fano_report(report), data


def _cmd_hilbert(args, warnings):
    P, data = _load_polytope(args)
    top = args.max_level if args.max_level is not None else P.dim + 2
    if top < 0:
        raise InvalidInput("--max-level must be nonnegative")
    results = {
        "dim": jsonio.render_int(P.dim),
        "level_dimensions": [jsonio.render_int(n)
                             for n in level_dimensions(P, top, args.budget)],
        "functionals": [jsonio.render_vector(v)
                        for v in laurent_functionals(P, args.order, args.budget)],
    }
    try:
        ono = ono_vectors(P, args.budget)
    except InvalidInput as exc:
        warnings.append(f"span comparison skipped: {exc}")
    else:
        functionals = laurent_functionals(P, args.order, args.budget)
        results["span_check"] = jsonio.encode_span(
            span_compare(functionals, ono.vectors))
    return results, data


def _cmd_projbundle(args, warnings):
    spec, data = _load_bundle(args)
    top = args.max_level if args.max_level is not None else 5
    if top < 1:
        raise InvalidInput("--max-level must be at least 1")
    verdict = f_ell_bundle(spec)
    warnings.extend(verdict.caveats)
    results = {
        "total_rank": jsonio.render_int(spec.total_rank),
        "measures": jsonio.encode_bundle_measures(bundle_measures(spec)),
        "chow_weights": [
            {"k": jsonio.render_int(k),
             "value": jsonio.render_rational(chow_weight_bundle(spec, k))}
            for k in range(1, top + 1)
        ],
        "f_ell": jsonio.encode_f_ell(verdict),
    }
    return results, data


def _cmd_catalog(args, warnings):
    if args.catalog:
        entry = catalog_mod.lookup(args.catalog)
        results = {
            "name": entry.name,
            "kind": entry.kind,
            "provenance": entry.provenance,
            "data": entry.data,
        }
        return results, entry.data
    results = {
        "entries": [
            {"name": e.name, "kind": e.kind, "provenance": e.provenance}
            for e in catalog_mod.load_catalog()
        ]
    }
    return results, None


_HANDLERS = {
    "ehrhart": _cmd_ehrhart,
    "weights": _cmd_weights,
    "obstruct": _cmd_obstruct,
    "fano": _cmd_fano,
    "hilbert": _cmd_hilbert,
    "projbundle": _cmd_projbundle,
    "catalog": _cmd_catalog,
}


# ---------------------------------------------------------------------------
# text rendering


def _render_text_into(obj, lines, indent):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key in sorted(obj):
            value = obj[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                _render_text_into(value, lines, indent + 1)
            else:
                lines.append(f"{pad}{key}: {_scalar_text(value)}")
    elif isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            lines.append(pad + "[" + ", ".join(_scalar_text(x) for x in obj) + "]")
        else:
            for x in obj:
                if isinstance(x, (dict, list)):
                    lines.append(pad + "-")
                    _render_text_into(x, lines, indent + 1)
                else:
                    lines.append(f"{pad}- {_scalar_text(x)}")
    else:
        lines.append(pad + _scalar_text(obj))


def _scalar_text(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def render_report(report: RunReport, fmt: str) -> str:
    if fmt == "json":
        return jsonio.canonical_json(report.to_object())
    lines: list[str] = []
    _render_text_into(report.to_object(), lines, 0)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# driver


def run(argv, stdout=None, stderr=None) -> RunReport:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    argv = [str(a) for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidInput as exc:
        print(f"error: {exc}", file=err)
        return RunReport(tuple(argv), None, {}, (), 1,
                         {"type": "InvalidInput", "message": str(exc)})
    if args.subcommand is None:
        print("error: a subcommand is required "
              f"({', '.join(SUBCOMMANDS)})", file=err)
        return RunReport(tuple(argv), None, {}, (), 1,
                         {"type": "InvalidInput",
                          "message": "a subcommand is required"})

    started = time.perf_counter()
    warnings: list[str] = []
    digest = None
    try:
        results, data = _HANDLERS[args.subcommand](args, warnings)
        if data is not None:
            digest = jsonio.input_digest(data)
        report = RunReport(tuple(argv), digest, results, tuple(warnings), 0)
    except TslabError as exc:
        report = RunReport(tuple(argv), digest, {}, tuple(warnings),
                           exit_code_for(exc),
                           {"type": type(exc).__name__, "message": str(exc)})
    except Exception as exc:  # invariant violation: report, exit 2
        report = RunReport(tuple(argv), digest, {}, tuple(warnings), 2,
                           {"type": type(exc).__name__, "message": str(exc)})

    text = render_report(report, args.format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=err)
            return RunReport(report.command, report.input_digest,
                             report.results, report.warnings, 1, report.error)
    else:
        out.write(text)
    if args.verbose:
        print(f"elapsed: {time.perf_counter() - started:.3f}s", file=err)
    return report


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv).exit_code

"""Command-line front end.

The COMMANDS table below drives both the argument parser and the manual
page printed by ``milnor-hodge --manual``.

Exit status: 0 success, 1 verification failure, 2 usage or JSON parse
error, 3 schema violation, 4 violated mathematical precondition.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from . import hodge, projective, strata, verify
from .errors import PreconditionError, SchemaError
from .kernel import LaurentPolyY, as_rational, format_rational, rational_to_json
from .spectrum import (Spectrum, brieskorn_pham, milnor_number, quasi_homogeneous,
                       spectrum_from_json)

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_SCHEMA, EXIT_MATH = 0, 1, 2, 3, 4
ORDER_ENV = "MILNOR_HODGE_SERIES_ORDER"

_SING = "singularity"

COMMON_OPTIONS = [
    (("--json",), dict(action="store_true", help="emit JSON instead of text")),
    (("--y-eval",), dict(metavar="Y1,Y2,...", help="also print specializations at these rational y values")),
    (("--input",), dict(metavar="FILE|JSON", help="input file, or an inline JSON document")),
]

SINGULARITY_OPTIONS = [
    (("--brieskorn-pham",), dict(metavar="W1,W2,...", help="exponents of x_1^w_1 + ... + x_m^w_m")),
    (("--quasi-homogeneous",), dict(metavar="Q1,Q2,...", help="rational weights in (0, 1/2]")),
]

COMMANDS = [
    {
        "name": "spectrum",
        "summary": "Hodge spectrum of an isolated singularity",
        "options": SINGULARITY_OPTIONS,
        "input": _SING,
    },
    {
        "name": "chi-y",
        "summary": "chi_y-polynomials of the Milnor fibre cohomology",
        "options": SINGULARITY_OPTIONS,
        "input": _SING,
    },
    {
        "name": "hodge-table",
        "summary": "Hodge numbers h^{p,q} of the middle Milnor fibre cohomology",
        "options": SINGULARITY_OPTIONS,
        "input": _SING,
    },
    {
        "name": "signature",
        "summary": "Milnor fibre signature by Steenbrink's formula (--input may also be a Hodge table)",
        "options": SINGULARITY_OPTIONS,
        "input": _SING,
    },
    {
        "name": "du-bois",
        "summary": "test Gr^0_F H^n(F) = 0, the necessary condition for an isolated Du Bois point",
        "options": SINGULARITY_OPTIONS,
        "input": _SING,
    },
    {
        "name": "milnor-class",
        "summary": "Milnor-Hirzebruch class of isolated singularities (--input) or of a smooth singular locus",
        "options": SINGULARITY_OPTIONS + [
            (("--ambient-dim",), dict(type=int, metavar="N", help="dimension n of the hypersurface")),
            (("--locus-dim",), dict(type=int, metavar="R", help="dimension r of the smooth singular locus")),
            (("--locus-symbol",), dict(default="[Sigma]", help="symbol for the class of the locus")),
        ],
        "input": "points file: {\"singularities\": [{\"name\", <descriptor>, \"ih_cone_chi\"?}]}",
    },
    {
        "name": "stratified",
        "summary": "all class formulas for a stratification file, with a consistency report",
        "options": [],
        "input": "stratification file (required)",
    },
    {
        "name": "projective",
        "summary": "chi_y of a degree-d hypersurface in P^{n+1}, smooth and with isolated singularities",
        "options": [
            (("--degree",), dict(type=int, required=True, metavar="D")),
            (("--dim",), dict(type=int, required=True, metavar="N")),
            (("--sing",), dict(metavar="FILE|JSON", help="list of singular points with descriptors")),
        ],
        "input": None,
    },
    {
        "name": "verify",
        "summary": "run the bundled golden and property suites",
        "options": [
            (("--suite",), dict(action="append", choices=list(verify.SUITES), help="run only this suite (repeatable)")),
        ],
        "input": None,
    },
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnor-hodge",
        description="Exact Hodge-theoretic invariants of hypersurface singularities.",
    )
    parser.add_argument("--manual", action="store_true", help="print the manual page and exit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    for cmd in COMMANDS:
        p = sub.add_parser(cmd["name"], help=cmd["summary"], description=cmd["summary"])
        for flags, kwargs in COMMON_OPTIONS + cmd["options"]:
            p.add_argument(*flags, **kwargs)
    return parser


def manual() -> str:
    lines = [
        "MILNOR-HODGE(1)",
        "",
        "NAME",
        "    milnor-hodge - exact Hodge-theoretic invariants of hypersurface singularities",
        "",
        "SYNOPSIS",
        "    milnor-hodge COMMAND [--json] [--y-eval Y1,Y2,...] [--input FILE|JSON] [options]",
        "",
        "COMMON OPTIONS",
    ]
    for flags, kwargs in COMMON_OPTIONS:
        lines.append(f"    {', '.join(flags)} {kwargs.get('metavar', '')}".rstrip())
        lines.append(f"        {kwargs['help']}")
    lines += ["", "COMMANDS"]
    for cmd in COMMANDS:
        lines.append(f"    {cmd['name']}")
        lines.append(f"        {cmd['summary']}")
        if cmd["input"] == _SING:
            lines.append("        input: {\"brieskorn_pham\": [..]} | {\"quasi_homogeneous\": [..]} |"
                         " {\"explicit_spectrum\": {..}, \"num_vars\": m}")
        elif cmd["input"]:
            lines.append(f"        input: {cmd['input']}")
        for flags, kwargs in cmd["options"]:
            meta = kwargs.get("metavar", "")
            desc = kwargs.get("help", "")
            if "choices" in kwargs:
                desc += f" ({', '.join(kwargs['choices'])})"
            lines.append(f"        {', '.join(flags)} {meta}".rstrip() + (f"  {desc}" if desc else ""))
    lines += [
        "",
        "ENVIRONMENT",
        f"    {ORDER_ENV}",
        "        raise the power-series truncation used by `projective` (diagnostics only;",
        "        results do not depend on it above the required minimum)",
        "",
        "EXIT STATUS",
        "    0 success; 1 a verification suite failed; 2 usage or JSON parse error;",
        "    3 schema violation; 4 mathematical precondition violated",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

class UsageError(Exception):
    pass


def load_json(arg: str):
    """Parse ``arg`` as inline JSON if it looks like JSON, else read a file."""
    text = arg
    if not arg.lstrip().startswith(("{", "[")):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {arg}: {exc}") from exc


def _split(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def parse_rationals(text: str) -> list[Fraction]:
    return [as_rational(t) for t in _split(text)]


def parse_ints(text: str) -> list[int]:
    try:
        return [int(t) for t in _split(text)]
    except ValueError as exc:
        raise SchemaError(f"expected comma-separated integers, got {text!r}") from exc


def singularity_from_args(args) -> Spectrum:
    given = [x for x in (args.brieskorn_pham, args.quasi_homogeneous, args.input) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --brieskorn-pham, --quasi-homogeneous, --input")
    if args.brieskorn_pham is not None:
        return brieskorn_pham(parse_ints(args.brieskorn_pham))
    if args.quasi_homogeneous is not None:
        return quasi_homogeneous(parse_rationals(args.quasi_homogeneous))
    return spectrum_from_json(load_json(args.input))


def named_singularities(obj) -> list[tuple[str, Spectrum, object]]:
    """Accept a list of descriptors or {"singularities": [...]}; each entry
    may carry "name" and "ih_cone_chi"."""
    if isinstance(obj, Mapping):
        obj = obj.get("singularities")
    if not isinstance(obj, list):
        raise SchemaError("expected a list of singular points or {\"singularities\": [...]}")
    out = []
    for i, entry in enumerate(obj):
        if not isinstance(entry, Mapping):
            raise SchemaError(f"singular point {i} must be an object")
        entry = dict(entry)
        name = entry.pop("name", f"x{i + 1}")
        if not isinstance(name, str):
            raise SchemaError(f"name of singular point {i} must be a string")
        ih = entry.pop("ih_cone_chi", None)
        out.append((name, spectrum_from_json(entry), None if ih is None else LaurentPolyY.from_json(ih)))
    return out


def series_order(n: int) -> int:
    minimum = projective.minimal_order(n)
    raw = os.environ.get(ORDER_ENV)
    if not raw:
        return minimum
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from exc
    return max(value, minimum)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _evals(poly: LaurentPolyY, ys: list[Fraction]) -> dict[str, Fraction]:
    return {format_rational(y): poly.evaluate(y) for y in ys}


def _poly_json(poly: LaurentPolyY, ys) -> dict:
    out = {"value": poly.to_json(), "text": str(poly)}
    if ys:
        out["at"] = {k: rational_to_json(v) for k, v in _evals(poly, ys).items()}
    return out


def _poly_lines(label: str, poly: LaurentPolyY, ys) -> list[str]:
    lines = [f"{label} = {poly}"]
    for k, v in (_evals(poly, ys) if ys else {}).items():
        lines.append(f"  {label} at y={k}: {format_rational(v)}")
    return lines


def _class_json(c: strata.StratifiedClass, ys) -> dict:
    out = {"value": c.to_json(), "text": str(c)}
    if ys:
        out["at"] = {format_rational(y): {s: rational_to_json(v) for s, v in c.specialize(y).items()}
                     for y in ys}
    return out


def _class_lines(label: str, c: strata.StratifiedClass, ys) -> list[str]:
    lines = [f"{label} = {c}"]
    for y in ys or []:
        spec = c.specialize(y)
        body = " + ".join(f"{format_rational(v)}*{s}" for s, v in spec.items()) or "0"
        lines.append(f"  {label} at y={format_rational(y)}: {body}")
    return lines


# ---------------------------------------------------------------------------
# commands: each returns (json_payload, text_lines, exit_status)
# ---------------------------------------------------------------------------

def cmd_spectrum(args, ys):
    sp = singularity_from_args(args)
    data = {"spectrum": sp.sp.to_json(), "text": str(sp.sp), "num_vars": sp.num_vars,
            "milnor_number": milnor_number(sp)}
    return data, [str(sp.sp)], EXIT_OK


def cmd_chi_y(args, ys):
    sp = singularity_from_args(args)
    classes = [hodge.chi_y_of_spectrum(sp), hodge.reduced_total_chi(sp), hodge.total_chi(sp)]
    data = {c.kind: _poly_json(c.value, ys) for c in classes}
    lines = []
    for c in classes:
        lines += _poly_lines(c.kind, c.value, ys)
    return data, lines, EXIT_OK


def cmd_hodge_table(args, ys):
    table = hodge.hodge_table(singularity_from_args(args))
    lines = [f"n = {table.n}"]
    for e in table.entries:
        tag = "unipotent" if e.unipotent else "non-unipotent"
        lines.append(f"h^{{{e.p},{e.q}}} = {e.dim}  (weight {e.weight}, {tag})")
    return table.to_json(), lines, EXIT_OK


def cmd_signature(args, ys):
    if args.input is not None and args.brieskorn_pham is None and args.quasi_homogeneous is None:
        obj = load_json(args.input)
        if isinstance(obj, Mapping) and "entries" in obj:
            sigma = hodge.signature_steenbrink(hodge.HodgeTable.from_json(obj))
            return {"signature": rational_to_json(sigma)}, [format_rational(sigma)], EXIT_OK
    sp = singularity_from_args(args)
    sigma = hodge.signature_steenbrink(hodge.hodge_table(sp))
    data = {
        "signature": rational_to_json(sigma),
        "chi_1": rational_to_json(hodge.chi_one(sp)),
        "rhm_signature_check": hodge.rhm_signature_check(sp),
        "link_rational_homology_sphere": hodge.link_is_rational_homology_sphere(sp),
    }
    return data, [format_rational(sigma)], EXIT_OK


def cmd_du_bois(args, ys):
    ok = hodge.du_bois_test(singularity_from_args(args))
    lines = ["true" if ok else "false"]
    if ok:
        lines.append(f"note: {hodge.DU_BOIS_NOTE}")
    return {"vanishing_gr0": ok, "note": hodge.DU_BOIS_NOTE}, lines, EXIT_OK


def cmd_milnor_class(args, ys):
    if args.ambient_dim is not None or args.locus_dim is not None:
        if args.ambient_dim is None or args.locus_dim is None:
            raise UsageError("--ambient-dim and --locus-dim go together")
        transversal = singularity_from_args(args)
        cls = strata.mt_smooth_locus(transversal, args.ambient_dim, args.locus_dim,
                                     strata.StratifiedClass.of(args.locus_symbol))
        return {"MT_y": _class_json(cls, ys)}, _class_lines("MT_y", cls, ys), EXIT_OK
    if args.input is None:
        raise UsageError("milnor-class needs --input, or a transversal singularity with --ambient-dim/--locus-dim")
    points = named_singularities(load_json(args.input))
    mt = strata.mt_isolated([(f"[{name}]", sp) for name, sp, _ in points])
    data = {"MT_y": _class_json(mt, ys)}
    lines = _class_lines("MT_y", mt, ys)
    if points and all(ih is not None for _, _, ih in points):
        mit = strata.mit_isolated([(f"[{name}]", sp, ih) for name, sp, ih in points])
        data["MIT_y"] = _class_json(mit, ys)
        lines += _class_lines("MIT_y", mit, ys)
    return data, lines, EXIT_OK


def cmd_stratified(args, ys):
    if args.input is None:
        raise UsageError("stratified needs --input")
    s = strata.stratification_from_json(load_json(args.input))
    status = EXIT_OK
    data: dict = {}
    lines: list[str] = []
    computations = [
        ("MT_y direct", strata.mt_stratified_direct),
        ("MT_y via ITHat", strata.mt_stratified_ic),
        ("T_y - IT_y", strata.t_minus_it),
        ("MIT_y", strata.mit_stratified),
    ]
    try:
        hats = strata.it_hat(s)
        data["ITHat"] = {name: _class_json(c, ys) for name, c in hats.items()}
        for name, c in hats.items():
            lines += _class_lines(f"ITHat({name})", c, ys)
    except PreconditionError as exc:
        data["ITHat"] = {"error": str(exc)}
        lines.append(f"ITHat: error: {exc}")
        status = EXIT_MATH
    for label, fn in computations:
        try:
            c = fn(s)
        except PreconditionError as exc:
            data[label] = {"error": str(exc)}
            lines.append(f"{label}: error: {exc}")
            status = EXIT_MATH
            continue
        data[label] = _class_json(c, ys)
        lines += _class_lines(label, c, ys)
    report = strata.consistency_report(s)
    data["consistency"] = report
    lines.append("consistency:")
    for key, val in report.items():
        lines.append(f"  {key}: {'n/a' if val is None else str(val).lower()}")
    return data, lines, status


def cmd_projective(args, ys):
    sings = []
    if args.sing is not None:
        sings = [(name, sp) for name, sp, _ in named_singularities(load_json(args.sing))]
    h = projective.ProjectiveHypersurface(args.degree, args.dim, tuple(sings))
    order = series_order(args.dim)
    smooth = projective.chi_y_virtual(args.degree, args.dim, order)
    singular = projective.chi_y_singular(h, order)
    deg = projective.degree_mt(h)
    ys = ys or [Fraction(-1), Fraction(0), Fraction(1)]
    data = {"chi_y(X_t)": _poly_json(smooth, ys), "chi_y(X)": _poly_json(singular, ys),
            "deg MT_y": _poly_json(deg, ys)}
    lines = _poly_lines("chi_y(X_t)", smooth, ys) + _poly_lines("chi_y(X)", singular, ys) \
        + _poly_lines("deg MT_y", deg, ys)
    return data, lines, EXIT_OK


def cmd_verify(args, ys):
    results = verify.run_all(args.suite)
    lines, data = [], []
    for r in results:
        lines.append(r.summary())
        lines += [f"  failed: {f}" for f in r.failures]
        lines += [f"  expected deviation: {d}" for d in r.deviations]
        data.append({"suite": r.name, "passed": r.passed, "failed": len(r.failures),
                     "failures": r.failures, "expected_deviations": r.deviations})
    ok = all(r.ok for r in results)
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} suites passed")
    return {"suites": data, "ok": ok}, lines, EXIT_OK if ok else EXIT_VERIFY


HANDLERS = {
    "spectrum": cmd_spectrum,
    "chi-y": cmd_chi_y,
    "hodge-table": cmd_hodge_table,
    "signature": cmd_signature,
    "du-bois": cmd_du_bois,
    "milnor-class": cmd_milnor_class,
    "stratified": cmd_stratified,
    "projective": cmd_projective,
    "verify": cmd_verify,
}


def _normalize_argv(argv: list[str]) -> list[str]:
    # "--y-eval -1,0,1" would otherwise be read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--y-eval", "--quasi-homogeneous", "--brieskorn-pham"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    if args.manual:
        out.write(manual())
        return EXIT_OK
    if not args.command:
        parser.print_usage(err)
        return EXIT_PARSE
    try:
        ys = parse_rationals(args.y_eval) if args.y_eval else []
        data, lines, status = HANDLERS[args.command](args, ys)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except SchemaError as exc:
        err.write(f"schema error: {exc}\n")
        return EXIT_SCHEMA
    except PreconditionError as exc:
        err.write(f"precondition violated: {exc}\n")
        return EXIT_MATH
    if args.json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

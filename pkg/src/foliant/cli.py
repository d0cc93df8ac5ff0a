"""Command-line front end.

Subcommands: analyze, classify, weights, generate, catalog.  Reports
are emitted as JSON (byte-identical across runs for fixed inputs, seed
and budget) or as text; timing appears in text mode only, so the JSON
stays deterministic.

Exit codes: 0 success, 2 parse error, 3 point not singular,
4 degenerate foliation (radial multiple or non-isolated singularities),
5 family condition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional

from . import diagram, families, stability
from .errors import (FamilyConditionError, FoliantError, MixedDegreeError,
                     NotIsolatedError, NotSingularError, NullFoliationError,
                     PolynomialSyntaxError)
from .foliation import (Frame, ProjPoint, VectorField, format_vector_field,
                        is_singular_at, parse_vector_field, z_reduce)
from .localgeom import INFINITE, singularity_report
from .stability import (DestabilizingPair, HullEvidence, NormalFormMatch,
                        SubspaceMembership, classify, hull_position,
                        weight_support)

EXIT_PARSE = 2
EXIT_NOT_SINGULAR = 3
EXIT_DEGENERATE = 4
EXIT_FAMILY = 5


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def _frame_json(frame: Frame) -> List[List[str]]:
    return [[_frac_str(v) for v in row] for row in frame.matrix]


def _certificate_json(cert) -> Dict:
    if isinstance(cert, DestabilizingPair):
        return {"kind": "DestabilizingPair",
                "frame": _frame_json(cert.frame),
                "lambda": list(cert.lam.r)}
    if isinstance(cert, SubspaceMembership):
        return {"kind": "SubspaceMembership",
                "component": cert.component,
                "frame": _frame_json(cert.frame),
                "lambda": list(cert.lam.r)}
    if isinstance(cert, NormalFormMatch):
        return {"kind": "NormalFormMatch",
                "rule": cert.rule,
                "params": {k: _frac_str(v) for k, v in cert.params},
                "frame": _frame_json(cert.frame),
                "conditions": list(cert.conditions)}
    if isinstance(cert, HullEvidence):
        return {"kind": "HullEvidence",
                "frames_tested": cert.frames_tested,
                "boundary": cert.boundary,
                "interior": cert.interior}
    raise TypeError(f"unknown certificate {cert!r}")


def _read_field(path: str) -> VectorField:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _CliFailure(EXIT_PARSE, f"cannot read {path}: {exc}")
    try:
        return parse_vector_field(text)
    except (PolynomialSyntaxError, MixedDegreeError) as exc:
        raise _CliFailure(EXIT_PARSE, f"parse error in {path}: {exc}")
    except NullFoliationError as exc:
        raise _CliFailure(EXIT_DEGENERATE, f"degenerate input: {exc}")


def _parse_point(text: str) -> ProjPoint:
    parts = text.split(",")
    if len(parts) != 3:
        raise _CliFailure(EXIT_PARSE, "point must be three comma-separated rationals")
    try:
        coords = [Fraction(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise _CliFailure(EXIT_PARSE, f"bad point {text!r}")
    try:
        return ProjPoint(tuple(coords))
    except ValueError as exc:
        raise _CliFailure(EXIT_PARSE, str(exc))


def _base_report(x: VectorField) -> Dict:
    try:
        fol = z_reduce(x)
    except NullFoliationError as exc:
        raise _CliFailure(EXIT_DEGENERATE, str(exc))
    return {
        "input": format_vector_field(fol.rep),
        "degree": fol.degree,
    }


def _singularity_json(x: VectorField, point: ProjPoint) -> Dict:
    try:
        rep = singularity_report(x, point)
    except NotSingularError as exc:
        raise _CliFailure(EXIT_NOT_SINGULAR, str(exc))
    except NotIsolatedError as exc:
        raise _CliFailure(EXIT_DEGENERATE, str(exc))
    return {
        "point": str(rep.point),
        "multiplicity": rep.multiplicity,
        "milnor": "infinite" if rep.milnor is INFINITE else rep.milnor,
        "unique": rep.unique,
    }


def _auto_point(x: VectorField) -> Optional[ProjPoint]:
    from .foliation import E0, E1, E2

    for p in (E0, E1, E2):
        if is_singular_at(x, p):
            return p
    return None


def _emit(report: Dict, as_json: bool, started: float) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        _emit_text(report, started)


def _emit_text(report: Dict, started: float) -> None:
    print(f"input: {report['input']}")
    print(f"degree: {report['degree']}")
    sing = report.get("singularity")
    if sing:
        print(f"singular point: {sing['point']}")
        print(f"  multiplicity: {sing['multiplicity']}")
        print(f"  milnor: {sing['milnor']}")
        print(f"  unique: {sing['unique']}")
    verdict = report.get("verdict")
    if verdict:
        print(f"verdict: {verdict['class']}")
        cert = verdict["certificate"]
        print(f"  certificate: {cert['kind']}")
        if "lambda" in cert:
            print(f"  lambda: {tuple(cert['lambda'])}")
        if "component" in cert:
            print(f"  component: {cert['component']}")
        if "rule" in cert:
            print(f"  rule: {cert['rule']}")
            for k, v in sorted(cert.get("params", {}).items()):
                print(f"    {k} = {v}")
        if verdict.get("notes"):
            print(f"  notes: {verdict['notes']}")
    weights = report.get("weights")
    if weights:
        print(f"hull: {weights['hull']}")
        if weights.get("separating"):
            print(f"separating: {tuple(weights['separating'])}")
        for line in weights["classes"]:
            print(f"  {line}")
    if report.get("written"):
        print(f"written: {report['written']}")
    print(f"time: {int((time.time() - started) * 1000)} ms")


def _seed_from_env(cli_seed: int) -> int:
    env = os.environ.get("FOLIANT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _CliFailure(EXIT_PARSE, f"bad FOLIANT_SEED {env!r}")
    return cli_seed


def cmd_analyze(args) -> int:
    started = time.time()
    x = _read_field(args.file)
    report = _base_report(x)
    point = _parse_point(args.point) if args.point else _auto_point(x)
    report["singularity"] = _singularity_json(x, point) if point else None
    _emit(report, args.json, started)
    return 0


def cmd_classify(args) -> int:
    started = time.time()
    x = _read_field(args.file)
    report = _base_report(x)
    point = _parse_point(args.point) if args.point else _auto_point(x)
    report["singularity"] = _singularity_json(x, point) if point else None
    seed = _seed_from_env(args.seed)
    try:
        verdict = classify(x, point, budget=args.budget, seed=seed)
    except NotSingularError as exc:
        raise _CliFailure(EXIT_NOT_SINGULAR, str(exc))
    except (NullFoliationError, NotIsolatedError) as exc:
        raise _CliFailure(EXIT_DEGENERATE, str(exc))
    report["verdict"] = {
        "class": verdict.verdict,
        "certificate": _certificate_json(verdict.certificate),
        "notes": verdict.notes,
    }
    _emit(report, args.json, started)
    return 0


def cmd_weights(args) -> int:
    started = time.time()
    x = _read_field(args.file)
    report = _base_report(x)
    fol = z_reduce(x)
    support = weight_support(fol)
    pos = hull_position(support)
    report["weights"] = {
        "hull": pos.kind,
        "separating": list(pos.separating.r) if pos.separating else None,
        "classes": diagram.dump_lines(support),
    }
    if args.svg:
        svg = diagram.render_svg(fol)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
        report["written"] = args.svg
    _emit(report, args.json, started)
    if args.dump and args.json:
        pass  # classes already inside the JSON report
    return 0


_FAMILY_PARAMS = {
    "ss": ("b02", "b21", "b12", "c12"),
    "stable-m2": ("a10", "a01", "a20", "a11", "a02", "a30", "a21", "a12",
                  "a03"),
    "unstable-m2": ("b11", "b02", "b21", "b12", "b03"),
    "mult3": ("a20", "a11", "a02", "a30", "a21", "a12", "a03",
              "b30", "b21", "b12", "b03", "c30"),
}


def _generate_field(name: str, params: Dict[str, Fraction]) -> VectorField:
    if name.startswith("catalog:"):
        try:
            return families.catalog_entry(name.split(":", 1)[1]).field
        except KeyError as exc:
            raise _CliFailure(EXIT_PARSE, str(exc))
    if name not in _FAMILY_PARAMS:
        raise _CliFailure(
            EXIT_PARSE,
            f"unknown family {name!r}; expected one of "
            f"{', '.join(_FAMILY_PARAMS)} or catalog:<name>")
    expected = _FAMILY_PARAMS[name]
    missing = [k for k in expected if k not in params and name != "mult3"]
    if missing:
        raise _CliFailure(EXIT_PARSE, f"missing parameters: {', '.join(missing)}")
    unknown = [k for k in params if k not in expected]
    if unknown:
        raise _CliFailure(EXIT_PARSE, f"unknown parameters: {', '.join(unknown)}")
    if name == "ss":
        return families.ss_family(families.SSParams(**params))
    if name == "stable-m2":
        return families.stable_family(families.StableParams(**params))
    if name == "unstable-m2":
        return families.unstable_m2_family(families.UnstableM2Params(**params))
    a = {k: v for k, v in params.items() if k.startswith("a")}
    b = {k: v for k, v in params.items() if k.startswith("b")}
    return families.mult3_family(a, b, params.get("c30", Fraction(0)))


def cmd_generate(args) -> int:
    started = time.time()
    params: Dict[str, Fraction] = {}
    for item in args.param or []:
        if "=" not in item:
            raise _CliFailure(EXIT_PARSE, f"bad --param {item!r}, expected k=v")
        k, v = item.split("=", 1)
        try:
            params[k.strip()] = Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise _CliFailure(EXIT_PARSE, f"bad rational {v!r} for {k!r}")
    try:
        x = _generate_field(args.family, params)
    except FamilyConditionError as exc:
        raise _CliFailure(EXIT_FAMILY, f"{exc.condition} violated: {exc}")
    report = _base_report(x)
    point = _auto_point(x)
    report["singularity"] = _singularity_json(x, point) if point else None
    text = format_vector_field(x) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        report["written"] = args.out
    else:
        report["field"] = text.strip()
    _emit(report, args.json, started)
    return 0


def cmd_catalog(args) -> int:
    started = time.time()
    entries = []
    for e in families.catalog():
        entries.append({
            "name": e.name,
            "degree": e.field.degree,
            "multiplicity": e.multiplicity,
            "milnor": e.milnor,
            "verdict": e.verdict,
        })
    report = {"catalog": entries}
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for e in entries:
            print(f"{e['name']}: degree {e['degree']}, multiplicity "
                  f"{e['multiplicity']}, milnor {e['milnor']}, expected "
                  f"{e['verdict']}")
        print(f"time: {int((time.time() - started) * 1000)} ms")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="foliant",
        description="Exact invariants and stability analysis for plane "
                    "foliations given by homogeneous vector fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("file", help="vector-field file")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON report")
        fmt.add_argument("--text", dest="json", action="store_false",
                         help="text report (default)")
        p.set_defaults(json=False)

    p = sub.add_parser("analyze", help="multiplicity and Milnor number")
    add_io(p)
    p.add_argument("--point", help="singular point p0,p1,p2")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="stability classification")
    add_io(p)
    p.add_argument("--point", help="singular point p0,p1,p2")
    p.add_argument("--budget", type=int, default=300,
                   help="frame trial budget (default 300)")
    p.add_argument("--seed", type=int, default=0,
                   help="search seed (FOLIANT_SEED overrides)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("weights", help="weight support and hull position")
    add_io(p)
    p.add_argument("--svg", help="write an SVG diagram to this path")
    p.add_argument("--dump", action="store_true",
                   help="include the plain-text lattice dump")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("generate", help="construct a family member")
    p.add_argument("family", help="ss | stable-m2 | unstable-m2 | mult3 | "
                                  "catalog:<name>")
    p.add_argument("--param", action="append", metavar="K=V",
                   help="family parameter (repeatable)")
    p.add_argument("--out", help="write the vector-field file here")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(json=False, func=cmd_generate)

    p = sub.add_parser("catalog", help="list the example catalog")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(json=False, func=cmd_catalog)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except _CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except FoliantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())

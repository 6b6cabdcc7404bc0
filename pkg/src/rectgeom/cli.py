"""Command-line front end: verify claims, print the formula catalog, emit figures."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .figures import figure_doc, render_svg
from .formulas import TRANSCRIPTIONS
from .theorems import (
    CLAIMS,
    ClaimId,
    RectConfig,
    TwoRectConfig,
    check_claim,
    formula_catalog,
    verify_sampled,
    verify_symbolic,
)

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
CLAIM_CHOICES = [c.value for c in ClaimId]


def exit_code(statuses) -> int:
    statuses = list(statuses)
    if "refuted" in statuses:
        return EXIT_REFUTED
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _params(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def run_verify(args, out=None) -> int:
    out = out or sys.stdout
    claims = list(ClaimId) if args.claim == "all" else [ClaimId(args.claim)]
    modes = ["symbolic", "sampled"] if args.mode == "both" else [args.mode]
    reports = []
    for claim in claims:
        for mode in modes:
            if mode == "symbolic":
                reports.append(verify_symbolic(claim))
            else:
                reports.append(verify_sampled(claim, args.samples, args.seed, args.jobs))

    if args.json:
        doc = {
            "mode": args.mode,
            "samples": args.samples,
            "seed": args.seed,
            "reports": [r.to_dict(timing=args.timing) for r in reports],
        }
        print(_dump(doc), file=out)
    else:
        for r in reports:
            line = f"{r.claim.value:<6} {r.mode:<9} {r.status.upper():<12}"
            if r.mode == "sampled":
                line += f" {r.samples - len(r.failures)}/{r.samples} held, {r.resamples} resampled"
            if args.timing and r.elapsed_ms is not None:
                line += f" ({r.elapsed_ms:.0f} ms)"
            print(line, file=out)
            if r.reason:
                print(f"       reason: {r.reason}", file=out)
            for a in r.denominator_assumptions:
                print(f"       assumes {a} != 0", file=out)
            for f in r.failures:
                cfg = ", ".join(f.to_dict()["config"])
                where = f"sample {f.sample_index}" if f.sample_index is not None else "symbolic"
                print(f"       failure at {where}: ({cfg})", file=out)
    return exit_code(r.status for r in reports)


def run_formulas(args, out=None, formulas=TRANSCRIPTIONS) -> int:
    out = out or sys.stdout
    catalog = formula_catalog(formulas)
    if args.json:
        print(_dump({"formulas": [c.to_dict() for c in catalog],
                     "all_match": all(c.match for c in catalog)}), file=out)
    else:
        for c in catalog:
            flag = "MATCH" if c.match else "MISMATCH"
            print(f"[{c.formula.index:2d}] {flag:<8} {c.formula.display()}", file=out)
            print(f"     pipeline {c.pipeline_text()}", file=out)
        n_ok = sum(c.match for c in catalog)
        print(f"{n_ok}/{len(catalog)} formulas match", file=out)
    return EXIT_OK if all(c.match for c in catalog) else EXIT_REFUTED


def run_figure(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    claim = ClaimId(args.claim)
    kind = CLAIMS[claim].kind
    cls, arity = (RectConfig, 4) if kind == "rect" else (TwoRectConfig, 6)
    if len(args.params) != arity:
        print(f"error: {claim.value} takes {arity} parameters, got {len(args.params)}", file=err)
        return EXIT_USAGE
    cfg = cls(*args.params)
    result = check_claim(claim, cfg)
    if result.degeneracy is not None:
        print(f"degenerate: {result.degeneracy}", file=err)
        return EXIT_INCONCLUSIVE
    doc = figure_doc(result, cfg)
    path = Path(args.out) if args.out else Path(f"{claim.value}.{args.format}")
    if args.format == "json":
        path.write_text(_dump(doc) + "\n", encoding="utf-8")
    else:
        render_svg(doc, path)
    print(f"wrote {path} ({len(doc['elements'])} elements, predicate holds: {result.holds})", file=out)
    return EXIT_OK if result.holds else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rectgeom", description="Exact verification of rectangle theorems.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one claim or all of them")
    v.add_argument("--claim", required=True, choices=CLAIM_CHOICES + ["all"])
    v.add_argument("--mode", choices=["symbolic", "sampled", "both"], default="symbolic")
    v.add_argument("--samples", type=_positive_int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true", help="emit one JSON document")
    v.add_argument("--jobs", type=_positive_int, default=1, help="worker processes for sampled mode")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")
    v.set_defaults(func=run_verify)

    f = sub.add_parser("formulas", help="compare transcribed closed forms with the pipeline")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=run_formulas)

    g = sub.add_parser("figure", help="write figure data or an SVG drawing for a claim witness")
    g.add_argument("--claim", required=True, choices=CLAIM_CHOICES)
    g.add_argument("--params", required=True, type=_params, help="e.g. 1,2,3,5 or 1/2,2,3,5")
    g.add_argument("--out", default=None)
    g.add_argument("--format", choices=["json", "svg"], default="json")
    g.set_defaults(func=run_figure)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

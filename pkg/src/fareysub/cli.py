"""Command-line interface.

Exit codes: 0 success, 1 identity-check mismatch, 2 usage or domain error.
Set ``FAREY_OUTPUT=json`` to make ``--json`` the default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bench as benchmod
from .boolean import (
    SPECIAL_FORMS_FBM,
    HalfTag,
    MapId,
    apply_map,
    fbm_half,
    fbm_oracle,
    fbm_pred,
    fbm_succ,
    special_form_fraction_fbm,
    special_neighbors_fbm,
)
from .classic import (
    SPECIAL_FORMS_FM,
    farey_oracle,
    pred_fm,
    special_form_fraction_fm,
    special_neighbors_fm,
    succ_fm,
)
from .committee import is_committee, load_arrangement, ratio_collection
from .gf import gf_lower, gf_upper
from .numeric import HALF, FareyError, Fraction

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def render(seq: Sequence[Fraction]) -> str:
    return " < ".join(str(f) for f in seq)


def as_json(f: Optional[Fraction]):
    return None if f is None else f.as_dict()


def emit(obj) -> None:
    print(json.dumps(obj))


def _order(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction.parse(text)
    except FareyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    if args.family == "fm":
        seq = farey_oracle(args.m)
        if args.half == "left":
            seq = [f for f in seq if f <= HALF]
        elif args.half == "right":
            seq = [f for f in seq if f >= HALF]
    elif args.half:
        seq = fbm_half(args.m, HalfTag(args.half))
    else:
        seq = fbm_oracle(args.m)
    if args.json:
        emit([f.as_dict() for f in seq])
    else:
        print(render(seq))
    return EXIT_OK


def cmd_neighbors(args) -> int:
    want_pred = args.side in ("pred", "both")
    want_succ = args.side in ("succ", "both")
    if args.form is not None:
        if args.j is None:
            raise FareyError("--form requires --j")
        if args.family == "fm":
            frac = special_form_fraction_fm(args.form, args.j)
            pred, succ = special_neighbors_fm(args.form, args.j, args.m)
        else:
            frac = special_form_fraction_fbm(args.form, args.j)
            pred, succ = special_neighbors_fbm(args.form, args.j, args.m)
        if args.frac is not None and args.frac != frac:
            raise FareyError(f"--frac {args.frac} does not match form {args.form} with j={args.j} ({frac})")
        if want_pred and pred is None:
            raise FareyError(f"{frac} has no predecessor")
        if want_succ and succ is None:
            raise FareyError(f"{frac} has no successor")
        witnesses = {"route": "closed_form", "form": args.form, "j": args.j}
        detail = f"closed form: form={args.form} j={args.j}"
    else:
        if args.frac is None:
            raise FareyError("--frac or --form/--j is required")
        frac = args.frac
        pred_fn, succ_fn = (pred_fm, succ_fm) if args.family == "fm" else (fbm_pred, fbm_succ)
        pred_report = pred_fn(frac, args.m) if want_pred else None
        succ_report = succ_fn(frac, args.m) if want_succ else None
        pred = pred_report.neighbor if pred_report else None
        succ = succ_report.neighbor if succ_report else None
        witnesses = {"route": "congruence"}
        parts = []
        for name, rep in (("pred", pred_report), ("succ", succ_report)):
            if rep is not None:
                witnesses[name] = {"a": rep.witness_a, "b": rep.witness_b}
                parts.append(f"{name} a={_w(rep.witness_a)} b={_w(rep.witness_b)}")
        detail = "witnesses: " + "; ".join(parts)

    if args.json:
        out = {"frac": frac.as_dict(), "witnesses": witnesses}
        if want_pred:
            out["pred"] = as_json(pred)
        if want_succ:
            out["succ"] = as_json(succ)
        emit(out)
    else:
        chain = ([pred] if want_pred else []) + [frac] + ([succ] if want_succ else [])
        print(render(chain))
        print(detail)
    return EXIT_OK


def _w(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def cmd_map(args) -> int:
    map_id = MapId.lookup(args.map)
    image = apply_map(map_id, args.frac, args.m)
    if args.json:
        emit({"map": map_id.cli_name, "frac": args.frac.as_dict(), "image": image.as_dict()})
    else:
        print(image)
    return EXIT_OK


def cmd_gfcheck(args) -> int:
    fn = gf_lower if args.half == "lower" else gf_upper
    enumerated = fn(args.m, "enumerate")
    try:
        closed = fn(args.m, "closed_form")
        error = None
    except ArithmeticError as exc:
        closed, error = None, str(exc)
    match = closed is not None and closed == enumerated
    if args.json:
        emit(
            {
                "m": args.m,
                "half": args.half,
                "enumerate_terms": len(enumerated),
                "closed_form_terms": None if closed is None else len(closed),
                "match": match,
                "polynomial": str(enumerated),
                "error": error,
            }
        )
    else:
        print(f"enumerate: terms={len(enumerated)}")
        print(f"closed_form: terms={'-' if closed is None else len(closed)}")
        if args.show:
            print(f"polynomial: {enumerated}")
        if error:
            print(f"error: {error}")
        print("MATCH" if match else "MISMATCH")
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_committee(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            arr = load_arrangement(fh.read())
    except OSError as exc:
        raise FareyError(f"cannot read {args.input}: {exc.strerror}") from None

    if args.check_k is not None:
        try:
            subset = [int(tok) for tok in args.check_k.split(",") if tok.strip()]
        except ValueError:
            raise FareyError(f"bad region list {args.check_k!r}") from None
        report = is_committee(arr, subset)
        if args.json:
            emit(
                {
                    "committee": report.is_committee,
                    "fractions": [f.as_dict() for f in report.fractions],
                    "in_upper_open_half": list(report.in_upper_open_half),
                }
            )
        else:
            verdict = "committee" if report.is_committee else "not a committee"
            print(f"{verdict} ({', '.join(str(f) for f in report.fractions)})")
        return EXIT_OK

    if args.hyperplane is None:
        raise FareyError("--ratios requires --hyperplane")
    ratios = ratio_collection(arr, args.hyperplane)
    half = arr.half
    expected = fbm_oracle(half) if half >= 2 else None
    match = ratios == expected
    label = f"F(B({arr.n_regions}),{half})"
    if args.json:
        emit({"ratios": [f.as_dict() for f in ratios], "expected": label, "match": match})
    else:
        print(f"{render(ratios)} ({'=' if match else '!='} {label})")
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_bench(args) -> int:
    result = benchmod.run_bench(args.m, args.family, args.queries, args.seed)
    per = lambda s: 1e6 * s / result.queries  # noqa: E731
    if args.json:
        emit(
            {
                "m": result.m,
                "family": result.family,
                "queries": result.queries,
                "formula_seconds": result.formula_seconds,
                "enumeration_seconds": result.enumeration_seconds,
                "agreements": result.agreements,
            }
        )
    else:
        print(
            f"formula: {result.queries} queries in {result.formula_seconds:.4f} s "
            f"({per(result.formula_seconds):.2f} us/query)"
        )
        if result.enumeration_seconds is None:
            print(f"enumeration: skipped (m > {benchmod.ENUMERATION_LIMIT})")
        else:
            print(
                f"enumeration: {result.queries} queries in {result.enumeration_seconds:.4f} s "
                f"({per(result.enumeration_seconds):.2f} us/query)"
            )
            print(f"agreement: {result.agreements}/{result.queries}")
    if result.agreements is not None and result.agreements != result.queries:
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    json_default = os.environ.get("FAREY_OUTPUT", "").lower() == "json"
    parser = argparse.ArgumentParser(prog="farey", description="Farey sequences and the subsequence F(B(2m),m).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=True):
        p.add_argument("--m", type=_order, required=True, help="order (2 <= m <= 2**30)")
        if family:
            p.add_argument("--family", choices=("fm", "fbm"), default="fm")
        p.add_argument("--json", action="store_true", default=json_default)

    p = sub.add_parser("gen", help="print a sequence or half of it")
    common(p)
    p.add_argument("--half", choices=("left", "right"))
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("neighbors", help="predecessor and successor of a fraction")
    common(p)
    p.add_argument("--frac", type=_fraction)
    p.add_argument("--form", choices=sorted(set(SPECIAL_FORMS_FM) | set(SPECIAL_FORMS_FBM)))
    p.add_argument("--j", type=int)
    p.add_argument("--side", choices=("pred", "succ", "both"), default="both")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("map", help="apply one of the monotone bijections")
    common(p, family=False)
    p.add_argument("--map", required=True, help="eq10..eq16, eq20, eq21 or dual_fbm")
    p.add_argument("--frac", type=_fraction, required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("gfcheck", help="compare enumerated and closed-form generating functions")
    common(p, family=False)
    p.add_argument("--half", choices=("lower", "upper"), required=True)
    p.add_argument("--show", action="store_true", help="also print the polynomial")
    p.set_defaults(func=cmd_gfcheck)

    p = sub.add_parser("committee", help="committee verdicts and vote-ratio collections")
    p.add_argument("--input", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check-k", dest="check_k", metavar="I1,I2,...")
    mode.add_argument("--ratios", action="store_true")
    p.add_argument("--hyperplane", type=int)
    p.add_argument("--json", action="store_true", default=json_default)
    p.set_defaults(func=cmd_committee)

    p = sub.add_parser("bench", help="time formula queries against full enumeration")
    common(p)
    p.add_argument("--queries", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FareyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

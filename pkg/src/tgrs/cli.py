"""Command-line interface: ``tgrs {classify,search,construct,encode,table}``.

Exit codes: 0 success, 1 input error, 2 hypothesis out of scope, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from typing import Sequence

from .classify import classify, gram_is_zero
from .code import TgrsSpec, encode, generator_matrix
from .construct import SearchResult, construct_self_dual, search_mds
from .errors import BudgetExceededError, HypothesisError, TgrsError
from .field import format_field, parse_field
from .oracle import minors_mds_check

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_MINORS_BUDGET = 10**5
CSV_COLUMNS = ["k", "count", "n", "dim", "d"]

# Named searches reproducible with ``tgrs table``.
PRESETS = {
    "q11-pairs": dict(field="11", alpha=(1, 2, 3, 5, 6, 8, 9, 10), ell=2, ks=range(3, 8)),
    "q13-triples": dict(field="13", alpha=(0, 1, 2, 3, 4, 5, 6, 9, 10, 12), ell=3, ks=range(5, 10)),
}


def minors_budget() -> int:
    return int(os.environ.get("TGRS_MINORS_BUDGET", DEFAULT_MINORS_BUDGET))


# --- parsing helpers ----------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise TgrsError(f"expected a comma-separated integer list, got {text!r}") from exc


def _k_range(text: str) -> list[int]:
    """``5``, ``5..9`` or ``3,5,7``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _load_spec(path: str) -> TgrsSpec:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise TgrsError(f"cannot read spec file {path!r}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TgrsError(f"malformed spec JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise TgrsError("spec JSON must be an object")
    try:
        return TgrsSpec.from_dict(data)
    except KeyError as exc:
        raise TgrsError(f"spec JSON is missing key {exc}") from exc


def _yes(flag: bool | None) -> str:
    return "n/a" if flag is None else ("yes" if flag else "no")


# --- rendering ----------------------------------------------------------------------

def _search_rows(results: Sequence[SearchResult]) -> list[dict]:
    return [dict(k=r.k, count=r.count, n=r.n, dim=r.k, d=r.distance) for r in results]


def render_search(results: Sequence[SearchResult], fmt: str, listing: bool = False) -> str:
    rows = _search_rows(results)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out = buf.getvalue()
    elif fmt == "json":
        payload = []
        for row, r in zip(rows, results):
            item = dict(row)
            if listing and r.tuples is not None:
                item["tuples"] = [list(t) for t in r.tuples]
            payload.append(item)
        return json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"{'dim':>4} {'count':>7}  code"]
        lines += [f"{r['dim']:>4} {r['count']:>7}  [{r['n']},{r['dim']},{r['d']}]" for r in rows]
        out = "\n".join(lines) + "\n"
    if listing:
        for r in results:
            for t in r.tuples or []:
                out += f"k={r.k} eta={','.join(map(str, t))}\n"
    return out


def parse_search_csv(text: str) -> list[dict]:
    return [{key: int(val) for key, val in row.items()} for row in csv.DictReader(io.StringIO(text))]


def render_report(rep, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json() + "\n"
    spec = rep.spec
    n, k = spec.n, spec.k
    lines = []
    if rep.is_mds is None:
        lines.append("MDS: n/a")
    elif rep.is_mds:
        tag = " (GRS)" if all(e == 0 for e in spec.eta) else ""
        lines.append(f"MDS: yes{tag}, [{n},{k},{n - k + 1}]")
    else:
        lines.append(f"MDS: no, vanishing subset {list(rep.witness_subset)}")
    lines.append(f"AMDS: {_yes(rep.is_amds)}")
    lines.append(f"defect = ell: {_yes(rep.defect_is_l)}")
    if rep.defect is not None:
        lines.append(f"Singleton defect: {rep.defect}")
    if rep.dual_defect is not None:
        lines.append(f"dual Singleton defect: {rep.dual_defect}")
    if rep.is_self_dual is not None:
        lines.append(f"self-dual: {_yes(rep.is_self_dual)}")
    lines += [f"note: {x}" for x in rep.notes]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["is_mds", "is_amds", "defect_is_l", "defect", "dual_defect", "is_self_dual"])
        w.writerow([rep.is_mds, rep.is_amds, rep.defect_is_l, rep.defect, rep.dual_defect, rep.is_self_dual])
        return buf.getvalue()
    return "\n".join(lines) + "\n"


# --- subcommands --------------------------------------------------------------------

def cmd_classify(args, out) -> int:
    spec = _load_spec(args.spec)
    try:
        rep = classify(spec, self_dual=args.self_dual, defects=args.defects)
    except HypothesisError as exc:
        if "outside theorem scope" in str(exc):
            raise
        raise HypothesisError(f"outside theorem scope: {exc}") from exc
    out.write(render_report(rep, args.format))
    return EXIT_OK


def run_search(field: str, alpha, ks, ell, eta_values=None, listing=False, workers=1, err=None) -> list[SearchResult]:
    ctx = parse_field(field)
    domain = None
    if eta_values is not None:
        domain = list(itertools.product([ctx.coerce(x) for x in eta_values], repeat=ell))
        if not domain:
            return []
    results = []
    for k in ks:
        try:
            results.append(search_mds(ctx, alpha, k, ell, domain, collect=listing, workers=workers))
        except HypothesisError as exc:
            if err is not None:
                err.write(f"k={k}: skipped, {exc}\n")
    return results


def cmd_search(args, out, err) -> int:
    eta_values = _int_list(args.eta_values) if args.eta_values is not None else None
    ks = _k_range(args.k)
    results = run_search(args.field, _int_list(args.alpha), ks, args.ell, eta_values, args.list, args.workers, err)
    out.write(render_search(results, args.format, args.list))
    if ks and not results and eta_values != []:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def cmd_table(args, out, err) -> int:
    p = PRESETS[args.name]
    results = run_search(p["field"], p["alpha"], p["ks"], p["ell"], None, args.list, args.workers, err)
    out.write(render_search(results, args.format, args.list))
    return EXIT_OK


def cmd_construct(args, out) -> int:
    base = parse_field(args.field)
    modulus = tuple(_int_list(args.target_modulus)) if args.target_modulus else None
    recipe = construct_self_dual(base, args.ell, args.a, _int_list(args.eta), modulus)
    spec = recipe.spec
    n, k = spec.n, spec.k
    summary = {
        "self_dual": True,
        "gram_zero": gram_is_zero(spec),
        "mds": None,
        "distance_lower_bound": recipe.distance_bound,
    }
    if math.comb(n, k) <= minors_budget():
        summary["mds"] = minors_mds_check(generator_matrix(spec))
    else:
        summary["note"] = f"MDS check skipped: C({n},{k}) minors exceed the budget"
    if args.format == "json":
        payload = recipe.to_dict()
        payload["verification"] = summary
        out.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    d = f"{n - k + 1}" if summary["mds"] else f">={recipe.distance_bound}"
    out.write(f"field: {format_field(spec.ctx)}\n")
    out.write(f"m(x) ascending: {list(recipe.m_poly.coeffs)}\n")
    out.write(f"alpha: {list(spec.alpha)}\n")
    out.write(f"v: {list(spec.v)}\n")
    out.write(f"eta: {list(spec.eta)}\n")
    out.write(f"self-dual: yes, G G^T = 0: {_yes(summary['gram_zero'])}\n")
    out.write(f"MDS: {_yes(summary['mds'])}, [{n},{k},{d}]\n")
    for flag in recipe.flags:
        out.write(f"note: {flag}\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(spec.to_json() + "\n")
    return EXIT_OK


def cmd_encode(args, out) -> int:
    spec = _load_spec(args.spec)
    word = encode(spec, _int_list(args.message))
    if args.format == "json":
        out.write(json.dumps({"field": format_field(spec.ctx), "codeword": list(word.values)}) + "\n")
    elif args.format == "csv":
        out.write(",".join(map(str, word.values)) + "\n")
    else:
        out.write(" ".join(map(str, word.values)) + "\n")
    return EXIT_OK


# --- entry point --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tgrs", description="Twisted generalized Reed-Solomon codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["table", "csv", "json"], default="table")

    p = sub.add_parser("classify", help="MDS / AMDS / defect / self-dual verdicts for a spec file")
    p.add_argument("spec", help="spec JSON file, or - for stdin")
    p.add_argument("--self-dual", action="store_true", help="also test self-duality")
    p.add_argument("--defects", action="store_true", help="brute-force Singleton defects of the code and its dual")
    common(p)

    p = sub.add_parser("search", help="count twist tuples giving MDS codes")
    p.add_argument("--field", required=True, help='e.g. "11" or "13^2/2,7,1"')
    p.add_argument("--alpha", required=True, help="comma-separated evaluation points")
    p.add_argument("--k", required=True, help="dimension, range lo..hi or list")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--eta-values", default=None, help="restrict each twist coefficient to these values")
    p.add_argument("--list", action="store_true", help="also print every MDS tuple")
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("table", help="run a named search preset")
    p.add_argument("name", choices=sorted(PRESETS))
    p.add_argument("--list", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("construct", help="self-dual code from x^ell - a")
    p.add_argument("--field", required=True, help="base field, odd order")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--eta", default="", help="free twist coefficients eta_1, eta_2, ...")
    p.add_argument("--target-modulus", default=None, help="ascending modulus coefficients of the target field")
    p.add_argument("--output", default=None, help="also write the spec JSON to this file")
    common(p)

    p = sub.add_parser("encode", help="encode a message with a spec")
    p.add_argument("spec")
    p.add_argument("--message", required=True, help="comma-separated message of length k")
    common(p)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            return cmd_classify(args, out)
        if args.command == "search":
            return cmd_search(args, out, err)
        if args.command == "table":
            return cmd_table(args, out, err)
        if args.command == "construct":
            return cmd_construct(args, out)
        return cmd_encode(args, out)
    except HypothesisError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_HYPOTHESIS
    except BudgetExceededError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except TgrsError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 all checks pass, 1 at least one violation or counterexample,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from . import closed_forms as cf
from . import theorems as th
from .families import Family, FamilySpec, build_family
from .graph import Graph, ScaleError, read_edge_list
from .report import csv_lines, dumps, jsonl
from .spectra import alpha_spectrum, psd_threshold
from .suite import CLAIMS, DEFAULT_ALPHAS, resolve_claims, run_claim, tally

log = logging.getLogger("aalpha")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

VERDICT_COLUMNS = ["claim_id", "graph_n", "canonical", "alpha", "params", "status", "margin"]


class UsageError(Exception):
    pass


# -- argument parsing helpers ------------------------------------------------------


def parse_range(text: str) -> tuple[int, int]:
    """``"4"`` or ``"2..7"`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad order range {text!r}; use N or LO..HI") from None
    if bounds[0] > bounds[1]:
        raise UsageError(f"empty order range {text!r}")
    return bounds


def parse_alphas(values: Sequence[str] | None, default: Sequence[float]) -> list[float]:
    if not values:
        return list(default)
    out = []
    for chunk in values:
        for item in chunk.split(","):
            if not item.strip():
                continue
            try:
                a = float(item)
            except ValueError:
                raise UsageError(f"bad alpha value {item!r}") from None
            if not 0 <= a <= 1:
                raise UsageError(f"alpha must lie in [0, 1], got {a}")
            out.append(a)
    return out


def read_config(path: str) -> dict[str, str]:
    """Flat ``key = value`` file; keys match the long option names."""
    conf = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for no, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{no}: expected key=value")
        conf[key.strip().replace("-", "_")] = value.strip()
    return conf


def load_graph(args) -> tuple[Graph, str]:
    if bool(args.family) == bool(args.edges):
        raise UsageError("give exactly one of --family or --edges")
    try:
        if args.family:
            spec = FamilySpec.parse(args.family)
            return build_family(spec), str(spec)
        return read_edge_list(args.edges), str(args.edges)
    except OSError as exc:
        raise UsageError(f"cannot read {args.edges}: {exc}") from None


@contextmanager
def output_stream(path: str | None) -> Iterator[TextIO]:
    if path in (None, "-"):
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc}") from None
    with fh:
        yield fh


def write_records(records: Iterable[dict], fmt: str, path: str | None, columns: Sequence[str]) -> None:
    with output_stream(path) as out:
        lines = jsonl(records) if fmt == "jsonl" else csv_lines(records, columns)
        for line in lines:
            out.write(line)


# -- commands -------------------------------------------------------------------------


def cmd_spectrum(args) -> int:
    g, source = load_graph(args)
    alphas = parse_alphas(args.alpha, [0.5])
    records = []
    for a in alphas:
        w = alpha_spectrum(g, a).eigenvalues
        records.append(
            {
                "graph": source,
                "n": g.n,
                "alpha": a,
                "eigenvalues": w,
                "lambda_1": float(w[0]) if g.n else None,
                "lambda_n": float(w[-1]) if g.n else None,
                "trace": float(w.sum()),
                "trace_expected": 2 * a * g.m,
                "trace_error": abs(float(w.sum()) - 2 * a * g.m),
            }
        )
    write_records(records, args.format, args.output, ["graph", "n", "alpha", "lambda_1", "lambda_n", "trace", "trace_error", "eigenvalues"])
    return EXIT_OK


def _family_closed_form(spec: FamilySpec, a: float) -> dict:
    kind, p = spec.kind, spec.params
    rec: dict = {}
    if kind is Family.CYCLE:
        rec["formula_spectrum"] = cf.cycle_spectrum(p[0], a).eigenvalues
    elif kind is Family.COMPLETE:
        rec["formula_spectrum"] = cf.complete_graph_spectrum(p[0], a).eigenvalues
    elif kind is Family.COMPLETE_SPLIT:
        rec["formula_spectrum"] = cf.complete_split_spectrum(p[0], p[1], a).eigenvalues
    elif kind is Family.STAR:
        rec["formula_min"] = cf.star_min_eigenvalue(p[0], a)
        rec["in_stated_range"] = cf.in_stated_range("star_min", a)
    elif kind is Family.COMPLETE_BIPARTITE:
        rec["formula_min"] = cf.complete_bipartite_min_eigenvalue(p[0], p[1], a)
        rec["in_stated_range"] = cf.in_stated_range("complete_bipartite_min", a)
    elif kind is Family.PATH and p[0] == 4:
        rec["formula_min"] = cf.p4_min_eigenvalue(a)
        rec["in_stated_range"] = cf.in_stated_range("p4_min", a)
    elif kind is Family.COMPLETE_MINUS_EDGE and p[0] >= 3:
        report = cf.kn_minus_e_min_eigenvalue(p[0], a)
        rec["stated_formula"] = report.as_dict()
        rec["in_stated_range"] = cf.in_stated_range("kn_minus_e_min", a)
    return rec


def cmd_family(args) -> int:
    """Eigensolver spectrum of a family member next to its closed form."""
    try:
        spec = FamilySpec.parse(args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = build_family(spec)
    status = EXIT_OK
    records = []
    for a in parse_alphas(args.alpha, [0.75]):
        w = alpha_spectrum(g, a).eigenvalues
        rec = {"family": str(spec), "alpha": a, "eigenvalues": w}
        rec.update(_family_closed_form(spec, a))
        if "formula_spectrum" in rec:
            rec["max_abs_diff"] = float(np.max(np.abs(rec["formula_spectrum"] - w)))
            rec["agrees"] = rec["max_abs_diff"] <= th.EQ_TOL
        elif "formula_min" in rec:
            rec["max_abs_diff"] = abs(rec["formula_min"] - float(w[-1]))
            rec["agrees"] = rec["max_abs_diff"] <= th.EQ_TOL
        elif "stated_formula" in rec:
            rec["agrees"] = rec["stated_formula"]["consistent"]
            if not rec["agrees"]:
                pf = rec["stated_formula"]
                log.warning(
                    "stated K_n-e formula inconsistent at n=%d alpha=%g: discriminant %s, eigensolver value %.12g",
                    pf["n"], pf["alpha"], format(pf["discriminant"], ".6g"), pf["solver_value"],
                )
        if rec.get("agrees") is False:
            status = EXIT_VIOLATION
        records.append(rec)
    write_records(records, args.format, args.output, ["family", "alpha", "agrees", "max_abs_diff", "eigenvalues"])
    return status


def _config(args) -> dict:
    conf = read_config(args.config) if getattr(args, "config", None) else {}
    for key in ("claims", "n", "alpha", "format", "output", "tolerance", "cache_dir"):
        value = getattr(args, key, None)
        if value is not None and value != []:
            conf[key] = value
    return conf


def cmd_verify(args) -> int:
    conf = _config(args)
    claims_arg = conf.get("claims", "all")
    names = claims_arg.split(",") if isinstance(claims_arg, str) else [c for chunk in claims_arg for c in chunk.split(",")]
    try:
        claims = resolve_claims([c.strip() for c in names if c.strip()])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lo, hi = parse_range(str(conf.get("n", "2..7")))
    if lo < 1 or hi > 8:
        raise UsageError(f"orders must lie in 1..8, got {lo}..{hi}")
    alpha = conf.get("alpha")
    alphas = parse_alphas([alpha] if isinstance(alpha, str) else alpha, DEFAULT_ALPHAS)
    saved_tol = th.EQ_TOL
    if "tolerance" in conf:
        try:
            th.set_tolerance(float(conf["tolerance"]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        return _run_verify(claims, lo, hi, alphas, conf)
    finally:
        th.EQ_TOL = saved_tol


def _run_verify(claims, lo: int, hi: int, alphas: list[float], conf: dict) -> int:
    fmt = conf.get("format", "jsonl")
    if fmt not in ("jsonl", "csv"):
        raise UsageError(f"unknown format {fmt!r}")
    total_violations = 0
    all_records = []
    for claim in claims:
        verdicts = list(run_claim(claim, range(lo, hi + 1), alphas, conf.get("cache_dir")))
        counts = tally(verdicts)
        total_violations += counts["violated"]
        print(f"{claim.claim_id}: " + " ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
        all_records.extend(v.as_dict() for v in verdicts)
    write_records(all_records, fmt, conf.get("output"), VERDICT_COLUMNS)
    if total_violations:
        print(f"VIOLATIONS: {total_violations}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_scan(args) -> int:
    lo, hi = parse_range(args.n or "3..7")
    if lo < 3 or hi > 8:
        raise UsageError(f"conjecture scan supports orders 3..8, got {lo}..{hi}")
    alphas = parse_alphas(args.alpha, [0.55, 0.6, 0.75, 0.9])
    for a in alphas:
        if not 0.5 < a < 1:
            raise UsageError(f"conjecture scan needs alpha in (1/2, 1), got {a}")
    records = []
    found = 0
    for n in range(lo, hi + 1):
        verdicts, summaries = th.conjecture_scan(n, alphas)
        for s in summaries:
            rec = {"record": "summary", **s.as_dict()}
            records.append(rec)
            print(dumps(rec, 6), file=sys.stderr)
        for v in verdicts:
            if args.all_verdicts or v.status is th.Status.VIOLATED:
                records.append({"record": "verdict", **v.as_dict()})
        found += sum(v.status is th.Status.VIOLATED for v in verdicts)
    write_records(records, args.format, args.output, ["record", "n", "alpha", "graphs_scanned", "violations", "tight", "claim_id", "canonical", "status", "margin"])
    if found:
        print(f"COUNTEREXAMPLES FOUND: {found}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_alpha0(args) -> int:
    g, source = load_graph(args)
    if g.m == 0:
        raise UsageError("alpha_0 is degenerate for an edgeless graph: A_alpha is the zero matrix for every alpha")
    a0 = psd_threshold(g, args.tol)
    rec: dict = {"graph": source, "alpha0": a0}
    ok = True
    if g.is_regular():
        formula = th.regular_alpha0(g)
        rec.update(regular_formula=formula, regular_agrees=abs(formula - a0) <= th.ALPHA0_TOL)
        ok &= rec["regular_agrees"]
    if th.has_bipartite_component(g):
        rec.update(bipartite_rule=0.5, bipartite_agrees=abs(a0 - 0.5) <= th.ALPHA0_TOL)
        ok &= rec["bipartite_agrees"]
    write_records([rec], args.format, args.output, list(rec))
    return EXIT_OK if ok else EXIT_VIOLATION


# -- parser -----------------------------------------------------------------------------


def _claim_table() -> str:
    rows = [f"  {c.claim_id:<9} {(c.graph_class.value if c.graph_class else 'family'):<12} {c.description}" for c in CLAIMS.values()]
    return "claims (id, enumerated class, statement):\n" + "\n".join(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aalpha", description="A_alpha(G) spectra and claim verification over small graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p):
        p.add_argument("--family", help="family spec, e.g. cycle:4, complete-bipartite:2,3, complete-split:2,5")
        p.add_argument("--edges", help="edge-list file: 'n m' then m lines 'u v'")

    def out_opts(p, default_format="jsonl"):
        p.add_argument("--format", choices=["jsonl", "csv"], default=default_format)
        p.add_argument("--output", "-o", help="output path (default: standard output)")

    p = sub.add_parser("spectrum", help="A_alpha spectrum of one graph")
    graph_opts(p)
    p.add_argument("--alpha", action="append", help="alpha value(s), comma separated")
    out_opts(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("family", help="closed form versus eigensolver for a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--alpha", action="append")
    out_opts(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run claim checkers over enumerated graphs", epilog=_claim_table(), formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--claims", action="append", help="claim ids, comma separated (default: all)")
    p.add_argument("--n", help="order range LO..HI (default 2..7)")
    p.add_argument("--alpha", action="append", help="alpha grid (default 0.5,0.6,0.75,0.9)")
    p.add_argument("--tolerance", type=float, help="equality tolerance (default 1e-9)")
    p.add_argument("--config", help="flat key=value file with the same keys")
    p.add_argument("--cache-dir", help="directory for cached enumerations")
    p.add_argument("--format", choices=["jsonl", "csv"])
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="search for counterexamples to the star conjecture")
    p.add_argument("--n", help="order range within 3..8 (default 3..7)")
    p.add_argument("--alpha", action="append", help="alphas in (1/2, 1) (default 0.55,0.6,0.75,0.9)")
    p.add_argument("--all-verdicts", action="store_true", help="write every per-graph verdict, not only counterexamples")
    out_opts(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("alpha0", help="PSD threshold alpha_0 with formula cross-checks")
    graph_opts(p)
    p.add_argument("--tol", type=float, default=1e-8)
    out_opts(p)
    p.set_defaults(func=cmd_alpha0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ScaleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

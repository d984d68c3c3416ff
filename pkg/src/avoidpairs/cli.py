"""Command-line frontend.

Subcommands: pell, criterion (eval | cert | scan-t4 | scan-t2 | scan-interval |
scan-mod23), witness (build | verify), oracle (arrows | sn | xcheck-cf),
bipartite (realize), diag (equidist).

JSON lines are the canonical output (sorted keys, compact separators, so a
parse/re-emit round trip is byte-identical); --csv, where offered, is a fixed
projection.  All commands are deterministic.  Exit codes: 0 ok, 2 usage or
domain error, 3 guard refusal, 4 assertion or cross-check failure,
5 infeasible witness build.  The environment variable AVOID_THREADS, when set,
overrides any --jobs flag.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bipartite, criterion, equidist, oracle, pell, witness
from .errors import DomainError, GuardError, ScanAssertionError
from .exactarith import DEFAULT_FRACBITS, FixedPointFrac, binom2
from .graphs import Graph, from_graph6, girth, to_graph6

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_ASSERTION = 4
EXIT_INFEASIBLE = 5

EPILOG = (
    "exit codes: 0 ok; 2 usage/domain error; 3 size-guard refusal; "
    "4 assertion or cross-check failure; 5 infeasible witness build. "
    "AVOID_THREADS overrides --jobs."
)


@dataclass(frozen=True)
class RunConfig:
    fracbits: int = DEFAULT_FRACBITS
    jobs: int = 1
    fmt: str = "json"  # "json" | "csv"

    def __post_init__(self) -> None:
        if not 32 <= self.fracbits <= 1024:
            raise DomainError(f"fracbits must be in [32, 1024], got {self.fracbits}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs}")


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def emit(obj, out=None) -> None:
    print(dump_json(obj), file=out or sys.stdout)


def _frac_record(frac: FixedPointFrac) -> dict:
    return {"value": frac.value, "fracbits": frac.fracbits, "approx": float(frac)}


def _jobs(args) -> int:
    env = os.environ.get("AVOID_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError(f"AVOID_THREADS must be an integer, got {env!r}") from None
    return getattr(args, "jobs", 1)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"expected a rational like 3/40, got {text!r}") from None


def _parse_pair(text: str) -> criterion.PairMF:
    try:
        m_str, f_str = text.split(",")
        return criterion.PairMF(int(m_str), int(f_str))
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"expected a pair like 40,390, got {text!r}") from None


# ---------------------------------------------------------------------------
# pell


def cmd_pell(args) -> int:
    states = pell.pell_states() if args.raw else pell.m_states()
    emitted = 0
    for state in states:
        if emitted == args.count:
            break
        emit(
            {
                "s": state.s,
                "x": state.x,
                "y": state.y,
                "m": state.m,
                "checks": pell.verify_pell_state(state),
            }
        )
        emitted += 1
    return EXIT_OK


# ---------------------------------------------------------------------------
# criterion

CRITERION_CSV_HEADER = ["m", "q", "Dy", "Dz", "L", "R", "verdict"]


def _criterion_csv_row(m: int, q: int) -> list:
    ev = criterion.eval_criterion(m, q)
    return [ev.m, ev.q, ev.Dy, ev.Dz, ev.L, ev.R, "L>R" if ev.L > ev.R else "L<=R"]


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def cmd_criterion_eval(args, config: RunConfig) -> int:
    ev = criterion.eval_criterion(args.m, args.q, config.fracbits)
    if config.fmt == "csv":
        w = _csv_writer()
        w.writerow(CRITERION_CSV_HEADER)
        w.writerow([ev.m, ev.q, ev.Dy, ev.Dz, ev.L, ev.R, "L>R" if ev.L > ev.R else "L<=R"])
        return EXIT_OK
    emit(
        {
            "m": ev.m,
            "q": ev.q,
            "Dy": ev.Dy,
            "Dz": ev.Dz,
            "L": ev.L,
            "R": ev.R,
            "verdict": "L>R" if ev.L > ev.R else "L<=R",
            "frac_y": _frac_record(ev.frac_y),
            "d_approx": _frac_record(ev.d_approx),
        }
    )
    return EXIT_OK


def cmd_criterion_cert(args, config: RunConfig) -> int:
    pair = criterion.PairMF(args.m, args.f)
    outcome = criterion.avoidability_certificate(pair)
    record = {"m": pair.m, **criterion.cert_record(pair.f, outcome)}
    emit(record)
    return EXIT_OK


def cmd_criterion_scan_t4(args, config: RunConfig) -> int:
    try:
        records = criterion.scan_offset_disjunction(
            args.from_m, args.to_m, assert_all=args.assert_all, jobs=_jobs(args)
        )
    except ScanAssertionError as exc:
        for rec in exc.failures:
            emit(rec, out=sys.stderr)
        emit({"error": str(exc), "kind": "assertion"}, out=sys.stderr)
        return EXIT_ASSERTION
    if config.fmt == "csv":
        w = _csv_writer()
        w.writerow(CRITERION_CSV_HEADER)
        for rec in records:
            m = rec["m"]
            w.writerow(_criterion_csv_row(m, 0))
            if rec["L6m"] is not None:
                w.writerow(_criterion_csv_row(m, 6 * m))
                w.writerow(_criterion_csv_row(m, -6 * m))
        return EXIT_OK
    for rec in records:
        emit(rec)
    return EXIT_OK


def cmd_criterion_scan_t2(args, config: RunConfig) -> int:
    q_of_m = criterion.AffineQ(_parse_fraction(args.alpha), _parse_fraction(args.beta))
    records = criterion.scan_affine_q(q_of_m, args.from_m, args.to_m, jobs=_jobs(args))
    if config.fmt == "csv":
        w = _csv_writer()
        w.writerow(CRITERION_CSV_HEADER)
        for rec in records:
            if rec["status"] in ("hit", "miss"):
                w.writerow(_criterion_csv_row(rec["m"], rec["q"]))
                w.writerow(_criterion_csv_row(rec["m"], -rec["q"]))
        return EXIT_OK
    for rec in records:
        emit(rec)
    return EXIT_OK


def cmd_criterion_scan_interval(args, config: RunConfig) -> int:
    emit(criterion.scan_interval(args.m))
    return EXIT_OK


def cmd_criterion_scan_mod23(args, config: RunConfig) -> int:
    for rec in criterion.scan_mod23(args.from_m, args.to_m, jobs=_jobs(args)):
        emit(rec)
    return EXIT_OK


# ---------------------------------------------------------------------------
# witness


def _witness_record(w: witness.WitnessGraph) -> dict:
    part = sorted(w.girth_part)
    s = w.structure_graph()
    sub_rows = []
    index = {v: i for i, v in enumerate(part)}
    for v in part:
        r = 0
        for u in part:
            if s.rows[v] >> u & 1:
                r |= 1 << index[u]
        sub_rows.append(r)
    part_girth = girth(Graph(len(part), sub_rows))
    adjacency = [
        [u for u in range(w.graph.n) if w.graph.rows[v] >> u & 1]
        for v in range(w.graph.n)
    ]
    return {
        "n": w.graph.n,
        "e": w.graph.edge_count(),
        "p": w.girth_bound,
        "complemented": w.complemented,
        "clique_vertices": sorted(w.clique_vertices),
        "girth_part_size": len(w.girth_part),
        "girth_part_girth": None if part_girth == float("inf") else part_girth,
        "graph6": to_graph6(w.graph),
        "adjacency": adjacency,
    }


def cmd_witness_build(args, config: RunConfig) -> int:
    built = witness.build_witness_or_complement(args.n, args.e, args.p)
    if isinstance(built, witness.Infeasible):
        emit(
            {
                "infeasible": True,
                "n": built.n,
                "e": built.e,
                "p": built.p,
                "k": built.k,
                "placed": built.placed,
                "missing": built.missing,
                "reason": built.reason,
            }
        )
        return EXIT_INFEASIBLE
    record = _witness_record(built)
    if args.pair is not None:
        pair = _parse_pair(args.pair)
        verdict = witness.verify_witness(built, pair)
        record["pair"] = {"m": pair.m, "f": pair.f}
        record["verify"] = {"passed": verdict.passed, "failures": list(verdict.failures)}
    if args.graph6 is not None:
        with open(args.graph6, "w") as fh:
            fh.write(to_graph6(built.graph) + "\n")
    emit(record)
    return EXIT_OK


def cmd_witness_verify(args, config: RunConfig) -> int:
    with open(args.graph6) as fh:
        g = from_graph6(fh.read())
    pair = _parse_pair(args.pair)
    clique = frozenset(int(tok) for tok in args.clique_vertices.split(",") if tok != "")
    rest = frozenset(range(g.n)) - clique
    w = witness.WitnessGraph(
        graph=g,
        clique_vertices=clique,
        girth_part=rest,
        girth_bound=args.p if args.p is not None else pair.m,
        complemented=args.complemented,
    )
    verdict = witness.verify_witness(w, pair)
    emit(
        {
            "pair": {"m": pair.m, "f": pair.f},
            "passed": verdict.passed,
            "failures": list(verdict.failures),
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle


def cmd_oracle_arrows(args, config: RunConfig) -> int:
    pair = criterion.PairMF(args.m, args.f)
    verdict = oracle.arrows_pair(args.n, args.e, pair, query_guard=args.query_guard)
    emit(
        {
            "n": verdict.n,
            "e": verdict.e,
            "pair": {"m": pair.m, "f": pair.f},
            "arrows": verdict.arrows,
            "counterexample": to_graph6(verdict.counterexample)
            if verdict.counterexample
            else None,
        }
    )
    return EXIT_OK


def cmd_oracle_sn(args, config: RunConfig) -> int:
    pair = criterion.PairMF(args.m, args.f)
    report = oracle.compute_S_n(args.n, pair, jobs=_jobs(args), sweep_guard=args.sweep_guard)
    if config.fmt == "csv":
        w = _csv_writer()
        w.writerow(["e", "arrows", "counterexample"])
        in_s = set(report.S)
        for e in range(binom2(args.n) + 1):
            w.writerow([e, e in in_s, "" if e in in_s else report.counterexamples[e]])
        return EXIT_OK
    emit(
        {
            "n": report.n,
            "pair": {"m": pair.m, "f": pair.f},
            "S": list(report.S),
            "counterexamples": {str(e): g6 for e, g6 in sorted(report.counterexamples.items())},
            "fixed_n_fraction": report.sigma_estimate,
        }
    )
    return EXIT_OK


def cmd_oracle_xcheck_cf(args, config: RunConfig) -> int:
    mismatches = []
    checked = 0
    for m in range(1, args.max_m + 1):
        for f in range(binom2(m) + 1):
            pair = criterion.PairMF(m, f)
            search = isinstance(criterion.clique_forest_realizable(pair), criterion.Realizable)
            brute = oracle.clique_forest_oracle(pair)
            checked += 1
            if search != brute:
                mismatches.append({"m": m, "f": f, "search": search, "oracle": brute})
    emit({"max_m": args.max_m, "pairs_checked": checked, "mismatches": mismatches})
    return EXIT_OK if not mismatches else EXIT_ASSERTION


# ---------------------------------------------------------------------------
# bipartite


def cmd_bipartite_realize(args, config: RunConfig) -> int:
    pair = bipartite.BipartitePair(args.m, args.f)
    complemented = False
    target = pair
    if args.complement and args.f > args.m * args.m // 2:
        target = bipartite.BipartitePair(args.m, args.m * args.m - args.f)
        complemented = True
    decomp = bipartite.bipartite_realize(target)
    verdict = bipartite.verify_bipartite_decomp(decomp, target)
    if args.json:
        emit(
            {
                "m": pair.m,
                "f": pair.f,
                "complemented": complemented,
                "biclique": [decomp.x, decomp.y],
                "forest_edges": [list(edge) for edge in decomp.forest_edges],
                "case": decomp.case,
                "verified": verdict.passed,
            }
        )
    else:
        side = " of the complement" if complemented else ""
        edges = ", ".join(f"(L{li},R{rj})" for li, rj in decomp.forest_edges) or "none"
        print(f"case {decomp.case}{side}: biclique {decomp.x}x{decomp.y}; forest edges: {edges}")
        print(f"verified: {'PASS' if verdict.passed else 'FAIL ' + ','.join(verdict.failures)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# diag


def cmd_diag_equidist(args, config: RunConfig) -> int:
    report = equidist.diag_equidist(
        args.q,
        args.n,
        args.bins,
        fracbits=config.fracbits,
        restrict_to_M=args.on_m,
    )
    emit(
        {
            "q": report.q,
            "stride": report.stride,
            "count": report.count,
            "bins": report.bins,
            "fracbits": report.fracbits,
            "m_start": report.m_start,
            "histogram": list(report.histogram),
            "discrepancy": report.discrepancy,
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="avoidpairs", epilog=EPILOG)
    top.add_argument("--fracbits", type=int, default=DEFAULT_FRACBITS,
                     help="fixed-point precision for diagnostics (32..1024)")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pell", help="emit recursion states and their checks")
    p.add_argument("--count", type=_positive_int, required=True)
    p.add_argument("--raw", action="store_true",
                   help="start at s=0 instead of the filtered set M")
    p.set_defaults(handler=cmd_pell, needs_config=False)

    c = sub.add_parser("criterion", help="exact floor criterion and scanners",
                       epilog=EPILOG)
    csub = c.add_subparsers(dest="subcommand", required=True)

    ce = csub.add_parser("eval")
    ce.add_argument("--m", type=int, required=True)
    ce.add_argument("--q", type=int, required=True)
    ce.add_argument("--csv", action="store_true")
    ce.set_defaults(handler=cmd_criterion_eval)

    cc = csub.add_parser("cert")
    cc.add_argument("--m", type=int, required=True)
    cc.add_argument("--f", type=int, required=True)
    cc.set_defaults(handler=cmd_criterion_cert)

    c4 = csub.add_parser("scan-t4")
    c4.add_argument("--from", dest="from_m", type=int, required=True)
    c4.add_argument("--to", dest="to_m", type=int, required=True)
    c4.add_argument("--assert", dest="assert_all", action="store_true")
    c4.add_argument("--csv", action="store_true")
    c4.add_argument("--jobs", type=_positive_int, default=1)
    c4.set_defaults(handler=cmd_criterion_scan_t4)

    c2 = csub.add_parser("scan-t2")
    c2.add_argument("--alpha", required=True, help="rational, e.g. 1/2")
    c2.add_argument("--beta", required=True, help="rational, e.g. 0")
    c2.add_argument("--from", dest="from_m", type=int, required=True)
    c2.add_argument("--to", dest="to_m", type=int, required=True)
    c2.add_argument("--csv", action="store_true")
    c2.add_argument("--jobs", type=_positive_int, default=1)
    c2.set_defaults(handler=cmd_criterion_scan_t2)

    ci = csub.add_parser("scan-interval")
    ci.add_argument("--m", type=int, required=True)
    ci.set_defaults(handler=cmd_criterion_scan_interval)

    cm = csub.add_parser("scan-mod23")
    cm.add_argument("--from", dest="from_m", type=int, required=True)
    cm.add_argument("--to", dest="to_m", type=int, required=True)
    cm.add_argument("--jobs", type=_positive_int, default=1)
    cm.set_defaults(handler=cmd_criterion_scan_mod23)

    w = sub.add_parser("witness", help="build and verify witness graphs")
    wsub = w.add_subparsers(dest="subcommand", required=True)

    wb = wsub.add_parser("build")
    wb.add_argument("--n", type=int, required=True)
    wb.add_argument("--e", type=int, required=True)
    wb.add_argument("--p", type=int, required=True)
    wb.add_argument("--pair", help="verify against this pair, e.g. 40,390")
    wb.add_argument("--graph6", help="write the graph6 encoding to this file")
    wb.set_defaults(handler=cmd_witness_build)

    wv = wsub.add_parser("verify")
    wv.add_argument("--graph6", required=True, help="file holding one graph6 line")
    wv.add_argument("--pair", required=True)
    wv.add_argument("--clique-vertices", required=True,
                    help="comma-separated vertex list (may be empty: '')")
    wv.add_argument("--complemented", action="store_true")
    wv.add_argument("--p", type=int, default=None,
                    help="girth bound (defaults to the pair's m)")
    wv.set_defaults(handler=cmd_witness_verify)

    o = sub.add_parser("oracle", help="brute-force enumeration oracles")
    osub = o.add_subparsers(dest="subcommand", required=True)

    oa = osub.add_parser("arrows")
    oa.add_argument("--n", type=int, required=True)
    oa.add_argument("--e", type=int, required=True)
    oa.add_argument("--m", type=int, required=True)
    oa.add_argument("--f", type=int, required=True)
    oa.add_argument("--query-guard", dest="query_guard", type=_positive_int,
                    default=oracle.DEFAULT_QUERY_GUARD)
    oa.set_defaults(handler=cmd_oracle_arrows)

    on = osub.add_parser("sn")
    on.add_argument("--n", type=int, required=True)
    on.add_argument("--m", type=int, required=True)
    on.add_argument("--f", type=int, required=True)
    on.add_argument("--csv", action="store_true")
    on.add_argument("--jobs", type=_positive_int, default=1)
    on.add_argument("--sweep-guard", dest="sweep_guard", type=_positive_int,
                    default=oracle.DEFAULT_SWEEP_GUARD)
    on.set_defaults(handler=cmd_oracle_sn)

    ox = osub.add_parser("xcheck-cf")
    ox.add_argument("--max-m", dest="max_m", type=int, default=12)
    ox.set_defaults(handler=cmd_oracle_xcheck_cf)

    b = sub.add_parser("bipartite", help="biclique-plus-forest constructions")
    bsub = b.add_subparsers(dest="subcommand", required=True)

    br = bsub.add_parser("realize")
    br.add_argument("--m", type=int, required=True)
    br.add_argument("--f", type=int, required=True)
    br.add_argument("--json", action="store_true")
    br.add_argument("--complement", action="store_true",
                    help="realize (m, m^2 - f) when f is above floor(m^2/2)")
    br.set_defaults(handler=cmd_bipartite_realize)

    d = sub.add_parser("diag", help="equidistribution diagnostics")
    dsub = d.add_subparsers(dest="subcommand", required=True)

    de = dsub.add_parser("equidist")
    de.add_argument("--q", type=int, required=True)
    de.add_argument("--n", type=int, required=True, help="sample count")
    de.add_argument("--bins", type=_positive_int, required=True)
    de.add_argument("--on-m", dest="on_m", action="store_true",
                    help="sample over the set M instead of the stride-4 sequence")
    de.set_defaults(handler=cmd_diag_equidist)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            fracbits=args.fracbits,
            jobs=getattr(args, "jobs", 1),
            fmt="csv" if getattr(args, "csv", False) else "json",
        )
        if getattr(args, "needs_config", True):
            return args.handler(args, config)
        return args.handler(args)
    except DomainError as exc:
        emit({"error": str(exc), "kind": "domain"}, out=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        emit({"error": str(exc), "kind": "guard"}, out=sys.stderr)
        return EXIT_GUARD
    except ScanAssertionError as exc:
        emit({"error": str(exc), "kind": "assertion"}, out=sys.stderr)
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())

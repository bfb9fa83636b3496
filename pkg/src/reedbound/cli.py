"""Command line: ``analyze`` one graph, ``verify`` the catalog over a corpus, ``search`` for extremes.

Exit codes: 0 clean, 1 operational error (bad input, I/O, interruption),
2 a catalog statement was violated (verify), 3 a counterexample was found
(search).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time
from fractions import Fraction
from importlib import resources

from . import __version__, harness, kernels
from .bounds import (
    CATALOG, Facts, UnknownStatement, conjecture_search, reed_report,
)
from .cancel import CancelToken
from .corpus import CorpusSpec, iter_corpus
from .graph import Graph6Error, components, complement, join_factorization, to_graph6
from .invariants import (
    has_one_factor, invariant_record, is_matching_covered, is_vertex_critical, matching_number,
)

log = logging.getLogger("reedbound")

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as a violation
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def report_schema() -> dict:
    """The published JSON schema every machine report validates against."""
    return json.loads(resources.files("reedbound").joinpath("report.schema.json").read_text("utf-8"))


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def signed_half(x: Fraction) -> str:
    if x == 0:
        return "0"
    s = "+" if x > 0 else "-"
    x = abs(x)
    return f"{s}{x.numerator}" if x.denominator == 1 else f"{s}{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- analyze


def analyze(text: str) -> dict:
    g = harness.graph_from_text(text)
    rec = invariant_record(g)
    rep = reed_report(rec)
    fac = join_factorization(g)
    comp = complement(g)
    out = {
        "graph6": to_graph6(g) if g.order <= 62 else None,
        "record": rec.as_dict(),
        "excess": harness.rational(rep.excess),
        "tightest_t": harness.rational(rep.tightest_t),
        "in_r0": rep.in_class(0),
        "conjecture_bound": (rec.clique + rec.max_degree + 2) // 2,
        "conjecture_holds": rep.conjecture_ok,
        "join_factors": [[v for v, (fi, _) in enumerate(fac.vertex_map) if fi == i]
                         for i in range(len(fac.factors))],
        "components": len(components(g)),
        "one_factor": has_one_factor(g),
        "matching_covered": is_matching_covered(g),
        "complement": {
            "nu": matching_number(comp),
            "one_factor": has_one_factor(comp),
            "matching_covered": is_matching_covered(comp),
        },
        "dense_cojoin": None,
    }
    if rec.chromatic > (g.order + 1) // 2:
        from .bounds import cojoin_subgraph_check

        res = cojoin_subgraph_check(g)
        out["dense_cojoin"] = {
            "verdict": res.verdict.value,
            "removed": res.witness.get("X"),
            "vertex_critical": is_vertex_critical(g),
        }
    return out


def _yes(b) -> str:
    return "yes" if b else "no"


def print_analysis(a: dict, fh=None) -> None:
    fh = fh or sys.stdout
    r = a["record"]
    excess = Fraction(a["excess"])
    print(f"graph6: {a['graph6']}", file=fh)
    print(
        f"n={r['n']} chi={r['chi']} omega={r['omega']} alpha={r['alpha']} "
        f"Delta={r['max_degree']} delta={r['min_degree']} nu={r['nu']}",
        file=fh,
    )
    tight = signed_half(Fraction(a["tightest_t"]))
    print(f"excess: {signed_half(excess)}  tightest t: {tight}  in R_0: {_yes(a['in_r0'])}", file=fh)
    print(
        f"ceil((omega+Delta+1)/2) = {a['conjecture_bound']}: "
        f"{'holds' if a['conjecture_holds'] else 'VIOLATED'}",
        file=fh,
    )
    sizes = ", ".join(str(len(f)) for f in a["join_factors"])
    nf = len(a["join_factors"])
    print(f"factorization: {nf} factor{'s' if nf != 1 else ''} ({sizes})", file=fh)
    print(f"1-factor: {_yes(a['one_factor'])}  matching covered: {_yes(a['matching_covered'])}", file=fh)
    c = a["complement"]
    print(
        f"complement: nu={c['nu']}  1-factor: {_yes(c['one_factor'])}  "
        f"matching covered: {_yes(c['matching_covered'])}",
        file=fh,
    )
    d = a["dense_cojoin"]
    if d is None:
        print("dense cojoin subgraph: not applicable (chi <= ceil(n/2))", file=fh)
    else:
        print(
            f"dense cojoin subgraph: {d['verdict']}  X={d['removed']}  "
            f"vertex critical: {_yes(d['vertex_critical'])}",
            file=fh,
        )


def cmd_analyze(args) -> int:
    try:
        a = analyze(args.graph)
    except (Graph6Error, ValueError) as exc:
        print(f"error: cannot read graph {args.graph!r}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        sys.stdout.write(dumps(a))
    else:
        print_analysis(a)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def corpus_from_args(args, required: bool = True):
    if args.corpus is None:
        if required:
            raise UsageError("--corpus is required")
        return None
    kw = {"mode": args.corpus}
    if args.corpus == "exhaustive":
        kw.update(n=args.n, min_n=args.min_n if args.min_n is not None else 1, dedup=args.dedup)
    elif args.corpus == "random":
        if args.count is None:
            raise UsageError("random corpus needs --count")
        kw.update(n=args.n, p=Fraction(args.p), seed=args.seed, count=args.count)
    elif args.corpus == "file":
        kw.update(path=args.path)
    else:
        kw.update(name=args.name)
    return CorpusSpec(**kw)


def print_summary(report: dict, fh=None) -> None:
    fh = fh or sys.stdout
    rows = [("statement", "population", "holds", "vacuous", "violated", "min slack")]
    for key, s in report["statements"].items():
        rows.append((key, str(s["population"]), str(s["holds"]), str(s["vacuous"]),
                     str(s["violated"]), s["min_slack"] or "-"))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))), file=fh)
    state = "complete" if report["complete"] else f"INCOMPLETE ({report['stop_reason']})"
    scope = ("sampled pairs/tuples only" if report["corpus"] is None
             else f"{report['population']} graphs, {report['distinct_profiles']} distinct profiles")
    print(f"{scope}, {len(report['violations'])} violation records, {state}", file=fh)


def write_csv(spec: CorpusSpec, path: str, cancel=None) -> None:
    fields = ["label", "graph6", "n", "chi", "omega", "alpha", "max_degree", "min_degree", "nu", "excess"]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(fields)
        for i, (label, g) in enumerate(iter_corpus(spec)):
            if i % 4096 == 0 and cancel is not None:
                cancel.check()
            f = Facts.from_profile(kernels.profile(g.rows, g.order))
            w.writerow([label, to_graph6(g), f.n, f.chi, f.omega, f.alpha, f.max_degree, f.min_degree,
                        f.nu, harness.rational(Fraction(f.excess2, 2))])


def cmd_verify(args) -> int:
    statements = harness.resolve_statements(args.statements)
    needs_tuples = any(CATALOG[k].arity == "tuple" for k in statements)
    needs_pairs = any(CATALOG[k].arity == "pair" for k in statements)
    if args.statements != "all":
        if needs_pairs and not args.pairs:
            raise UsageError("pair statements need --pairs <count>")
        if needs_tuples and not args.tuples:
            raise UsageError("tuple statements need --tuples <count>")
    spec = corpus_from_args(args, required=any(CATALOG[k].arity == "graph" for k in statements))
    started = time.monotonic()
    ver, report = harness.run_verification(
        spec, statements, pairs=args.pairs, tuples=args.tuples, seed=args.seed,
        max_factor_order=args.max_factor_order, max_k=args.k or 4, jobs=args.jobs,
        fail_fast=args.fail_fast,
    )
    if args.out:
        if args.format == "csv":
            if spec is None:
                raise UsageError("--format csv needs a corpus")
            write_csv(spec, args.out)
        else:
            write_text(args.out, dumps(report))
    print_summary(report)
    log.info("verify finished in %.1fs", time.monotonic() - started)
    for e in ver.read_errors:
        print(f"warning: skipped line {e.line}: {e.message}", file=sys.stderr)
    if ver.violated:
        return EXIT_VIOLATION
    return EXIT_OK if ver.complete else EXIT_ERROR


# ---------------------------------------------------------------- search


def _search_factors(args):
    if args.corpus is None:
        order = args.max_factor_order
        if order > 6:
            raise UsageError("default factor corpus is isomorphism classes up to 6 vertices; "
                             "pass --corpus for larger factors")
        spec = CorpusSpec("exhaustive", n=order, min_n=1, dedup=True)
    else:
        spec = corpus_from_args(args)
    return spec, [g for _, g in iter_corpus(spec)]


def search_conjecture(args, cancel) -> tuple[dict, int]:
    if args.m is None or args.k is None:
        raise UsageError("conjecture29 needs --m and --k")
    spec, factors = _search_factors(args)

    def progress(i):
        print(f"... {i} tuples", file=sys.stderr, flush=True)

    rep = conjecture_search(args.m, args.k, args.max_factor_order, factors, cancel=cancel, progress=progress)
    report = {
        "kind": "search",
        "target": "conjecture29",
        "schema_version": harness.SCHEMA_VERSION,
        "tool_version": __version__,
        "complete": rep.complete,
        "parameters": {"m": args.m, "k": args.k, "max_factor_order": args.max_factor_order,
                       "corpus": spec.to_dict()},
        "domain_size": rep.domain_size,
        "tuples_checked": rep.tuples_checked,
        "violations": [{"inputs": v["inputs"], "values": harness.jsonable(v["values"])}
                       for v in rep.violations],
        "min_slack": harness.rational(rep.min_slack),
        "min_slack_witness": rep.min_slack_witness,
    }
    print(f"{rep.domain_size} eligible factors, {rep.tuples_checked} tuples, "
          f"{len(rep.violations)} violations, min slack {report['min_slack']}")
    for v in rep.violations[:10]:
        print("violation: " + " + ".join(v["inputs"]))
    code = EXIT_COUNTEREXAMPLE if rep.violations else (EXIT_OK if rep.complete else EXIT_ERROR)
    return report, code


def search_tightness(args, cancel) -> tuple[dict, int]:
    statements = harness.resolve_statements(args.statements)
    spec = corpus_from_args(args, required=any(CATALOG[k].arity == "graph" for k in statements))
    ver, vrep = harness.run_verification(
        spec, statements, pairs=args.pairs, tuples=args.tuples, seed=args.seed,
        max_factor_order=args.max_factor_order, max_k=args.k or 4, jobs=args.jobs, cancel=cancel,
    )
    records = {}
    for key, s in vrep["statements"].items():
        records[key] = {"min_slack": s["min_slack"], "witness": s["tightness_witness"],
                        "population": s["population"], "violated": s["violated"]}
        print(f"{key}: min slack {s['min_slack'] or '-'}"
              + (f"  witness {' + '.join(s['tightness_witness']['inputs'])}" if s["tightness_witness"] else ""))
    report = {
        "kind": "search",
        "target": "tightness",
        "schema_version": harness.SCHEMA_VERSION,
        "tool_version": __version__,
        "complete": ver.complete,
        "parameters": {"corpus": spec.to_dict() if spec else None, "statements": statements,
                       "sampling": ver.sampling},
        "statements": records,
        "violations": vrep["violations"],
    }
    code = EXIT_COUNTEREXAMPLE if ver.violated else (EXIT_OK if ver.complete else EXIT_ERROR)
    return report, code


def search_five_cycle(args, cancel) -> tuple[dict, int]:
    res = harness.five_cycle_injection(seed=args.seed, count=args.count or 200,
                                       max_order=args.max_factor_order)
    report = {
        "kind": "search",
        "target": "five-cycle",
        "schema_version": harness.SCHEMA_VERSION,
        "tool_version": __version__,
        "complete": True,
        "parameters": {"seed": args.seed, "count": args.count or 200, "max_factor_order": args.max_factor_order},
        **res,
    }
    print(f"{res['instances']} tuples with a 5-cycle factor: {res['holds']} hold, "
          f"{res['violated']} violate the weak sparse join bound")
    return report, (EXIT_COUNTEREXAMPLE if res["violated"] else EXIT_OK)


SEARCHES = {"conjecture29": search_conjecture, "tightness": search_tightness, "five-cycle": search_five_cycle}


def cmd_search(args) -> int:
    cancel = CancelToken()
    try:
        report, code = SEARCHES[args.target](args, cancel)
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        write_text(args.out, dumps(report))
    return code


# ---------------------------------------------------------------- parser


def _add_corpus_args(p):
    p.add_argument("--corpus", choices=["exhaustive", "random", "file", "named"])
    p.add_argument("--n", type=int, help="order (exhaustive: largest order)")
    p.add_argument("--min-n", type=int, help="exhaustive: smallest order (default 1)")
    p.add_argument("--p", default="1/2", help="edge probability as a rational, e.g. 1/2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class (n <= 6)")
    p.add_argument("--path", help="graph6 file for --corpus file")
    p.add_argument("--name", help="named graph for --corpus named, e.g. petersen or cycle(5)")
    p.add_argument("--statements", default="all", help="comma list of statement keys, or all")
    p.add_argument("--pairs", type=int, default=0, help="number of sampled pairs")
    p.add_argument("--tuples", type=int, default=0, help="sampled tuples per tuple statement (and per m)")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, help="tuple size (search) or largest sampled tuple size (verify)")
    p.add_argument("--max-factor-order", type=int, default=7)
    p.add_argument("--out", help="report path")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--fail-fast", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reedbound", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"reedbound {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="invariants and class membership of one graph")
    p.add_argument("graph", help="graph6 string or named graph such as cycle(5)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="evaluate catalog statements over a corpus")
    _add_corpus_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="counterexample and tightness searches")
    p.add_argument("target", choices=sorted(SEARCHES))
    _add_corpus_args(p)
    p.set_defaults(func=cmd_search)

    sub.add_parser("statements", help="list catalog statements").set_defaults(func=cmd_statements)
    return parser


def cmd_statements(args) -> int:
    for key, s in CATALOG.items():
        tag = " (search only)" if s.search_only else ""
        print(f"{key} [{s.arity}]{tag}: {s.summary}")
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (UsageError, UnknownStatement, ValueError, Graph6Error, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownStatement) and exc.args else exc
        prefix = "unknown statement " if isinstance(exc, UnknownStatement) else ""
        print(f"error: {prefix}{msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

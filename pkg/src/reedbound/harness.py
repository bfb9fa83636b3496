"""Run the statement catalog over corpora and sampled pairs/tuples.

Single-graph statements depend on a graph only through its kernel profile,
so corpus graphs are first bucketed by profile (with multiplicity and the
earliest graph as representative) and each statement is evaluated once per
bucket. Shards have a fixed size, so reports do not depend on the number of
worker processes.
"""

from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import __version__, kernels
from .bounds import (
    CATALOG, Facts, PairFacts, Part, RamseyTable, TupleFacts, Verdict, evaluate, get_statement,
)
from .cancel import SearchCancelled, check
from .corpus import CorpusSpec, cycle, iter_corpus, random_graph, random_words
from .graph import Graph, from_graph6, to_graph6

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SHARD_SIZE = 1 << 16
RANDOM_SHARD_SIZE = 1 << 10
PAIR_STREAM = 1 << 40
TUPLE_STREAM = 1 << 41


def rational(x) -> Optional[str]:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj):
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Verdict):
        return obj.value
    return obj


# ---------------------------------------------------------------- profile buckets


@dataclass
class Bucket:
    count: int
    key: tuple  # position of the earliest member in corpus order
    graph6: str


def _merge(table: dict, part: dict):
    for prof, b in part.items():
        cur = table.get(prof)
        if cur is None:
            table[prof] = b
        else:
            cur.count += b.count
            if b.key < cur.key:
                cur.key, cur.graph6 = b.key, b.graph6


def _exhaustive_shard(task):
    n, lo, hi = task
    raw = kernels.sweep(n, lo, hi)
    return {prof: Bucket(c, (n, mask), to_graph6(Graph.from_mask(n, mask))) for prof, (c, mask) in raw.items()}


def _random_shard(task):
    spec_dict, lo, hi = task
    spec = CorpusSpec.from_dict(spec_dict)
    out: dict = {}
    for i in range(lo, hi):
        g = random_graph(spec.n, spec.p, spec.seed, i)
        prof = kernels.profile(g.rows, g.order)
        b = out.get(prof)
        if b is None:
            out[prof] = Bucket(1, (i,), to_graph6(g))
        else:
            b.count += 1
    return out


def _shard_tasks(spec: CorpusSpec):
    if spec.mode == "exhaustive" and not spec.dedup:
        tasks = []
        for n in spec.orders:
            total = 1 << (n * (n - 1) // 2)
            for lo in range(0, total, SHARD_SIZE):
                tasks.append((n, lo, min(total, lo + SHARD_SIZE)))
        return _exhaustive_shard, tasks, SHARD_SIZE
    if spec.mode == "random":
        d = spec.to_dict()
        tasks = [(d, lo, min(spec.count, lo + RANDOM_SHARD_SIZE)) for lo in range(0, spec.count, RANDOM_SHARD_SIZE)]
        return _random_shard, tasks, RANDOM_SHARD_SIZE
    return None, None, None


def _stream_buckets(spec: CorpusSpec, errors: list, out: dict, cancel=None) -> None:
    """Fill ``out`` in place so an interruption keeps what was read."""
    for i, (label, g) in enumerate(iter_corpus(spec, errors=errors)):
        if i % 1024 == 0:
            check(cancel)
        prof = kernels.profile(g.rows, g.order)
        b = out.get(prof)
        if b is None:
            out[prof] = Bucket(1, (i,), to_graph6(g) if g.order <= 62 else label)
        else:
            b.count += 1


# ---------------------------------------------------------------- aggregation


@dataclass
class Tally:
    arity: str
    holds: int = 0
    vacuous: int = 0
    violated: int = 0
    min_slack: Optional[Fraction] = None
    tight_key: tuple = ()
    tight_inputs: Optional[list] = None
    tight_values: Optional[dict] = None

    def add(self, verdict: Verdict, count: int, slack, key, inputs, values):
        if verdict is Verdict.HOLDS:
            self.holds += count
        elif verdict is Verdict.VACUOUS:
            self.vacuous += count
        else:
            self.violated += count
        if slack is not None and (
            self.min_slack is None or (slack, key) < (self.min_slack, self.tight_key)
        ):
            self.min_slack, self.tight_key = slack, key
            self.tight_inputs, self.tight_values = inputs, values

    def as_dict(self) -> dict:
        return {
            "arity": self.arity,
            "population": self.holds + self.vacuous + self.violated,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "violated": self.violated,
            "min_slack": rational(self.min_slack),
            "tightness_witness": None if self.tight_inputs is None else {
                "inputs": self.tight_inputs, "values": jsonable(self.tight_values),
            },
        }


@dataclass
class Verification:
    statements: list
    tallies: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    population: int = 0
    profiles: int = 0
    shards: int = 0
    shard_size: Optional[int] = None
    complete: bool = True
    stop_reason: Optional[str] = None
    read_errors: list = field(default_factory=list)
    sampling: dict = field(default_factory=dict)

    def tally(self, key) -> Tally:
        if key not in self.tallies:
            self.tallies[key] = Tally(CATALOG[key].arity)
        return self.tallies[key]

    @property
    def violated(self) -> int:
        return sum(t.violated for t in self.tallies.values())


def _evaluate_buckets(ver: Verification, buckets: dict, keys: list):
    for prof, b in sorted(buckets.items(), key=lambda kv: kv[1].key):
        facts = Facts.from_profile(prof)
        for key in keys:
            verdict, slack, values = evaluate(CATALOG[key], facts)
            ver.tally(key).add(verdict, b.count, slack, b.key, [b.graph6], values)
            if verdict is Verdict.VIOLATED:
                ver.violations.append({
                    "statement": key, "inputs": [b.graph6], "count": b.count,
                    "facts": facts.as_dict(), "values": jsonable(values),
                })


def verify_corpus(spec: CorpusSpec, statements: list, jobs: int = 1, fail_fast: bool = False,
                  cancel=None, ver: Optional[Verification] = None) -> Verification:
    keys = [k for k in statements if CATALOG[k].arity == "graph"]
    ver = ver or Verification(statements)
    for k in keys:
        ver.tally(k)
    worker, tasks, size = _shard_tasks(spec)
    buckets: dict = {}
    try:
        if worker is None:
            _stream_buckets(spec, ver.read_errors, buckets, cancel)
            ver.shards = 1
        else:
            ver.shard_size = size
            ver.shards = len(tasks)
            if jobs > 1 and len(tasks) > 1:
                with multiprocessing.Pool(jobs) as pool:
                    for part in pool.imap(worker, tasks):
                        check(cancel)
                        _merge(buckets, part)
                        if fail_fast and _any_violation(part, keys):
                            ver.complete, ver.stop_reason = False, "fail-fast"
                            pool.terminate()
                            break
            else:
                for task in tasks:
                    check(cancel)
                    part = worker(task)
                    _merge(buckets, part)
                    if fail_fast and _any_violation(part, keys):
                        ver.complete, ver.stop_reason = False, "fail-fast"
                        break
    except (KeyboardInterrupt, SearchCancelled):
        ver.complete, ver.stop_reason = False, "interrupted"
    ver.population += sum(b.count for b in buckets.values())
    ver.profiles += len(buckets)
    _evaluate_buckets(ver, buckets, keys)
    return ver


def _any_violation(part: dict, keys: list) -> bool:
    for prof in part:
        facts = Facts.from_profile(prof)
        for k in keys:
            if evaluate(CATALOG[k], facts)[0] is Verdict.VIOLATED:
                return True
    return False


# ---------------------------------------------------------------- sampled pairs and tuples


def _sub_seed(seed: int, stream: int) -> int:
    return (seed + stream) % 2**64


def sample_factor(seed: int, index: int, max_order: int, accept=None, min_order: int = 1,
                  attempts: int = 4096) -> Graph:
    """A seeded random graph with order in [min_order, max_order] satisfying ``accept``."""
    for a in range(attempts):
        w = random_words(seed, index * attempts + a, 2)
        n = min_order + w[0] % (max_order - min_order + 1)
        p = Fraction(w[1] % 9, 8)
        g = random_graph(n, p, seed, (index * attempts + a) | (1 << 62))
        if accept is None or accept(g):
            return g
    raise RuntimeError("could not sample a factor meeting the hypothesis")


def sample_pairs(count: int, seed: int, max_order: int = 7):
    s = _sub_seed(seed, PAIR_STREAM)
    for i in range(count):
        yield sample_factor(s, 2 * i, max_order), sample_factor(s, 2 * i + 1, max_order)


def _factor_rule(key: str, m: int):
    def max_deg(g):
        return max(map(int.bit_count, g.rows))

    if key == "sparse_join_deficit":
        return (lambda g: max_deg(g) + 1 <= g.order - 3), 4
    if key == "sparse_join_deficit_weak":
        from .graph import is_five_cycle
        return (lambda g: max_deg(g) + 1 <= g.order - 2 and not is_five_cycle(g)), 3
    if key == "noncomplete_join_deficit":
        return (lambda g: not g.is_complete()), 2
    if key in ("ramsey_join_deficit", "join_deficit_conjecture"):
        r = RamseyTable.get(m) if key == "ramsey_join_deficit" else 0

        def rule(g):
            if max_deg(g) + 1 > g.order - m:
                return False
            if g.order < r:
                return Part.of(g).excess2 <= 1
            return True

        return rule, m + 1
    raise KeyError(key)


def sample_tuples(key: str, count: int, seed: int, max_order: int = 7, m: int = 0, max_k: int = 4):
    """Tuples of 2..max_k factors, each satisfying the statement's per-factor hypothesis."""
    rule, min_order = _factor_rule(key, m)
    stream = TUPLE_STREAM + (sorted(CATALOG).index(key) << 32) + (m << 24)
    s = _sub_seed(seed, stream)
    for i in range(count):
        k = 2 + random_words(s, i, 1)[0] % (max_k - 1)
        yield [sample_factor(s, (i << 3) + j + 1, max_order, rule, min_order) for j in range(k)]


def verify_pairs(ver: Verification, keys: list, count: int, seed: int, max_order: int = 7, cancel=None):
    keys = [k for k in keys if CATALOG[k].arity == "pair"]
    if not keys or count <= 0:
        return
    for k in keys:
        ver.tally(k)
    try:
        for i, (a, b) in enumerate(sample_pairs(count, seed, max_order)):
            if i % 256 == 0:
                check(cancel)
            facts = PairFacts.of(a, b)
            _record_instance(ver, keys, facts, (i,), [facts.a.graph6, facts.b.graph6])
    except (KeyboardInterrupt, SearchCancelled):
        ver.complete, ver.stop_reason = False, "interrupted"


def verify_tuples(ver: Verification, keys: list, count: int, seed: int, max_order: int = 7,
                  max_k: int = 4, cancel=None):
    keys = [k for k in keys if CATALOG[k].arity == "tuple" and not CATALOG[k].search_only]
    if not keys or count <= 0:
        return
    try:
        for key in keys:
            ver.tally(key)
            ms = [m for m, _ in RamseyTable.items()] if key == "ramsey_join_deficit" else [0]
            for m in ms:
                for i, graphs in enumerate(sample_tuples(key, count, seed, max_order, m, max_k)):
                    if i % 64 == 0:
                        check(cancel)
                    facts = TupleFacts.of(graphs, m=m)
                    _record_instance(ver, [key], facts, (m, i), [p.graph6 for p in facts.parts],
                                     extra={"m": m} if m else None)
    except (KeyboardInterrupt, SearchCancelled):
        ver.complete, ver.stop_reason = False, "interrupted"


def _record_instance(ver, keys, facts, order_key, inputs, extra=None):
    for key in keys:
        verdict, slack, values = evaluate(CATALOG[key], facts)
        if extra:
            values = {**values, **extra}
        ver.tally(key).add(verdict, 1, slack, order_key, inputs, values)
        if verdict is Verdict.VIOLATED:
            ver.violations.append({"statement": key, "inputs": inputs, "count": 1, "values": jsonable(values)})


def five_cycle_injection(seed: int = 0, count: int = 200, max_order: int = 7) -> dict:
    """Evaluate the weak sparse join bound with 5-cycles allowed as factors.

    Runs k copies of C_5 for k = 2..4 and ``count`` seeded tuples mixing C_5
    with sampled factors that meet the degree condition; returns the counts
    and any violating tuples.
    """
    key = "sparse_join_deficit_weak"
    stmt = get_statement(key)
    c5 = cycle(5)
    rule, min_order = _factor_rule(key, 0)
    s = _sub_seed(seed, TUPLE_STREAM - 1)
    cases = [[c5] * k for k in (2, 3, 4)]
    for i in range(count):
        k = 2 + random_words(s, i, 1)[0] % 3
        others = [sample_factor(s, (i << 3) + j + 1, max_order, rule, min_order) for j in range(k - 1)]
        cases.append([c5] + others)
    out = {"instances": 0, "holds": 0, "violated": 0, "vacuous": 0, "violations": []}
    for graphs in cases:
        facts = TupleFacts.of(graphs, exclude_five_cycle=False)
        verdict, slack, values = evaluate(stmt, facts)
        out["instances"] += 1
        out[verdict.value] += 1
        if verdict is Verdict.VIOLATED:
            out["violations"].append({"inputs": [p.graph6 for p in facts.parts], "values": jsonable(values)})
    return out


# ---------------------------------------------------------------- reports


def resolve_statements(spec: str | Iterable[str]) -> list:
    if isinstance(spec, str):
        if spec.strip() == "all":
            return [k for k, s in CATALOG.items() if not s.search_only]
        items = [s.strip() for s in spec.split(",") if s.strip()]
    else:
        items = list(spec)
    for k in items:
        get_statement(k)
    return items


def verification_report(ver: Verification, corpus: Optional[CorpusSpec]) -> dict:
    return {
        "kind": "verification",
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "backend_independent": True,
        "complete": ver.complete,
        "stop_reason": ver.stop_reason,
        "corpus": corpus.to_dict() if corpus else None,
        "shards": {"size": ver.shard_size, "count": ver.shards},
        "population": ver.population,
        "distinct_profiles": ver.profiles,
        "sampling": ver.sampling,
        "statements": {k: ver.tallies[k].as_dict() for k in sorted(ver.tallies)},
        "violations": ver.violations,
        "read_errors": [{"line": e.line, "message": e.message} for e in ver.read_errors],
    }


def run_verification(spec: Optional[CorpusSpec], statements: list, *, pairs: int = 0, tuples: int = 0,
                     seed: int = 0, max_factor_order: int = 7, max_k: int = 4, jobs: int = 1,
                     fail_fast: bool = False, cancel=None) -> tuple[Verification, dict]:
    ver = Verification(statements)
    if spec is not None and any(CATALOG[k].arity == "graph" for k in statements):
        verify_corpus(spec, statements, jobs=jobs, fail_fast=fail_fast, cancel=cancel, ver=ver)
    stop = fail_fast and ver.violated
    if pairs and not stop and ver.complete:
        verify_pairs(ver, statements, pairs, seed, max_factor_order, cancel)
    if tuples and not stop and ver.complete and not (fail_fast and ver.violated):
        verify_tuples(ver, statements, tuples, seed, max_factor_order, max_k, cancel)
    if pairs or tuples:
        ver.sampling = {"pairs": pairs, "tuples": tuples, "seed": seed,
                        "max_factor_order": max_factor_order, "max_k": max_k}
    return ver, verification_report(ver, spec)


def graph_from_text(text: str) -> Graph:
    from .corpus import is_named, named

    if is_named(text):
        return named(text)
    return from_graph6(text)

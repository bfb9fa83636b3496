"""Reed excess, the classes R_t, and the catalog of checkable bounds.

Half-integers are carried as integer counts of halves (``t2 = 2 t``), so
class membership, tightest classes and every verdict are decided in exact
integer arithmetic. Slacks are reported as ``Fraction`` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Optional, Sequence

from . import kernels
from .cancel import SearchCancelled, check
from .graph import Graph, complement, is_connected, is_five_cycle, join, remove_vertices, to_graph6
from .invariants import InvariantRecord, chromatic_number, clique_number, invariant_record


class Verdict(str, Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    VIOLATED = "violated"


class UnknownStatement(KeyError):
    pass


class ArityError(ValueError):
    pass


# ---------------------------------------------------------------- Reed excess


def excess2(chi: int, omega: int, max_degree: int) -> int:
    """Twice the Reed excess chi - (omega + Delta + 1)/2."""
    return 2 * chi - omega - max_degree - 1


@dataclass(frozen=True)
class ReedReport:
    excess: Fraction
    conjecture_ok: bool
    tightest_t: Fraction

    def in_class(self, t) -> bool:
        """Membership in R_t, i.e. excess <= t (no ceiling)."""
        return self.excess <= Fraction(t)


def reed_report(g: Graph | InvariantRecord) -> ReedReport:
    rec = g if isinstance(g, InvariantRecord) else invariant_record(g)
    e2 = excess2(rec.chromatic, rec.clique, rec.max_degree)
    # excess is already a half-integer, so the tightest half-integer t is the excess itself
    return ReedReport(
        excess=Fraction(e2, 2),
        conjecture_ok=rec.chromatic <= (rec.clique + rec.max_degree + 2) // 2,
        tightest_t=Fraction(e2, 2),
    )


class RamseyTable:
    """Diagonal Ramsey numbers r(m, m), known exactly only for m <= 4."""

    _VALUES = {1: 1, 2: 2, 3: 6, 4: 18}

    @classmethod
    def get(cls, m: int) -> int:
        try:
            return cls._VALUES[m]
        except KeyError:
            raise ValueError(f"r({m},{m}) is not known exactly; only m in 1..4") from None

    @classmethod
    def items(cls):
        return sorted(cls._VALUES.items())


# ---------------------------------------------------------------- inputs


@dataclass(frozen=True)
class Facts:
    """Per-graph quantities consumed by single-graph statements.

    Optional fields are None where the kernels skip them because no
    statement needs them (see ``kernels.profile``).
    """

    n: int
    chi: int
    omega: int
    alpha: int
    max_degree: int
    min_degree: int
    nu: int
    nu_complement: int
    complement_components: int
    complement_matching_covered: Optional[bool]
    vertex_critical: Optional[bool]
    cojoin_subgraph_found: Optional[bool]
    greedy2: int
    greedy3: int
    greedy4: int
    min_missed_exact: bool
    min_missed_classes: int
    min_missed_count: int
    min_missed_adjacent: bool
    min_missed_alpha: int

    @classmethod
    def from_profile(cls, prof: Sequence[int]) -> Facts:
        vals = dict(zip(kernels.PROFILE_FIELDS, prof))
        for key in ("complement_matching_covered", "vertex_critical", "cojoin_subgraph_found"):
            vals[key] = None if vals[key] < 0 else bool(vals[key])
        for key in ("min_missed_exact", "min_missed_adjacent"):
            vals[key] = bool(vals[key])
        return cls(**vals)

    @classmethod
    def of(cls, g: Graph) -> Facts:
        return cls.from_profile(kernels.profile(g.rows, g.order))

    @property
    def excess2(self) -> int:
        return excess2(self.chi, self.omega, self.max_degree)

    @property
    def complete(self) -> bool:
        return self.min_degree == self.n - 1

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in kernels.PROFILE_FIELDS}


@dataclass(frozen=True)
class Part:
    """A join factor or a join, summarised for the join statements."""

    n: int
    chi: int
    omega: int
    max_degree: int
    complete: bool
    five_cycle: bool
    graph6: str

    @property
    def excess2(self) -> int:
        return excess2(self.chi, self.omega, self.max_degree)

    @classmethod
    def of(cls, g: Graph, record: InvariantRecord | None = None) -> Part:
        rec = record or invariant_record(g)
        return cls(
            n=g.order,
            chi=rec.chromatic,
            omega=rec.clique,
            max_degree=rec.max_degree,
            complete=g.is_complete(),
            five_cycle=is_five_cycle(g),
            graph6=to_graph6(g) if g.order <= 62 else "",
        )


@dataclass(frozen=True)
class PairFacts:
    a: Part
    b: Part
    join: Part
    join_chi_direct: int
    join_omega_direct: int

    @classmethod
    def of(cls, a: Graph, b: Graph) -> PairFacts:
        j = join(a, b)
        return cls(
            a=Part.of(a),
            b=Part.of(b),
            join=Part.of(j),
            join_chi_direct=chromatic_number(j),
            join_omega_direct=clique_number(j),
        )


@dataclass(frozen=True)
class TupleFacts:
    parts: tuple[Part, ...]
    join: Optional[Part]
    m: int = 0
    exclude_five_cycle: bool = True

    @property
    def k(self) -> int:
        return len(self.parts)

    @classmethod
    def of(cls, graphs: Sequence[Graph], m: int = 0, exclude_five_cycle: bool = True) -> TupleFacts:
        parts = tuple(Part.of(g) for g in graphs)
        j = Part.of(join(list(graphs))) if len(graphs) >= 2 else None
        return cls(parts, j, m, exclude_five_cycle)

    @classmethod
    def from_parts(cls, parts: Sequence[Part], m: int = 0, exclude_five_cycle: bool = True) -> TupleFacts:
        """Join summary by the join identities, without building the join graph."""
        if len(parts) < 2:
            return cls(tuple(parts), None, m, exclude_five_cycle)
        total = sum(p.n for p in parts)
        j = Part(
            n=total,
            chi=sum(p.chi for p in parts),
            omega=sum(p.omega for p in parts),
            max_degree=max(p.max_degree + total - p.n for p in parts),
            complete=all(p.complete for p in parts),
            five_cycle=False,
            graph6="",
        )
        return cls(tuple(parts), j, m, exclude_five_cycle)


# ---------------------------------------------------------------- catalog


@dataclass(frozen=True)
class Statement:
    key: str
    arity: str  # "graph", "pair" or "tuple"
    summary: str
    hypothesis: Callable
    # returns (conclusion holds, slack or None, recorded values)
    conclusion: Callable
    search_only: bool = False


def _half(x2: int) -> Fraction:
    return Fraction(x2, 2)


def _ceil_half_n(n: int) -> int:
    return (n + 1) // 2


def _window(lo2: int, hi2: int):
    return range(lo2, hi2 + 1)


def _min_bound(chi, bounds2):
    best = min(bounds2)
    return 2 * chi <= best, _half(best - 2 * chi)


# -- single graph


def _reed(f: Facts):
    cap = (f.omega + f.max_degree + 2) // 2
    return f.chi <= cap, Fraction(cap - f.chi), {"ceil_bound": cap, "excess": _half(f.excess2)}


def _indep_family(f: Facts):
    fam = [(r * c, c) for r, c in ((2, f.greedy2), (3, f.greedy3), (4, f.greedy4)) if c >= 1]
    if f.min_missed_classes >= 1:
        fam.append((f.n - f.min_missed_count, f.min_missed_classes))
    return fam


def _indep_sets(f: Facts):
    bounds2 = [f.omega + f.n - covered + 2 * m - 1 for covered, m in _indep_family(f)]
    ok, slack = _min_bound(f.chi, bounds2)
    return ok, slack, {"best_bound": _half(min(bounds2)), "families": len(bounds2)}


def _alpha_bound(f: Facts):
    b2 = f.omega + f.n - f.alpha + 1
    return 2 * f.chi <= b2, _half(b2 - 2 * f.chi), {"bound": _half(b2)}


def _order_bound(f: Facts):
    b2 = f.omega + f.n
    return 2 * f.chi <= b2, _half(b2 - 2 * f.chi), {"bound": _half(b2)}


def _excess_at_most(limit2: int):
    def concl(f):
        e2 = f.excess2
        return e2 <= limit2, _half(limit2 - e2), {"excess": _half(e2)}

    return concl


def _greedy_partial(f: Facts):
    fam = [(2, f.greedy2), (3, f.greedy3), (4, f.greedy4), (3, f.min_missed_classes)]
    bounds2 = [f.omega + f.n - (r - 2) * m - 1 for r, m in fam]
    ok, slack = _min_bound(f.chi, bounds2)
    return ok, slack, {"best_bound": _half(min(bounds2))}


def _min_missed(f: Facts):
    b2 = f.omega + f.max_degree + 1 + f.min_missed_classes + 1
    bound_ok = 2 * f.chi <= b2
    ok = bound_ok and f.min_missed_adjacent and f.min_missed_alpha <= 2
    return ok, _half(b2 - 2 * f.chi), {
        "bound": _half(b2),
        "classes": f.min_missed_classes,
        "missed": f.min_missed_count,
        "missed_dominated": f.min_missed_adjacent,
        "missed_alpha": f.min_missed_alpha,
    }


def _averaged(f: Facts):
    # chi <= (omega + (n + Delta + 1)/2) / 2, in quarters
    b4 = 2 * f.omega + f.n + f.max_degree + 1
    return 4 * f.chi <= b4, Fraction(b4 - 4 * f.chi, 4), {"bound": Fraction(b4, 4)}


def _degree_window(f: Facts, lo2: int, other: int):
    """Pairs (t2, slack) over half-integers t in the window where the graph is outside R_t."""
    out = []
    for t2 in _window(lo2, 4):
        if f.excess2 > t2:
            out.append((t2, f.n - t2 - other - f.max_degree - 1))
    return out


def _outside_clique_hyp(f):
    return bool(_degree_window(f, 0, f.omega))


def _outside_clique(f):
    rows = _degree_window(f, 0, f.omega)
    slack = min(s for _, s in rows)
    return slack >= 0, Fraction(slack), {"t_values": [_half(t) for t, _ in rows]}


def _outside_alpha_hyp(f):
    return bool(_degree_window(f, -4, f.alpha))


def _outside_alpha(f):
    rows = _degree_window(f, -4, f.alpha)
    slack = min(s for _, s in rows)
    return slack >= 0, Fraction(slack), {"t_values": [_half(t) for t, _ in rows]}


def _outside_half_hyp(f):
    return any(f.excess2 > t2 for t2 in _window(1, 4))


def _outside_half(f):
    slacks = [f.alpha - 3]
    for t2 in _window(1, 4):
        if f.excess2 > t2:
            slacks.append(f.n - t2 - 3 - f.max_degree - 1)
    s = min(slacks)
    return s >= 0, Fraction(s), {"alpha": f.alpha}


def _clique_square(f):
    s = f.omega * f.omega + f.omega - f.n
    return s >= 0, Fraction(s), {"omega": f.omega, "n": f.n}


def _high_degree(extra):
    def hyp(f):
        gap = f.n - f.max_degree
        return gap * gap <= f.n + extra(f)

    return hyp


def _one_factor(f):
    ok = 2 * f.nu_complement == f.n
    return ok, None, {"nu_complement": f.nu_complement}


def _matching_covered(f):
    return bool(f.complement_matching_covered), None, {
        "complement_matching_covered": f.complement_matching_covered
    }


def _cojoin(f):
    return bool(f.cojoin_subgraph_found), None, {}


def _critical_cojoin(f):
    return f.complement_components > 1, None, {"complement_components": f.complement_components}


def _dense(f):
    return f.chi > _ceil_half_n(f.n)


# -- pairs


def _additivity(p: PairFacts):
    a, b, j = p.a, p.b, p.join
    checks = {
        "order": j.n == a.n + b.n,
        "clique": p.join_omega_direct == a.omega + b.omega,
        "chromatic": p.join_chi_direct == a.chi + b.chi,
        "max_degree": j.max_degree == max(a.max_degree + b.n, a.n + b.max_degree),
    }
    return all(checks.values()), None, checks


def _preserves(p: PairFacts):
    t2 = min(p.a.excess2, p.b.excess2)
    e2 = p.join.excess2
    return e2 <= t2, _half(t2 - e2), {"t": _half(t2), "join_excess": _half(e2)}


def _pair_r0(p: PairFacts):
    e2 = p.join.excess2
    return e2 <= 0, _half(-e2), {"join_excess": _half(e2)}


# -- tuples


def _sparse(gap):
    def test(q: TupleFacts):
        return q.k >= 2 and all(p.max_degree + 1 <= p.n - gap for p in q.parts)

    return test


def _join_target(target2: Callable[[TupleFacts], int]):
    def concl(q: TupleFacts):
        t2 = target2(q)
        e2 = q.join.excess2
        return e2 <= t2, _half(t2 - e2), {"t": _half(t2), "join_excess": _half(e2), "k": q.k}

    return concl


def _weak_sparse_hyp(q: TupleFacts):
    if not _sparse(2)(q):
        return False
    return not (q.exclude_five_cycle and any(p.five_cycle for p in q.parts))


def _ramsey_hyp(q: TupleFacts):
    if not 1 <= q.m <= 4:
        raise ValueError("the Ramsey-gated join bound needs m in 1..4")
    if not _sparse(q.m)(q):
        return False
    r = RamseyTable.get(q.m)
    return all(p.n >= r or p.excess2 <= 1 for p in q.parts)


def _conjecture_hyp(q: TupleFacts):
    if q.m < 1:
        raise ValueError("m must be at least 1")
    return _sparse(q.m)(q)


def _param_target(q: TupleFacts) -> int:
    # (m - 1)(1 - k/2), doubled
    return (q.m - 1) * (2 - q.k)


_ALWAYS = lambda _: True  # noqa: E731

CATALOG: dict[str, Statement] = {
    s.key: s
    for s in [
        Statement("reed_conjecture", "graph",
                  "chi <= ceil((omega + Delta + 1)/2)", _ALWAYS, _reed),
        Statement("independent_sets_bound", "graph",
                  "chi <= (omega + n - sum|I_j| + 2m - 1)/2 for disjoint independent I_1..I_m (m >= 1)",
                  lambda f: bool(_indep_family(f)), _indep_sets),
        Statement("alpha_bound", "graph",
                  "chi <= (omega + n - alpha + 1)/2", _ALWAYS, _alpha_bound),
        Statement("order_bound", "graph",
                  "chi <= (omega + n)/2", _ALWAYS, _order_bound),
        Statement("dense_cojoin_subgraph", "graph",
                  "chi > ceil(n/2) => some G - X has disconnected complement and the same chi",
                  _dense, _cojoin),
        Statement("critical_cojoin", "graph",
                  "vertex-critical and chi > ceil(n/2) => complement disconnected",
                  lambda f: _dense(f) and bool(f.vertex_critical), _critical_cojoin),
        Statement("alpha_two_half", "graph",
                  "alpha <= 2 => G in R_1/2", lambda f: f.alpha <= 2, _excess_at_most(1)),
        Statement("greedy_partial_bound", "graph",
                  "G not complete, M r-greedy => chi <= (omega + n - (r-2)|M| - 1)/2",
                  lambda f: not f.complete, _greedy_partial),
        Statement("min_missed_bound", "graph",
                  "M a minimum-missed 3-greedy coloring => chi <= (omega+Delta+1)/2 + (|M|+1)/2",
                  lambda f: f.min_missed_exact, _min_missed),
        Statement("averaged_bound", "graph",
                  "chi <= (omega + (n + Delta + 1)/2)/2", _ALWAYS, _averaged),
        Statement("dense_in_r0", "graph",
                  "chi > ceil(n/2) => G in R_0", _dense, _excess_at_most(0)),
        Statement("outside_class_clique_degree", "graph",
                  "t >= 0, G not in R_t => Delta + 1 <= n - 2t - omega (t in 0..2 by halves)",
                  _outside_clique_hyp, _outside_clique),
        Statement("alpha_two_clique_square", "graph",
                  "alpha <= 2 => omega^2 + omega >= n", lambda f: f.alpha <= 2, _clique_square),
        Statement("high_degree_alpha_half", "graph",
                  "Delta >= n - sqrt(n + 2 alpha + 1) => G in R_1/2",
                  _high_degree(lambda f: 2 * f.alpha + 1), _excess_at_most(1)),
        Statement("high_degree_half", "graph",
                  "Delta >= n - sqrt(n + 7) => G in R_1/2",
                  _high_degree(lambda f: 7), _excess_at_most(1)),
        Statement("outside_class_alpha_degree", "graph",
                  "G not in R_t => Delta + 1 <= n - 2t - alpha (t in -2..2 by halves)",
                  _outside_alpha_hyp, _outside_alpha),
        Statement("outside_half_alpha_three", "graph",
                  "t >= 1/2, G not in R_t => alpha >= 3 and Delta + 1 <= n - 2t - 3",
                  _outside_half_hyp, _outside_half),
        Statement("complement_matching_deficient", "graph",
                  "nu(complement) < floor(n/2) => G in R_0",
                  lambda f: f.nu_complement < f.n // 2, _excess_at_most(0)),
        Statement("complement_one_factor", "graph",
                  "n even, G not in R_0 => complement has a 1-factor",
                  lambda f: f.n % 2 == 0 and f.excess2 > 0, _one_factor),
        Statement("complement_matching_covered", "graph",
                  "n even, G not in R_1 => complement matching covered",
                  lambda f: f.n % 2 == 0 and f.excess2 > 2, _matching_covered),
        Statement("join_additivity", "pair",
                  "|A+B|, omega, chi add; Delta(A+B) = max(Delta(A)+|B|, |A|+Delta(B))",
                  _ALWAYS, _additivity),
        Statement("join_preserves_class", "pair",
                  "H in R_t => G + H in R_t (t = tightest class of either factor)",
                  _ALWAYS, _preserves),
        Statement("join_in_r0", "pair", "A + B in R_0", _ALWAYS, _pair_r0),
        Statement("sparse_join_deficit", "tuple",
                  "k >= 2, Delta(G_i) + 1 <= |G_i| - 3 => join in R_(2-k)",
                  _sparse(3), _join_target(lambda q: 2 * (2 - q.k))),
        Statement("sparse_join_deficit_weak", "tuple",
                  "k >= 2, no 5-cycles, Delta(G_i) + 1 <= |G_i| - 2 => join in R_(2-k)",
                  _weak_sparse_hyp, _join_target(lambda q: 2 * (2 - q.k))),
        Statement("ramsey_join_deficit", "tuple",
                  "m <= 4, (|G_i| < r(m,m) => G_i in R_1/2), Delta(G_i)+1 <= |G_i|-m => join in R_((m-1)(1-k/2))",
                  _ramsey_hyp, _join_target(_param_target)),
        Statement("join_deficit_conjecture", "tuple",
                  "Delta(G_i)+1 <= |G_i|-m => join in R_((m-1)(1-k/2)) (open; searched, not asserted)",
                  _conjecture_hyp, _join_target(_param_target), search_only=True),
        Statement("noncomplete_join_deficit", "tuple",
                  "k >= 2, all G_i non-complete => join in R_(1-k/2)",
                  lambda q: q.k >= 2 and not any(p.complete for p in q.parts),
                  _join_target(lambda q: 2 - q.k)),
    ]
}

GRAPH_STATEMENTS = [k for k, s in CATALOG.items() if s.arity == "graph"]
PAIR_STATEMENTS = [k for k, s in CATALOG.items() if s.arity == "pair"]
TUPLE_STATEMENTS = [k for k, s in CATALOG.items() if s.arity == "tuple" and not s.search_only]


@dataclass
class CheckOutcome:
    statement_id: str
    verdict: Verdict
    slack: Optional[Fraction] = None
    witness: dict = field(default_factory=dict)
    notes: str = ""


def evaluate(stmt: Statement, facts) -> tuple[Verdict, Optional[Fraction], dict]:
    """Verdict, slack (None when vacuous or boolean) and recorded values."""
    if not stmt.hypothesis(facts):
        return Verdict.VACUOUS, None, {}
    ok, slack, values = stmt.conclusion(facts)
    return (Verdict.HOLDS if ok else Verdict.VIOLATED), slack, values


def get_statement(statement_id: str) -> Statement:
    try:
        return CATALOG[statement_id]
    except KeyError:
        raise UnknownStatement(statement_id) from None


def check_statement(statement_id: str, data, *, m: int = 0, exclude_five_cycle: bool = True) -> CheckOutcome:
    """Evaluate one catalog entry on a graph, a pair of graphs or a tuple of graphs."""
    stmt = get_statement(statement_id)
    if stmt.arity == "graph":
        if isinstance(data, Graph):
            facts = Facts.of(data)
            inputs = [to_graph6(data)]
        elif isinstance(data, Facts):
            facts, inputs = data, []
        else:
            raise ArityError(f"{statement_id} takes a single graph")
    elif stmt.arity == "pair":
        if isinstance(data, PairFacts):
            facts, inputs = data, [data.a.graph6, data.b.graph6]
        elif isinstance(data, (tuple, list)) and len(data) == 2 and all(isinstance(g, Graph) for g in data):
            facts = PairFacts.of(*data)
            inputs = [facts.a.graph6, facts.b.graph6]
        else:
            raise ArityError(f"{statement_id} takes a pair of graphs")
    else:
        if isinstance(data, TupleFacts):
            facts = data
        elif isinstance(data, (tuple, list)) and all(isinstance(g, Graph) for g in data):
            facts = TupleFacts.of(data, m=m, exclude_five_cycle=exclude_five_cycle)
        else:
            raise ArityError(f"{statement_id} takes a tuple of graphs")
        inputs = [p.graph6 for p in facts.parts]
    verdict, slack, values = evaluate(stmt, facts)
    notes = ""
    if verdict is Verdict.VACUOUS:
        notes = "hypothesis not met"
    witness = {"inputs": inputs, "values": values}
    if stmt.arity == "graph":
        witness["facts"] = facts.as_dict()
    return CheckOutcome(statement_id, verdict, slack, witness, notes)


# ---------------------------------------------------------------- named searches


def find_cojoin_subgraph(g: Graph, cancel=None) -> Optional[tuple[int, ...]]:
    """Smallest X (then lexicographically first) with complement(G - X) disconnected
    and chi(G - X) = chi(G), or None."""
    chi = chromatic_number(g)
    for size in range(g.order - 1):
        check(cancel)
        for x in combinations(range(g.order), size):
            h = remove_vertices(g, x)
            if not is_connected(complement(h)) and chromatic_number(h) == chi:
                return x
    return None


def cojoin_subgraph_check(g: Graph, cancel=None) -> CheckOutcome:
    """The dense-graph subgraph claim with its witness set X."""
    chi = chromatic_number(g)
    if chi <= _ceil_half_n(g.order):
        return CheckOutcome("dense_cojoin_subgraph", Verdict.VACUOUS, notes="chi <= ceil(n/2)")
    x = find_cojoin_subgraph(g, cancel)
    if x is None:
        return CheckOutcome("dense_cojoin_subgraph", Verdict.VIOLATED,
                            witness={"inputs": [to_graph6(g)], "chi": chi},
                            notes="no subset X found")
    return CheckOutcome("dense_cojoin_subgraph", Verdict.HOLDS,
                        witness={"inputs": [to_graph6(g)], "X": list(x), "chi": chi})


def critical_cojoin_check(g: Graph) -> CheckOutcome:
    return check_statement("critical_cojoin", g)


@dataclass
class SearchReport:
    m: int
    k: int
    max_factor_order: int
    domain_size: int
    tuples_checked: int = 0
    violations: list = field(default_factory=list)
    min_slack: Optional[Fraction] = None
    min_slack_witness: Optional[list] = None
    complete: bool = True


def conjecture_search(m: int, k: int, max_factor_order: int, factors: Iterable[Graph],
                      cancel=None, progress=None) -> SearchReport:
    """Test every multiset of ``k`` eligible factors against the conjectured join class.

    Eligible factors have at most ``max_factor_order`` vertices and
    Delta + 1 <= n - m. Join invariants come from the join identities
    (chi and omega add, Delta(join) = max(Delta_i + N - n_i)).
    """
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    stmt = CATALOG["join_deficit_conjecture"]
    pool = []
    for g in factors:
        if g.order <= max_factor_order and max(map(int.bit_count, g.rows)) + 1 <= g.order - m:
            pool.append(Part.of(g))
    rep = SearchReport(m, k, max_factor_order, len(pool))
    try:
        for i, idx in enumerate(combinations_with_replacement(range(len(pool)), k)):
            if i % 4096 == 0:
                check(cancel)
                if progress is not None:
                    progress(i)
            q = TupleFacts.from_parts([pool[j] for j in idx], m=m)
            verdict, slack, values = evaluate(stmt, q)
            rep.tuples_checked += 1
            if verdict is Verdict.VIOLATED:
                rep.violations.append({"inputs": [p.graph6 for p in q.parts], "values": values})
            if slack is not None and (rep.min_slack is None or slack < rep.min_slack):
                rep.min_slack = slack
                rep.min_slack_witness = [p.graph6 for p in q.parts]
    except SearchCancelled:
        rep.complete = False
    return rep

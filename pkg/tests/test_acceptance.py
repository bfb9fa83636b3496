"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest -s tests/test_acceptance.py`` to see only the verdict lines.
"""

import json
from fractions import Fraction

import pytest

from reedbound import harness
from reedbound.bounds import CATALOG, Verdict, check_statement, reed_report
from reedbound.cli import main, report_schema
from reedbound.corpus import (
    class_representatives, cycle, enumerate_labeled, random_graph, random_words,
)
from reedbound.graph import Graph, from_graph6, to_graph6
from reedbound.invariants import chromatic_number, clique_number, matching_number, tutte_witness

import oracles

# catalog keys that must be non-vacuous somewhere in the n <= 7 sweep
MUST_HOLD = [
    "alpha_bound", "order_bound", "dense_cojoin_subgraph", "alpha_two_half", "averaged_bound",
    "high_degree_alpha_half", "outside_class_clique_degree", "high_degree_half",
    "complement_matching_deficient", "complement_one_factor", "alpha_two_clique_square",
    "outside_class_alpha_degree", "reed_conjecture",
]
ALWAYS_APPLICABLE = ["alpha_bound", "order_bound", "averaged_bound"]


def verdict(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def sweep_reports(tmp_path_factory):
    """The n <= 7 exhaustive verification, run with one and with two workers."""
    d = tmp_path_factory.mktemp("sweep")
    out = {}
    for jobs in (1, 2):
        path = d / f"jobs{jobs}.json"
        code = main(["verify", "--corpus", "exhaustive", "--n", "7", "--min-n", "1",
                     "--jobs", str(jobs), "--out", str(path)])
        out[jobs] = (code, path.read_bytes())
    return out


def test_criterion_1_oracle_equivalence(capsys):
    mismatches = 0
    checked = 0
    for n in range(1, 7):
        chi, omega, nu = oracles.chi_all(n), oracles.omega_all(n), oracles.nu_all(n)
        for mask in range(len(chi)):
            g = Graph.from_mask(n, mask)
            got = (chromatic_number(g), clique_number(g), matching_number(g))
            mismatches += got != (chi[mask], omega[mask], nu[mask])
            checked += 1
    classes = [len(class_representatives(n)) for n in range(1, 7)]
    ok = mismatches == 0 and checked == 33867 and classes == [1, 2, 4, 11, 34, 156]
    verdict(capsys, 1, ok, f"{checked} labeled graphs, {mismatches} mismatches, classes {classes}")


def test_criterion_2_exhaustive_verification(capsys, sweep_reports):
    code, raw = sweep_reports[1]
    rep = json.loads(raw)
    stats = rep["statements"]
    n7 = 1 << 21
    problems = []
    if code != 0 or rep["violations"]:
        problems.append(f"exit {code}, {len(rep['violations'])} violations")
    if rep["population"] < n7 or not rep["complete"]:
        problems.append("population short of 2^21 at n=7")
    problems += [f"{k} never holds" for k in MUST_HOLD if stats[k]["holds"] == 0]
    problems += [f"{k} vacuous somewhere" for k in ALWAYS_APPLICABLE if stats[k]["vacuous"] != 0]
    vac = ", ".join(f"{k}={stats[k]['vacuous']}" for k in MUST_HOLD)
    verdict(capsys, 2, not problems,
            f"{rep['population']} graphs (n=1..7), 0 violations; vacuous counts: {vac}"
            if not problems else "; ".join(problems))


def test_criterion_3_join_closure(capsys):
    ver, rep = harness.run_verification(
        None, ["join_preserves_class", "join_in_r0", "sparse_join_deficit", "sparse_join_deficit_weak",
               "noncomplete_join_deficit", "ramsey_join_deficit"],
        pairs=10_000, tuples=1_000, seed=2024, max_factor_order=7, jobs=1,
    )
    s = rep["statements"]
    pops = {k: v["population"] for k, v in s.items()}
    ok = (rep["complete"] and ver.violated == 0
          and pops["join_preserves_class"] == pops["join_in_r0"] == 10_000
          and pops["ramsey_join_deficit"] == 4_000
          and all(pops[k] == 1_000 for k in ("sparse_join_deficit", "sparse_join_deficit_weak",
                                              "noncomplete_join_deficit"))
          and all(v["vacuous"] == 0 for v in s.values()))
    verdict(capsys, 3, ok, f"populations {pops}, violations {ver.violated}")


def test_criterion_4_five_cycle(capsys):
    c5 = cycle(5)
    r = reed_report(c5)
    landmarks = r.excess == Fraction(1, 2) and r.in_class(Fraction(1, 2)) and not r.in_class(0)
    excluded = check_statement("sparse_join_deficit_weak", [c5, c5]).verdict is Verdict.VACUOUS
    inj = harness.five_cycle_injection(seed=2024, count=200)
    outcome = (f"injected run: {inj['instances']} tuples, {inj['violated']} violations"
               + (f" e.g. {' + '.join(inj['violations'][0]['inputs'])}" if inj["violations"] else ""))
    verdict(capsys, 4, landmarks and excluded and inj["instances"] == 203,
            f"excess(C5)={r.excess}, in R_1/2 not R_0: {landmarks}, hypothesis excludes C5: {excluded}; {outcome}")


def test_criterion_5_min_missed_exactness(capsys, sweep_reports):
    rep = json.loads(sweep_reports[1][1])
    s = rep["statements"]["min_missed_bound"]
    ok = s["violated"] == 0 and s["vacuous"] == 0 and s["holds"] == rep["population"]
    verdict(capsys, 5, ok, f"exact 3-greedy minimum on {s['holds']} graphs: domination, alpha <= 2 on missed "
                           f"vertices and the bound all hold; violations {s['violated']}")


def test_criterion_6_tutte(capsys):
    bad = checked = 0
    for n in range(1, 7):
        for g in enumerate_labeled(n, dedup=True):
            bad += tutte_witness(g).deficiency != n - 2 * oracles.nu(g)
            checked += 1
    for i in range(10_000):
        w = random_words(6, i, 2)
        n = 1 + w[0] % 8
        g = random_graph(n, Fraction(w[1] % 9, 8), 6, i | (1 << 62))
        bad += tutte_witness(g).deficiency != n - 2 * matching_number(g)
        checked += 1
    verdict(capsys, 6, bad == 0, f"{checked} graphs, {bad} deficiency mismatches")


def test_criterion_7_determinism(capsys, sweep_reports):
    (c1, a), (c2, b) = sweep_reports[1], sweep_reports[2]
    import jsonschema

    jsonschema.validate(json.loads(a), report_schema())
    ok = a == b and c1 == c2 == 0
    verdict(capsys, 7, ok, f"jobs=1 and jobs=2 reports byte-identical: {a == b} ({len(a)} bytes)")


def test_criterion_8_codec(capsys):
    known = {"@": Graph(1, (0,)), "A?": Graph(2, (0, 0)), "A_": Graph(2, (2, 1)), "Bw": Graph(3, (6, 5, 3))}
    ok_known = all(from_graph6(s) == g and to_graph6(g) == s for s, g in known.items())
    bad = total = 0
    for n in range(1, 8):
        for g in enumerate_labeled(n):
            bad += from_graph6(to_graph6(g)) != g
            total += 1
    verdict(capsys, 8, ok_known and bad == 0, f"fixed strings ok: {ok_known}; {total} round trips, {bad} failures")


def test_catalog_keys_cover_criteria():
    assert set(MUST_HOLD) <= set(CATALOG)

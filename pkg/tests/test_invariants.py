from itertools import combinations

import pytest
from hypothesis import given

from reedbound.corpus import complete, complete_bipartite, cycle, empty, path, petersen, star
from reedbound.graph import complement, join, remove_vertices
from reedbound.invariants import (
    chromatic_number, clique_number, degree_stats, gallai_edmonds_witness, has_one_factor,
    independence_number, invariant_record, is_matching_covered, is_vertex_critical, matching_number,
    max_clique, max_independent_set, maximum_matching, optimal_coloring, tutte_witness,
)

import oracles
from conftest import graphs


def test_petersen_record():
    rec = invariant_record(petersen())
    assert rec.as_dict() == {"n": 10, "chi": 3, "omega": 2, "alpha": 4, "max_degree": 3,
                             "min_degree": 3, "nu": 5}


@pytest.mark.parametrize("g, chi, omega, alpha, nu", [
    (cycle(5), 3, 2, 2, 2),
    (complete(4), 4, 4, 1, 2),
    (empty(3), 1, 1, 3, 0),
    (star(4), 2, 2, 4, 1),
    (complete_bipartite(3, 3), 2, 2, 3, 3),
    (cycle(7), 3, 2, 3, 3),
])
def test_small_records(g, chi, omega, alpha, nu):
    rec = invariant_record(g)
    assert (rec.chromatic, rec.clique, rec.independence, rec.matching) == (chi, omega, alpha, nu)


@given(graphs(max_order=7))
def test_invariants_match_oracles(g):
    assert chromatic_number(g) == oracles.chi(g)
    assert clique_number(g) == oracles.omega(g)
    assert independence_number(g) == oracles.alpha(g)
    assert matching_number(g) == oracles.nu(g)


@given(graphs(max_order=10))
def test_witnesses_verify(g):
    k = max_clique(g)
    assert len(k) == clique_number(g)
    assert all(g.adjacent(u, v) for u, v in combinations(k, 2))
    s = max_independent_set(g)
    assert not any(g.adjacent(u, v) for u, v in combinations(s, 2))
    col = optimal_coloring(g)
    assert len(set(col)) == chromatic_number(g)
    assert all(col[u] != col[v] for u, v in g.edges())
    m = maximum_matching(g)
    assert len({v for e in m for v in e}) == 2 * len(m)
    assert all(g.adjacent(u, v) for u, v in m)


@given(graphs(max_order=5), graphs(max_order=5))
def test_record_on_joins_matches_direct(a, b):
    j = join(a, b)
    rec = invariant_record(j)
    assert rec.chromatic == chromatic_number(j) == chromatic_number(a) + chromatic_number(b)
    assert rec.clique == clique_number(j) == clique_number(a) + clique_number(b)
    dj, _ = degree_stats(j)
    assert dj == max(degree_stats(a)[0] + b.order, a.order + degree_stats(b)[0])


@given(graphs(max_order=8))
def test_tutte_witness_deficiency(g):
    w = tutte_witness(g)
    assert w.deficiency == g.order - 2 * matching_number(g)
    assert w.odd_components == oracles.odd_components(g, set(w.removed))


@given(graphs(min_order=11, max_order=14))
def test_gallai_edmonds_above_exhaustive_limit(g):
    w = tutte_witness(g)
    assert w == gallai_edmonds_witness(g)
    assert w.deficiency == g.order - 2 * matching_number(g)


def test_tutte_witness_tie_break():
    # star: removing the centre leaves 3 odd singletons, deficiency 2
    w = tutte_witness(star(3))
    assert w.removed == (0,) and w.deficiency == 2
    assert tutte_witness(complete(4)).removed == ()


def test_matching_flags():
    assert has_one_factor(cycle(6)) and not has_one_factor(cycle(5))
    assert is_matching_covered(cycle(6))
    assert is_matching_covered(complete(4))
    assert not is_matching_covered(path(4))
    assert not is_matching_covered(empty(4))
    assert not is_matching_covered(cycle(5))


@given(graphs(min_order=2, max_order=7))
def test_matching_covered_definition(g):
    n = g.order
    perfect = [m for m in combinations(g.edges(), n // 2)
               if n % 2 == 0 and len({v for e in m for v in e}) == n]
    expected = bool(g.edges()) and all(any(e in m for m in perfect) for e in g.edges())
    assert is_matching_covered(g) == expected


def test_vertex_critical():
    assert is_vertex_critical(cycle(5))
    assert is_vertex_critical(complete(4))
    assert not is_vertex_critical(path(4))
    assert not is_vertex_critical(cycle(6))


@given(graphs(max_order=7))
def test_vertex_critical_definition(g):
    chi = chromatic_number(g)
    expected = g.order == 1 or all(chromatic_number(remove_vertices(g, [v])) < chi for v in range(g.order))
    assert is_vertex_critical(g) == expected


@given(graphs(max_order=9))
def test_alpha_is_clique_of_complement(g):
    assert independence_number(g) == clique_number(complement(g))

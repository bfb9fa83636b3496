from fractions import Fraction

import pytest
from hypothesis import given

from reedbound.colorings import (
    ExactnessLimitError, PartialColoring, greedy_r_partial_coloring, independent_sets_bound,
    min_missed_r_coloring, missed_vertices_dominated, partial_coloring_bounds,
)
from reedbound.corpus import complete, cycle, empty, petersen
from reedbound.graph import induced_subgraph
from reedbound.invariants import chromatic_number, independence_number

from conftest import graphs


def test_greedy_examples():
    m = greedy_r_partial_coloring(complete(5), 2)
    assert len(m) == 0 and m.missed == (0, 1, 2, 3, 4)
    m = greedy_r_partial_coloring(cycle(5), 2)
    assert m.classes == ((0, 2), (1, 3)) and m.missed == (4,)
    m = greedy_r_partial_coloring(empty(6), 3)
    assert len(m) == 2 and m.missed == ()


def test_min_missed_examples():
    m = min_missed_r_coloring(empty(7), 3)
    assert m.missed == () and m.minimal and len(m) == 1  # one class of 7 beats 3 + 4
    assert min_missed_r_coloring(complete(4), 3).missed == (0, 1, 2, 3)
    assert min_missed_r_coloring(cycle(5), 3).classes == ()


def test_min_missed_exactness_limit():
    g = cycle(13)
    with pytest.raises(ExactnessLimitError):
        min_missed_r_coloring(g, 3)
    m = min_missed_r_coloring(g, 3, allow_heuristic=True)
    assert not m.minimal
    m.validate(g)
    assert partial_coloring_bounds(g, m).min_missed is None


def test_independent_sets_bound_examples():
    c5 = cycle(5)
    m = PartialColoring(5, ((0, 2), (1, 3)), 2)
    assert independent_sets_bound(c5, m) == 3 == chromatic_number(c5)
    zero = PartialColoring(5, (), 1)
    assert independent_sets_bound(c5, zero) == Fraction(6, 2)
    # with no classes the bound is (omega + n - 1)/2: below n for K_n, so m >= 1 is needed
    assert independent_sets_bound(complete(4), PartialColoring(4, (), 1)) == Fraction(7, 2)


def test_partial_bounds_examples():
    c5 = cycle(5)
    b = partial_coloring_bounds(c5, greedy_r_partial_coloring(c5, 2))
    assert b.greedy == 3
    b = partial_coloring_bounds(c5, min_missed_r_coloring(c5, 3))
    assert b.min_missed == 3
    p = petersen()
    m = greedy_r_partial_coloring(p, 3)
    assert len(m) == 3
    assert partial_coloring_bounds(p, m).greedy == 4 >= chromatic_number(p)
    assert partial_coloring_bounds(complete(3), PartialColoring(3, (), 2)).greedy is None


def test_validate_rejects_bad_families():
    c5 = cycle(5)
    with pytest.raises(ValueError):
        PartialColoring(5, ((0, 1),), 2).validate(c5)
    with pytest.raises(ValueError):
        PartialColoring(5, ((0, 2), (2, 4)), 2).validate(c5)
    with pytest.raises(ValueError):
        PartialColoring(5, ((0, 2),), 3).validate(c5)


@given(graphs(max_order=9))
def test_greedy_families_bound_chi(g):
    chi = chromatic_number(g)
    for r in (2, 3, 4):
        m = greedy_r_partial_coloring(g, r)
        m.validate(g)
        if len(m):
            assert chi <= independent_sets_bound(g, m)
        b = partial_coloring_bounds(g, m)
        if not g.is_complete():
            assert chi <= b.greedy


@given(graphs(max_order=8))
def test_min_missed_properties(g):
    m = min_missed_r_coloring(g, 3)
    m.validate(g)
    assert missed_vertices_dominated(g, m)
    if m.missed:
        assert independence_number(induced_subgraph(g, m.missed)) <= 2
    assert chromatic_number(g) <= partial_coloring_bounds(g, m).min_missed

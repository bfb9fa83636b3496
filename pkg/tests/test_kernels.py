"""Both kernel backends against brute force and against each other."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given

from reedbound import _pykernels
from reedbound.corpus import random_graph
from reedbound.graph import Graph

import oracles
from conftest import BACKENDS, graphs


def _proper(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges())


@given(g=graphs(max_order=7))
def test_clique_matches_oracle(backend, g):
    size, mask = backend.clique(g.rows, g.order)
    assert size == oracles.omega(g)
    members = [v for v in range(g.order) if mask >> v & 1]
    assert len(members) == size
    assert all(g.adjacent(u, v) for u, v in combinations(members, 2))


@given(g=graphs(max_order=7))
def test_chromatic_matches_oracle(backend, g):
    chi, colors = backend.chromatic(g.rows, g.order)
    assert chi == oracles.chi(g)
    assert _proper(g, colors) and len(set(colors)) == chi


@given(g=graphs(max_order=8))
def test_matching_matches_oracle(backend, g):
    mate = backend.max_matching(g.rows, g.order)
    pairs = [(v, u) for v, u in enumerate(mate) if u > v]
    assert all(g.adjacent(u, v) and mate[u] == v for v, u in pairs)
    assert len(pairs) == backend.matching_size(g.rows, g.order) == oracles.nu(g)


@given(g=graphs(max_order=9))
def test_greedy_coloring_is_proper(backend, g):
    used, colors = backend.greedy_coloring(g.rows, g.order)
    assert _proper(g, colors) and len(set(colors)) == used
    assert used <= max(map(int.bit_count, g.rows)) + 1


@given(g=graphs(max_order=7))
def test_k_coloring_decides(backend, g):
    chi = oracles.chi(g)
    assert backend.k_coloring(g.rows, g.order, chi) is not None
    if chi > 1:
        assert backend.k_coloring(g.rows, g.order, chi - 1) is None


def _brute_min_missed(g, r):
    """Fewest missed vertices over families of disjoint independent sets of size >= r."""
    sets = [s for k in range(r, g.order + 1) for s in combinations(range(g.order), k)
            if not any(g.adjacent(a, b) for a, b in combinations(s, 2))]
    best = [g.order, 0]

    def rec(start, used, nclasses):
        missed = g.order - len(used)
        if (missed, nclasses) < tuple(best):
            best[:] = [missed, nclasses]
        for i in range(start, len(sets)):
            if not used.intersection(sets[i]):
                rec(i + 1, used | set(sets[i]), nclasses + 1)

    rec(0, frozenset(), 0)
    return tuple(best)


@given(g=graphs(max_order=7))
def test_min_missed_matches_brute_force(backend, g):
    for r in (2, 3):
        missed, classes = backend.min_missed(g.rows, g.order, r)
        assert (missed.bit_count(), len(classes)) == _brute_min_missed(g, r)
        covered = 0
        for c in classes:
            assert c.bit_count() >= r and not c & covered
            assert not any(g.rows[v] & c for v in range(g.order) if c >> v & 1)
            covered |= c
        assert covered | missed == (1 << g.order) - 1


@given(g=graphs(max_order=9))
def test_greedy_classes_take_least_sets(backend, g):
    for r in (2, 3):
        classes = backend.greedy_classes(g.rows, g.order, r)
        used = 0
        for c in classes:
            assert c.bit_count() == r and not c & used
            used |= c
        # maximality: no independent r-set survives among the unused vertices
        rest = [v for v in range(g.order) if not used >> v & 1]
        assert not any(not any(g.adjacent(a, b) for a, b in combinations(s, 2))
                       for s in combinations(rest, r))


def test_profile_field_count():
    g = Graph.from_edges(3, [(0, 1)])
    for b, in [p.values for p in BACKENDS]:
        assert len(b.profile(g.rows, g.order)) == len(_pykernels.PROFILE_FIELDS)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")
def test_backends_agree_on_random_graphs():
    py, c = (p.values[0] for p in BACKENDS)
    for i in range(150):
        n = 1 + i % 13
        g = random_graph(n, Fraction(1 + i % 7, 8), 99, i)
        for name in ("clique", "greedy_coloring", "chromatic", "max_matching", "profile"):
            assert getattr(py, name)(g.rows, n) == getattr(c, name)(g.rows, n), (name, g)
        for r in (2, 3, 4):
            assert py.greedy_classes(g.rows, n, r) == c.greedy_classes(g.rows, n, r)
        if n <= 10:
            assert py.min_missed(g.rows, n, 3) == c.min_missed(g.rows, n, 3)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")
def test_backends_agree_on_sweep():
    py, c = (p.values[0] for p in BACKENDS)
    for n in range(1, 6):
        total = 1 << (n * (n - 1) // 2)
        assert py.sweep(n, 0, total) == c.sweep(n, 0, total)
    assert py.sweep(6, 1000, 3000) == c.sweep(6, 1000, 3000)


def test_sweep_counts_every_graph(backend):
    out = backend.sweep(5, 0, 1024)
    assert sum(c for c, _ in out.values()) == 1024
    assert min(m for _, m in out.values()) == 0


def test_pure_python_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    code = "from reedbound import kernels; print(kernels.BACKEND)"
    env = {**os.environ, "REEDBOUND_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"

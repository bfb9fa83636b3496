"""Exact graph invariants: chi, omega, alpha, degrees, matchings and Tutte sets.

Everything here is exact. Searches may prune with bounds but never decide
by heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .cancel import check
from .graph import Graph, _bits, complement, join_factorization, remove_vertices

TUTTE_EXHAUSTIVE_MAX = 10


@dataclass(frozen=True)
class InvariantRecord:
    order: int
    chromatic: int
    clique: int
    independence: int
    max_degree: int
    min_degree: int
    matching: int

    def as_dict(self) -> dict:
        return {
            "n": self.order,
            "chi": self.chromatic,
            "omega": self.clique,
            "alpha": self.independence,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "nu": self.matching,
        }


@dataclass(frozen=True)
class TutteWitness:
    removed: tuple[int, ...]
    odd_components: int
    deficiency: int


def degree_stats(g: Graph) -> tuple[int, int]:
    """(max degree, min degree)."""
    degs = [r.bit_count() for r in g.rows]
    return max(degs), min(degs)


def max_clique(g: Graph) -> list[int]:
    """Lexicographically least maximum clique."""
    return _bits(kernels.clique(g.rows, g.order)[1])


def clique_number(g: Graph) -> int:
    return kernels.clique(g.rows, g.order)[0]


def max_independent_set(g: Graph) -> list[int]:
    return max_clique(complement(g))


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def optimal_coloring(g: Graph) -> list[int]:
    """A proper coloring with exactly chi(g) colors (colors 0..chi-1)."""
    return kernels.chromatic(g.rows, g.order)[1]


def chromatic_number(g: Graph) -> int:
    """Exact chi: clique lower bound, DSATUR upper bound, bisection on k-colorability."""
    return kernels.chromatic(g.rows, g.order)[0]


def is_vertex_critical(g: Graph) -> bool:
    chi = chromatic_number(g)
    return kernels.vertex_critical(g.rows, g.order, chi)


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    mate = kernels.max_matching(g.rows, g.order)
    return [(v, u) for v, u in enumerate(mate) if v < u]


def matching_number(g: Graph) -> int:
    return kernels.matching_size(g.rows, g.order)


def has_one_factor(g: Graph) -> bool:
    return g.order % 2 == 0 and 2 * matching_number(g) == g.order


def is_matching_covered(g: Graph) -> bool:
    """Every edge lies in a perfect matching. Edgeless graphs count as not covered."""
    return kernels.matching_covered(g.rows, g.order)


def _odd_components_after(g: Graph, removed: int) -> int:
    keep = ((1 << g.order) - 1) & ~removed
    return sum(c.bit_count() & 1 for c in kernels.components(g.rows, g.order, keep))


def tutte_witness(g: Graph, cancel=None) -> TutteWitness:
    """A set X maximising odd(G - X) - |X|; the maximum equals n - 2*nu.

    Exhaustive over X (smallest, then lexicographically first) up to
    TUTTE_EXHAUSTIVE_MAX vertices; Gallai-Edmonds set above that.
    """
    if g.order > TUTTE_EXHAUSTIVE_MAX:
        return gallai_edmonds_witness(g)
    best = None
    for size in range(g.order + 1):
        check(cancel)
        for x in combinations(range(g.order), size):
            removed = 0
            for v in x:
                removed |= 1 << v
            odd = _odd_components_after(g, removed)
            if best is None or odd - size > best.deficiency:
                best = TutteWitness(x, odd, odd - size)
    return best


def gallai_edmonds_witness(g: Graph) -> TutteWitness:
    """X = neighbours of the vertices some maximum matching misses."""
    nu = matching_number(g)
    missable = 0
    for v in range(g.order):
        if g.order == 1 or matching_number(remove_vertices(g, [v])) == nu:
            missable |= 1 << v
    nbrs = 0
    for v in _bits(missable):
        nbrs |= g.rows[v]
    x = nbrs & ~missable
    odd = _odd_components_after(g, x)
    return TutteWitness(tuple(_bits(x)), odd, odd - x.bit_count())


def invariant_record(g: Graph) -> InvariantRecord:
    """Exact invariants; chi and omega are summed over join factors when g splits."""
    fac = join_factorization(g)
    if len(fac.factors) > 1:
        chi = sum(chromatic_number(f) for f in fac.factors)
        omega = sum(clique_number(f) for f in fac.factors)
    else:
        omega = clique_number(g)
        chi = kernels.chromatic(g.rows, g.order, omega)[0]
    dmax, dmin = degree_stats(g)
    return InvariantRecord(
        order=g.order,
        chromatic=chi,
        clique=omega,
        independence=independence_number(g),
        max_degree=dmax,
        min_degree=dmin,
        matching=matching_number(g),
    )

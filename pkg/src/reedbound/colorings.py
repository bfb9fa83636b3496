"""Partial colorings by large independent sets and the chi bounds they give."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from . import kernels
from .graph import Graph, _bits, mask_of
from .invariants import clique_number, degree_stats

EXACT_MAX_ORDER = kernels.MIN_MISSED_EXACT_MAX


class ExactnessLimitError(ValueError):
    pass


@dataclass(frozen=True)
class PartialColoring:
    """Disjoint independent sets (``classes``) each with at least ``r`` vertices.

    ``minimal`` is set only when the family is a proven minimiser of the
    missed-vertex count.
    """

    order: int
    classes: tuple[tuple[int, ...], ...]
    r: int
    minimal: bool = False

    @property
    def missed(self) -> tuple[int, ...]:
        covered = set()
        for c in self.classes:
            covered.update(c)
        return tuple(v for v in range(self.order) if v not in covered)

    @property
    def covered_count(self) -> int:
        return sum(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def validate(self, g: Graph) -> None:
        seen = 0
        for c in self.classes:
            if len(c) < self.r:
                raise ValueError(f"class {c} smaller than r={self.r}")
            m = mask_of(c)
            if m & seen:
                raise ValueError("classes overlap")
            seen |= m
            for v in c:
                if g.rows[v] & m:
                    raise ValueError(f"class {c} is not independent")


def _from_masks(n, masks, r, minimal):
    return PartialColoring(n, tuple(tuple(_bits(m)) for m in masks), r, minimal)


def greedy_r_partial_coloring(g: Graph, r: int) -> PartialColoring:
    """Maximal family of disjoint independent sets of size exactly ``r``.

    Each step takes the lexicographically least independent r-set among the
    vertices not yet used.
    """
    if r < 1:
        raise ValueError("r must be positive")
    return _from_masks(g.order, kernels.greedy_classes(g.rows, g.order, r), r, False)


def min_missed_r_coloring(g: Graph, r: int, allow_heuristic: bool = False) -> PartialColoring:
    """A partial coloring by independent sets of size >= r that misses the fewest vertices.

    Among optimal families the one with fewest classes is returned. Above
    EXACT_MAX_ORDER vertices the search is refused unless ``allow_heuristic``,
    in which case a grown greedy family is returned with ``minimal=False``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if g.order <= EXACT_MAX_ORDER:
        _, masks = kernels.min_missed(g.rows, g.order, r)
        return _from_masks(g.order, masks, r, True)
    if not allow_heuristic:
        raise ExactnessLimitError(
            f"exact minimum-missed search is limited to {EXACT_MAX_ORDER} vertices"
        )
    _, masks = kernels.grow_classes(g.rows, g.order, kernels.greedy_classes(g.rows, g.order, r))
    return _from_masks(g.order, masks, r, False)


def independent_sets_bound(g: Graph, m: PartialColoring) -> Fraction:
    """(omega + n - sum |I_j| + 2 m - 1) / 2 for the classes I_1..I_m of ``m``."""
    omega = clique_number(g)
    return Fraction(omega + g.order - m.covered_count + 2 * len(m) - 1, 2)


class PartialBounds(NamedTuple):
    greedy: Optional[Fraction]  # None when g is complete
    min_missed: Optional[Fraction]  # None unless m is a proven r=3 minimiser


def partial_coloring_bounds(g: Graph, m: PartialColoring) -> PartialBounds:
    omega = clique_number(g)
    dmax, _ = degree_stats(g)
    greedy = None
    if not g.is_complete():
        greedy = Fraction(omega + g.order - (m.r - 2) * len(m) - 1, 2)
    missed = None
    if m.r == 3 and m.minimal:
        missed = Fraction(omega + dmax + 1, 2) + Fraction(len(m) + 1, 2)
    return PartialBounds(greedy, missed)


def missed_vertices_dominated(g: Graph, m: PartialColoring) -> bool:
    """Each missed vertex has a neighbour in every class."""
    masks = [mask_of(c) for c in m.classes]
    return all(all(g.rows[v] & c for c in masks) for v in m.missed)

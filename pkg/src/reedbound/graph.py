"""Immutable simple graphs on vertices 0..n-1 stored as adjacency bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from . import kernels

MAX_ORDER = kernels.MAX_ORDER
GRAPH6_MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True, slots=True)
class Graph:
    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.rows) != n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << n) - 1
        for v, r in enumerate(self.rows):
            if r < 0 or r & ~full:
                raise ValueError(f"row {v} names vertices outside 0..{n - 1}")
            if r >> v & 1:
                raise ValueError(f"self-loop at {v}")
            m = r
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Graph whose edges are the set bits of ``mask`` in graph6 pair order."""
        return cls(n, tuple(kernels.rows_from_mask(n, mask)))

    def __len__(self) -> int:
        return self.order

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in _bits(self.rows[u]) if u < v]

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edge_mask(self) -> int:
        """Edges as a bitmask in graph6 pair order (inverse of :meth:`from_mask`)."""
        mask = 0
        k = 0
        for j in range(1, self.order):
            r = self.rows[j]
            for i in range(j):
                if r >> i & 1:
                    mask |= 1 << k
                k += 1
        return mask

    def is_complete(self) -> bool:
        full = (1 << self.order) - 1
        return all(r | (1 << v) == full for v, r in enumerate(self.rows))

    def __repr__(self) -> str:
        return f"Graph({to_graph6(self)!r})"


def _bits(m: int) -> list[int]:
    out = []
    while m:
        out.append((m & -m).bit_length() - 1)
        m &= m - 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ---------------------------------------------------------------- graph6


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (orders 1..62)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    data = text.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte value {b} outside 63..126", i)
    if data[0] == 126:
        raise Graph6Error(f"orders above {GRAPH6_MAX_ORDER} are not supported", 0)
    n = data[0] - 63
    if n == 0:
        raise Graph6Error("graph6 order 0 is not a graph here", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} edge bytes, found {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after edge section", 1 + need)
    mask = 0
    k = 0
    for i, b in enumerate(body):
        v = b - 63
        for s in range(5, -1, -1):
            bitval = v >> s & 1
            if k < nbits:
                if bitval:
                    mask |= 1 << k
            elif bitval:
                raise Graph6Error("nonzero padding bits", 1 + i)
            k += 1
    return Graph.from_mask(n, mask)


def to_graph6(g: Graph) -> str:
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 output supports orders up to {GRAPH6_MAX_ORDER}")
    mask = g.edge_mask()
    nbits = n * (n - 1) // 2
    out = [chr(63 + n)]
    for start in range(0, nbits, 6):
        v = 0
        for s in range(6):
            k = start + s
            v = (v << 1) | (mask >> k & 1 if k < nbits else 0)
        out.append(chr(63 + v))
    return "".join(out)


# ---------------------------------------------------------------- structure


def complement(g: Graph) -> Graph:
    return Graph(g.order, tuple(kernels.complement_rows(g.rows, g.order)))


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for p in parts:
        rows.extend(r << offset for r in p.rows)
        offset += p.order
    return Graph(offset, tuple(rows))


def join(*parts: Graph | Sequence[Graph]) -> Graph:
    """Join of two or more graphs; part ``i`` is shifted by the orders before it."""
    if len(parts) == 1 and not isinstance(parts[0], Graph):
        parts = tuple(parts[0])
    if len(parts) < 2:
        raise ValueError("join needs at least two graphs")
    n = sum(p.order for p in parts)
    full = (1 << n) - 1
    rows: list[int] = []
    offset = 0
    for p in parts:
        block = ((1 << p.order) - 1) << offset
        outside = full & ~block
        rows.extend((r << offset) | outside for r in p.rows)
        offset += p.order
    return Graph(n, tuple(rows))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    m = keep if isinstance(keep, int) else mask_of(keep)
    m &= (1 << g.order) - 1
    if not m:
        raise ValueError("induced subgraph needs at least one vertex")
    return Graph(m.bit_count(), tuple(kernels.induce(g.rows, m)))


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """``g - X``."""
    return induced_subgraph(g, ((1 << g.order) - 1) & ~mask_of(drop))


def components(g: Graph) -> list[list[int]]:
    return [_bits(c) for c in kernels.components(g.rows, g.order)]


def is_connected(g: Graph) -> bool:
    return len(kernels.components(g.rows, g.order)) == 1


@dataclass(frozen=True)
class JoinFactorization:
    factors: tuple[Graph, ...]
    # original vertex -> (factor index, vertex within factor)
    vertex_map: tuple[tuple[int, int], ...]

    def reassemble(self) -> Graph:
        """Rebuild the factored graph in its original labeling."""
        n = len(self.vertex_map)
        rows = [0] * n
        for v, (fi, lv) in enumerate(self.vertex_map):
            for u, (fj, lu) in enumerate(self.vertex_map):
                if u != v and (fi != fj or self.factors[fi].adjacent(lv, lu)):
                    rows[v] |= 1 << u
        return Graph(n, tuple(rows))


def join_factorization(g: Graph) -> JoinFactorization:
    """Split ``g`` into the maximal join factors (components of the complement)."""
    crows = kernels.complement_rows(g.rows, g.order)
    blocks = kernels.components(crows, g.order)
    factors = []
    vmap = [(0, 0)] * g.order
    for fi, b in enumerate(blocks):
        factors.append(Graph(b.bit_count(), tuple(kernels.induce(g.rows, b))))
        for lv, v in enumerate(_bits(b)):
            vmap[v] = (fi, lv)
    return JoinFactorization(tuple(factors), tuple(vmap))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Brute-force permutation search; intended for n <= 8."""
    if a.order != b.order or a.size != b.size:
        return False
    if sorted(map(int.bit_count, a.rows)) != sorted(map(int.bit_count, b.rows)):
        return False
    n = a.order
    for perm in permutations(range(n)):
        if all(
            b.adjacent(perm[u], perm[v]) == a.adjacent(u, v)
            for u in range(n) for v in range(u + 1, n)
        ):
            return True
    return False


def is_five_cycle(g: Graph) -> bool:
    return g.order == 5 and all(r.bit_count() == 2 for r in g.rows) and is_connected(g)

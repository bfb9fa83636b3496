"""Graph sources: labeled enumeration, seeded G(n, p), graph6 files, named graphs.

Random graphs use numpy's Philox counter-based generator keyed by
``seed + 2**64 * index`` for graph ``index``, so any slice of a stream can be
regenerated on its own. Pair ``k`` of an n-vertex graph (graph6 order) is an
edge iff the k-th 64-bit draw ``x`` satisfies ``x * den < num * 2**64`` for
``p = num/den``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .graph import Graph, Graph6Error, GRAPH6_HEADER, from_graph6

log = logging.getLogger(__name__)

EXHAUSTIVE_MAX = 7
DEDUP_MAX = 6
MODES = ("exhaustive", "random", "file", "named")


@dataclass(frozen=True)
class CorpusSpec:
    mode: str
    n: Optional[int] = None
    min_n: Optional[int] = None  # exhaustive: orders min_n..n (default n..n)
    p: Fraction = Fraction(1, 2)
    seed: int = 0
    count: int = 0
    path: Optional[str] = None
    name: Optional[str] = None
    dedup: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown corpus mode {self.mode!r}")
        object.__setattr__(self, "p", Fraction(self.p))
        if self.mode == "exhaustive":
            cap = DEDUP_MAX if self.dedup else EXHAUSTIVE_MAX
            lo = self.n if self.min_n is None else self.min_n
            if self.n is None or not 1 <= lo <= self.n <= cap:
                raise ValueError(f"exhaustive corpus needs 1 <= n <= {cap} (dedup={self.dedup})")
        elif self.mode == "random":
            if self.n is None or not 1 <= self.n <= kernels.MAX_ORDER:
                raise ValueError("random corpus needs an order n")
            if not 0 <= self.p <= 1:
                raise ValueError("edge probability must lie in [0, 1]")
            if not 0 <= self.seed < 2**64:
                raise ValueError("seed must be a 64-bit unsigned integer")
        elif self.mode == "file" and not self.path:
            raise ValueError("file corpus needs a path")
        elif self.mode == "named" and not self.name:
            raise ValueError("named corpus needs a name")

    @property
    def orders(self) -> range:
        lo = self.n if self.min_n is None else self.min_n
        return range(lo, self.n + 1)

    def to_dict(self) -> dict:
        d = {"mode": self.mode}
        if self.mode == "exhaustive":
            d.update(n=self.n, min_n=self.orders[0], dedup=self.dedup)
        elif self.mode == "random":
            d.update(n=self.n, p=f"{self.p.numerator}/{self.p.denominator}", seed=self.seed, count=self.count)
        elif self.mode == "file":
            d.update(path=self.path)
        else:
            d.update(name=self.name)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CorpusSpec:
        d = dict(d)
        if "p" in d:
            d["p"] = Fraction(d["p"])
        return cls(**d)


# ---------------------------------------------------------------- exhaustive


def _pair_index(n):
    return {pair: k for k, pair in enumerate(kernels.pair_table(n))}


def _perm_tables(n):
    pairs = kernels.pair_table(n)
    index = _pair_index(n)
    tables = []
    for perm in permutations(range(n)):
        t = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            t.append(index[(a, b) if a < b else (b, a)])
        tables.append(t)
    return tables


def _apply(table, mask):
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << table[k]
        mask >>= 1
        k += 1
    return out


def class_representatives(n: int) -> list[int]:
    """Least edge mask of each isomorphism class, ascending (orbit marking)."""
    if not 1 <= n <= DEDUP_MAX:
        raise ValueError(f"dedup enumeration supports 1 <= n <= {DEDUP_MAX}")
    total = 1 << (n * (n - 1) // 2)
    tables = _perm_tables(n)
    seen = bytearray(total)
    reps = []
    for mask in range(total):
        if seen[mask]:
            continue
        reps.append(mask)
        for t in tables:
            seen[_apply(t, mask)] = 1
    return reps


def labeled_masks(n: int, dedup: bool = False):
    if dedup:
        return class_representatives(n)
    if not 1 <= n <= EXHAUSTIVE_MAX:
        raise ValueError(f"labeled enumeration supports 1 <= n <= {EXHAUSTIVE_MAX}")
    return range(1 << (n * (n - 1) // 2))


def enumerate_labeled(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices in edge-mask order, or one per class."""
    for mask in labeled_masks(n, dedup):
        yield Graph.from_mask(n, mask)


# ---------------------------------------------------------------- random


def _draws(seed: int, index: int, count: int) -> np.ndarray:
    bg = np.random.Philox(key=(seed % 2**64) + (index << 64))
    return bg.random_raw(count)


def random_graph(n: int, p: Fraction, seed: int, index: int) -> Graph:
    p = Fraction(p)
    npairs = n * (n - 1) // 2
    mask = 0
    if npairs:
        limit = p.numerator << 64
        den = p.denominator
        for k, x in enumerate(_draws(seed, index, npairs).tolist()):
            if x * den < limit:
                mask |= 1 << k
    return Graph.from_mask(n, mask)


def random_gnp(n: int, p, seed: int, count: int, start: int = 0) -> Iterator[Graph]:
    """Graphs ``start .. count-1`` of the (n, p, seed) stream."""
    for i in range(start, count):
        yield random_graph(n, Fraction(p), seed, i)


def random_words(seed: int, index: int, count: int) -> list[int]:
    """``count`` 64-bit words for auxiliary sampling, independent per ``index``."""
    return _draws(seed, index, count).tolist()


# ---------------------------------------------------------------- files


@dataclass
class LineError:
    line: int
    message: str


def read_graph6(path, skip_errors: bool = False, errors: Optional[list] = None) -> Iterator[tuple[int, Graph]]:
    """(line number, graph) per non-blank line; ``>>graph6<<`` headers are skipped."""
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text or text == GRAPH6_HEADER.encode():
                continue
            try:
                yield lineno, from_graph6(text)
            except (Graph6Error, UnicodeDecodeError) as exc:
                if not skip_errors:
                    raise Graph6Error(f"line {lineno}: {exc}", getattr(exc, "offset", 0)) from exc
                log.warning("%s:%d: %s", path, lineno, exc)
                if errors is not None:
                    errors.append(LineError(lineno, str(exc)))


# ---------------------------------------------------------------- named


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0 joined to 1..leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


NAMED = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
}

_NAME_RE = re.compile(r"^\s*([a-z_]+)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*$")


def named(name: str) -> Graph:
    """Build a catalog graph from text such as ``cycle(5)`` or ``petersen``."""
    m = _NAME_RE.match(name)
    if not m or m.group(1) not in NAMED:
        raise ValueError(f"unknown named graph {name!r}; choose from {sorted(NAMED)}")
    fn, arity = NAMED[m.group(1)]
    args = [int(a) for a in (m.group(2) or "").split(",") if a.strip()]
    if len(args) != arity:
        raise ValueError(f"{m.group(1)} takes {arity} integer argument(s)")
    if any(a < 0 for a in args):
        raise ValueError("arguments must be non-negative")
    return fn(*args)


def is_named(text: str) -> bool:
    m = _NAME_RE.match(text)
    return bool(m) and m.group(1) in NAMED


# ---------------------------------------------------------------- dispatch


def iter_corpus(spec: CorpusSpec, skip_errors: bool = True, errors: Optional[list] = None):
    """(label, graph) pairs for any corpus mode, in a fixed order."""
    if spec.mode == "exhaustive":
        for n in spec.orders:
            for mask in labeled_masks(n, spec.dedup):
                yield f"n={n}:mask={mask}", Graph.from_mask(n, mask)
    elif spec.mode == "random":
        for i, g in enumerate(random_gnp(spec.n, spec.p, spec.seed, spec.count)):
            yield f"index={i}", g
    elif spec.mode == "file":
        for lineno, g in read_graph6(spec.path, skip_errors=skip_errors, errors=errors):
            yield f"line={lineno}", g
    else:
        yield spec.name, named(spec.name)

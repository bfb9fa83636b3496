"""Brute-force reference values, written without the package's kernels.

The numpy variants evaluate every labeled graph of one order at once, with a
graph given by its edge mask in graph6 pair order.
"""

from itertools import combinations, permutations, product

import numpy as np


def pairs(n):
    return [(i, j) for j in range(n) for i in range(j)]


def edge_set(g):
    return {(i, j) for i in range(g.order) for j in range(i + 1, g.order) if g.rows[i] >> j & 1}


def chi(g):
    e = edge_set(g)
    for k in range(1, g.order + 1):
        for col in product(range(k), repeat=g.order):
            if all(col[i] != col[j] for i, j in e):
                return k
    return 0


def omega(g):
    e = edge_set(g)
    best = 0
    for s in range(1, g.order + 1):
        for sub in combinations(range(g.order), s):
            if all((a, b) in e for a, b in combinations(sub, 2)):
                best = s
                break
    return best


def alpha(g):
    e = edge_set(g)
    best = 0
    for s in range(1, g.order + 1):
        for sub in combinations(range(g.order), s):
            if not any((a, b) in e for a, b in combinations(sub, 2)):
                best = s
                break
    return best


def nu(g):
    e = sorted(edge_set(g))
    best = 0
    for s in range(1, g.order // 2 + 1):
        for sub in combinations(e, s):
            if len({v for ed in sub for v in ed}) == 2 * s:
                best = s
                break
        else:
            break
    return best


def odd_components(g, removed):
    keep = [v for v in range(g.order) if v not in removed]
    seen, odd = set(), 0
    for s in keep:
        if s in seen:
            continue
        stack, size = [s], 0
        seen.add(s)
        while stack:
            v = stack.pop()
            size += 1
            for u in keep:
                if u not in seen and g.rows[v] >> u & 1:
                    seen.add(u)
                    stack.append(u)
        odd += size & 1
    return odd


# ---------------------------------------------------------------- vectorised over all labeled graphs


def all_masks(n):
    return np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)


def _bits(masks, npairs):
    return ((masks[:, None] >> np.arange(npairs)) & 1).astype(np.int32)


def chi_all(n):
    """chi of every labeled graph on n vertices: least k with a proper k-assignment."""
    pr = pairs(n)
    masks = all_masks(n)
    if n == 1:
        return np.ones(1, dtype=np.int64)
    e = _bits(masks, len(pr))
    out = np.zeros(len(masks), dtype=np.int64)
    todo = np.arange(len(masks))
    for k in range(1, n + 1):
        cols = np.array(list(product(range(k), repeat=n)), dtype=np.int32)
        same = np.stack([cols[:, i] == cols[:, j] for i, j in pr], axis=1).astype(np.int32)
        ok = ((e[todo] @ same.T) == 0).any(axis=1)
        out[todo[ok]] = k
        todo = todo[~ok]
        if not len(todo):
            break
    return out


def omega_all(n):
    pr = pairs(n)
    index = {p: k for k, p in enumerate(pr)}
    masks = all_masks(n)
    out = np.ones(len(masks), dtype=np.int64)
    for s in range(2, n + 1):
        for sub in combinations(range(n), s):
            need = sum(1 << index[p] for p in combinations(sub, 2))
            out = np.where((masks & need) == need, np.maximum(out, s), out)
    return out


def nu_all(n):
    pr = pairs(n)
    index = {p: k for k, p in enumerate(pr)}
    masks = all_masks(n)
    out = np.zeros(len(masks), dtype=np.int64)
    for s in range(1, n // 2 + 1):
        for sub in combinations(pr, s):
            if len({v for p in sub for v in p}) != 2 * s:
                continue
            need = sum(1 << index[p] for p in sub)
            out = np.where((masks & need) == need, np.maximum(out, s), out)
    return out


def class_count(n):
    """Number of isomorphism classes: distinct minimum images under all relabelings."""
    pr = pairs(n)
    index = {p: k for k, p in enumerate(pr)}
    masks = all_masks(n)
    canon = masks.copy()
    for perm in permutations(range(n)):
        img = np.zeros_like(masks)
        for k, (i, j) in enumerate(pr):
            a, b = perm[i], perm[j]
            img |= ((masks >> k) & 1) << index[(min(a, b), max(a, b))]
        canon = np.minimum(canon, img)
    return len(np.unique(canon))

"""Pure-Python graph kernels over bitset adjacency rows.

Every function here has a compiled twin in ``_ckernels.pyx`` that follows the
same search order, so both backends return identical witnesses. ``rows`` is a
sequence of ints where bit ``u`` of ``rows[v]`` is set iff ``u ~ v``.
"""

from __future__ import annotations

MAX_ORDER = 64
MIN_MISSED_EXACT_MAX = 12

PROFILE_FIELDS = (
    "n", "chi", "omega", "alpha", "max_degree", "min_degree", "nu", "nu_complement",
    "complement_components", "complement_matching_covered", "vertex_critical",
    "cojoin_subgraph_found", "greedy2", "greedy3", "greedy4", "min_missed_exact",
    "min_missed_classes", "min_missed_count", "min_missed_adjacent", "min_missed_alpha",
)


def _low(m):
    return (m & -m).bit_length() - 1


def complement_rows(rows, n):
    full = (1 << n) - 1
    return [full & ~rows[v] & ~(1 << v) for v in range(n)]


def induce(rows, keep):
    """Rows of the subgraph induced on ``keep``, relabeled 0..k-1 in order."""
    verts = []
    m = keep
    while m:
        verts.append(_low(m))
        m &= m - 1
    out = []
    for v in verts:
        r = rows[v] & keep
        nr = 0
        for i, u in enumerate(verts):
            if r >> u & 1:
                nr |= 1 << i
        out.append(nr)
    return out


def components(rows, n, mask=None):
    """Connected components inside ``mask`` as masks, ordered by smallest vertex."""
    if mask is None:
        mask = (1 << n) - 1
    rest = mask
    out = []
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            v = _low(frontier)
            frontier &= frontier - 1
            new = rows[v] & mask & ~seen
            seen |= new
            frontier |= new
        out.append(seen)
        rest &= ~seen
    return out


# ---------------------------------------------------------------- clique


def clique(rows, n):
    """Maximum clique (size, mask); the witness is the lexicographically least one."""
    if n == 0:
        return 0, 0
    best = [0, 0]

    def expand(r, size, p):
        if p == 0:
            if size > best[0]:
                best[0] = size
                best[1] = r
            return
        while p:
            if size + p.bit_count() <= best[0]:
                return
            low = p & -p
            v = low.bit_length() - 1
            expand(r | low, size + 1, p & rows[v])
            p ^= low

    expand(0, 0, (1 << n) - 1)
    return best[0], best[1]


# ---------------------------------------------------------------- coloring


def _dsatur_pick(rows, n, colors, sat):
    best = -1
    best_s = -1
    best_d = -1
    uncolored = 0
    for v in range(n):
        if colors[v] < 0:
            uncolored |= 1 << v
    for v in range(n):
        if colors[v] >= 0:
            continue
        s = sat[v].bit_count()
        d = (rows[v] & uncolored).bit_count()
        if s > best_s or (s == best_s and d > best_d):
            best, best_s, best_d = v, s, d
    return best


def greedy_coloring(rows, n):
    """DSATUR without backtracking; returns (colors used, color list)."""
    colors = [-1] * n
    sat = [0] * n
    used = 0
    for _ in range(n):
        v = _dsatur_pick(rows, n, colors, sat)
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        if c + 1 > used:
            used = c + 1
        m = rows[v]
        while m:
            u = _low(m)
            m &= m - 1
            sat[u] |= 1 << c
    return used, colors


def k_coloring(rows, n, k):
    """A proper coloring with at most ``k`` colors, or None. Exact backtracking."""
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    sat = [0] * n
    kmask = (1 << k) - 1

    def rec(done, used):
        if done == n:
            return True
        v = _dsatur_pick(rows, n, colors, sat)
        avail = kmask & ~sat[v]
        top = used if used < k else k - 1
        for c in range(top + 1):
            if not avail >> c & 1:
                continue
            colors[v] = c
            saved = []
            m = rows[v]
            while m:
                u = _low(m)
                m &= m - 1
                if colors[u] < 0:
                    saved.append((u, sat[u]))
                    sat[u] |= 1 << c
            if rec(done + 1, used + 1 if c == used else used):
                return True
            for u, s in saved:
                sat[u] = s
            colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def chromatic(rows, n, lower=None):
    """Exact chromatic number and a witness coloring."""
    if n == 0:
        return 0, []
    lo = clique(rows, n)[0] if lower is None else lower
    hi, best = greedy_coloring(rows, n)
    while lo < hi:
        mid = (lo + hi) // 2
        c = k_coloring(rows, n, mid)
        if c is None:
            lo = mid + 1
        else:
            hi = mid
            best = c
    return hi, best


# ---------------------------------------------------------------- matching


def max_matching(rows, n):
    """Maximum-cardinality matching by Edmonds' blossom method; returns mate list."""
    mate = [-1] * n
    for v in range(n):
        if mate[v] < 0:
            m = rows[v]
            while m:
                u = _low(m)
                m &= m - 1
                if mate[u] < 0:
                    mate[u] = v
                    mate[v] = u
                    break
    for root in range(n):
        if mate[root] < 0:
            v, parent = _find_path(rows, n, mate, root)
            while v >= 0:
                pv = parent[v]
                ppv = mate[pv]
                mate[v] = pv
                mate[pv] = v
                v = ppv
    return mate


def _find_path(rows, n, mate, root):
    used = [False] * n
    p = [-1] * n
    base = list(range(n))
    used[root] = True
    q = [root]
    qh = 0

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = p[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[mate[b]]

    def mark(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[mate[v]]] = True
            p[v] = child
            child = mate[v]
            v = p[mate[v]]

    while qh < len(q):
        v = q[qh]
        qh += 1
        m = rows[v]
        while m:
            to = _low(m)
            m &= m - 1
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and p[mate[to]] >= 0):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] < 0:
                p[to] = v
                if mate[to] < 0:
                    return to, p
                used[mate[to]] = True
                q.append(mate[to])
    return -1, p


def matching_size(rows, n):
    return sum(1 for x in max_matching(rows, n) if x >= 0) // 2


def matching_covered(rows, n):
    """Every edge lies in a perfect matching; edgeless graphs are not covered."""
    if n % 2 or matching_size(rows, n) * 2 != n:
        return False
    full = (1 << n) - 1
    any_edge = False
    for u in range(n):
        m = rows[u] & ~((2 << u) - 1)
        while m:
            v = _low(m)
            m &= m - 1
            any_edge = True
            sub = induce(rows, full & ~(1 << u) & ~(1 << v))
            if 2 * matching_size(sub, n - 2) != n - 2:
                return False
    return any_edge


# ---------------------------------------------------------------- partial colorings


def _first_independent(rows, avail, r):
    def rec(chosen, size, cand):
        if size == r:
            return chosen
        while cand:
            if size + cand.bit_count() < r:
                return 0
            low = cand & -cand
            v = low.bit_length() - 1
            got = rec(chosen | low, size + 1, (cand ^ low) & ~rows[v])
            if got:
                return got
            cand ^= low
        return 0

    return rec(0, 0, avail)


def greedy_classes(rows, n, r):
    """Repeatedly take the lexicographically least independent r-set among the rest."""
    avail = (1 << n) - 1
    out = []
    if r < 1:
        return out
    while True:
        s = _first_independent(rows, avail, r)
        if not s:
            return out
        out.append(s)
        avail &= ~s


def min_missed(rows, n, r):
    """Disjoint independent sets of size >= r covering the most vertices.

    Ties on the missed count are broken toward fewer classes. Returns
    (missed mask, list of class masks).
    """
    best = [n + 1, n + 1, 0, []]
    classes = []

    def search(avail, missed, missed_count):
        nc = len(classes)
        if missed_count > best[0]:
            return
        if missed_count == best[0]:
            if avail == 0 and nc >= best[1]:
                return
            if avail and nc + 1 >= best[1]:
                return
        if avail == 0:
            best[0], best[1], best[2], best[3] = missed_count, nc, missed, list(classes)
            return
        if avail.bit_count() < r:
            search(0, missed | avail, missed_count + avail.bit_count())
            return
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        extend(low, 1, rest & ~rows[v], rest, missed, missed_count)
        search(rest, missed | low, missed_count + 1)

    def extend(s, size, cand, rest, missed, missed_count):
        if size + cand.bit_count() < r:
            return
        c = cand
        while c:
            low = c & -c
            u = low.bit_length() - 1
            c ^= low
            extend(s | low, size + 1, c & ~rows[u], rest, missed, missed_count)
        if size >= r:
            classes.append(s)
            search(rest & ~s, missed, missed_count)
            classes.pop()

    search((1 << n) - 1, 0, 0)
    return best[2], best[3]


def grow_classes(rows, n, classes):
    """Extend each class with uncovered vertices it is fully non-adjacent to."""
    covered = 0
    for s in classes:
        covered |= s
    out = []
    for s in classes:
        cand = ((1 << n) - 1) & ~covered
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            m = s
            ok = True
            while m:
                w = _low(m)
                m &= m - 1
                if rows[u] >> w & 1:
                    ok = False
                    break
            if ok:
                s |= low
                covered |= low
        out.append(s)
    missed = ((1 << n) - 1) & ~covered
    return missed, out


# ---------------------------------------------------------------- criticality


def vertex_critical(rows, n, chi):
    if n == 1:
        return True
    full = (1 << n) - 1
    for v in range(n):
        sub = induce(rows, full & ~(1 << v))
        if chromatic(sub, n - 1)[0] >= chi:
            return False
    return True


def cojoin_subgraph(rows, n, chi):
    """Smallest-first search for X with complement(G - X) disconnected and equal chi.

    Subsets of a given size are visited in increasing mask order. Returns the
    mask of X or -1.
    """
    full = (1 << n) - 1
    for size in range(n - 1):
        if size == 0:
            x = 0
        else:
            x = (1 << size) - 1
        while x <= full:
            keep = full & ~x
            k = n - size
            sub = induce(rows, keep)
            csub = complement_rows(sub, k)
            if len(components(csub, k)) > 1 and chromatic(sub, k)[0] == chi:
                return x
            if size == 0:
                break
            c = x & -x
            y = x + c
            x = (((y ^ x) >> 2) // c) | y
    return -1


# ---------------------------------------------------------------- fused profile


def profile(rows, n):
    """Every per-graph quantity the statement catalog consumes, as a flat tuple."""
    crows = complement_rows(rows, n)
    omega = clique(rows, n)[0]
    chi = chromatic(rows, n, omega)[0]
    alpha = clique(crows, n)[0]
    degs = [r.bit_count() for r in rows]
    nu = matching_size(rows, n)
    nu_c = matching_size(crows, n)
    c_comps = len(components(crows, n))
    c_mcov = -1
    if n % 2 == 0 and 2 * nu_c == n:
        c_mcov = 1 if matching_covered(crows, n) else 0
    vcrit = -1
    cojoin = -1
    if chi > (n + 1) // 2:
        vcrit = 1 if vertex_critical(rows, n, chi) else 0
        cojoin = 1 if cojoin_subgraph(rows, n, chi) >= 0 else 0
    g2 = len(greedy_classes(rows, n, 2))
    g3 = len(greedy_classes(rows, n, 3))
    g4 = len(greedy_classes(rows, n, 4))
    exact = n <= MIN_MISSED_EXACT_MAX
    if exact:
        missed, classes = min_missed(rows, n, 3)
    else:
        missed, classes = grow_classes(rows, n, greedy_classes(rows, n, 3))
    adjacent = 1
    m = missed
    while m and adjacent:
        v = _low(m)
        m &= m - 1
        for s in classes:
            if not rows[v] & s:
                adjacent = 0
                break
    m_alpha = 0
    if missed:
        sub = induce(crows, missed)
        m_alpha = clique(sub, len(sub))[0]
    return (
        n, chi, omega, alpha, max(degs), min(degs), nu, nu_c, c_comps, c_mcov,
        vcrit, cojoin, g2, g3, g4, 1 if exact else 0, len(classes),
        missed.bit_count(), adjacent, m_alpha,
    )


# ---------------------------------------------------------------- labeled sweep


def pair_table(n):
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def rows_from_mask(n, mask, pairs=None):
    if pairs is None:
        pairs = pair_table(n)
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return rows


def sweep(n, lo, hi):
    """Profiles of every labeled graph whose edge mask lies in [lo, hi).

    Returns {profile: [count, smallest mask]}.
    """
    pairs = pair_table(n)
    out = {}
    for mask in range(lo, hi):
        key = profile(rows_from_mask(n, mask, pairs), n)
        slot = out.get(key)
        if slot is None:
            out[key] = [1, mask]
        else:
            slot[0] += 1
    return out

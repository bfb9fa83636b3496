# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled graph kernels over 64-bit adjacency rows.

Search orders match ``_pykernels`` exactly; the two modules are interchangeable.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MM_EXACT_MAX = 12

ctypedef uint64_t u64


cdef inline u64 fullmask(int n) noexcept nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef inline u64 bit(int v) noexcept nogil:
    return (<u64>1) << v


cdef int load(object rows, int n, u64* out) except -1:
    if n < 0 or n > MAXN:
        raise ValueError("order out of range")
    cdef int v
    for v in range(n):
        out[v] = <u64>rows[v]
    return 0


cdef void complement_c(const u64* rows, int n, u64* out) noexcept nogil:
    cdef u64 full = fullmask(n)
    cdef int v
    for v in range(n):
        out[v] = full & ~rows[v] & ~bit(v)


cdef int induce_c(const u64* rows, u64 keep, u64* out) noexcept nogil:
    cdef int verts[MAXN]
    cdef int k = 0, i, j
    cdef u64 m = keep, r, nr
    while m:
        verts[k] = ctz(m)
        k += 1
        m &= m - 1
    for i in range(k):
        r = rows[verts[i]] & keep
        nr = 0
        for j in range(k):
            if (r >> verts[j]) & 1:
                nr |= bit(j)
        out[i] = nr
    return k


cdef int count_components(const u64* rows, int n) noexcept nogil:
    cdef u64 rest = fullmask(n), seen, frontier, new
    cdef int v, count = 0
    while rest:
        seen = rest & (~rest + 1)
        frontier = seen
        while frontier:
            v = ctz(frontier)
            frontier &= frontier - 1
            new = rows[v] & ~seen
            seen |= new
            frontier |= new
        count += 1
        rest &= ~seen
    return count


# ---------------------------------------------------------------- clique

cdef struct CliqueState:
    const u64* rows
    int best
    u64 best_mask


cdef void expand(CliqueState* st, u64 r, int size, u64 p) noexcept nogil:
    cdef u64 low
    cdef int v
    if p == 0:
        if size > st.best:
            st.best = size
            st.best_mask = r
        return
    while p:
        if size + popcount(p) <= st.best:
            return
        low = p & (~p + 1)
        v = ctz(p)
        expand(st, r | low, size + 1, p & st.rows[v])
        p ^= low


cdef int clique_c(const u64* rows, int n, u64* witness) noexcept nogil:
    cdef CliqueState st
    if n == 0:
        witness[0] = 0
        return 0
    st.rows = rows
    st.best = 0
    st.best_mask = 0
    expand(&st, 0, 0, fullmask(n))
    witness[0] = st.best_mask
    return st.best


# ---------------------------------------------------------------- coloring

cdef struct ColorState:
    const u64* rows
    int n
    int k
    u64 kmask
    int colors[MAXN]
    u64 sat[MAXN]


cdef int dsatur_pick(const u64* rows, int n, const int* colors, const u64* sat) noexcept nogil:
    cdef int best = -1, best_s = -1, best_d = -1, v, s, d
    cdef u64 uncolored = 0
    for v in range(n):
        if colors[v] < 0:
            uncolored |= bit(v)
    for v in range(n):
        if colors[v] >= 0:
            continue
        s = popcount(sat[v])
        d = popcount(rows[v] & uncolored)
        if s > best_s or (s == best_s and d > best_d):
            best = v
            best_s = s
            best_d = d
    return best


cdef int greedy_coloring_c(const u64* rows, int n, int* colors) noexcept nogil:
    cdef u64 sat[MAXN]
    cdef int used = 0, i, v, c, u
    cdef u64 m
    for i in range(n):
        colors[i] = -1
        sat[i] = 0
    for i in range(n):
        v = dsatur_pick(rows, n, colors, sat)
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colors[v] = c
        if c + 1 > used:
            used = c + 1
        m = rows[v]
        while m:
            u = ctz(m)
            m &= m - 1
            sat[u] |= bit(c)
    return used


cdef bint color_rec(ColorState* st, int done, int used) noexcept nogil:
    cdef int v, c, top, u, ns, i
    cdef u64 avail, m
    cdef int saved_v[MAXN]
    cdef u64 saved_s[MAXN]
    if done == st.n:
        return True
    v = dsatur_pick(st.rows, st.n, st.colors, st.sat)
    avail = st.kmask & ~st.sat[v]
    top = used if used < st.k else st.k - 1
    for c in range(top + 1):
        if not ((avail >> c) & 1):
            continue
        st.colors[v] = c
        ns = 0
        m = st.rows[v]
        while m:
            u = ctz(m)
            m &= m - 1
            if st.colors[u] < 0:
                saved_v[ns] = u
                saved_s[ns] = st.sat[u]
                ns += 1
                st.sat[u] |= bit(c)
        if color_rec(st, done + 1, used + 1 if c == used else used):
            return True
        for i in range(ns):
            st.sat[saved_v[i]] = saved_s[i]
        st.colors[v] = -1
    return False


cdef bint k_coloring_c(const u64* rows, int n, int k, int* colors) noexcept nogil:
    cdef ColorState st
    cdef int i
    if n == 0:
        return True
    if k <= 0:
        return False
    st.rows = rows
    st.n = n
    st.k = k
    st.kmask = fullmask(k)
    for i in range(n):
        st.colors[i] = -1
        st.sat[i] = 0
    if color_rec(&st, 0, 0):
        memcpy(colors, st.colors, n * sizeof(int))
        return True
    return False


cdef int chromatic_c(const u64* rows, int n, int lower, int* colors) noexcept nogil:
    cdef int lo, hi, mid
    cdef int trial[MAXN]
    cdef u64 w
    if n == 0:
        return 0
    lo = lower if lower >= 0 else clique_c(rows, n, &w)
    hi = greedy_coloring_c(rows, n, colors)
    while lo < hi:
        mid = (lo + hi) // 2
        if k_coloring_c(rows, n, mid, trial):
            hi = mid
            memcpy(colors, trial, n * sizeof(int))
        else:
            lo = mid + 1
    return hi


# ---------------------------------------------------------------- matching

cdef struct MatchState:
    const u64* rows
    int n
    int* mate
    int p[MAXN]
    int base[MAXN]
    bint used[MAXN]
    bint blossom[MAXN]
    bint seen[MAXN]


cdef int lca(MatchState* st, int a, int b) noexcept nogil:
    cdef int i
    for i in range(st.n):
        st.seen[i] = False
    while True:
        a = st.base[a]
        st.seen[a] = True
        if st.mate[a] < 0:
            break
        a = st.p[st.mate[a]]
    while True:
        b = st.base[b]
        if st.seen[b]:
            return b
        b = st.p[st.mate[b]]


cdef void mark_path(MatchState* st, int v, int b, int child) noexcept nogil:
    while st.base[v] != b:
        st.blossom[st.base[v]] = True
        st.blossom[st.base[st.mate[v]]] = True
        st.p[v] = child
        child = st.mate[v]
        v = st.p[st.mate[v]]


cdef int find_path(MatchState* st, int root) noexcept nogil:
    cdef int q[MAXN]
    cdef int qh = 0, qt = 0, v, to, cur, i, n = st.n
    cdef u64 m
    for i in range(n):
        st.used[i] = False
        st.p[i] = -1
        st.base[i] = i
    st.used[root] = True
    q[qt] = root
    qt += 1
    while qh < qt:
        v = q[qh]
        qh += 1
        m = st.rows[v]
        while m:
            to = ctz(m)
            m &= m - 1
            if st.base[v] == st.base[to] or st.mate[v] == to:
                continue
            if to == root or (st.mate[to] >= 0 and st.p[st.mate[to]] >= 0):
                cur = lca(st, v, to)
                for i in range(n):
                    st.blossom[i] = False
                mark_path(st, v, cur, to)
                mark_path(st, to, cur, v)
                for i in range(n):
                    if st.blossom[st.base[i]]:
                        st.base[i] = cur
                        if not st.used[i]:
                            st.used[i] = True
                            q[qt] = i
                            qt += 1
            elif st.p[to] < 0:
                st.p[to] = v
                if st.mate[to] < 0:
                    return to
                st.used[st.mate[to]] = True
                q[qt] = st.mate[to]
                qt += 1
    return -1


cdef int matching_c(const u64* rows, int n, int* mate) noexcept nogil:
    cdef MatchState st
    cdef int v, u, root, pv, ppv, size = 0
    cdef u64 m
    st.rows = rows
    st.n = n
    st.mate = mate
    for v in range(n):
        mate[v] = -1
    for v in range(n):
        if mate[v] < 0:
            m = rows[v]
            while m:
                u = ctz(m)
                m &= m - 1
                if mate[u] < 0:
                    mate[u] = v
                    mate[v] = u
                    break
    for root in range(n):
        if mate[root] < 0:
            v = find_path(&st, root)
            while v >= 0:
                pv = st.p[v]
                ppv = mate[pv]
                mate[v] = pv
                mate[pv] = v
                v = ppv
    for v in range(n):
        if mate[v] >= 0:
            size += 1
    return size // 2


cdef bint matching_covered_c(const u64* rows, int n) noexcept nogil:
    cdef int mate[MAXN]
    cdef u64 sub[MAXN]
    cdef u64 full = fullmask(n), m
    cdef int u, v
    cdef bint any_edge = False
    if n % 2 or 2 * matching_c(rows, n, mate) != n:
        return False
    for u in range(n):
        m = rows[u] & ~(fullmask(u + 1))
        while m:
            v = ctz(m)
            m &= m - 1
            any_edge = True
            induce_c(rows, full & ~bit(u) & ~bit(v), sub)
            if 2 * matching_c(sub, n - 2, mate) != n - 2:
                return False
    return any_edge


# ---------------------------------------------------------------- partial colorings

cdef u64 first_independent(const u64* rows, u64 chosen, int size, u64 cand, int r) noexcept nogil:
    cdef u64 low, got
    cdef int v
    if size == r:
        return chosen
    while cand:
        if size + popcount(cand) < r:
            return 0
        low = cand & (~cand + 1)
        v = ctz(cand)
        got = first_independent(rows, chosen | low, size + 1, (cand ^ low) & ~rows[v], r)
        if got:
            return got
        cand ^= low
    return 0


cdef int greedy_classes_c(const u64* rows, int n, int r, u64* out) noexcept nogil:
    cdef u64 avail = fullmask(n), s
    cdef int count = 0
    if r < 1:
        return 0
    while True:
        s = first_independent(rows, 0, 0, avail, r)
        if not s:
            return count
        out[count] = s
        count += 1
        avail &= ~s


cdef struct MissState:
    const u64* rows
    int r
    int best_m
    int best_c
    u64 best_missed
    u64 best_classes[MAXN]
    u64 classes[MAXN]
    int nc


cdef void miss_search(MissState* st, u64 avail, u64 missed, int missed_count) noexcept nogil:
    cdef int nc = st.nc, v, i
    cdef u64 low, rest
    if missed_count > st.best_m:
        return
    if missed_count == st.best_m:
        if avail == 0 and nc >= st.best_c:
            return
        if avail and nc + 1 >= st.best_c:
            return
    if avail == 0:
        st.best_m = missed_count
        st.best_c = nc
        st.best_missed = missed
        for i in range(nc):
            st.best_classes[i] = st.classes[i]
        return
    if popcount(avail) < st.r:
        miss_search(st, 0, missed | avail, missed_count + popcount(avail))
        return
    low = avail & (~avail + 1)
    v = ctz(avail)
    rest = avail ^ low
    miss_extend(st, low, 1, rest & ~st.rows[v], rest, missed, missed_count)
    miss_search(st, rest, missed | low, missed_count + 1)


cdef void miss_extend(MissState* st, u64 s, int size, u64 cand, u64 rest, u64 missed, int missed_count) noexcept nogil:
    cdef u64 c = cand, low
    cdef int u
    if size + popcount(cand) < st.r:
        return
    while c:
        low = c & (~c + 1)
        u = ctz(c)
        c ^= low
        miss_extend(st, s | low, size + 1, c & ~st.rows[u], rest, missed, missed_count)
    if size >= st.r:
        st.classes[st.nc] = s
        st.nc += 1
        miss_search(st, rest & ~s, missed, missed_count)
        st.nc -= 1


cdef int min_missed_c(const u64* rows, int n, int r, u64* missed, u64* classes) noexcept nogil:
    cdef MissState st
    cdef int i
    st.rows = rows
    st.r = r
    st.best_m = n + 1
    st.best_c = n + 1
    st.best_missed = 0
    st.nc = 0
    miss_search(&st, fullmask(n), 0, 0)
    missed[0] = st.best_missed
    for i in range(st.best_c):
        classes[i] = st.best_classes[i]
    return st.best_c


cdef u64 grow_classes_c(const u64* rows, int n, u64* classes, int count) noexcept nogil:
    cdef u64 covered = 0, cand, low, s
    cdef int i, u
    for i in range(count):
        covered |= classes[i]
    for i in range(count):
        s = classes[i]
        cand = fullmask(n) & ~covered
        while cand:
            low = cand & (~cand + 1)
            u = ctz(cand)
            cand ^= low
            if not (rows[u] & s):
                s |= low
                covered |= low
        classes[i] = s
    return fullmask(n) & ~covered


# ---------------------------------------------------------------- criticality

cdef bint vertex_critical_c(const u64* rows, int n, int chi) noexcept nogil:
    cdef u64 sub[MAXN]
    cdef int colors[MAXN]
    cdef int v
    if n == 1:
        return True
    for v in range(n):
        induce_c(rows, fullmask(n) & ~bit(v), sub)
        if chromatic_c(sub, n - 1, -1, colors) >= chi:
            return False
    return True


cdef long long cojoin_subgraph_c(const u64* rows, int n, int chi) noexcept nogil:
    cdef u64 sub[MAXN]
    cdef u64 csub[MAXN]
    cdef int colors[MAXN]
    cdef u64 full = fullmask(n), x, c, y, keep
    cdef int size, k
    for size in range(n - 1):
        x = 0 if size == 0 else fullmask(size)
        while x <= full:
            keep = full & ~x
            k = n - size
            induce_c(rows, keep, sub)
            complement_c(sub, k, csub)
            if count_components(csub, k) > 1 and chromatic_c(sub, k, -1, colors) == chi:
                return <long long>x
            if size == 0:
                break
            c = x & (~x + 1)
            y = x + c
            if y == 0:
                break
            x = (((y ^ x) >> 2) // c) | y
    return -1


# ---------------------------------------------------------------- fused profile

cdef enum:
    NFIELDS = 20


cdef void profile_c(const u64* rows, int n, long* out) noexcept nogil:
    cdef u64 crows[MAXN]
    cdef u64 classes[MAXN]
    cdef u64 sub[MAXN]
    cdef int colors[MAXN]
    cdef int mate[MAXN]
    cdef u64 w, missed, m
    cdef int omega, chi, alpha, maxd = 0, mind = MAXN + 1, d, v, i, nc, k
    cdef int c_mcov = -1, vcrit = -1, cojoin = -1, adjacent = 1, m_alpha = 0
    cdef bint exact
    complement_c(rows, n, crows)
    omega = clique_c(rows, n, &w)
    chi = chromatic_c(rows, n, omega, colors)
    alpha = clique_c(crows, n, &w)
    for v in range(n):
        d = popcount(rows[v])
        if d > maxd:
            maxd = d
        if d < mind:
            mind = d
    out[0] = n
    out[1] = chi
    out[2] = omega
    out[3] = alpha
    out[4] = maxd
    out[5] = mind
    out[6] = matching_c(rows, n, mate)
    out[7] = matching_c(crows, n, mate)
    out[8] = count_components(crows, n)
    if n % 2 == 0 and 2 * out[7] == n:
        c_mcov = 1 if matching_covered_c(crows, n) else 0
    if chi > (n + 1) // 2:
        vcrit = 1 if vertex_critical_c(rows, n, chi) else 0
        cojoin = 1 if cojoin_subgraph_c(rows, n, chi) >= 0 else 0
    out[9] = c_mcov
    out[10] = vcrit
    out[11] = cojoin
    out[12] = greedy_classes_c(rows, n, 2, classes)
    out[13] = greedy_classes_c(rows, n, 3, classes)
    out[14] = greedy_classes_c(rows, n, 4, classes)
    exact = n <= MM_EXACT_MAX
    if exact:
        nc = min_missed_c(rows, n, 3, &missed, classes)
    else:
        nc = greedy_classes_c(rows, n, 3, classes)
        missed = grow_classes_c(rows, n, classes, nc)
    m = missed
    while m and adjacent:
        v = ctz(m)
        m &= m - 1
        for i in range(nc):
            if not (rows[v] & classes[i]):
                adjacent = 0
                break
    if missed:
        k = induce_c(crows, missed, sub)
        m_alpha = clique_c(sub, k, &w)
    out[15] = 1 if exact else 0
    out[16] = nc
    out[17] = popcount(missed)
    out[18] = adjacent
    out[19] = m_alpha


cdef tuple as_tuple(long* vals):
    return (vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6], vals[7],
            vals[8], vals[9], vals[10], vals[11], vals[12], vals[13], vals[14],
            vals[15], vals[16], vals[17], vals[18], vals[19])


# ---------------------------------------------------------------- Python surface

def clique(rows, int n):
    cdef u64 r[MAXN]
    cdef u64 w
    cdef int size
    load(rows, n, r)
    size = clique_c(r, n, &w)
    return size, w


def greedy_coloring(rows, int n):
    cdef u64 r[MAXN]
    cdef int colors[MAXN]
    load(rows, n, r)
    used = greedy_coloring_c(r, n, colors)
    return used, [colors[i] for i in range(n)]


def k_coloring(rows, int n, int k):
    cdef u64 r[MAXN]
    cdef int colors[MAXN]
    load(rows, n, r)
    if not k_coloring_c(r, n, k, colors):
        return None
    return [colors[i] for i in range(n)]


def chromatic(rows, int n, lower=None):
    cdef u64 r[MAXN]
    cdef int colors[MAXN]
    load(rows, n, r)
    chi = chromatic_c(r, n, -1 if lower is None else lower, colors)
    return chi, [colors[i] for i in range(n)]


def max_matching(rows, int n):
    cdef u64 r[MAXN]
    cdef int mate[MAXN]
    load(rows, n, r)
    matching_c(r, n, mate)
    return [mate[i] for i in range(n)]


def matching_size(rows, int n):
    cdef u64 r[MAXN]
    cdef int mate[MAXN]
    load(rows, n, r)
    return matching_c(r, n, mate)


def matching_covered(rows, int n):
    cdef u64 r[MAXN]
    load(rows, n, r)
    return bool(matching_covered_c(r, n))


def greedy_classes(rows, int n, int r):
    cdef u64 rr[MAXN]
    cdef u64 out[MAXN]
    load(rows, n, rr)
    count = greedy_classes_c(rr, n, r, out)
    return [out[i] for i in range(count)]


def min_missed(rows, int n, int r):
    cdef u64 rr[MAXN]
    cdef u64 classes[MAXN]
    cdef u64 missed
    load(rows, n, rr)
    count = min_missed_c(rr, n, r, &missed, classes)
    return missed, [classes[i] for i in range(count)]


def vertex_critical(rows, int n, int chi):
    cdef u64 r[MAXN]
    load(rows, n, r)
    return bool(vertex_critical_c(r, n, chi))


def cojoin_subgraph(rows, int n, int chi):
    cdef u64 r[MAXN]
    load(rows, n, r)
    return cojoin_subgraph_c(r, n, chi)


def profile(rows, int n):
    cdef u64 r[MAXN]
    cdef long vals[NFIELDS]
    load(rows, n, r)
    profile_c(r, n, vals)
    return as_tuple(vals)


def sweep(int n, unsigned long long lo, unsigned long long hi):
    """Profiles of every labeled graph whose edge mask lies in [lo, hi)."""
    cdef int pi[2016]
    cdef int pj[2016]
    cdef u64 r[MAXN]
    cdef long vals[NFIELDS]
    cdef int i, j, k = 0, v
    cdef unsigned long long mask, mm
    cdef dict out = {}
    cdef list slot
    if n < 1 or n > 11:
        raise ValueError("labeled sweeps support 1 <= n <= 11")
    for j in range(1, n):
        for i in range(j):
            pi[k] = i
            pj[k] = j
            k += 1
    mask = lo
    while mask < hi:
        for v in range(n):
            r[v] = 0
        mm = mask
        k = 0
        while mm:
            if mm & 1:
                r[pi[k]] |= bit(pj[k])
                r[pj[k]] |= bit(pi[k])
            mm >>= 1
            k += 1
        profile_c(r, n, vals)
        key = as_tuple(vals)
        slot = out.get(key)
        if slot is None:
            out[key] = [1, mask]
        else:
            slot[0] += 1
        mask += 1
    return out

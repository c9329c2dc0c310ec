# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel: equitable refinement plus backtracking.

Twin of ``_search_py`` with identical semantics and tie-breaking: splitter
queue refinement; new color ids allocated by ascending neighbor count
within ascending class id; target cell = smallest non-singleton class with
lowest id; candidates tried in ascending vertex order.  The pure module's
docstrings are the algorithm reference; outputs of the two backends match
exactly.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define TC_POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static inline int TC_POPCOUNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int TC_POPCOUNT64(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "c"

DEF MASK64 = 0xFFFFFFFFFFFFFFFF


cdef struct Ctx:
    int n
    int W
    u64 *adj_l
    u64 *adj_r
    int *col_l        # (n + 2) stacked levels of n colors
    int *col_r
    u64 *mask_l
    u64 *mask_r
    int *cnt_l
    int *cnt_r
    int *queue        # ring buffer
    unsigned char *inq
    int *sizes
    int *ord_l
    int *ord_r
    int *tmp
    int *bucket
    int *bucket2
    int *sigma
    int *where


cdef bint _ctx_init(Ctx *c, object adj_l, object adj_r) except? False:
    cdef int n = len(adj_l)
    cdef int W = (n + 63) >> 6
    if W == 0:
        W = 1
    c.n = n
    c.W = W
    c.adj_l = <u64 *>calloc(n * W, sizeof(u64))
    c.adj_r = <u64 *>calloc(n * W, sizeof(u64))
    c.col_l = <int *>calloc((n + 2) * n, sizeof(int))
    c.col_r = <int *>calloc((n + 2) * n, sizeof(int))
    c.mask_l = <u64 *>calloc(W, sizeof(u64))
    c.mask_r = <u64 *>calloc(W, sizeof(u64))
    c.cnt_l = <int *>calloc(n, sizeof(int))
    c.cnt_r = <int *>calloc(n, sizeof(int))
    c.queue = <int *>calloc(n + 2, sizeof(int))
    c.inq = <unsigned char *>calloc(n + 2, sizeof(unsigned char))
    c.sizes = <int *>calloc(n + 2, sizeof(int))
    c.ord_l = <int *>calloc(n, sizeof(int))
    c.ord_r = <int *>calloc(n, sizeof(int))
    c.tmp = <int *>calloc(n, sizeof(int))
    c.bucket = <int *>calloc(n + 2, sizeof(int))
    c.bucket2 = <int *>calloc(n + 2, sizeof(int))
    c.sigma = <int *>calloc(n, sizeof(int))
    c.where = <int *>calloc(n, sizeof(int))
    if (c.adj_l == NULL or c.adj_r == NULL or c.col_l == NULL or c.col_r == NULL
            or c.mask_l == NULL or c.mask_r == NULL or c.cnt_l == NULL
            or c.cnt_r == NULL or c.queue == NULL or c.inq == NULL
            or c.sizes == NULL or c.ord_l == NULL or c.ord_r == NULL
            or c.tmp == NULL or c.bucket == NULL or c.bucket2 == NULL
            or c.sigma == NULL or c.where == NULL):
        _ctx_free(c)
        raise MemoryError()
    cdef int v, w
    cdef object m
    for v in range(n):
        m = adj_l[v]
        for w in range(W):
            c.adj_l[v * W + w] = <u64>((m >> (64 * w)) & MASK64)
        m = adj_r[v]
        for w in range(W):
            c.adj_r[v * W + w] = <u64>((m >> (64 * w)) & MASK64)
    return True


cdef void _ctx_free(Ctx *c):
    free(c.adj_l); free(c.adj_r); free(c.col_l); free(c.col_r)
    free(c.mask_l); free(c.mask_r); free(c.cnt_l); free(c.cnt_r)
    free(c.queue); free(c.inq); free(c.sizes)
    free(c.ord_l); free(c.ord_r); free(c.tmp)
    free(c.bucket); free(c.bucket2); free(c.sigma); free(c.where)


cdef inline bint _bit(u64 *adj, int W, int v, int u) nogil:
    return (adj[v * W + (u >> 6)] >> (u & 63)) & 1


cdef void _sort_by_color_count(Ctx *c, int *col, int *cnt, int *out, int ncol) nogil:
    """out = vertices sorted by (color, count), stable."""
    cdef int n = c.n
    cdef int v, i, total, k
    memset(c.bucket, 0, (n + 2) * sizeof(int))
    for v in range(n):
        c.bucket[cnt[v]] += 1
    total = 0
    for i in range(n + 1):
        k = c.bucket[i]
        c.bucket[i] = total
        total += k
    for v in range(n):
        c.tmp[c.bucket[cnt[v]]] = v
        c.bucket[cnt[v]] += 1
    memset(c.bucket2, 0, (n + 2) * sizeof(int))
    for v in range(n):
        c.bucket2[col[v]] += 1
    total = 0
    for i in range(ncol + 1):
        k = c.bucket2[i]
        c.bucket2[i] = total
        total += k
    for i in range(n):
        v = c.tmp[i]
        out[c.bucket2[col[v]]] = v
        c.bucket2[col[v]] += 1


cdef int _refine(Ctx *c, int lev, int ncol, int seed1, int seed2) nogil:
    """Lockstep refinement of the level-`lev` colorings; returns the new
    color count or -1 on incompatibility."""
    cdef int n = c.n
    cdef int W = c.W
    cdef int *col_l = c.col_l + lev * n
    cdef int *col_r = c.col_r + lev * n
    cdef int qhead = 0, qtail = 0, qcap = n + 2
    cdef int s, v, w, i, j, t, cls, run_end, grp_start, new_id
    cdef u64 acc
    memset(c.inq, 0, (n + 2) * sizeof(unsigned char))
    if seed1 >= 0 and not c.inq[seed1]:
        c.inq[seed1] = 1
        c.queue[qtail] = seed1
        qtail = (qtail + 1) % qcap
    if seed2 >= 0 and not c.inq[seed2]:
        c.inq[seed2] = 1
        c.queue[qtail] = seed2
        qtail = (qtail + 1) % qcap
    while qhead != qtail:
        s = c.queue[qhead]
        qhead = (qhead + 1) % qcap
        c.inq[s] = 0
        memset(c.mask_l, 0, W * sizeof(u64))
        memset(c.mask_r, 0, W * sizeof(u64))
        for v in range(n):
            if col_l[v] == s:
                c.mask_l[v >> 6] |= (<u64>1) << (v & 63)
            if col_r[v] == s:
                c.mask_r[v >> 6] |= (<u64>1) << (v & 63)
        for v in range(n):
            acc = 0
            for w in range(W):
                acc += TC_POPCOUNT64(c.adj_l[v * W + w] & c.mask_l[w])
            c.cnt_l[v] = <int>acc
            acc = 0
            for w in range(W):
                acc += TC_POPCOUNT64(c.adj_r[v * W + w] & c.mask_r[w])
            c.cnt_r[v] = <int>acc
        _sort_by_color_count(c, col_l, c.cnt_l, c.ord_l, ncol)
        _sort_by_color_count(c, col_r, c.cnt_r, c.ord_r, ncol)
        i = 0
        while i < n:
            cls = col_l[c.ord_l[i]]
            run_end = i
            while run_end < n and col_l[c.ord_l[run_end]] == cls:
                run_end += 1
            for t in range(i, run_end):
                if (col_r[c.ord_r[t]] != cls
                        or c.cnt_r[c.ord_r[t]] != c.cnt_l[c.ord_l[t]]):
                    return -1
            # split the run at count boundaries; lowest-count group keeps cls
            j = i
            while j + 1 < run_end and c.cnt_l[c.ord_l[j + 1]] == c.cnt_l[c.ord_l[j]]:
                j += 1
            if j + 1 < run_end:
                # reassign groups beyond the first
                if not c.inq[cls]:
                    c.inq[cls] = 1
                    c.queue[qtail] = cls
                    qtail = (qtail + 1) % qcap
                t = j + 1
                while t < run_end:
                    new_id = ncol
                    ncol += 1
                    grp_start = t
                    while (t < run_end and
                           c.cnt_l[c.ord_l[t]] == c.cnt_l[c.ord_l[grp_start]]):
                        col_l[c.ord_l[t]] = new_id
                        col_r[c.ord_r[t]] = new_id
                        t += 1
                    if not c.inq[new_id]:
                        c.inq[new_id] = 1
                        c.queue[qtail] = new_id
                        qtail = (qtail + 1) % qcap
            i = run_end
    return ncol


cdef int _target_cell(Ctx *c, int lev, int ncol) nogil:
    cdef int n = c.n
    cdef int *col = c.col_l + lev * n
    cdef int v, cc
    cdef int best = -1, best_size = n + 1
    memset(c.sizes, 0, (n + 2) * sizeof(int))
    for v in range(n):
        c.sizes[col[v]] += 1
    for cc in range(ncol):
        if 2 <= c.sizes[cc] < best_size:
            best = cc
            best_size = c.sizes[cc]
    return best


cdef void _copy_level(Ctx *c, int src, int dst) nogil:
    memcpy(c.col_l + dst * c.n, c.col_l + src * c.n, c.n * sizeof(int))
    memcpy(c.col_r + dst * c.n, c.col_r + src * c.n, c.n * sizeof(int))


cdef tuple _extract(Ctx *c, int lev):
    cdef int n = c.n
    cdef int *col_l = c.col_l + lev * n
    cdef int *col_r = c.col_r + lev * n
    cdef int v
    for v in range(n):
        c.where[col_r[v]] = v
    for v in range(n):
        c.sigma[v] = c.where[col_l[v]]
    return tuple([c.sigma[v] for v in range(n)])


cdef bint _preserves(Ctx *c, object sigma) except? False:
    cdef int n = c.n
    cdef int W = c.W
    cdef int v, u
    for v in range(n):
        c.sigma[v] = sigma[v]
    for v in range(n):
        for u in range(n):
            if _bit(c.adj_l, W, v, u) != _bit(c.adj_r, W, c.sigma[v], c.sigma[u]):
                return False
    return True


cdef int _min_member(Ctx *c, int *col, int cls) nogil:
    cdef int v
    for v in range(c.n):
        if col[v] == cls:
            return v
    return -1


cdef object _iso_search(Ctx *c, int lev, int ncol):
    cdef int tc = _target_cell(c, lev, ncol)
    cdef int n = c.n
    cdef int *col_l = c.col_l + lev * n
    cdef int *col_r = c.col_r + lev * n
    cdef int v, u, nc2
    cdef object sigma, found
    if tc < 0:
        sigma = _extract(c, lev)
        if _preserves(c, sigma):
            return sigma
        return None
    v = _min_member(c, col_l, tc)
    for u in range(n):
        if col_r[u] != tc:
            continue
        _copy_level(c, lev, lev + 1)
        (c.col_l + (lev + 1) * n)[v] = ncol
        (c.col_r + (lev + 1) * n)[u] = ncol
        nc2 = _refine(c, lev + 1, ncol + 1, tc, ncol)
        if nc2 < 0:
            continue
        found = _iso_search(c, lev + 1, nc2)
        if found is not None:
            return found
    return None


def isomorphism_witness(adj1, adj2):
    """First adjacency-preserving bijection in canonical search order."""
    adj1 = tuple(adj1)
    adj2 = tuple(adj2)
    cdef int n = len(adj1)
    if len(adj2) != n:
        return None
    if n == 0:
        return ()
    cdef Ctx c
    _ctx_init(&c, adj1, adj2)
    cdef int nc
    try:
        nc = _refine(&c, 0, 1, 0, -1)
        if nc < 0:
            return None
        return _iso_search(&c, 0, nc)
    finally:
        _ctx_free(&c)


cdef object _first_automorphism(Ctx *c, int lev, int ncol):
    cdef int tc = _target_cell(c, lev, ncol)
    cdef int n = c.n
    cdef int *col_l = c.col_l + lev * n
    cdef int *col_r = c.col_r + lev * n
    cdef int v, u, nc2
    cdef object sigma, found
    if tc < 0:
        sigma = _extract(c, lev)
        if _preserves(c, sigma):
            return sigma
        return None
    v = _min_member(c, col_l, tc)
    for u in range(n):
        if col_r[u] != tc:
            continue
        _copy_level(c, lev, lev + 1)
        (c.col_l + (lev + 1) * n)[v] = ncol
        (c.col_r + (lev + 1) * n)[u] = ncol
        nc2 = _refine(c, lev + 1, ncol + 1, tc, ncol)
        if nc2 < 0:
            continue
        found = _first_automorphism(c, lev + 1, nc2)
        if found is not None:
            return found
    return None


def _in_orbit(v, u, gens, prefix):
    useful = [g for g in gens if all(g[b] == b for b in prefix)]
    if not useful:
        return False
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in useful:
            y = g[x]
            if y == u:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


cdef void _aut_search(Ctx *c, int lev, int ncol, list base, int depth, list gens):
    cdef int tc = _target_cell(c, lev, ncol)
    if tc < 0:
        return  # identity leaf
    cdef int n = c.n
    cdef int *col_l = c.col_l + lev * n
    cdef int *col_r = c.col_r + lev * n
    cdef int v = _min_member(c, col_l, tc)
    cdef int u, nc2
    cdef object found
    base.append(v)
    # identity branch first: deeper stabilizer generators must exist before
    # the sibling orbit pruning below consults them
    _copy_level(c, lev, lev + 1)
    (c.col_l + (lev + 1) * n)[v] = ncol
    (c.col_r + (lev + 1) * n)[v] = ncol
    nc2 = _refine(c, lev + 1, ncol + 1, tc, ncol)
    _aut_search(c, lev + 1, nc2, base, depth + 1, gens)
    prefix = base[:depth]
    for u in range(n):
        if col_r[u] != tc or u == v:
            continue
        if _in_orbit(v, u, gens, prefix):
            continue
        _copy_level(c, lev, lev + 1)
        (c.col_l + (lev + 1) * n)[v] = ncol
        (c.col_r + (lev + 1) * n)[u] = ncol
        nc2 = _refine(c, lev + 1, ncol + 1, tc, ncol)
        if nc2 < 0:
            continue
        found = _first_automorphism(c, lev + 1, nc2)
        if found is not None:
            gens.append(found)


def automorphism_generators(adj):
    """Generating set of the automorphism group, deterministic order."""
    adj = tuple(adj)
    cdef int n = len(adj)
    gens = []
    if n <= 1:
        return gens
    cdef Ctx c
    _ctx_init(&c, adj, adj)
    cdef int nc
    try:
        nc = _refine(&c, 0, 1, 0, -1)
        _aut_search(&c, 0, nc, [], 0, gens)
    finally:
        _ctx_free(&c)
    return gens

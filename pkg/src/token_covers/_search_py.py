"""Pure-Python search kernel: equitable refinement plus backtracking.

Adjacency comes in as a sequence of per-vertex integer bitmasks.  The two
entry points are ``automorphism_generators`` (a generating set of the
automorphism group, found by walking the identity path of the search tree
and harvesting one generator per new orbit point) and
``isomorphism_witness`` (first color-preserving bijection found, or None).

The compiled extension ``_search_c`` implements the identical algorithm
with the identical tie-breaking; outputs of the two backends match
exactly, which the test suite checks.

Refinement is the classic splitter-queue procedure run on both sides in
lockstep: for a splitter class ``s``, every class is partitioned by the
number of neighbors its members have inside ``s``.  New color ids are
allocated by ascending count within ascending class id, so two sides that
stay compatible always carry structurally aligned colorings; a mismatch in
any class's count multiset proves no color-preserving isomorphism extends
the current branch.
"""

from __future__ import annotations

from collections import deque

BACKEND_NAME = "python"


def _refine(adj_l, col_l, adj_r, col_r, ncolors, seeds):
    """Refine both colorings to a common equitable partition.

    Mutates ``col_l``/``col_r``; returns the new color count or -1 when the
    sides are incompatible.  ``seeds`` primes the splitter queue.
    """
    n = len(adj_l)
    in_queue = bytearray(n + 1)
    queue = deque()
    for s in seeds:
        if not in_queue[s]:
            in_queue[s] = 1
            queue.append(s)
    while queue:
        s = queue.popleft()
        in_queue[s] = 0
        mask_l = 0
        mask_r = 0
        for v in range(n):
            if col_l[v] == s:
                mask_l |= 1 << v
            if col_r[v] == s:
                mask_r |= 1 << v
        cnt_l = [0] * n
        cnt_r = [0] * n
        hist_l = {}
        hist_r = {}
        for v in range(n):
            k = (adj_l[v] & mask_l).bit_count()
            cnt_l[v] = k
            c = col_l[v]
            h = hist_l.get(c)
            if h is None:
                hist_l[c] = h = {}
            h[k] = h.get(k, 0) + 1
            k = (adj_r[v] & mask_r).bit_count()
            cnt_r[v] = k
            c = col_r[v]
            h = hist_r.get(c)
            if h is None:
                hist_r[c] = h = {}
            h[k] = h.get(k, 0) + 1
        splits = {}
        for c in sorted(hist_l):
            h = hist_l[c]
            if hist_r.get(c) != h:
                return -1
            if len(h) > 1:
                values = sorted(h)
                table = {values[0]: c}
                for val in values[1:]:
                    table[val] = ncolors
                    ncolors += 1
                splits[c] = table
                for cc in table.values():
                    if not in_queue[cc]:
                        in_queue[cc] = 1
                        queue.append(cc)
        if splits:
            for v in range(n):
                t = splits.get(col_l[v])
                if t is not None:
                    col_l[v] = t[cnt_l[v]]
                t = splits.get(col_r[v])
                if t is not None:
                    col_r[v] = t[cnt_r[v]]
    return ncolors


def _target_cell(col, ncolors, n):
    """Smallest non-singleton class, ties to the lowest id; -1 if discrete."""
    sizes = [0] * ncolors
    for v in range(n):
        sizes[col[v]] += 1
    best = -1
    best_size = n + 1
    for c in range(ncolors):
        if 2 <= sizes[c] < best_size:
            best = c
            best_size = sizes[c]
    return best


def _extract(col_l, col_r, n):
    """Read the bijection off two discrete aligned colorings."""
    where = [0] * n
    for u in range(n):
        where[col_r[u]] = u
    return tuple(where[col_l[v]] for v in range(n))


def _preserves(adj_l, adj_r, sigma, n):
    """Exact adjacency check of a candidate bijection (both directions,
    since image masks are compared for equality)."""
    for v in range(n):
        mapped = 0
        rest = adj_l[v]
        while rest:
            low = rest & -rest
            mapped |= 1 << sigma[low.bit_length() - 1]
            rest ^= low
        if mapped != adj_r[sigma[v]]:
            return False
    return True


def _members(col, c, n):
    return [v for v in range(n) if col[v] == c]


def isomorphism_witness(adj1, adj2):
    """First adjacency-preserving bijection in canonical search order."""
    adj1 = tuple(adj1)
    adj2 = tuple(adj2)
    n = len(adj1)
    if len(adj2) != n:
        return None
    if n == 0:
        return ()
    col_l = [0] * n
    col_r = [0] * n
    nc = _refine(adj1, col_l, adj2, col_r, 1, (0,))
    if nc < 0:
        return None
    return _iso_search(adj1, col_l, adj2, col_r, nc)


def _iso_search(adj_l, col_l, adj_r, col_r, nc):
    n = len(adj_l)
    c = _target_cell(col_l, nc, n)
    if c < 0:
        sigma = _extract(col_l, col_r, n)
        return sigma if _preserves(adj_l, adj_r, sigma, n) else None
    v = min(_members(col_l, c, n))
    for u in _members(col_r, c, n):
        cl = col_l.copy()
        cr = col_r.copy()
        cl[v] = nc
        cr[u] = nc
        nc2 = _refine(adj_l, cl, adj_r, cr, nc + 1, (c, nc))
        if nc2 < 0:
            continue
        found = _iso_search(adj_l, cl, adj_r, cr, nc2)
        if found is not None:
            return found
    return None


def automorphism_generators(adj):
    """Generating set of the automorphism group, deterministic order.

    The identity path individualizes, at each level, the least vertex of
    the target cell mapped to itself.  Sibling branches map it to other
    members of the cell; each sibling subtree is searched for a single
    automorphism, and siblings already reachable from known generators
    fixing the current base prefix are pruned (Schreier-style generation,
    so the harvested set generates the full group).
    """
    adj = tuple(adj)
    n = len(adj)
    gens = []
    if n <= 1:
        return gens
    col_l = [0] * n
    col_r = [0] * n
    nc = _refine(adj, col_l, adj, col_r, 1, (0,))
    _aut_search(adj, col_l, col_r, nc, [], 0, gens)
    return gens


def _aut_search(adj, col_l, col_r, nc, base, depth, gens):
    n = len(adj)
    c = _target_cell(col_l, nc, n)
    if c < 0:
        return  # identity leaf
    v = min(_members(col_l, c, n))
    base.append(v)
    # identity branch first: deeper stabilizer generators must exist before
    # the sibling orbit pruning below consults them
    cl = col_l.copy()
    cr = col_r.copy()
    cl[v] = nc
    cr[v] = nc
    nc2 = _refine(adj, cl, adj, cr, nc + 1, (c, nc))
    _aut_search(adj, cl, cr, nc2, base, depth + 1, gens)
    prefix = base[:depth]
    for u in _members(col_r, c, n):
        if u == v or _in_orbit(v, u, gens, prefix):
            continue
        cl = col_l.copy()
        cr = col_r.copy()
        cl[v] = nc
        cr[u] = nc
        nc2 = _refine(adj, cl, adj, cr, nc + 1, (c, nc))
        if nc2 < 0:
            continue
        found = _first_automorphism(adj, cl, cr, nc2)
        if found is not None:
            gens.append(found)


def _first_automorphism(adj, col_l, col_r, nc):
    n = len(adj)
    c = _target_cell(col_l, nc, n)
    if c < 0:
        sigma = _extract(col_l, col_r, n)
        return sigma if _preserves(adj, adj, sigma, n) else None
    v = min(_members(col_l, c, n))
    for u in _members(col_r, c, n):
        cl = col_l.copy()
        cr = col_r.copy()
        cl[v] = nc
        cr[u] = nc
        nc2 = _refine(adj, cl, adj, cr, nc + 1, (c, nc))
        if nc2 < 0:
            continue
        found = _first_automorphism(adj, cl, cr, nc2)
        if found is not None:
            return found
    return None


def _in_orbit(v, u, gens, prefix):
    """Whether u lies in the orbit of v under the known generators that fix
    every base point in ``prefix``."""
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

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels. Same contracts and results as ``_pykernels``."""

from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memset

cdef enum:
    FOUND = 0
    NONE_EXISTS = 1
    TIMEOUT = 2


cdef struct CSR:
    int n
    int *off
    int *nbr
    char *mat


cdef int csr_build(CSR *g, adj) except -1:
    cdef int n = len(adj)
    cdef int total = 0, i, k
    for row in adj:
        total += len(row)
    g.n = n
    g.off = <int *> malloc((n + 1) * sizeof(int))
    g.nbr = <int *> malloc((total + 1) * sizeof(int))
    g.mat = <char *> calloc(<size_t> n * n + 1, 1)
    if g.off == NULL or g.nbr == NULL or g.mat == NULL:
        csr_free(g)
        raise MemoryError()
    k = 0
    for i in range(n):
        g.off[i] = k
        for b in adj[i]:
            g.nbr[k] = b
            g.mat[<size_t> i * n + <int> b] = 1
            k += 1
    g.off[n] = k
    return 0


cdef void csr_free(CSR *g):
    free(g.off)
    free(g.nbr)
    free(g.mat)
    g.off = NULL
    g.nbr = NULL
    g.mat = NULL


cdef inline bint lex_less(int *a, int la, int *b, int lb):
    cdef int i
    if la != lb:
        return la < lb
    for i in range(la):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


def shortest_hole(adj):
    cdef CSR g
    csr_build(&g, adj)
    cdef int n = g.n
    cdef int *parent = <int *> malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *> malloc((n + 1) * sizeof(int))
    cdef int *hits = <int *> malloc((n + 1) * sizeof(int))
    cdef char *ring = <char *> calloc(n + 1, 1)
    cdef char *target = <char *> calloc(n + 1, 1)
    cdef int *best = <int *> malloc((n + 1) * sizeof(int))
    cdef int *cand = <int *> malloc((n + 1) * sizeof(int))
    cdef int r, a, c, x, y, e, e2, head, tail, layer_end, depth, nhits, h, blen, clen, i, ntargets
    result = None
    try:
        if parent == NULL or queue == NULL or hits == NULL or ring == NULL or target == NULL \
                or best == NULL or cand == NULL:
            raise MemoryError()
        for i in range(n):
            parent[i] = -2
        for r in range(n):
            blen = 0
            for e in range(g.off[r], g.off[r + 1]):
                if g.nbr[e] > r:
                    ring[g.nbr[e]] = 1
            for e in range(g.off[r], g.off[r + 1]):
                a = g.nbr[e]
                if a <= r:
                    continue
                ntargets = 0
                for e2 in range(g.off[r], g.off[r + 1]):
                    c = g.nbr[e2]
                    if c > a and not g.mat[<size_t> a * n + c]:
                        target[c] = 1
                        ntargets += 1
                if ntargets == 0:
                    continue
                # BFS from a; queue doubles as the visited list for reset
                parent[a] = -1
                queue[0] = a
                head = 0
                tail = 1
                depth = 0
                nhits = 0
                while head < tail and nhits == 0:
                    if blen and depth + 3 > blen:
                        break
                    layer_end = tail
                    while head < layer_end:
                        x = queue[head]
                        head += 1
                        for e2 in range(g.off[x], g.off[x + 1]):
                            y = g.nbr[e2]
                            if y <= r or parent[y] != -2:
                                continue
                            if ring[y]:
                                if target[y]:
                                    parent[y] = x
                                    hits[nhits] = y
                                    nhits += 1
                                continue
                            parent[y] = x
                            queue[tail] = y
                            tail += 1
                    depth += 1
                for h in range(nhits):
                    c = hits[h]
                    clen = 0
                    x = c
                    while x != -1:
                        cand[clen] = x
                        clen += 1
                        x = parent[x]
                    cand[clen] = r
                    clen += 1
                    # cand holds c..a,r; reverse into r,a..c
                    for i in range(clen // 2):
                        x = cand[i]
                        cand[i] = cand[clen - 1 - i]
                        cand[clen - 1 - i] = x
                    if blen == 0 or lex_less(cand, clen, best, blen):
                        for i in range(clen):
                            best[i] = cand[i]
                        blen = clen
                for i in range(tail):
                    parent[queue[i]] = -2
                for h in range(nhits):
                    parent[hits[h]] = -2
                for e2 in range(g.off[r], g.off[r + 1]):
                    target[g.nbr[e2]] = 0
            for e in range(g.off[r], g.off[r + 1]):
                ring[g.nbr[e]] = 0
            if blen:
                result = [best[i] for i in range(blen)]
                break
    finally:
        free(parent)
        free(queue)
        free(hits)
        free(ring)
        free(target)
        free(best)
        free(cand)
        csr_free(&g)
    return result


cdef bint can_close(CSR *g, int head, char *on_path, int *block, char *is_x_nbr,
                    char *is_closer, int *seen, int stamp, int *stack):
    cdef int top = 0, z, e, cur
    seen[head] = stamp
    stack[top] = head
    top += 1
    while top:
        top -= 1
        cur = stack[top]
        for e in range(g.off[cur], g.off[cur + 1]):
            z = g.nbr[e]
            if seen[z] == stamp or on_path[z] or block[z]:
                continue
            if is_x_nbr[z]:
                if is_closer[z]:
                    return True
                continue
            seen[z] = stamp
            stack[top] = z
            top += 1
    return False


def odd_hole_through(adj, int x, long long budget):
    cdef CSR g
    csr_build(&g, adj)
    cdef int n = g.n
    cdef char *is_x_nbr = <char *> calloc(n + 1, 1)
    cdef char *is_closer = <char *> calloc(n + 1, 1)
    cdef char *on_path = <char *> calloc(n + 1, 1)
    cdef int *block = <int *> calloc(n + 1, sizeof(int))
    cdef int *seen = <int *> calloc(n + 1, sizeof(int))
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    cdef int *path = <int *> malloc((n + 2) * sizeof(int))
    cdef int *ptr = <int *> malloc((n + 2) * sizeof(int))
    cdef long long expansions = 0
    cdef int stamp = 0
    cdef int e, ep, p1, c, plen, depth, h, y, i, k
    cdef bint any_closer, advanced
    status = NONE_EXISTS
    cycle = []
    try:
        if is_x_nbr == NULL or is_closer == NULL or on_path == NULL or block == NULL \
                or seen == NULL or stack == NULL or path == NULL or ptr == NULL:
            raise MemoryError()
        for e in range(g.off[x], g.off[x + 1]):
            is_x_nbr[g.nbr[e]] = 1
        on_path[x] = 1
        for ep in range(g.off[x], g.off[x + 1]):
            p1 = g.nbr[ep]
            any_closer = False
            for e in range(g.off[x], g.off[x + 1]):
                c = g.nbr[e]
                is_closer[c] = c > p1 and not g.mat[<size_t> p1 * n + c]
                if is_closer[c]:
                    any_closer = True
            if not any_closer:
                continue
            if expansions >= budget:
                status = TIMEOUT
                break
            expansions += 1
            path[0] = x
            path[1] = p1
            plen = 2
            on_path[p1] = 1
            stamp += 1
            depth = 0
            if can_close(&g, p1, on_path, block, is_x_nbr, is_closer, seen, stamp, stack):
                ptr[0] = g.off[p1]
                depth = 1
            while depth:
                h = path[plen - 1]
                i = ptr[depth - 1]
                advanced = False
                while i < g.off[h + 1]:
                    y = g.nbr[i]
                    i += 1
                    if on_path[y]:
                        continue
                    if is_x_nbr[y]:
                        if is_closer[y] and not block[y] and plen % 2 == 0 and plen >= 4:
                            status = FOUND
                            cycle = [path[k] for k in range(plen)] + [y]
                            break
                        continue
                    if block[y]:
                        continue
                    if expansions >= budget:
                        status = TIMEOUT
                        break
                    expansions += 1
                    ptr[depth - 1] = i
                    for e in range(g.off[h], g.off[h + 1]):
                        block[g.nbr[e]] += 1
                    path[plen] = y
                    plen += 1
                    on_path[y] = 1
                    stamp += 1
                    if can_close(&g, y, on_path, block, is_x_nbr, is_closer, seen, stamp, stack):
                        ptr[depth] = g.off[y]
                        depth += 1
                        advanced = True
                        break
                    plen -= 1
                    on_path[y] = 0
                    for e in range(g.off[h], g.off[h + 1]):
                        block[g.nbr[e]] -= 1
                if status != NONE_EXISTS:
                    break
                if advanced:
                    continue
                depth -= 1
                if plen > 2:
                    plen -= 1
                    on_path[h] = 0
                    k = path[plen - 1]
                    for e in range(g.off[k], g.off[k + 1]):
                        block[g.nbr[e]] -= 1
            if status != NONE_EXISTS:
                break
            on_path[p1] = 0
    finally:
        free(is_x_nbr)
        free(is_closer)
        free(on_path)
        free(block)
        free(seen)
        free(stack)
        free(path)
        free(ptr)
        csr_free(&g)
    return status, cycle, expansions

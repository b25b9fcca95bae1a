"""Pure-Python search kernels. Reference semantics for ``_ckernels.pyx``.

Both take ``adj``: a list of ascending neighbor lists over nodes ``0..V-1``.
"""

FOUND, NONE_EXISTS, TIMEOUT = 0, 1, 2


def shortest_hole(adj):
    """Shortest hole through the lowest node lying on any hole, or None.

    Among shortest holes through that node the lexicographically smallest
    canonical sequence wins. The returned sequence is canonical.
    """
    nbrsets = [set(a) for a in adj]
    for r in range(len(adj)):
        ring = [a for a in adj[r] if a > r]
        if len(ring) < 2:
            continue
        ring_set = set(ring)
        best = None
        for a in ring:
            targets = {c for c in ring if c > a and c not in nbrsets[a]}
            if not targets:
                continue
            # Interior nodes avoid r's closed neighborhood and everything below r.
            parent = {a: -1}
            frontier = [a]
            depth = 0
            hits = []
            while frontier and not hits:
                if best is not None and depth + 3 > len(best):
                    break
                nxt = []
                for x in frontier:
                    for y in adj[x]:
                        if y <= r or y in parent:
                            continue
                        if y in ring_set:
                            if y in targets:
                                parent[y] = x
                                hits.append(y)
                            continue
                        parent[y] = x
                        nxt.append(y)
                frontier = nxt
                depth += 1
            for c in hits:
                path = [c]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                cycle = [r] + path[::-1]
                if best is None or (len(cycle), cycle) < (len(best), best):
                    best = cycle
        if best is not None:
            return best
    return None


def _can_close(adj, head, on_path, block, is_x_nbr, is_closer, seen):
    """Necessary condition: head reaches a usable closer through unblocked nodes."""
    seen.clear()
    seen.add(head)
    stack = [head]
    while stack:
        for z in adj[stack.pop()]:
            if z in seen or on_path[z] or block[z]:
                continue
            if is_x_nbr[z]:
                if is_closer[z]:
                    return True
                continue
            seen.add(z)
            stack.append(z)
    return False


def odd_hole_through(adj, x, budget):
    """Depth-first search over induced paths from ``x`` for an odd hole (>= 5).

    Returns ``(status, cycle, expansions)``. One expansion is one node pushed
    onto the induced path. Neighbors are tried in ascending order; a hole is
    reported as ``[x, p1, ..., pk, y]`` with ``p1 < y``.
    """
    V = len(adj)
    is_x_nbr = [False] * V
    for a in adj[x]:
        is_x_nbr[a] = True
    on_path = [False] * V
    on_path[x] = True
    block = [0] * V
    seen = set()
    expansions = 0
    for p1 in adj[x]:
        p1_nbrs = set(adj[p1])
        is_closer = [False] * V
        any_closer = False
        for c in adj[x]:
            if c > p1 and c not in p1_nbrs:
                is_closer[c] = True
                any_closer = True
        if not any_closer:
            continue
        if expansions >= budget:
            return TIMEOUT, [], expansions
        expansions += 1
        path = [x, p1]
        on_path[p1] = True
        ptr = [0] if _can_close(adj, p1, on_path, block, is_x_nbr, is_closer, seen) else []
        while ptr:
            h = path[-1]
            nbrs = adj[h]
            i = ptr[-1]
            advanced = False
            while i < len(nbrs):
                y = nbrs[i]
                i += 1
                if on_path[y]:
                    continue
                if is_x_nbr[y]:
                    if is_closer[y] and not block[y] and len(path) % 2 == 0 and len(path) >= 4:
                        return FOUND, path + [y], expansions
                    continue
                if block[y]:
                    continue
                if expansions >= budget:
                    return TIMEOUT, [], expansions
                expansions += 1
                ptr[-1] = i
                for z in nbrs:
                    block[z] += 1
                path.append(y)
                on_path[y] = True
                if _can_close(adj, y, on_path, block, is_x_nbr, is_closer, seen):
                    ptr.append(0)
                    advanced = True
                    break
                path.pop()
                on_path[y] = False
                for z in nbrs:
                    block[z] -= 1
            if advanced:
                continue
            ptr.pop()
            if len(path) > 2:
                path.pop()
                on_path[h] = False
                for z in adj[path[-1]]:
                    block[z] -= 1
        on_path[p1] = False
    return NONE_EXISTS, [], expansions

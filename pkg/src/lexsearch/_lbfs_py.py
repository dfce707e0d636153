"""Pure-Python LBFS and BFS kernels over CSR arrays.

Fallback for ``_lbfs_core`` (same algorithm, same results). Partition
refinement with doubly linked slices: each slice keeps its vertices in
increasing id order, so the head of the front slice is the smallest
candidate. Rows of ``indices`` must be sorted ascending.
"""

import numpy as np


def _run(indptr, indices, n, start, forced):
    indptr = indptr.tolist()
    indices = indices.tolist()
    cap = len(indices) + 2
    s_head = [-1] * cap
    s_tail = [-1] * cap
    s_prev = [-1] * cap
    s_next = [-1] * cap
    s_size = [0] * cap
    s_stamp = [0] * cap
    s_child = [-1] * cap
    v_prev = [i - 1 for i in range(n)]
    v_next = [i + 1 for i in range(n)]
    v_slice = [0] * n
    visited = [False] * n
    order = [0] * n
    if n:
        v_next[n - 1] = -1
        s_head[0], s_tail[0], s_size[0] = 0, n - 1, n
    first = 0
    nslices = 1

    for step in range(n):
        if forced is not None:
            v = forced[step]
            if v_slice[v] != first:
                return order, step
        elif step == 0 and start >= 0:
            v = start
        else:
            v = s_head[first]
        order[step] = v
        visited[v] = True

        # unlink v from its slice
        s = v_slice[v]
        p, q = v_prev[v], v_next[v]
        if p >= 0:
            v_next[p] = q
        else:
            s_head[s] = q
        if q >= 0:
            v_prev[q] = p
        else:
            s_tail[s] = p
        s_size[s] -= 1
        if s_size[s] == 0:
            sp, sn = s_prev[s], s_next[s]
            if sp >= 0:
                s_next[sp] = sn
            else:
                first = sn
            if sn >= 0:
                s_prev[sn] = sp

        stamp = step + 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if visited[u]:
                continue
            s = v_slice[u]
            if s_stamp[s] != stamp:
                t = nslices
                nslices += 1
                s_stamp[s] = stamp
                s_child[s] = t
                sp = s_prev[s]
                s_prev[t] = sp
                s_next[t] = s
                s_prev[s] = t
                if sp >= 0:
                    s_next[sp] = t
                else:
                    first = t
                s_head[t] = s_tail[t] = -1
                s_size[t] = 0
            t = s_child[s]
            # move u from s to the tail of t
            p, q = v_prev[u], v_next[u]
            if p >= 0:
                v_next[p] = q
            else:
                s_head[s] = q
            if q >= 0:
                v_prev[q] = p
            else:
                s_tail[s] = p
            s_size[s] -= 1
            tail = s_tail[t]
            v_prev[u] = tail
            v_next[u] = -1
            if tail >= 0:
                v_next[tail] = u
            else:
                s_head[t] = u
            s_tail[t] = u
            s_size[t] += 1
            v_slice[u] = t
            if s_size[s] == 0:
                sp, sn = s_prev[s], s_next[s]
                if sp >= 0:
                    s_next[sp] = sn
                else:
                    first = sn
                if sn >= 0:
                    s_prev[sn] = sp
    return order, -1


def lbfs_order(indptr, indices, n, start=-1):
    order, _ = _run(indptr, indices, n, start, None)
    return np.asarray(order, dtype=np.int64)


def first_violation(indptr, indices, n, forced):
    """0-based index of the first vertex of ``forced`` outside the front slice, or -1."""
    _, pos = _run(indptr, indices, n, -1, list(forced))
    return pos


def bfs_distances(indptr, indices, n, source):
    indptr = indptr.tolist()
    indices = indices.tolist()
    dist = [-1] * n
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            x = indices[k]
            if dist[x] < 0:
                dist[x] = du
                queue.append(x)
    return np.asarray(dist, dtype=np.int64)

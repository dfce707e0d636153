# cython: language_level=3
"""Compiled LBFS and BFS kernels; mirror of ``_lbfs_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef Py_ssize_t _run(const cnp.int64_t[:] indptr, const cnp.int32_t[:] indices,
                     Py_ssize_t n, Py_ssize_t start, const cnp.int64_t[:] forced,
                     bint use_forced, cnp.int64_t[:] order):
    cdef Py_ssize_t cap = indices.shape[0] + 2
    cdef cnp.int64_t[:] s_head = np.full(cap, -1, dtype=np.int64)
    cdef cnp.int64_t[:] s_tail = np.full(cap, -1, dtype=np.int64)
    cdef cnp.int64_t[:] s_prev = np.full(cap, -1, dtype=np.int64)
    cdef cnp.int64_t[:] s_next = np.full(cap, -1, dtype=np.int64)
    cdef cnp.int64_t[:] s_size = np.zeros(cap, dtype=np.int64)
    cdef cnp.int64_t[:] s_stamp = np.zeros(cap, dtype=np.int64)
    cdef cnp.int64_t[:] s_child = np.full(cap, -1, dtype=np.int64)
    cdef cnp.int64_t[:] v_prev = np.arange(-1, n - 1, dtype=np.int64)
    cdef cnp.int64_t[:] v_next = np.arange(1, n + 1, dtype=np.int64)
    cdef cnp.int64_t[:] v_slice = np.zeros(n, dtype=np.int64)
    cdef cnp.uint8_t[:] visited = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t first = 0, nslices = 1, step, v, u, s, t, p, q, sp, sn, k, tail, stamp

    if n > 0:
        v_next[n - 1] = -1
        s_head[0] = 0
        s_tail[0] = n - 1
        s_size[0] = n

    for step in range(n):
        if use_forced:
            v = forced[step]
            if v_slice[v] != first:
                return step
        elif step == 0 and start >= 0:
            v = start
        else:
            v = s_head[first]
        order[step] = v
        visited[v] = 1

        s = v_slice[v]
        p = v_prev[v]
        q = v_next[v]
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
            sp = s_prev[s]
            sn = s_next[s]
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
                s_head[t] = -1
                s_tail[t] = -1
                s_size[t] = 0
            t = s_child[s]
            p = v_prev[u]
            q = v_next[u]
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
                sp = s_prev[s]
                sn = s_next[s]
                if sp >= 0:
                    s_next[sp] = sn
                else:
                    first = sn
                if sn >= 0:
                    s_prev[sn] = sp
    return -1


def lbfs_order(indptr, indices, Py_ssize_t n, Py_ssize_t start=-1):
    order = np.zeros(n, dtype=np.int64)
    dummy = np.zeros(0, dtype=np.int64)
    _run(np.ascontiguousarray(indptr, dtype=np.int64),
         np.ascontiguousarray(indices, dtype=np.int32),
         n, start, dummy, False, order)
    return order


def first_violation(indptr, indices, Py_ssize_t n, forced):
    """0-based index of the first vertex of ``forced`` outside the front slice, or -1."""
    order = np.zeros(n, dtype=np.int64)
    return _run(np.ascontiguousarray(indptr, dtype=np.int64),
                np.ascontiguousarray(indices, dtype=np.int32),
                n, -1, np.ascontiguousarray(forced, dtype=np.int64), True, order)


def bfs_distances(indptr, indices, Py_ssize_t n, Py_ssize_t source):
    cdef const cnp.int64_t[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const cnp.int32_t[:] ix = np.ascontiguousarray(indices, dtype=np.int32)
    dist_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[:] dist = dist_arr
    cdef cnp.int64_t[:] queue = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t head = 0, size = 1, u, x, k
    dist[source] = 0
    queue[0] = source
    while head < size:
        u = queue[head]
        head += 1
        for k in range(ip[u], ip[u + 1]):
            x = ix[k]
            if dist[x] < 0:
                dist[x] = dist[u] + 1
                queue[size] = x
                size += 1
    return dist_arr

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; same signatures and work counts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memset

cnp.import_array()

ctypedef cnp.int64_t i64


def attract(g, alive, target, int player):
    cdef const i64[:] sptr, sidx, pptr, pidx
    sptr, sidx, pptr, pidx = g.csr()
    cdef const unsigned char[:] owner = g.owner
    cdef const unsigned char[:] live = alive
    cdef Py_ssize_t n = g.n
    inset_obj = bytearray(n)
    cdef unsigned char[:] inset = inset_obj
    cdef i64 *queue = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef i64 *rank = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef i64 *choice = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef i64 *count = <i64 *> malloc((n + 1) * sizeof(i64))
    if queue == NULL or rank == NULL or choice == NULL or count == NULL:
        free(queue); free(rank); free(choice); free(count)
        raise MemoryError()
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef i64 v, p, t, r, c, work = 0
    try:
        for k in range(n):
            count[k] = -1
        for s in target:
            v = s
            if not inset[v]:
                inset[v] = 1
                queue[tail] = v
                rank[tail] = 0
                choice[tail] = -1
                tail += 1
        while head < tail:
            v = queue[head]
            r = rank[head] + 1
            head += 1
            for k in range(pptr[v], pptr[v + 1]):
                p = pidx[k]
                work += 1
                if not live[p] or inset[p]:
                    continue
                if owner[p] == player:
                    inset[p] = 1
                    queue[tail] = p
                    rank[tail] = r
                    choice[tail] = v
                    tail += 1
                    continue
                c = count[p]
                if c < 0:
                    c = 0
                    for t in range(sptr[p], sptr[p + 1]):
                        work += 1
                        if live[sidx[t]]:
                            c += 1
                c -= 1
                work += 1
                if c == 0:
                    inset[p] = 1
                    queue[tail] = p
                    rank[tail] = r
                    choice[tail] = -1
                    tail += 1
                count[p] = c
        members = [queue[k] for k in range(tail)]
        ranks = [rank[k] for k in range(tail)]
        choices = [choice[k] for k in range(tail)]
    finally:
        free(queue); free(rank); free(choice); free(count)
    return inset_obj, members, ranks, choices, work


def bfs_probe(g, alive, sources, i64 budget):
    cdef const i64[:] sptr, sidx, pptr, pidx
    sptr, sidx, pptr, pidx = g.csr()
    cdef const unsigned char[:] live = alive
    cdef Py_ssize_t n = g.n
    cdef i64 *queue = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef i64 *depth = <i64 *> malloc((n + 1) * sizeof(i64))
    if queue == NULL or depth == NULL:
        free(queue); free(depth)
        raise MemoryError()
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef i64 s, t, d, steps = 0, work = 0
    cdef bint partial = False
    try:
        for k in range(n):
            depth[k] = 0
        for src in sources:
            if steps >= budget:
                break
            steps += 1
            work += 1
            s = src
            if depth[s] == 0:
                depth[s] = 1
                queue[tail] = s
                tail += 1
        while head < tail:
            s = queue[head]
            head += 1
            d = depth[s] + 1
            for k in range(sptr[s], sptr[s + 1]):
                t = sidx[k]
                work += 1
                if not live[t]:
                    continue
                if steps >= budget:
                    partial = True
                    break
                steps += 1
                if depth[t] == 0:
                    depth[t] = d
                    queue[tail] = t
                    tail += 1
            if partial:
                head -= 1
                break
        order = [queue[k] for k in range(tail)]
        depths = [depth[queue[k]] for k in range(tail)]
        frontier = [queue[k] for k in range(head, tail)] if partial else []
    finally:
        free(queue); free(depth)
    return order, depths, frontier, steps, work


cdef cnp.uint64_t _lasso_wins(i64 *nxt, const unsigned char[:] buchi,
                              Py_ssize_t n, i64 *res, i64 *stamp, i64 *path):
    cdef Py_ssize_t s0, plen, k
    cdef i64 s, t, val
    cdef cnp.uint64_t mask = 0
    for k in range(n):
        res[k] = -1
        stamp[k] = 0
    for s0 in range(n):
        if res[s0] >= 0:
            continue
        plen = 0
        s = s0
        while res[s] < 0 and stamp[s] != s0 + 1:
            stamp[s] = s0 + 1
            path[plen] = s
            plen += 1
            s = nxt[s]
        if res[s] >= 0:
            val = res[s]
        else:
            val = 0
            t = s
            while True:
                if buchi[t]:
                    val = 1
                    break
                t = nxt[t]
                if t == s:
                    break
        for k in range(plen):
            res[path[k]] = val
    for k in range(n):
        if res[k]:
            mask |= (<cnp.uint64_t> 1) << k
    return mask


def oracle_table(g, p1, p2):
    cdef Py_ssize_t n = g.n
    if n > 64:
        from . import _pykernels
        return _pykernels.oracle_table(g, p1, p2)
    cdef const i64[:] sptr, sidx, pptr, pidx
    sptr, sidx, pptr, pidx = g.csr()
    cdef const unsigned char[:] buchi = g.buchi
    deg1 = [len(g.succ[s]) for s in p1]
    deg2 = [len(g.succ[s]) for s in p2]
    nsig = int(np.prod(deg1, dtype=object)) if deg1 else 1
    npi = int(np.prod(deg2, dtype=object)) if deg2 else 1
    table_obj = np.zeros((nsig, npi), dtype=np.uint64)
    cdef cnp.uint64_t[:, :] table = table_obj
    cdef Py_ssize_t n1 = len(p1), n2 = len(p2), i, j, k
    cdef i64 *nxt = <i64 *> malloc(6 * (n + 1) * sizeof(i64))
    if nxt == NULL:
        raise MemoryError()
    cdef i64 *res = nxt + (n + 1)
    cdef i64 *stamp = res + (n + 1)
    cdef i64 *path = stamp + (n + 1)
    cdef i64 *digits = path + (n + 1)
    cdef i64 *states = digits + (n + 1)
    cdef Py_ssize_t nsig_c = nsig, npi_c = npi
    cdef i64 s
    try:
        for k in range(n):
            nxt[k] = sidx[sptr[k]]
        for k in range(n1):
            states[k] = p1[k]
        for k in range(n2):
            states[n1 + k] = p2[k]
        memset(digits, 0, (n + 1) * sizeof(i64))
        for i in range(nsig_c):
            for j in range(npi_c):
                table[i, j] = _lasso_wins(nxt, buchi, n, res, stamp, path)
                for k in range(n1, n1 + n2):
                    s = states[k]
                    digits[k] += 1
                    if digits[k] < sptr[s + 1] - sptr[s]:
                        nxt[s] = sidx[sptr[s] + digits[k]]
                        break
                    digits[k] = 0
                    nxt[s] = sidx[sptr[s]]
            for k in range(n1):
                s = states[k]
                digits[k] += 1
                if digits[k] < sptr[s + 1] - sptr[s]:
                    nxt[s] = sidx[sptr[s] + digits[k]]
                    break
                digits[k] = 0
                nxt[s] = sidx[sptr[s]]
    finally:
        free(nxt)
    return table_obj

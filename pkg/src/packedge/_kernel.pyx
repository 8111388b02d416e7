# cython: language_level=3
"""Compiled search kernel for the packing edge-coloring solver.

Mirrors packedge._kernel_py.search node for node; see the notice there.
Bitmasks arrive as arbitrary-size Python ints and are repacked into 64-bit
words once, before the search starts.
"""

import array
import time

from cpython cimport array

COLORABLE = 0
NOT_COLORABLE = 1
TIMEOUT = 2

KERNEL_NAME = "cython"


cdef inline bint _usable(int c, int[::1] class_size, int[::1] prev) noexcept nogil:
    cdef int p
    if class_size[c] == 0:
        p = prev[c]
        if p >= 0 and class_size[p] == 0:
            return False
    return True


cdef inline bint _feasible(int c, int e, int m, int nwords,
                           unsigned long long[::1] W,
                           unsigned long long[::1] CW) noexcept nogil:
    cdef int w
    cdef Py_ssize_t base = (<Py_ssize_t> c * m + e) * nwords
    cdef Py_ssize_t cbase = <Py_ssize_t> c * nwords
    for w in range(nwords):
        if CW[cbase + w] & W[base + w]:
            return False
    return True


cdef inline int _pick(int m, int k, int nwords, int[::1] color,
                      int[::1] class_size, int[::1] prev,
                      unsigned long long[::1] W,
                      unsigned long long[::1] CW) noexcept nogil:
    cdef int best = -1
    cdef int best_cnt = k + 1
    cdef int e, c, cnt
    for e in range(m):
        if color[e]:
            continue
        cnt = 0
        for c in range(k):
            if _usable(c, class_size, prev) and _feasible(c, e, m, nwords, W, CW):
                cnt += 1
        if cnt < best_cnt:
            best = e
            best_cnt = cnt
            if cnt == 0:
                break
    return best


def search(m, masks, prev_same, budget_nodes=-1, budget_seconds=-1.0):
    """Same contract as packedge._kernel_py.search."""
    cdef int k = len(masks)
    cdef int cm = m
    if cm == 0:
        return COLORABLE, [], 0
    cdef int nwords = (cm + 63) >> 6

    cdef array.array w_arr = array.array('Q', bytes(8 * k * cm * nwords))
    cdef unsigned long long[::1] W = w_arr
    cdef array.array cw_arr = array.array('Q', bytes(8 * k * nwords))
    cdef unsigned long long[::1] CW = cw_arr
    cdef array.array color_arr = array.array('i', bytes(4 * cm))
    cdef int[::1] color = color_arr
    cdef array.array size_arr = array.array('i', bytes(4 * k))
    cdef int[::1] class_size = size_arr
    cdef array.array prev_arr = array.array('i', [int(p) for p in prev_same])
    cdef int[::1] prev = prev_arr
    cdef array.array fe_arr = array.array('i', bytes(4 * cm))
    cdef int[::1] frame_edge = fe_arr
    cdef array.array fl_arr = array.array('i', bytes(4 * cm))
    cdef int[::1] frame_last = fl_arr

    cdef int c, e, w
    cdef object mask
    for c in range(k):
        row = masks[c]
        for e in range(cm):
            mask = row[e]
            for w in range(nwords):
                W[(<Py_ssize_t> c * cm + e) * nwords + w] = \
                    (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF

    cdef long long nodes = 0
    cdef long long bn = <long long> budget_nodes
    cdef double bs = <double> budget_seconds
    cdef double deadline = 0.0
    cdef bint timed = bs >= 0
    if timed:
        deadline = <double> time.monotonic() + bs

    cdef int depth, last, nxt, pe, pc
    e = _pick(cm, k, nwords, color, class_size, prev, W, CW)
    if e < 0:
        return COLORABLE, [color[i] for i in range(cm)], 0
    frame_edge[0] = e
    frame_last[0] = 0
    depth = 1
    while depth > 0:
        e = frame_edge[depth - 1]
        last = frame_last[depth - 1]
        nxt = 0
        for c in range(last, k):
            if _usable(c, class_size, prev) and _feasible(c, e, cm, nwords, W, CW):
                nxt = c + 1
                break
        if nxt == 0:
            depth -= 1
            if depth > 0:
                pe = frame_edge[depth - 1]
                pc = frame_last[depth - 1]
                color[pe] = 0
                CW[<Py_ssize_t> (pc - 1) * nwords + (pe >> 6)] &= \
                    ~(1ULL << (pe & 63))
                class_size[pc - 1] -= 1
            continue
        c = nxt - 1
        frame_last[depth - 1] = nxt
        color[e] = nxt
        CW[<Py_ssize_t> c * nwords + (e >> 6)] |= 1ULL << (e & 63)
        class_size[c] += 1
        nodes += 1
        if bn >= 0 and nodes > bn:
            return TIMEOUT, None, nodes
        if timed and nodes % 1024 == 0 and <double> time.monotonic() > deadline:
            return TIMEOUT, None, nodes
        e = _pick(cm, k, nwords, color, class_size, prev, W, CW)
        if e < 0:
            return COLORABLE, [color[i] for i in range(cm)], nodes
        frame_edge[depth] = e
        frame_last[depth] = 0
        depth += 1
    return NOT_COLORABLE, None, nodes

"""Pure-Python search kernel for the packing edge-coloring solver.

The compiled kernel in _kernel.pyx implements the *same* search, node for
node: fail-first variable order (fewest feasible colors, ties by edge index),
colors tried in index order, and equal-radius symmetry breaking (a color may
open a new class only when every earlier color of the same radius is already
in use).  Any change here must be mirrored there; the test suite asserts that
both kernels agree on status, assignment, and explored node count.
"""

from __future__ import annotations

import time

COLORABLE = 0
NOT_COLORABLE = 1
TIMEOUT = 2

KERNEL_NAME = "python"


def search(m, masks, prev_same, budget_nodes=-1, budget_seconds=-1.0):
    """Exhaustive backtracking search for a packing coloring.

    m: number of edges.
    masks: per color, a list of m int bitmasks; masks[c][e] marks the edges
        that may not share color c with edge e.
    prev_same: per color, the index of the previous color with the same
        radius, or -1.
    budget_nodes / budget_seconds: < 0 means unlimited.

    Returns (status, colors, nodes) where colors is a list of 1-based color
    indices per edge when status == COLORABLE, else None.
    """
    k = len(masks)
    if m == 0:
        return COLORABLE, [], 0

    color = [0] * m
    class_mask = [0] * k
    class_size = [0] * k
    nodes = 0
    deadline = time.monotonic() + budget_seconds if budget_seconds >= 0 else None

    def usable(c):
        if class_size[c] == 0:
            p = prev_same[c]
            if p >= 0 and class_size[p] == 0:
                return False
        return True

    def pick():
        # fail-first: uncolored edge with fewest feasible colors, lowest index wins
        best = -1
        best_cnt = k + 1
        for e in range(m):
            if color[e]:
                continue
            cnt = 0
            for c in range(k):
                if usable(c) and not (class_mask[c] & masks[c][e]):
                    cnt += 1
            if cnt < best_cnt:
                best, best_cnt = e, cnt
                if cnt == 0:
                    break
        return best

    e0 = pick()
    if e0 < 0:
        return COLORABLE, color, 0
    # frames: [edge, last color tried (0 = none)]; top frame is unassigned
    frames = [[e0, 0]]
    while frames:
        e, last = frames[-1]
        nxt = 0
        for c in range(last, k):
            if usable(c) and not (class_mask[c] & masks[c][e]):
                nxt = c + 1
                break
        if nxt == 0:
            frames.pop()
            if frames:
                pe, pc = frames[-1]
                color[pe] = 0
                class_mask[pc - 1] &= ~(1 << pe)
                class_size[pc - 1] -= 1
            continue
        c = nxt - 1
        frames[-1][1] = nxt
        color[e] = nxt
        class_mask[c] |= 1 << e
        class_size[c] += 1
        nodes += 1
        if budget_nodes >= 0 and nodes > budget_nodes:
            return TIMEOUT, None, nodes
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            return TIMEOUT, None, nodes
        ne = pick()
        if ne < 0:
            return COLORABLE, color, nodes
        frames.append([ne, 0])
    return NOT_COLORABLE, None, nodes

"""Pure-Python hot loops. ``_ckernels`` mirrors these signatures exactly.

Work counts are part of the contract: both backends must return identical
``work`` values for identical inputs.
"""

from collections import deque

import numpy as np


def attract(g, alive, target, player):
    """Backward worklist attractor with lazy per-opponent counters.

    Returns ``(inset, members, ranks, choice, work)``. ``members`` is in
    rank order; ``choice[k]`` is the successor that pulled a
    ``player``-owned member in (``-1`` for rank 0 and opponent states).
    """
    succ, pred, owner = g.succ, g.pred, g.owner
    inset = bytearray(g.n)
    members, ranks, choice = [], [], []
    for s in target:
        if not inset[s]:
            inset[s] = 1
            members.append(s)
            ranks.append(0)
            choice.append(-1)
    count = {}
    work = 0
    i = 0
    while i < len(members):
        v = members[i]
        r = ranks[i] + 1
        i += 1
        for p in pred[v]:
            work += 1
            if not alive[p] or inset[p]:
                continue
            if owner[p] == player:
                inset[p] = 1
                members.append(p)
                ranks.append(r)
                choice.append(v)
                continue
            c = count.get(p)
            if c is None:
                c = 0
                for t in succ[p]:
                    work += 1
                    if alive[t]:
                        c += 1
            c -= 1
            work += 1
            if c == 0:
                inset[p] = 1
                members.append(p)
                ranks.append(r)
                choice.append(-1)
            count[p] = c
    return inset, members, ranks, choice, work


class Meter:
    """Shared work counter for sliced (dovetailed) execution."""

    __slots__ = ("work", "stop")

    def __init__(self, stop=float("inf")):
        self.work = 0
        self.stop = stop


def attract_sliced(g, alive, target, player, meter):
    """Generator form of :func:`attract`; yields whenever ``meter`` hits its stop.

    Same result and same work as :func:`attract`; the result is the
    generator's return value.
    """
    succ, pred, owner = g.succ, g.pred, g.owner
    inset = bytearray(g.n)
    members, ranks, choice = [], [], []
    for s in target:
        if not inset[s]:
            inset[s] = 1
            members.append(s)
            ranks.append(0)
            choice.append(-1)
    count = {}
    start = meter.work
    i = 0
    while i < len(members):
        v = members[i]
        r = ranks[i] + 1
        i += 1
        for p in pred[v]:
            meter.work += 1
            if meter.work >= meter.stop:
                yield
            if not alive[p] or inset[p]:
                continue
            if owner[p] == player:
                inset[p] = 1
                members.append(p)
                ranks.append(r)
                choice.append(v)
                continue
            c = count.get(p)
            if c is None:
                c = 0
                for t in succ[p]:
                    meter.work += 1
                    if meter.work >= meter.stop:
                        yield
                    if alive[t]:
                        c += 1
            c -= 1
            meter.work += 1
            if meter.work >= meter.stop:
                yield
            if c == 0:
                inset[p] = 1
                members.append(p)
                ranks.append(r)
                choice.append(-1)
            count[p] = c
    return inset, members, ranks, choice, meter.work - start


def bfs_probe(g, alive, sources, budget):
    """Budgeted BFS from a virtual root with an edge to every source.

    One step per traversal of an alive edge (root edges included). Returns
    ``(order, depths, frontier, steps, work)``; ``frontier`` holds the
    discovered states that were not fully expanded at halt.
    """
    succ = g.succ
    depth = {}
    order = []
    queue = deque()
    steps = 0
    work = 0
    for s in sources:
        if steps >= budget:
            break
        steps += 1
        work += 1
        if s not in depth:
            depth[s] = 1
            order.append(s)
            queue.append(s)
    frontier = []
    while queue:
        s = queue.popleft()
        d = depth[s] + 1
        partial = False
        for t in succ[s]:
            work += 1
            if not alive[t]:
                continue
            if steps >= budget:
                partial = True
                break
            steps += 1
            if t not in depth:
                depth[t] = d
                order.append(t)
                queue.append(t)
        if partial:
            frontier = [s]
            frontier.extend(queue)
            break
    return order, [depth[s] for s in order], frontier, steps, work


def lasso_wins(nxt, buchi):
    """Bitmask of start states whose lasso under ``nxt`` cycles through a Büchi state."""
    n = len(nxt)
    res = [-1] * n
    stamp = [0] * n
    for s0 in range(n):
        if res[s0] >= 0:
            continue
        path = []
        s = s0
        while res[s] < 0 and stamp[s] != s0 + 1:
            stamp[s] = s0 + 1
            path.append(s)
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
        for p in path:
            res[p] = val
    mask = 0
    for s in range(n):
        if res[s]:
            mask |= 1 << s
    return mask


def oracle_table(g, p1, p2):
    """Win bitmasks for every memoryless (sigma, pi) pair, odometer order.

    Row index enumerates player-1 choices with ``p1[0]`` fastest, column
    index likewise for ``p2``.
    """
    succ = g.succ
    deg1 = [len(succ[s]) for s in p1]
    deg2 = [len(succ[s]) for s in p2]
    nsig = int(np.prod(deg1, dtype=object)) if deg1 else 1
    npi = int(np.prod(deg2, dtype=object)) if deg2 else 1
    dtype = np.uint64 if g.n <= 64 else object
    table = np.zeros((nsig, npi), dtype=dtype)
    nxt = [ts[0] for ts in succ]
    d1 = [0] * len(p1)
    for i in range(nsig):
        d2 = [0] * len(p2)
        for j in range(npi):
            table[i, j] = lasso_wins(nxt, g.buchi)
            _advance(d2, deg2, p2, succ, nxt)
        _advance(d1, deg1, p1, succ, nxt)
    return table


def _advance(digits, degs, states, succ, nxt):
    for k, s in enumerate(states):
        digits[k] += 1
        if digits[k] < degs[k]:
            nxt[s] = succ[s][digits[k]]
            return
        digits[k] = 0
        nxt[s] = succ[s][0]

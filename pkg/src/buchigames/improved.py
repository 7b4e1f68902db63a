"""Improved algorithm: budgeted forward search for small traps before falling back.

Each round looks at the states with an edge into the set removed last round.
If there are few of them, a BFS of ``ceil(2m / log2 n)`` edge steps is run
from a virtual root pointing at all of them, and the explored region is
searched for a trap. Only when that fails (or there are many sources) is a
full classical round paid for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .attractor import attract
from .classical import _avoid, check_trap, record, remove
from .graph import PLAYER1, PLAYER2, StateSet, SubgameView, validate_subgame
from .results import InvariantViolation, SolveResult, WorkMetrics


def log2n(n):
    return math.log2(max(n, 2))


def probe_budget(g):
    return math.ceil(2 * g.m / log2n(g.n))


def source_threshold(g):
    return math.ceil(g.m / log2n(g.n))


@dataclass
class ForwardProbe:
    """Result of one budgeted BFS. ``depth`` is 1 for the sources."""

    sources: StateSet
    budget: int
    r: StateSet
    f: StateSet
    depth: dict
    steps_used: int
    work: int
    order: list = field(default_factory=list)
    t: StateSet = None
    a: StateSet = None

    @property
    def realized_depth(self):
        """Levels strictly below this depth were fully expanded.

        Minimum frontier depth when the budget ran out, otherwise the
        deepest level reached.
        """
        if self.f:
            return min(self.depth[s] for s in self.f)
        return max(self.depth.values(), default=0)


def source_set(g, u, alive, metrics=None):
    """Alive states with at least one successor in ``u`` (scans predecessors of ``u``)."""
    mask = alive.mask
    out = StateSet(g.n)
    work = 0
    for s in u:
        for p in g.pred[s]:
            work += 1
            if mask[p]:
                out.add(p)
    if metrics is not None:
        metrics.charge("source_scan", work)
    return out


def forward_probe(view, sources, budget=None):
    g = view.base
    if budget is None:
        budget = probe_budget(g)
    order, depths, frontier, steps, work = kernels.bfs_probe(
        g, view.alive.mask, sources.to_list(), budget)
    return ForwardProbe(
        sources=sources, budget=budget,
        r=StateSet(g.n, order), f=StateSet(g.n, frontier),
        depth=dict(zip(order, depths)), steps_used=steps, work=work, order=order)


def trap_probe(view, probe, b):
    """Largest part of the explored region player 2 can hold away from ``b``.

    Frontier player-1 states, and frontier player-2 states with no explored
    successor, count as escapes. Fills ``probe.t``/``probe.a``; returns the
    trap (possibly empty). Work is accumulated into ``probe.work``.
    """
    g = view.base
    alive = view.alive.mask
    r = probe.r
    t = StateSet(g.n)
    work = 0
    for s in probe.f:
        if g.owner[s] == PLAYER1:
            t.add(s)
            continue
        hit = False
        for u in g.succ[s]:
            work += 1
            if alive[u] and r.mask[u]:
                hit = True
                break
        if not hit:
            t.add(s)
    seeds = (r & b) | t
    a = attract(view.restrict(r), PLAYER1, seeds, check=False)
    probe.t, probe.a = t, a.set
    probe.work += work + a.work
    return r - a.set


def solve_improved(g, check=False, keep_probes=False):
    """Winning regions via probe-first rounds.

    ``extra`` carries the branch counters and, per fallback, the realized
    BFS depth and number of states removed. With ``keep_probes`` every
    round's explored region is kept too.
    """
    metrics = WorkMetrics()
    view = SubgameView(g)
    alive = view.alive
    buchi = g.buchi_set()
    w2 = StateSet(g.n)
    trace = []
    budget = probe_budget(g)
    threshold = source_threshold(g)
    fallbacks = []
    probes = []
    depths = []
    last = []
    for name in ("threshold_branch", "probe_success", "fallback"):
        metrics.bump(name, 0)
    while alive:
        before = metrics.edge_examinations
        src = source_set(g, last, alive, metrics)
        depth = 0
        if len(src) >= threshold:
            tr, w = _avoid(view, buchi & alive, metrics, check, phase="threshold_classical")
            branch = "threshold"
        else:
            probe = forward_probe(view, src, budget)
            bfs_work = probe.work
            tr = trap_probe(view, probe, buchi)
            metrics.charge("probe_bfs", bfs_work)
            metrics.charge("probe_attr1", probe.work - bfs_work)
            depth = probe.realized_depth
            depths.append(depth)
            if tr:
                if check:
                    check_trap(view, tr)
                w = attract(view, PLAYER2, tr, check=False)
                metrics.charge("attr2_trap", w.work)
                branch = "probe_success"
            else:
                tr, w = _avoid(view, buchi & alive, metrics, check, phase="fallback_classical")
                branch = "fallback"
                fallbacks.append({"depth": depth, "removed": len(w.members)})
            if keep_probes:
                probes.append({"iteration": len(trace), "r": probe.r.to_list(),
                               "depth": depth, "tr": tr.to_list(), "branch": branch,
                               "alive": alive.copy()})
        metrics.bump(branch if branch != "threshold" else "threshold_branch")
        metrics.iterations += 1
        trace.append(record(len(trace), len(alive), tr, w, branch=branch, depth=depth,
                            work=metrics.edge_examinations - before))
        if not w.set:
            break
        remove(view, w, w2)
        last = w.members
        if check and not validate_subgame(view):
            raise InvariantViolation("remaining states do not form a subgame")
    extra = {
        "budget": budget,
        "threshold": threshold,
        "fallbacks": fallbacks,
        "realized_depths": depths,
        "probes": probes,
    }
    return SolveResult("improved", w2, alive.copy(), metrics.iterations, trace, metrics, extra)

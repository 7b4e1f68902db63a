"""Alternative algorithm: traps found from coBüchi candidates, plus dovetailing.

Each round computes the candidate sets ``c1`` (player-1 non-Büchi states with
no alive Büchi successor) and ``c2`` (player-2 non-Büchi states with a
non-Büchi successor), grows player 2's attractor ``X`` from them, and strips
from ``Z = X \\ B`` everything player 1 can escape from (``L``). What remains
is the same trap the classical round finds, but the scan is confined to the
neighbourhood of ``X``.
"""

from __future__ import annotations

from . import kernels
from .attractor import AttractorResult, attract, is_closed
from .classical import _avoid, check_trap, record, remove
from .graph import PLAYER1, PLAYER2, StateSet, SubgameView, validate_subgame
from .results import InvariantViolation, SolveResult, WorkMetrics

DOVETAIL_SLICE = 64


class AltIterationState:
    """Incremental candidate bookkeeping carried across rounds."""

    def __init__(self, g, metrics=None):
        n = g.n
        self.g = g
        self.c1 = StateSet(n)
        self.c2 = StateSet(n)
        self.b_edge_counter = [0] * n
        self.x = self.z = self.d = self.l = self.tr_hat = None
        self.w_attr = None
        self.trap_work = 0
        work = 0
        buchi, owner, succ = g.buchi, g.owner, g.succ
        for s in range(n):
            if buchi[s]:
                continue
            if owner[s] == PLAYER1:
                c = 0
                for t in succ[s]:
                    work += 1
                    if buchi[t]:
                        c += 1
                self.b_edge_counter[s] = c
                if c == 0:
                    self.c1.add(s)
            else:
                for t in succ[s]:
                    work += 1
                    if not buchi[t]:
                        self.c2.add(s)
                        break
        if metrics is not None:
            metrics.charge("init_counters", work)

    def on_remove(self, alive, removed, metrics=None):
        """Update candidates after ``removed`` left the alive mask."""
        g = self.g
        buchi, owner, pred = g.buchi, g.owner, g.pred
        counter = self.b_edge_counter
        work = 0
        for s in removed:
            self.c1.discard(s)
            self.c2.discard(s)
        for s in removed:
            if not buchi[s]:
                continue
            for p in pred[s]:
                work += 1
                if alive[p] and owner[p] == PLAYER1 and not buchi[p]:
                    counter[p] -= 1
                    work += 1
                    if counter[p] == 0:
                        self.c1.add(p)
        if metrics is not None:
            metrics.charge("counter_update", work)

    def check(self, view):
        """Recompute c1/c2 and the counters from scratch and compare."""
        g = self.g
        alive = view.alive.mask
        for s in view.alive:
            if g.buchi[s]:
                continue
            live = [t for t in g.succ[s] if alive[t]]
            if g.owner[s] == PLAYER1:
                nb = sum(1 for t in live if g.buchi[t])
                if nb != self.b_edge_counter[s]:
                    raise InvariantViolation(f"stale Büchi-edge counter at {s}")
                if (nb == 0) != (s in self.c1):
                    raise InvariantViolation(f"c1 membership wrong at {s}")
            elif any(not g.buchi[t] for t in live) != (s in self.c2):
                raise InvariantViolation(f"c2 differs from C2^0 restricted at {s}")


def _escape_iter(g, alive, z_members, zmask, meter):
    """States of Z from which player 1 leaves Z in one step (generator, returns list)."""
    owner, succ = g.owner, g.succ
    d = []
    for s in z_members:
        inside = outside = 0
        for t in succ[s]:
            meter.work += 1
            if meter.work >= meter.stop:
                yield
            if alive[t]:
                if zmask[t]:
                    inside += 1
                else:
                    outside += 1
        if owner[s] == PLAYER1:
            if outside:
                d.append(s)
        elif not inside:
            d.append(s)
    return d


def _drain(gen):
    try:
        while True:
            next(gen)
    except StopIteration as stop:
        return stop.value


def _to_result(player, out):
    inset, members, ranks, choice, work = out
    return AttractorResult(
        player, StateSet.from_mask(inset), members, dict(zip(members, ranks)),
        {s: c for s, c in zip(members, choice) if c >= 0}, work)


def _alt_trap_iter(view, state, meter, attract_fn):
    """One round's trap search as a generator; returns ``(x, z, d, l, tr_hat)``.

    ``attract_fn(alive, target, player)`` is either a sliced generator or a
    wrapper around the compiled kernel.
    """
    g = view.base
    alive = view.alive.mask
    target = (state.c1 | state.c2).to_list()
    x = _to_result(PLAYER2, (yield from attract_fn(alive, target, PLAYER2)))
    buchi = g.buchi
    z_members = [s for s in x.members if not buchi[s]]
    z = StateSet(g.n, z_members)
    d = yield from _escape_iter(g, alive, z_members, z.mask, meter)
    d.extend(s for s in x.members if buchi[s])
    l = _to_result(PLAYER1, (yield from attract_fn(x.set.mask, d, PLAYER1)))
    tr_hat = z - l.set
    return x, z, StateSet(g.n, d), l, tr_hat


def alt_iteration(view, state, metrics=None, check=False):
    """One alternative round; returns ``(tr_hat, w_next)`` and fills ``state``."""
    g = view.base
    meter = kernels.Meter()
    works = []

    def fast(alive, target, player):
        out = kernels.attract(g, alive, target, player)
        works.append(out[4])
        return out
        yield  # unreachable; makes this a generator for ``yield from``

    x, z, d, l, tr_hat = _drain(_alt_trap_iter(view, state, meter, fast))
    w = attract(view, PLAYER2, tr_hat, check=False)
    if metrics is not None:
        metrics.charge("attr2_candidates", works[0])
        metrics.charge("z_escape", meter.work)
        metrics.charge("attr1_escape", works[1])
        metrics.charge("attr2_trap", w.work)
    state.x, state.z, state.d, state.l, state.tr_hat = x.set, z, d, l.set, tr_hat
    state.w_attr = w
    state.trap_work = works[0] + meter.work + works[1]
    if check:
        state.check(view)
        check_trap(view, tr_hat)
    return tr_hat, w.set


def solve_alternative(g, check=False):
    metrics = WorkMetrics()
    view = SubgameView(g)
    alive = view.alive
    state = AltIterationState(g, metrics)
    w2 = StateSet(g.n)
    trace = []
    while alive:
        before = metrics.edge_examinations
        tr_hat, _ = alt_iteration(view, state, metrics, check)
        w = state.w_attr
        metrics.iterations += 1
        trace.append(record(len(trace), len(alive), tr_hat, w,
                            trap_work=state.trap_work,
                            work=metrics.edge_examinations - before))
        if not w.set:
            break
        remove(view, w, w2)
        state.on_remove(alive.mask, w.members, metrics)
        if check and not validate_subgame(view):
            raise InvariantViolation("remaining states do not form a subgame")
    return SolveResult("alternative", w2, alive.copy(), metrics.iterations, trace, metrics)


def lockstep(g):
    """Run classical and alternative rounds on the same subgame sequence.

    Yields one dict per round with the classical trap ``tr``, the
    alternative's intermediate sets and ``tr_hat``; the subgame advances by
    the classical removal.
    """
    view = SubgameView(g)
    alive = view.alive
    state = AltIterationState(g)
    w2 = StateSet(g.n)
    while alive:
        tr, w = _avoid(view, g.buchi_set() & alive, None, False)
        tr_hat, _ = alt_iteration(view, state)
        yield {
            "view": SubgameView(g, alive.copy()),
            "tr": tr, "tr_hat": tr_hat,
            "c1": state.c1.copy(), "c2": state.c2.copy(),
            "x": state.x, "z": state.z, "d": state.d, "l": state.l,
            "closed": is_closed(view, PLAYER1, tr_hat),
        }
        if not w.set:
            return
        remove(view, w, w2)
        state.on_remove(alive.mask, w.members)


def solve_dovetail(g, check=False, slice_size=DOVETAIL_SLICE):
    """Per round, interleave the classical and alternative trap searches.

    Both searches advance in turns of ``slice_size`` edge examinations,
    classical first; the first to finish supplies the trap. Work spent by
    the abandoned search is still charged.
    """
    metrics = WorkMetrics()
    view = SubgameView(g)
    alive = view.alive
    buchi = g.buchi_set()
    state = AltIterationState(g, metrics)
    w2 = StateSet(g.n)
    trace = []
    while alive:
        before = metrics.edge_examinations
        winner, tr = _dovetail_round(view, state, buchi & alive, slice_size, metrics)
        w = attract(view, PLAYER2, tr, check=False)
        metrics.charge("attr2_trap", w.work)
        metrics.iterations += 1
        metrics.bump(f"winner_{winner}")
        if check:
            check_trap(view, tr)
        trace.append(record(len(trace), len(alive), tr, w, winner=winner,
                            work=metrics.edge_examinations - before))
        if not w.set:
            break
        remove(view, w, w2)
        state.on_remove(alive.mask, w.members, metrics)
    return SolveResult("dovetail", w2, alive.copy(), metrics.iterations, trace, metrics)


def _classical_trap_iter(view, b_i, meter):
    out = yield from kernels.attract_sliced(view.base, view.alive.mask, b_i.to_list(), PLAYER1, meter)
    return view.alive - StateSet.from_mask(out[0])


def _dovetail_round(view, state, b_i, k, metrics):
    g = view.base
    cl_meter = kernels.Meter(k)
    alt_meter = kernels.Meter(k)

    def sliced(alive, target, player):
        return kernels.attract_sliced(g, alive, target, player, alt_meter)

    sides = [
        ("classical", _classical_trap_iter(view, b_i, cl_meter), cl_meter),
        ("alternative", _alt_trap_iter(view, state, alt_meter, sliced), alt_meter),
    ]
    try:
        while True:
            for name, gen, meter in sides:
                try:
                    next(gen)
                except StopIteration as stop:
                    value = stop.value
                    tr = value if name == "classical" else value[4]
                    return name, tr
                meter.stop += k
    finally:
        for _, gen, _ in sides:
            gen.close()
        metrics.charge("dovetail_classical", cl_meter.work)
        metrics.charge("dovetail_alternative", alt_meter.work)

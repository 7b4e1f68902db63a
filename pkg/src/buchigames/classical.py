"""Classical iterated backward-attractor algorithm for Büchi games."""

from __future__ import annotations

from .attractor import attract, is_closed
from .graph import PLAYER1, PLAYER2, StateSet, SubgameView, validate_subgame
from .results import InvariantViolation, IterationRecord, SolveResult, WorkMetrics


def avoid_set_classical(view, b_i, metrics=None, check=False):
    """One classical round on ``view``: returns ``(Tr_i, W_{i+1})``.

    ``Tr_i`` is the part of the view from which player 1 cannot force a
    visit to ``b_i``; ``W_{i+1}`` is player 2's attractor to it.
    """
    tr, w = _avoid(view, b_i, metrics, check)
    return tr, w.set


def _avoid(view, b_i, metrics, check, phase="attr1_buchi"):
    r = attract(view, PLAYER1, b_i, check=False)
    tr = view.alive - r.set
    w = attract(view, PLAYER2, tr, check=False)
    if metrics is not None:
        metrics.charge(phase, r.work)
        metrics.charge("attr2_trap", w.work)
    if check:
        check_trap(view, tr)
    w.trap_work = r.work
    return tr, w


def check_trap(view, tr):
    if not is_closed(view, PLAYER1, tr):
        raise InvariantViolation("trap is not player-1 closed")
    if any(view.base.buchi[s] for s in tr):
        raise InvariantViolation("trap intersects the Büchi set")


def remove(view, w, w2):
    """Delete attractor ``w`` (an AttractorResult) from the view, adding it to ``w2``."""
    alive = view.alive
    for s in w.members:
        alive.discard(s)
        w2.add(s)


def record(index, alive_size, tr, w, **kw):
    return IterationRecord(
        index=index,
        alive_size=alive_size,
        tr=tr.to_list(),
        w_next=list(w.members),
        w_strategy=dict(w.strategy_edge),
        **kw,
    )


def solve_classical(g, check=False):
    """Winning regions by repeated removal of player-2 attractors of traps."""
    metrics = WorkMetrics()
    view = SubgameView(g)
    alive = view.alive
    buchi = g.buchi_set()
    w2 = StateSet(g.n)
    trace = []
    while alive:
        before = metrics.edge_examinations
        b_i = buchi & alive
        tr, w = _avoid(view, b_i, metrics, check)
        metrics.iterations += 1
        trace.append(record(len(trace), len(alive), tr, w, trap_work=w.trap_work,
                            work=metrics.edge_examinations - before))
        if not w.set:
            break
        remove(view, w, w2)
        if check and not validate_subgame(view):
            raise InvariantViolation("remaining states do not form a subgame")
    return SolveResult("classical", w2, alive.copy(), metrics.iterations, trace, metrics)

"""Alternating reachability (attractors) and closed-set checks over a SubgameView."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import PLAYER1, PLAYER2, StateSet


class PreconditionError(ValueError):
    pass


@dataclass
class AttractorResult:
    """``Attr_player(target)`` with ranks and rank-decreasing choices.

    ``members`` is in nondecreasing rank order. ``rank`` and
    ``strategy_edge`` are keyed by state; ``strategy_edge`` only holds
    ``player``-owned members of positive rank.
    """

    player: int
    set: StateSet
    members: list
    rank: dict
    strategy_edge: dict
    work: int


def attract(view, player, target, check=True):
    """Attractor of ``target`` for ``player`` inside ``view``.

    ``target`` may be a StateSet or any iterable of ids. Work is the
    number of adjacency reads plus counter decrements.
    """
    if player not in (PLAYER1, PLAYER2):
        raise ValueError(f"player must be 1 or 2, got {player}")
    alive = view.alive.mask
    seeds = target.to_list() if isinstance(target, StateSet) else list(target)
    if check:
        dead = [s for s in seeds if not alive[s]]
        if dead:
            raise PreconditionError(f"target states not alive: {dead[:10]}")
    inset, members, ranks, choice, work = kernels.attract(view.base, alive, seeds, player)
    result = StateSet.from_mask(inset)
    rank = dict(zip(members, ranks))
    edges = {s: c for s, c in zip(members, choice) if c >= 0}
    return AttractorResult(player, result, members, rank, edges, work)


def is_closed(view, player, u):
    """True iff ``u`` is closed for ``player`` within ``view``.

    The player's own states must keep every alive successor inside ``u``;
    the opponent's states need at least one alive successor inside ``u``.
    """
    g = view.base
    alive = view.alive.mask
    if not isinstance(u, StateSet):
        u = StateSet(g.n, u)
    inside = u.mask
    for s in u:
        succ = [t for t in g.succ[s] if alive[t]]
        if g.owner[s] == player:
            if not all(inside[t] for t in succ):
                return False
        elif not any(inside[t] for t in succ):
            return False
    return True


def attract_naive(view, player, target):
    """Stage-by-stage recomputation of the attractor; quadratic reference.

    Returns ``{state: rank}``. Used only as a test oracle.
    """
    g = view.base
    alive = view.alive.mask
    stage = {s: 0 for s in target}
    i = 0
    while True:
        i += 1
        new = []
        for s in range(g.n):
            if not alive[s] or s in stage:
                continue
            succ = [t for t in g.succ[s] if alive[t]]
            if g.owner[s] == player:
                hit = any(t in stage for t in succ)
            else:
                hit = bool(succ) and all(t in stage for t in succ)
            if hit:
                new.append(s)
        if not new:
            return stage
        for s in new:
            stage[s] = i

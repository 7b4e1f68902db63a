"""Ground truth for tiny games by enumerating every memoryless strategy pair.

Sound only because Büchi games are memorylessly determined; the quantifier
swap (``forall pi exists sigma`` vs ``exists sigma forall pi``) is computed
as a cross-check. No attractor code is used here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import PLAYER1, PLAYER2, StateSet
from .strategy import MemorylessStrategy, simulate_play

DEFAULT_CAP = 10**6


class OracleCapExceeded(ValueError):
    def __init__(self, product, cap):
        self.product = product
        self.cap = cap
        super().__init__(f"strategy space {product} exceeds cap {cap}")


@dataclass
class OracleVerdict:
    w1: StateSet
    w2: StateSet
    strategy_pairs_examined: int
    w1_swapped: StateSet


def strategy_space(g):
    """Number of memoryless strategy pairs."""
    return math.prod(len(ts) for ts in g.succ)


def _owned(g, player):
    return [s for s in range(g.n) if g.owner[s] == player]


def oracle_solve(g, cap=DEFAULT_CAP):
    product = strategy_space(g)
    if product > cap:
        raise OracleCapExceeded(product, cap)
    table = kernels.oracle_table(g, _owned(g, PLAYER1), _owned(g, PLAYER2))
    per_sigma = np.bitwise_and.reduce(table, axis=1)
    per_pi = np.bitwise_or.reduce(table, axis=0)
    w1 = _to_set(g.n, np.bitwise_or.reduce(per_sigma))
    w1_swapped = _to_set(g.n, np.bitwise_and.reduce(per_pi))
    w2 = StateSet.full(g.n) - w1
    return OracleVerdict(w1, w2, product, w1_swapped)


def _to_set(n, mask):
    mask = int(mask)
    return StateSet(n, (s for s in range(n) if mask >> s & 1))


def oracle_by_simulation(g, cap=10**4):
    """Slow reference: every lasso built by :func:`simulate_play`.

    Returns ``(w1, w1_swapped)`` as Python sets.
    """
    product = strategy_space(g)
    if product > cap:
        raise OracleCapExceeded(product, cap)
    p1, p2 = _owned(g, PLAYER1), _owned(g, PLAYER2)
    sigmas = [MemorylessStrategy(PLAYER1, dict(zip(p1, c)))
              for c in itertools.product(*(g.succ[s] for s in p1))]
    pis = [MemorylessStrategy(PLAYER2, dict(zip(p2, c)))
           for c in itertools.product(*(g.succ[s] for s in p2))]
    wins = {(i, j): {s for s in range(g.n)
                     if simulate_play(g, s, sig, pi).visits_buchi_infinitely}
            for i, sig in enumerate(sigmas) for j, pi in enumerate(pis)}
    exists_forall = set()
    for i in range(len(sigmas)):
        exists_forall |= set.intersection(*(wins[i, j] for j in range(len(pis))))
    forall_exists = set(range(g.n))
    for j in range(len(pis)):
        forall_exists &= set.union(*(wins[i, j] for i in range(len(sigmas))))
    return exists_forall, forall_exists

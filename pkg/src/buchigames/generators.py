"""Deterministic instance families.

Gadget chain ids: ``t_i = 2i`` (player 1, non-Büchi), ``w_i = 2i + 1``
(player 2, Büchi). Every generator is a pure function of its arguments.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .graph import PLAYER1, PLAYER2, GameGraph

FAMILIES = ("gadget_chain", "gadget_chain_cycles", "random_bounded", "planted_trap")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    d: int = 2
    seed: int = 0
    buchi_density: float = 0.5
    trap_size: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0.0 <= self.buchi_density <= 1.0:
            raise ValueError("buchi_density must lie in [0, 1]")


def generate(spec):
    """Build the graph for ``spec`` (planted traps drop the planted id list)."""
    if spec.family == "gadget_chain":
        return gen_gadget_chain(spec.n)
    if spec.family == "gadget_chain_cycles":
        return gen_gadget_chain_cycles(spec.n)
    if spec.family == "random_bounded":
        return gen_random_bounded(spec)
    return gen_planted_trap(spec.n, spec.trap_size, spec.seed)[0]


def gen_gadget_chain(n):
    """Gadgets H(0..n): 2(n+1) states, 4n+2 edges, B = all w_i."""
    if n < 1:
        raise ValueError("gadget chain needs n >= 1")
    owner, buchi, succ = [], [], []
    for i in range(n + 1):
        owner += [PLAYER1, PLAYER2]
        buchi += [0, 1]
        succ.append([2 * i] if i == 0 else [2 * i, 2 * i - 1])
        succ.append([2 * i, 2 * i + 2] if i < n else [2 * i])
    return GameGraph(owner, buchi, succ)


def cycle_length(n):
    return math.ceil(2 * math.log2(n))


def gen_gadget_chain_cycles(n, exits=True):
    """Gadget chain with each ``t_i`` self-loop replaced by a longer cycle.

    The cycle runs ``t_i -> c_{i,0} -> ... -> c_{i,L-1} -> t_i`` through
    ``L = ceil(2 log2 n)`` fresh player-1 non-Büchi states, ids appended
    after the chain. With ``exits`` every cycle state of gadget ``i >= 1``
    also gets ``t_i``'s edge to ``w_{i-1}``, so the whole cycle becomes a
    trap at the same round ``t_i`` does; without it only ``t_i`` can leave.
    """
    if n < 2:
        raise ValueError("cycle variant needs n >= 2")
    L = cycle_length(n)
    base = 2 * (n + 1)
    owner, buchi, succ = [], [], []
    for i in range(n + 1):
        first = base + i * L
        owner += [PLAYER1, PLAYER2]
        buchi += [0, 1]
        succ.append([first] if i == 0 else [first, 2 * i - 1])
        succ.append([2 * i, 2 * i + 2] if i < n else [2 * i])
    for i in range(n + 1):
        for j in range(L):
            nxt = base + i * L + j + 1 if j < L - 1 else 2 * i
            owner.append(PLAYER1)
            buchi.append(0)
            succ.append([nxt, 2 * i - 1] if exits and i > 0 else [nxt])
    return GameGraph(owner, buchi, succ)


def gen_random_bounded(spec):
    """Fair-coin owners, Bernoulli(buchi_density) flags, 1..d distinct successors."""
    n, d = spec.n, spec.d
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    rng = random.Random(spec.seed)
    owner, buchi, succ = [], [], []
    for _ in range(n):
        owner.append(PLAYER1 if rng.random() < 0.5 else PLAYER2)
        buchi.append(1 if rng.random() < spec.buchi_density else 0)
        succ.append(rng.sample(range(n), rng.randint(1, d)))
    return GameGraph(owner, buchi, succ)


def gen_planted_trap(n, trap_size, seed, d=3):
    """Random graph with a small trap that only closes after round one.

    Layout: ids ``0..k-1`` are the trap, a player-1 non-Büchi cycle
    ``0 -> 1 -> ... -> k-1 -> 0``; state 0 also points at a Büchi
    player-2 gate ``k`` whose only edge goes to a decoy ``k+1`` (a
    player-1 non-Büchi self-loop). The decoy is a trap from the start, the
    gate falls with it, and from then on the planted set is closed and
    reachable from state 0 in fewer than ``k`` steps. The remaining states
    form a random background that may also point into the trap.

    Returns ``(graph, planted_ids)``.
    """
    k = trap_size
    if k < 1 or not k < n / 4:
        raise ValueError(f"need 1 <= trap_size < n/4, got {k} with n={n}")
    rng = random.Random(seed)
    gate, decoy = k, k + 1
    owner = [PLAYER1] * k + [PLAYER2, PLAYER1]
    buchi = [0] * k + [1, 0]
    succ = [[(j + 1) % k] for j in range(k)]
    succ[0].append(gate)
    succ += [[decoy], [decoy]]
    background = list(range(k + 2, n))
    pool = background + list(range(k))
    for _ in background:
        owner.append(PLAYER1 if rng.random() < 0.5 else PLAYER2)
        buchi.append(1 if rng.random() < 0.5 else 0)
        succ.append(rng.sample(pool, rng.randint(1, min(d, len(pool)))))
    return GameGraph(owner, buchi, succ), list(range(k))

"""Memoryless strategy extraction, verification and play simulation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .attractor import attract
from .graph import PLAYER1, PLAYER2, StateSet, SubgameView


class StrategyError(ValueError):
    pass


class ExtractionError(ValueError):
    pass


@dataclass
class MemorylessStrategy:
    player: int
    choice: dict = field(default_factory=dict)

    @property
    def domain(self):
        return sorted(self.choice)

    def __getitem__(self, s):
        return self.choice[s]

    def __contains__(self, s):
        return s in self.choice

    def __len__(self):
        return len(self.choice)

    def validate(self, g):
        for s, t in self.choice.items():
            if g.owner[s] != self.player:
                raise StrategyError(f"state {s} is not owned by player {self.player}")
            if t not in g.succ[s]:
                raise StrategyError(f"choice {s}->{t} is not an edge")


@dataclass
class PlayTrace:
    prefix: list
    cycle: list
    visits_buchi_infinitely: bool


@dataclass
class Verification:
    """Outcome of a strategy check; falsy on failure with a witness."""

    ok: bool
    clause: str = ""
    witness: list = field(default_factory=list)
    message: str = ""

    def __bool__(self):
        return self.ok


def extract_strategies(g, result):
    """Winning memoryless strategies ``(sigma1, pi2)`` from a solver trace.

    Player 2 stays inside each trap (first successor in adjacency order
    that is still in the trap) and follows the attractor edges elsewhere in
    its region. Player 1 follows the attractor to ``B`` inside ``w1`` and
    from Büchi states moves to the first successor that stays in ``w1``.
    """
    if result.trace is None:
        raise ExtractionError("result has no trace")
    pi2 = MemorylessStrategy(PLAYER2)
    for rec in result.trace:
        if rec.w_next and rec.w_strategy is None:
            raise ExtractionError(f"iteration {rec.index} lacks attractor edges")
        trap = set(rec.tr)
        for s in rec.tr:
            if g.owner[s] != PLAYER2:
                continue
            stay = next((t for t in g.succ[s] if t in trap), None)
            if stay is None:
                raise ExtractionError(f"trap state {s} has no successor inside its trap")
            pi2.choice[s] = stay
        for s, t in rec.w_strategy.items():
            if g.owner[s] == PLAYER2 and s not in trap:
                pi2.choice[s] = t
    for s in result.w2:
        if g.owner[s] == PLAYER2 and s not in pi2.choice:
            raise ExtractionError(f"no player-2 choice recorded for {s}")

    w1 = result.w1
    sigma1 = MemorylessStrategy(PLAYER1)
    view = SubgameView(g, w1.copy())
    reach = attract(view, PLAYER1, g.buchi_set() & w1, check=False)
    for s in w1:
        if g.owner[s] != PLAYER1:
            continue
        if g.buchi[s]:
            stay = next((t for t in g.succ[s] if t in w1), None)
            if stay is None:
                raise ExtractionError(f"Büchi state {s} has no successor in w1")
            sigma1.choice[s] = stay
        elif s in reach.strategy_edge:
            sigma1.choice[s] = reach.strategy_edge[s]
        else:
            raise ExtractionError(f"state {s} in w1 cannot be attracted to B")
    return sigma1, pi2


def _restricted(g, keep, choose):
    """Edges of the subgraph on ``keep``: owners in ``choose`` use only their choice."""
    rows, cols = [], []
    for s in keep:
        if s in choose:
            targets = (choose[s],)
        else:
            targets = g.succ[s]
        for t in targets:
            if t in keep:
                rows.append(s)
                cols.append(t)
    return rows, cols


def _cyclic(g, rows, cols):
    """Per-state flag: lies on a cycle of the given edge set."""
    n = g.n
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="strong")
    sizes = np.bincount(labels, minlength=n)
    on_cycle = sizes[labels] > 1
    for s, t in zip(rows, cols):
        if s == t:
            on_cycle[s] = True
    return on_cycle, labels


def _cycle_through(s, rows, cols, labels):
    adj = {}
    for a, b in zip(rows, cols):
        if labels[a] == labels[s] and labels[b] == labels[s]:
            adj.setdefault(a, []).append(b)
    parent = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v == s:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return [s]


def verify_player2(g, w2, pi2):
    """Check ``pi2`` keeps every play from ``w2`` inside it, visiting B finitely often."""
    keep = set(w2)
    for s in keep:
        if g.owner[s] == PLAYER2:
            if s not in pi2.choice:
                return Verification(False, "domain", [s], f"pi2 undefined at {s}")
            t = pi2.choice[s]
            if t not in g.succ[s] or t not in keep:
                return Verification(False, "a", [s, t], f"pi2({s})={t} leaves w2")
        elif any(t not in keep for t in g.succ[s]):
            t = next(t for t in g.succ[s] if t not in keep)
            return Verification(False, "b", [s, t], f"player-1 state {s} can leave w2 via {t}")
    rows, cols = _restricted(g, keep, {s: pi2.choice[s] for s in keep if g.owner[s] == PLAYER2})
    on_cycle, labels = _cyclic(g, rows, cols)
    for s in sorted(keep):
        if g.buchi[s] and on_cycle[s]:
            cyc = _cycle_through(s, rows, cols, labels)
            return Verification(False, "c", cyc, f"cycle through Büchi state {s}: {cyc}")
    return Verification(True)


def verify_player1(g, w1, sigma1):
    """Check ``sigma1`` keeps plays from ``w1`` inside it and forces B infinitely often."""
    keep = set(w1)
    for s in keep:
        if g.owner[s] == PLAYER1:
            if s not in sigma1.choice:
                return Verification(False, "domain", [s], f"sigma1 undefined at {s}")
            t = sigma1.choice[s]
            if t not in g.succ[s] or t not in keep:
                return Verification(False, "a", [s, t], f"sigma1({s})={t} leaves w1")
        elif any(t not in keep for t in g.succ[s]):
            t = next(t for t in g.succ[s] if t not in keep)
            return Verification(False, "b", [s, t], f"player-2 state {s} can leave w1 via {t}")
    free = {s for s in keep if not g.buchi[s]}
    rows, cols = _restricted(g, free, {s: sigma1.choice[s] for s in free if g.owner[s] == PLAYER1})
    on_cycle, labels = _cyclic(g, rows, cols)
    for s in sorted(free):
        if on_cycle[s]:
            cyc = _cycle_through(s, rows, cols, labels)
            return Verification(False, "c", cyc, f"B-free cycle in w1: {cyc}")
    return Verification(True)


def simulate_play(g, s0, sigma, pi):
    """Follow both memoryless strategies from ``s0`` until a state repeats."""
    seen = {}
    path = []
    s = s0
    while s not in seen:
        seen[s] = len(path)
        path.append(s)
        strat = sigma if g.owner[s] == PLAYER1 else pi
        if s not in strat.choice:
            raise StrategyError(f"player {g.owner[s]} strategy undefined at {s}")
        t = strat.choice[s]
        if t not in g.succ[s]:
            raise StrategyError(f"choice {s}->{t} is not an edge")
        s = t
    i = seen[s]
    cycle = path[i:]
    return PlayTrace(path[:i], cycle, any(g.buchi[c] for c in cycle))


def format_strategies(*strategies):
    lines = []
    for strat in strategies:
        lines.append(f"strategy {strat.player}")
        lines.extend(f"{s} {strat.choice[s]}" for s in strat.domain)
    return "\n".join(lines) + "\n"


def parse_strategies(text):
    """Parse one or more ``strategy <player>`` blocks."""
    out = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "strategy":
            if len(fields) != 2 or fields[1] not in ("1", "2"):
                raise StrategyError(f"line {lineno}: expected 'strategy <1|2>'")
            current = MemorylessStrategy(int(fields[1]))
            out.append(current)
            continue
        if current is None:
            raise StrategyError(f"line {lineno}: choice before 'strategy' header")
        try:
            s, t = (int(x) for x in fields)
        except ValueError:
            raise StrategyError(f"line {lineno}: expected '<state> <choice>'") from None
        if s in current.choice:
            raise StrategyError(f"line {lineno}: duplicate choice for {s}")
        current.choice[s] = t
    return out


def random_strategy(g, player, rng, domain=None):
    """Uniform random memoryless strategy for ``player`` (over ``domain`` if given)."""
    states = range(g.n) if domain is None else domain
    return MemorylessStrategy(
        player, {s: rng.choice(g.succ[s]) for s in states if g.owner[s] == player})


__all__ = [
    "ExtractionError", "MemorylessStrategy", "PlayTrace", "StateSet",
    "StrategyError", "Verification", "extract_strategies", "format_strategies",
    "parse_strategies", "random_strategy", "simulate_play", "verify_player1",
    "verify_player2",
]

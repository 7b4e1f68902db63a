"""Solver outputs: winning regions, per-iteration trace and work metrics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class InvariantViolation(AssertionError):
    """A checked algorithmic invariant failed during a solve."""


class WorkMetrics:
    """Edge examinations broken down by phase label.

    ``edge_examinations`` is always the sum of ``per_phase``.
    """

    def __init__(self):
        self.per_phase = Counter()
        self.iterations = 0
        self.counters = Counter()

    def charge(self, phase, work):
        self.per_phase[phase] += work

    def bump(self, name, k=1):
        self.counters[name] += k

    @property
    def edge_examinations(self):
        return sum(self.per_phase.values())

    def as_dict(self):
        return {
            "edge_examinations": self.edge_examinations,
            "iterations": self.iterations,
            "per_phase": dict(sorted(self.per_phase.items())),
            "counters": dict(sorted(self.counters.items())),
        }


@dataclass
class IterationRecord:
    """One removal round: the trap found and the player-2 attractor removed.

    ``w_strategy`` maps player-2 members of ``w_next`` outside the trap to
    their rank-decreasing successor.
    """

    index: int
    alive_size: int
    tr: list
    w_next: list
    w_strategy: dict = field(default_factory=dict)
    branch: str = ""
    depth: int = 0
    winner: str = ""
    work: int = 0
    trap_work: int = 0


@dataclass
class SolveResult:
    algorithm: str
    w2: object
    w1: object
    iterations: int
    trace: list
    metrics: WorkMetrics
    extra: dict = field(default_factory=dict)

    def w2_sorted(self):
        return sorted(self.w2)

    def w1_sorted(self):
        return sorted(self.w1)

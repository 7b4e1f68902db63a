"""Run reports: one solver run summarised as JSON or a CSV row."""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field, fields

SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "schema_version", "family", "size", "seed", "algorithm", "backend", "n", "m",
    "delta", "iterations", "edge_examinations", "w2_size",
    "threshold_branch_count", "probe_success_count", "fallback_count",
    "min_states_removed_per_fallback", "envelope_c", "per_phase", "wall_time",
)


@dataclass
class RunReport:
    algorithm: str
    n: int
    m: int
    delta: int
    iterations: int
    edge_examinations: int
    per_phase: dict
    w2_size: int
    wall_time: float
    backend: str = ""
    threshold_branch_count: int | None = None
    probe_success_count: int | None = None
    fallback_count: int | None = None
    min_states_removed_per_fallback: int | None = None
    realized_depths: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        counts = ("n", "m", "delta", "iterations", "edge_examinations", "w2_size")
        for name in counts:
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a non-negative int, got {v!r}")
        if self.w2_size > self.n:
            raise ValueError("w2_size exceeds n")
        if sum(self.per_phase.values()) != self.edge_examinations:
            raise ValueError("per-phase work does not sum to edge_examinations")

    @property
    def envelope_c(self):
        return envelope_constant(self.edge_examinations, self.n, self.m, self.delta)

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
        return cls(**data)

    def csv_row(self, family="", size="", seed=""):
        row = asdict(self)
        row.update(family=family, size=size, seed=seed,
                   envelope_c=f"{self.envelope_c:.6g}",
                   per_phase=json.dumps(self.per_phase, sort_keys=True, separators=(",", ":")),
                   wall_time=f"{self.wall_time:.6f}")
        return [("" if row[c] is None else row[c]) for c in CSV_COLUMNS]


def envelope_constant(work, n, m, delta):
    """``work / (n m log2(delta+1) / log2 n)``, with ``log2 n`` floored at 1."""
    denom = n * m * math.log2(delta + 1) / math.log2(max(n, 2))
    return work / denom if denom else 0.0


def run_solver(solver, g, check=False):
    """Time ``solver`` on ``g``; returns ``(result, report)``."""
    from .kernels import BACKEND

    t0 = time.perf_counter()
    res = solver(g, check=check)
    wall = time.perf_counter() - t0
    mx = res.metrics
    delta = max((len(ts) for ts in g.succ), default=0)
    rep = RunReport(
        algorithm=res.algorithm, n=g.n, m=g.m, delta=delta,
        iterations=mx.iterations, edge_examinations=mx.edge_examinations,
        per_phase=dict(sorted(mx.per_phase.items())), w2_size=len(res.w2),
        wall_time=wall, backend=BACKEND,
    )
    if res.algorithm == "improved":
        fb = res.extra["fallbacks"]
        removing = [f["removed"] for f in fb if f["removed"]]
        rep.threshold_branch_count = mx.counters["threshold_branch"]
        rep.probe_success_count = mx.counters["probe_success"]
        rep.fallback_count = mx.counters["fallback"]
        rep.min_states_removed_per_fallback = min(removing) if removing else None
        rep.realized_depths = list(res.extra["realized_depths"])
    return res, rep

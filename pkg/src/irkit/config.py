"""Run configuration shared by the library entry points and the CLI."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from typing import Optional


@dataclass(frozen=True)
class RunConfig:
    tol: float = 1e-6  # theta tolerance; ratio certificates inherit it
    budget_nodes: int = 2_000_000  # backtracking node budget per search
    budget_seconds: Optional[float] = None  # soft wall-clock guard per command
    max_power: int = 2  # strong powers tried for capacity lower bounds
    minrank_power: int = 1  # strong power used by the minrank upper surrogate
    pivots: tuple[str, ...] = ("Kbar(2)", "Kbar(3)")  # concatenation pivots
    cache_dir: Optional[str] = None
    output_format: str = "text"  # text | json
    size_limit: int = 10**6  # product materialization guard
    alpha_power_limit: int = 260  # largest power graph exact alpha runs on
    minrank_limit: int = 12
    theta_max_vertices: int = 200
    core_reduce_max: int = 14  # complement size cap for core reduction
    frontier_kmax: int = 2
    frontier_nmax: int = 2
    code_state_limit: int = 4096
    spectrum_refs: tuple[str, ...] = (
        "K(1)", "K(2)", "K(3)", "K(4)", "K(5)", "C(5)", "C(7)", "KG(5,2)",
    )

    def __post_init__(self):
        if not (0 < self.tol <= 1e-3):
            raise ValueError("tol must be in (0, 1e-3]")
        if self.budget_nodes <= 0:
            raise ValueError("budget_nodes must be positive")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise ValueError("budget_seconds must be positive")
        if self.max_power < 1:
            raise ValueError("max_power must be >= 1")


_ENV_PREFIX = "IRKIT_"

_ENV_FIELDS = {
    "TOL": ("tol", float),
    "BUDGET_NODES": ("budget_nodes", int),
    "BUDGET_SECS": ("budget_seconds", float),
    "MAX_POWER": ("max_power", int),
    "CACHE_DIR": ("cache_dir", str),
    "FORMAT": ("output_format", str),
    "PIVOTS": ("pivots", lambda s: tuple(p.strip() for p in s.split(";") if p.strip())),
}


def config_from_env(base: Optional[RunConfig] = None) -> RunConfig:
    """Apply IRKIT_* environment overrides on top of a base config."""
    cfg = base or RunConfig()
    updates = {}
    for suffix, (name, conv) in _ENV_FIELDS.items():
        raw = os.environ.get(_ENV_PREFIX + suffix)
        if raw is not None and raw != "":
            updates[name] = conv(raw)
    return replace(cfg, **updates) if updates else cfg

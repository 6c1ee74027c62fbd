"""Seeded random workloads: Poisson arrivals, exponential or Pareto sizes."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

MAX_SIZE = 500
PARETO_SCALE = 2.0  # minimum size of the heavy-tailed distribution
DISTRIBUTIONS = ("exp", "pareto")

TRACE_HEADER = "slot,src,dst,volume"


def rng_for(seed, *streams) -> np.random.Generator:
    """Deterministic generator for the key (seed, *streams).

    The split rule: every independent stream (replica traffic, routing
    draws, ...) derives from the base seed plus distinct integer suffixes.
    """
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, streams)]))


@dataclass(frozen=True)
class TrafficConfig:
    lam: float                 # mean arrivals per slot
    mu: float                  # mean flow size in data units
    dist: str = "exp"
    max_size: int = MAX_SIZE
    min_size: int | None = None  # resolved per distribution when omitted
    seed: int = 0

    def __post_init__(self):
        if self.dist not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.dist!r}; valid: {DISTRIBUTIONS}")
        if self.lam <= 0:
            raise ValueError("arrival rate must be > 0")
        if self.min_size is None:
            object.__setattr__(self, "min_size", 2 if self.dist == "pareto" else 1)
        if self.dist == "pareto" and self.mu <= PARETO_SCALE:
            raise ValueError(f"pareto mean must exceed the scale {PARETO_SCALE}")
        if not self.min_size <= self.mu <= self.max_size:
            raise ValueError("mean size outside [min_size, max_size]")

    @property
    def pareto_shape(self) -> float:
        # shape whose untruncated mean equals mu at scale PARETO_SCALE
        return self.mu / (self.mu - PARETO_SCALE)


@dataclass(frozen=True)
class ArrivalEvent:
    arrival_slot: int
    src: int
    dst: int
    volume: int


def sample_size(cfg: TrafficConfig, rng) -> int:
    """One integer flow size: draw, round half-up, clamp to the size range."""
    if cfg.dist == "exp":
        x = rng.exponential(cfg.mu)
    else:
        x = PARETO_SCALE * (1.0 + rng.pareto(cfg.pareto_shape))
    return min(cfg.max_size, max(cfg.min_size, int(x + 0.5)))


def gen_arrivals(cfg: TrafficConfig, topo, *, slots=None, arrivals=None) -> list[ArrivalEvent]:
    """Arrival events over a slot horizon or up to a fixed arrival count.

    Per slot the arrival count is Poisson(lam); each arrival draws an
    ordered distinct node pair uniformly and a size from the configured
    distribution. Deterministic given cfg.seed.
    """
    if (slots is None) == (arrivals is None):
        raise ValueError("specify exactly one of slots or arrivals")
    if (slots or arrivals) <= 0:
        raise ValueError("stop condition must be positive")
    n = topo.num_nodes
    if n < 2:
        raise ValueError("topology needs at least two nodes")
    rng = rng_for(cfg.seed)
    events: list[ArrivalEvent] = []
    slot = 0
    while True:
        if slots is not None and slot >= slots:
            break
        if arrivals is not None and len(events) >= arrivals:
            break
        for _ in range(rng.poisson(cfg.lam)):
            if arrivals is not None and len(events) >= arrivals:
                break
            pair = int(rng.integers(n * (n - 1)))
            src, r = divmod(pair, n - 1)
            dst = r + 1 if r >= src else r
            events.append(ArrivalEvent(slot, src, dst, sample_size(cfg, rng)))
        slot += 1
    return events


def write_trace(path, events, config: dict | None = None) -> None:
    """Write a replayable `slot,src,dst,volume` CSV trace."""
    lines = []
    if config is not None:
        lines.append("# config: " + json.dumps(config, sort_keys=True))
    lines.append(TRACE_HEADER)
    lines.extend(f"{e.arrival_slot},{e.src},{e.dst},{e.volume}" for e in events)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_trace(path) -> list[ArrivalEvent]:
    """Parse a trace CSV back into arrival events (must be sorted by slot)."""
    events = []
    with open(path) as fh:
        for ln, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#") or line == TRACE_HEADER:
                continue
            parts = line.split(",")
            if len(parts) != 4:
                raise ValueError(f"{path}: line {ln}: expected 4 fields")
            slot, src, dst, vol = (int(x) for x in parts)
            events.append(ArrivalEvent(slot, src, dst, vol))
    for i in range(len(events) - 1):
        if events[i].arrival_slot > events[i + 1].arrival_slot:
            raise ValueError(f"{path}: trace not sorted by slot")
    return events

"""Aggregation of per-flow outcomes into run-level statistics."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from statistics import mean, stdev

PER_FLOW_COLUMNS = ("flow_id", "src", "dst", "arrival_slot", "volume",
                    "hops", "finish_slot", "fct", "scheme", "policy", "seed")


def nearest_rank(sorted_values, q: float):
    """q-quantile of pre-sorted values by the nearest-rank rule."""
    if not sorted_values:
        raise ValueError("empty sample")
    rank = max(1, math.ceil(q * len(sorted_values)))
    return sorted_values[rank - 1]


def mean_std(values):
    """(mean, sample standard deviation); std is 0 for singletons."""
    return mean(values), (stdev(values) if len(values) > 1 else 0.0)


@dataclass
class RunReport:
    """Aggregate outcome of one scenario run.

    FCT fields are None when no flow completed; incomplete flows are
    excluded from FCT statistics and counted separately.
    """

    per_flow: list[dict]
    completed_count: int
    incomplete_count: int
    mean_fct: float | None
    tail_fct_p99: float | None
    tail_fct_max: float | None
    gap_mean: float | None = None
    gap_max: float | None = None
    route_latency_mean: float | None = None
    route_latency_max: float | None = None
    config_echo: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def summarize(flows, gaps=None, latencies=None, config_echo=None) -> RunReport:
    """Aggregate flow outcomes (and optional gaps / latencies) deterministically."""
    per_flow = []
    fcts = []
    for f in flows:
        fct = f.completion_time() if f.finish_slot is not None else None
        per_flow.append({
            "flow_id": f.id, "src": f.src, "dst": f.dst,
            "arrival_slot": f.arrival_slot, "volume": f.volume,
            "hops": f.path.hops if f.path is not None else None,
            "finish_slot": f.finish_slot, "fct": fct,
        })
        if fct is not None:
            fcts.append(fct)
    fcts.sort()
    report = RunReport(
        per_flow=per_flow,
        completed_count=len(fcts),
        incomplete_count=len(per_flow) - len(fcts),
        mean_fct=mean(fcts) if fcts else None,
        tail_fct_p99=nearest_rank(fcts, 0.99) if fcts else None,
        tail_fct_max=fcts[-1] if fcts else None,
        config_echo=dict(config_echo or {}),
    )
    if gaps is not None and len(gaps):
        report.gap_mean = mean(gaps)
        report.gap_max = max(gaps)
    if latencies is not None and len(latencies):
        report.route_latency_mean = mean(latencies)
        report.route_latency_max = max(latencies)
    return report


def normalize_groups(groups: dict) -> dict:
    """Divide every value by its group minimum; each minimum maps to 1.0.

    ``groups`` maps a group key to {member: value}.
    """
    out = {}
    for gkey, values in groups.items():
        if not values:
            raise ValueError(f"empty group {gkey!r}")
        low = min(values.values())
        if low == 0:
            raise ValueError(f"group {gkey!r} minimum is zero")
        out[gkey] = {k: v / low for k, v in values.items()}
    return out


def write_per_flow_csv(path, rows, config: dict | None = None) -> None:
    """Per-flow CSV with the fixed column contract and a config comment line."""
    lines = []
    if config is not None:
        lines.append("# config: " + json.dumps(config, sort_keys=True))
    lines.append(",".join(PER_FLOW_COLUMNS))
    for row in rows:
        lines.append(",".join(
            "" if row.get(c) is None else str(row[c]) for c in PER_FLOW_COLUMNS))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_json_report(path, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")

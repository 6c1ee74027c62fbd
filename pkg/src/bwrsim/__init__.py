"""Flow-level slotted-timeline WAN simulator and routing library."""

from .flowstate import Flow, FlowIndex
from .metrics import RunReport, nearest_rank, normalize_groups, summarize
from .routing import (SCHEMES, OracleTimeout, RouteRequest, RouteResult,
                      SearchStats, optimality_gap, path_weight, route_bwrh,
                      route_min_hop, route_min_max_util, route_optimal,
                      route_random_uniform, worst_case_completion)
from .scheduler import (POLICIES, SimResult, SlotOutcome, priority_order,
                        run_until, schedule_slot)
from .topology import (BUILTIN_NAMES, GmlParseError, NoPathError, Path,
                       Topology, builtin_topology, enumerate_paths,
                       load_topology, min_hop_distance, parse_edge_list,
                       parse_gml)
from .traffic import (DISTRIBUTIONS, ArrivalEvent, TrafficConfig,
                      gen_arrivals, read_trace, rng_for, sample_size,
                      write_trace)

__version__ = "0.1.0"

__all__ = [
    "ArrivalEvent", "BUILTIN_NAMES", "DISTRIBUTIONS", "Flow", "FlowIndex",
    "GmlParseError", "NoPathError", "OracleTimeout", "POLICIES", "Path",
    "RouteRequest", "RouteResult", "RunReport", "SCHEMES", "SearchStats",
    "SimResult", "SlotOutcome", "Topology", "TrafficConfig",
    "builtin_topology", "enumerate_paths", "gen_arrivals", "load_topology",
    "min_hop_distance", "nearest_rank", "normalize_groups", "optimality_gap",
    "parse_edge_list", "parse_gml", "path_weight", "priority_order",
    "read_trace", "rng_for", "route_bwrh", "route_min_hop",
    "route_min_max_util", "route_optimal", "route_random_uniform",
    "run_until", "sample_size", "schedule_slot", "summarize",
    "worst_case_completion", "write_trace",
]

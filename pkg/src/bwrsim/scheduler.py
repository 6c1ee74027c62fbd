"""Slotted timeline engine: per-slot edge-disjoint transmission scheduling."""

from __future__ import annotations

from dataclasses import dataclass

from .flowstate import Flow, FlowIndex
from .routing import RouteRequest

POLICIES = ("fcfs", "srpt", "fair")


def priority_order(policy: str, flows) -> list[int]:
    """Flow ids in transmission priority for one slot.

    fcfs: earliest arrival first. srpt: least remaining first. fair: least
    served first (round-robin at data-unit granularity, the discrete analog
    of max-min fair rates). Ties fall back to arrival slot then id, making
    the order total.
    """
    if policy == "fcfs":
        key = lambda f: (f.arrival_slot, f.id)
    elif policy == "srpt":
        key = lambda f: (f.remaining, f.arrival_slot, f.id)
    elif policy == "fair":
        key = lambda f: (f.delivered, f.arrival_slot, f.id)
    else:
        raise ValueError(f"unknown policy {policy!r}; valid: {', '.join(POLICIES)}")
    return [f.id for f in sorted(flows, key=key)]


@dataclass(frozen=True)
class SlotOutcome:
    slot: int
    transmitted: frozenset[int]
    completed: frozenset[int]
    edges_used: frozenset[tuple[int, int]]


def schedule_slot(index: FlowIndex, policy: str, slot: int, *,
                  check_maximality: bool = False) -> SlotOutcome:
    """Deliver one data unit for a greedily maximal edge-disjoint flow set.

    Flows are scanned in priority order; a flow transmits iff none of its
    path's directed edges was already claimed this slot, so every skipped
    active flow conflicts with some higher-priority selected flow.
    """
    order = priority_order(policy, index.active_flows())
    claimed = set()
    transmitted = []
    completed = []
    skipped = [] if check_maximality else None
    for fid in order:
        edges = index.flows[fid].path.edges
        if any(e in claimed for e in edges):
            if skipped is not None:
                skipped.append(fid)
            continue
        claimed.update(edges)
        index.deliver_one(fid, slot)
        transmitted.append(fid)
        if index.flows[fid].remaining == 0:
            completed.append(fid)
    if skipped is not None:
        for fid in skipped:
            if not any(e in claimed for e in index.flows[fid].path.edges):
                raise AssertionError(f"slot {slot}: flow {fid} skipped without conflict")
    return SlotOutcome(slot, frozenset(transmitted), frozenset(completed),
                       frozenset(claimed))


@dataclass
class SimResult:
    flows: list[Flow]
    routes: list  # RouteResult per flow, aligned with flow ids
    outcomes: list[SlotOutcome]
    slots_run: int
    horizon: int | None

    def completed_flows(self) -> list[Flow]:
        return [f for f in self.flows if f.finish_slot is not None]

    @property
    def incomplete_count(self) -> int:
        return sum(1 for f in self.flows if f.finish_slot is None)


def _check_slot(index, flows, outcome):
    edge_total = sum(len(flows[fid].path.edges) for fid in outcome.transmitted)
    if edge_total != len(outcome.edges_used):
        raise AssertionError(f"slot {outcome.slot}: edge claimed twice")
    for fid in outcome.transmitted:
        if flows[fid].arrival_slot > outcome.slot:
            raise AssertionError(f"flow {fid} transmitted before arrival")
    for fid in outcome.completed:
        f = flows[fid]
        if f.delivered != f.volume or f.finish_slot != outcome.slot:
            raise AssertionError(f"flow {fid} completion bookkeeping broken")


def run_until(topo, arrivals, router, policy: str, *, horizon: int | None = None,
              rng=None, on_route=None, check_invariants: bool = False,
              keep_outcomes: bool = True) -> SimResult:
    """Run the slotted engine over an arrival sequence.

    Per slot: admit that slot's arrivals in order, each routed against the
    state left by the previous admission, then schedule transmissions.
    Stops when no arrivals remain and all admitted flows finished, or at
    ``horizon`` slots (flows still in progress stay incomplete).
    ``on_route(index, request, result)`` runs after routing and before
    admission, against the same pre-admission snapshot the router saw.
    """
    events = list(arrivals)
    for i in range(len(events) - 1):
        if events[i].arrival_slot > events[i + 1].arrival_slot:
            raise ValueError("arrivals must be sorted by slot")
    if events and events[0].arrival_slot < 0:
        raise ValueError("arrival slots must be >= 0")

    index = FlowIndex()
    flows: list[Flow] = []
    routes = []
    outcomes: list[SlotOutcome] = []
    ei = 0
    slot = 0
    while True:
        if horizon is not None and slot >= horizon:
            break
        if ei >= len(events) and not index.active:
            break
        while ei < len(events) and events[ei].arrival_slot == slot:
            ev = events[ei]
            req = RouteRequest(ev.src, ev.dst, ev.volume)
            try:
                result = router(topo, index, req, rng)
            except Exception as exc:
                raise type(exc)(
                    f"routing arrival {ei} (slot {slot}, {ev.src}->{ev.dst}, "
                    f"volume {ev.volume}): {exc}") from exc
            if on_route is not None:
                on_route(index, req, result)
            flow = Flow(len(flows), ev.src, ev.dst, slot, ev.volume)
            index.admit(flow, result.path)
            flows.append(flow)
            routes.append(result)
            ei += 1
        outcome = schedule_slot(index, policy, slot,
                                check_maximality=check_invariants)
        if check_invariants:
            _check_slot(index, flows, outcome)
        if keep_outcomes:
            outcomes.append(outcome)
        slot += 1
    return SimResult(flows, routes, outcomes, slot, horizon)

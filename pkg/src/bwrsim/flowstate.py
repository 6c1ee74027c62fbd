"""Ongoing-flow bookkeeping: per-flow state and the per-edge flow index."""

from __future__ import annotations

from dataclasses import dataclass

from .topology import Path


@dataclass
class Flow:
    """One transfer; ``remaining`` counts undelivered data units."""

    id: int
    src: int
    dst: int
    arrival_slot: int
    volume: int
    remaining: int = -1  # defaults to volume
    delivered: int = 0
    path: Path | None = None
    finish_slot: int | None = None

    def __post_init__(self):
        if self.volume < 1:
            raise ValueError("flow volume must be >= 1")
        if self.remaining < 0:
            self.remaining = self.volume

    def completion_time(self) -> int:
        """Slots from arrival through the last data unit, inclusive."""
        if self.finish_slot is None:
            raise ValueError(f"flow {self.id} not finished")
        return self.finish_slot - self.arrival_slot + 1


class FlowIndex:
    """Admitted flows plus the edge -> active flow ids map behind path weights.

    ``by_edge[e]`` holds exactly the ids of unfinished flows whose path
    contains the directed edge e; it is updated on every admit/deliver.
    """

    def __init__(self):
        self.flows: dict[int, Flow] = {}
        self.by_edge: dict[tuple[int, int], set[int]] = {}
        self.active: set[int] = set()

    def admit(self, flow: Flow, path: Path) -> None:
        """Store the flow with its fixed path and index its edges."""
        if flow.id in self.flows:
            raise ValueError(f"duplicate flow id {flow.id}")
        if path.src != flow.src or path.dst != flow.dst:
            raise ValueError(
                f"path endpoints ({path.src},{path.dst}) do not match "
                f"flow endpoints ({flow.src},{flow.dst})")
        if flow.remaining != flow.volume:
            raise ValueError("flow must be admitted with remaining == volume")
        flow.path = path
        self.flows[flow.id] = flow
        self.active.add(flow.id)
        for e in path.edges:
            self.by_edge.setdefault(e, set()).add(flow.id)

    def deliver_one(self, fid: int, slot: int) -> None:
        """Send one data unit of flow ``fid`` during ``slot``."""
        flow = self.flows[fid]
        if flow.remaining < 1:
            raise ValueError(f"flow {fid} already finished")
        flow.remaining -= 1
        flow.delivered += 1
        if flow.remaining == 0:
            flow.finish_slot = slot
            self.active.discard(fid)
            for e in flow.path.edges:
                bucket = self.by_edge[e]
                bucket.discard(fid)
                if not bucket:
                    del self.by_edge[e]

    def active_flows(self) -> list[Flow]:
        return [self.flows[i] for i in self.active]

    def edge_load(self, edge: tuple[int, int]) -> int:
        """Total remaining data units over active flows crossing ``edge``."""
        return sum(self.flows[i].remaining for i in self.by_edge.get(edge, ()))

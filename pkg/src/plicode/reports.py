"""Run reports shared by the encoders."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class GroupRecord:
    s: int
    messages: list[int]
    sat: int
    eff: int

    def to_json(self) -> dict:
        return {"s": self.s, "messages": list(self.messages), "sat": self.sat, "eff": self.eff}


@dataclass(frozen=True)
class RoundRecord:
    groups: list[GroupRecord]
    satisfied: int

    def to_json(self) -> dict:
        return {"groups": [g.to_json() for g in self.groups], "satisfied": self.satisfied}


@dataclass(frozen=True)
class BinRecord:
    s: int
    clients: int
    rows: int

    def to_json(self) -> dict:
        return {"s": self.s, "clients": self.clients, "rows": self.rows}


@dataclass(frozen=True)
class RunReport:
    """Per-run accounting: rounds/groups for the greedy encoder, bins for the randomized one."""

    rounds: list[RoundRecord]
    rows_raw: int
    rows_pruned: int
    bins: list[BinRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "rounds": [r.to_json() for r in self.rounds],
            "rows_raw": self.rows_raw,
            "rows_pruned": self.rows_pruned,
        }
        if self.bins:
            out["bins"] = [b.to_json() for b in self.bins]
        return out

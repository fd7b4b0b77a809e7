"""Randomized baseline encoder: client bins by degree, random binary rows.

Clients are split into dyadic degree bins; each bin receives independent
Bernoulli rows (bit probability ~ 2^s/n, clamped to 1/2) until all its
clients are satisfied. The default satisfaction rule is per-row
exactly-one: a row with exactly one 1 inside R_i satisfies client i, and
that row remains a decoding witness no matter which rows follow. The
cumulative span-criterion stopping rule is available behind a flag.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import FMatrix, essential_columns
from .instances import PliableInstance, adjacency_matrix
from .reports import BinRecord, RunReport


class RandomizedCapError(RuntimeError):
    """A bin exceeded its row cap; signals pathological parameters."""


@dataclass(frozen=True)
class BinPlan:
    """Client bins by degree band plus per-bin bit probabilities."""

    n: int
    bins: dict[int, frozenset[int]]
    probs: dict[int, float]


def _band_index(degree: int, n: int) -> int:
    s = 1
    while (degree << s) <= n:
        s += 1
    return s


def plan_bins(instance: PliableInstance) -> BinPlan:
    """Bin s holds clients with n/2^s < |R_i| <= n/2^(s-1); p_s = min(2^s/n, 1/2)."""
    n = instance.n
    smax = max(1, n.bit_length())
    raw: dict[int, set[int]] = {s: set() for s in range(1, smax + 1)}
    for i in range(n):
        d = len(instance.requirements[i])
        if d == 0:
            continue
        raw[_band_index(d, n)].add(i)
    bins = {s: frozenset(c) for s, c in raw.items() if c}
    probs = {s: min((2**s) / n, 0.5) for s in bins}
    return BinPlan(n=n, bins=bins, probs=probs)


def _seed_stream(seed, s: int) -> list[int]:
    if isinstance(seed, (list, tuple)):
        return [int(x) for x in seed] + [s]
    return [int(seed), s]


def randomized_code(
    instance: PliableInstance,
    seed,
    stopping: str = "exactly_one",
    max_rows_per_bin: int = 100_000,
) -> tuple[FMatrix, RunReport]:
    """Draw random F_2 rows per bin until every bin client is satisfied.

    Bins run in increasing s with generator streams derived from (seed, s),
    so the output is deterministic for a given seed regardless of how many
    bins exist. stopping is "exactly_one" (default) or "cumulative" for the
    cumulative span-criterion rule.
    """
    if stopping not in ("exactly_one", "cumulative"):
        raise ValueError(f"unknown stopping rule {stopping!r}")
    plan = plan_bins(instance)
    adj = adjacency_matrix(instance)
    m = instance.m
    all_rows: list[np.ndarray] = []
    bin_records: list[BinRecord] = []
    for s in sorted(plan.bins):
        clients = sorted(plan.bins[s])
        sub = adj[clients].astype(np.int64)
        p = plan.probs[s]
        rng = np.random.default_rng(_seed_stream(seed, s))
        unsat = np.ones(len(clients), dtype=bool)
        rows: list[np.ndarray] = []
        while unsat.any():
            if len(rows) >= max_rows_per_bin:
                raise RandomizedCapError(
                    f"bin {s}: {len(rows)} rows drawn, {int(unsat.sum())} of "
                    f"{len(clients)} clients still unsatisfied (p_s={p})"
                )
            row = (rng.random(m) < p).astype(np.int64)
            rows.append(row)
            if stopping == "exactly_one":
                unsat &= (sub @ row) != 1
            else:
                cum = np.array(rows, dtype=np.int64)
                for t in np.nonzero(unsat)[0]:
                    req = sorted(instance.requirements[clients[t]])
                    if essential_columns(cum[:, req], 2).any():
                        unsat[t] = False
        all_rows += rows
        bin_records.append(BinRecord(s=s, clients=len(clients), rows=len(rows)))
    stacked = np.array(all_rows, dtype=np.int64) if all_rows else np.zeros((0, m), dtype=np.int64)
    matrix = FMatrix.from_rows(stacked, 2)
    report = RunReport(
        rounds=[],
        rows_raw=matrix.n_rows,
        rows_pruned=matrix.prune_zero_rows().n_rows,
        bins=bin_records,
    )
    return matrix, report

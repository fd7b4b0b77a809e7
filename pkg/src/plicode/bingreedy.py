"""BinGreedy: deterministic round-based encoder over F_2.

Each round sorts messages by effective degree on the remaining active
subgraph, groups them into dyadic degree bands, and greedily assigns one
of the three nonzero 2-bit coding vectors per message so that two
transmissions per group satisfy at least a third of the group's effective
clients. Rounds repeat until every client is satisfied.

All tie-breaks are fixed (smallest message index; vector preference
(1,0) > (0,1) > (1,1)) so identical instances yield identical matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fields import FMatrix
from .instances import PliableInstance, adjacency_matrix
from .reports import GroupRecord, RoundRecord, RunReport

CODING_VECTORS = ((1, 0), (0, 1), (1, 1))


class EncoderStallError(RuntimeError):
    """A round satisfied zero clients; unreachable unless there is a bug."""


@dataclass(frozen=True)
class SortingResult:
    """Greedy message order with effective clients/degrees and dyadic groups.

    groups[s-1] holds the messages whose effective degree d satisfies
    threshold_n / 2^s < d <= threshold_n / 2^(s-1). Messages whose
    effective degree is 0 appear in neither the order nor any group.
    """

    order: list[int]
    eff_clients: list[frozenset[int]]
    eff_degree: list[int]
    groups: list[list[int]]
    group_thresholds: list[tuple[float, float]]
    threshold_n: int


@dataclass
class GroupCode:
    """Outcome of the greedy 2-row coding for one group."""

    s: int
    messages: list[int]
    vectors: list[tuple[int, int]]
    sat: set[int]
    unsat: set[int]


def _band_index(degree: int, threshold_n: int) -> int:
    """Smallest s >= 1 with degree * 2^s > threshold_n (exact integer arithmetic)."""
    s = 1
    while (degree << s) <= threshold_n:
        s += 1
    return s


def sort_and_group(
    instance: PliableInstance,
    active: set[int],
    threshold_n: int | None = None,
    adj: np.ndarray | None = None,
) -> SortingResult:
    """Greedy max-remaining-degree ordering plus dyadic grouping.

    threshold_n defaults to |active|; passing the instance's original n
    reproduces the fixed-threshold grouping variant.
    """
    if not active:
        raise ValueError("active set must be nonempty")
    if adj is None:
        adj = adjacency_matrix(instance)
    n_thr = len(active) if threshold_n is None else threshold_n
    remaining = np.zeros(instance.n, dtype=bool)
    remaining[sorted(active)] = True
    deg = adj[remaining].sum(axis=0).astype(np.int64)
    avail = np.ones(instance.m, dtype=bool)

    order: list[int] = []
    eff_clients: list[frozenset[int]] = []
    eff_degree: list[int] = []
    while True:
        masked = np.where(avail, deg, -1)
        j = int(np.argmax(masked))
        if masked[j] <= 0:
            break
        clients = np.nonzero(adj[:, j] & remaining)[0]
        order.append(j)
        eff_clients.append(frozenset(int(c) for c in clients))
        eff_degree.append(int(clients.size))
        remaining[clients] = False
        deg -= adj[clients].sum(axis=0)
        avail[j] = False

    smax = max(1, n_thr.bit_length())
    groups: list[list[int]] = [[] for _ in range(smax)]
    for j, d in zip(order, eff_degree):
        groups[_band_index(d, n_thr) - 1].append(j)
    thresholds = [(n_thr / 2**s, n_thr / 2 ** (s - 1)) for s in range(1, smax + 1)]
    return SortingResult(order, eff_clients, eff_degree, groups, thresholds, n_thr)


def _counts_ok(counts: list[int]) -> bool:
    # Satisfaction under the 2-row F_2 criterion, from the multiset of
    # nonzero coding vectors among a client's visited required messages:
    # some vector type must occur exactly once, and at most two distinct
    # types may occur (three distinct types span all of F_2^2).
    distinct = (counts[0] > 0) + (counts[1] > 0) + (counts[2] > 0)
    return distinct <= 2 and (counts[0] == 1 or counts[1] == 1 or counts[2] == 1)


def greedy_assign(
    instance: PliableInstance,
    group: list[int],
    eff: dict[int, frozenset[int]],
    s: int = 0,
    neighbor_sets: list[frozenset[int]] | None = None,
    trace: list | None = None,
) -> GroupCode:
    """Assign one coding vector per group message, keeping SAT clients maximal.

    Visits messages in order; for each, evaluates the three candidate
    vectors against the currently satisfied clients connected to the
    message, keeps the maximizer, demotes newly broken clients to UNSAT,
    and promotes the message's effective clients to SAT.
    """
    if not group:
        raise ValueError("group must be nonempty")
    if neighbor_sets is None:
        adj = adjacency_matrix(instance)
        neighbor_sets = [frozenset(int(c) for c in np.nonzero(adj[:, j])[0]) for j in range(instance.m)]

    sat: dict[int, list[int]] = {}
    unsat: set[int] = set()
    vectors: list[tuple[int, int]] = []
    for j in group:
        affected = [i for i in neighbor_sets[j] if i in sat]
        best_t = 0
        best_keep = -1
        for t in range(3):
            keep = 0
            for i in affected:
                c = sat[i]
                c[t] += 1
                if _counts_ok(c):
                    keep += 1
                c[t] -= 1
            if keep > best_keep:
                best_t, best_keep = t, keep
        for i in affected:
            c = sat[i]
            c[best_t] += 1
            if not _counts_ok(c):
                del sat[i]
                unsat.add(i)
        for i in eff[j]:
            counts = [0, 0, 0]
            counts[best_t] = 1
            sat[i] = counts
        vectors.append(CODING_VECTORS[best_t])
        if trace is not None:
            trace.append((j, CODING_VECTORS[best_t], set(sat)))
    return GroupCode(s=s, messages=list(group), vectors=vectors, sat=set(sat), unsat=unsat)


def run_round(
    instance: PliableInstance,
    active: set[int],
    threshold_n: int | None = None,
    adj: np.ndarray | None = None,
    neighbor_sets: list[frozenset[int]] | None = None,
) -> tuple[list[GroupCode], np.ndarray, set[int], SortingResult]:
    """One round: sort, group, and emit two rows per nonempty group.

    Returns the group codes, the stacked round rows (2 per nonempty group,
    zero outside the group's columns), the set of clients satisfied this
    round, and the sorting result.
    """
    sr = sort_and_group(instance, active, threshold_n=threshold_n, adj=adj)
    eff_by_msg = dict(zip(sr.order, sr.eff_clients))
    group_codes: list[GroupCode] = []
    rows: list[np.ndarray] = []
    satisfied: set[int] = set()
    for s_idx, group in enumerate(sr.groups, start=1):
        if not group:
            continue
        gc = greedy_assign(instance, group, eff_by_msg, s=s_idx, neighbor_sets=neighbor_sets)
        group_codes.append(gc)
        r0 = np.zeros(instance.m, dtype=np.int64)
        r1 = np.zeros(instance.m, dtype=np.int64)
        for j, (v0, v1) in zip(gc.messages, gc.vectors):
            r0[j] = v0
            r1[j] = v1
        rows += [r0, r1]
        satisfied |= gc.sat
    stacked = np.array(rows, dtype=np.int64) if rows else np.zeros((0, instance.m), dtype=np.int64)
    return group_codes, stacked, satisfied, sr


def bingreedy(
    instance: PliableInstance,
    use_original_n: bool = False,
    prune: bool = False,
) -> tuple[FMatrix, RunReport]:
    """Run rounds until every client is satisfied; stack all rows over F_2.

    use_original_n switches the grouping thresholds from the per-round
    |active| to the instance's original client count. prune drops all-zero
    rows from the returned matrix; the report always carries both counts.
    """
    active = instance.initial_active()
    adj = adjacency_matrix(instance)
    neighbor_sets = [frozenset(int(c) for c in np.nonzero(adj[:, j])[0]) for j in range(instance.m)]
    all_rows: list[np.ndarray] = []
    round_records: list[RoundRecord] = []
    while active:
        thr = instance.n if use_original_n else None
        group_codes, rows, satisfied, _ = run_round(
            instance, active, threshold_n=thr, adj=adj, neighbor_sets=neighbor_sets
        )
        if not satisfied:
            raise EncoderStallError(
                f"round satisfied zero of {len(active)} active clients; "
                f"groups={[gc.messages for gc in group_codes]}"
            )
        round_records.append(
            RoundRecord(
                groups=[
                    GroupRecord(gc.s, gc.messages, len(gc.sat), len(gc.sat) + len(gc.unsat))
                    for gc in group_codes
                ],
                satisfied=len(satisfied),
            )
        )
        all_rows.append(rows)
        active -= satisfied
    stacked = (
        np.vstack(all_rows) if all_rows else np.zeros((0, instance.m), dtype=np.int64)
    )
    matrix = FMatrix.from_rows(stacked, 2)
    pruned = matrix.prune_zero_rows()
    report = RunReport(rounds=round_records, rows_raw=matrix.n_rows, rows_pruned=pruned.n_rows)
    return (pruned if prune else matrix), report

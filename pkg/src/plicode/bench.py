"""Benchmark harness: identical instances fed to every algorithm, CSV out.

Every matrix an algorithm produces is re-verified through the decodability
engine before its row is recorded, and each algorithm consumes the very
same instance object per (n, seed) point (checked by hash).
"""

from __future__ import annotations

import io
import statistics
import time
from dataclasses import dataclass, field

from .bingreedy import bingreedy
from .decoding import is_valid_code
from .instances import instance_hash, random_instance
from .randomized import randomized_code

CSV_HEADER = "n,m,p,seed,algorithm,code_length_raw,code_length_pruned,rounds,satisfied,runtime_ms"


class BenchmarkError(RuntimeError):
    """An encoder produced an invalid code or inconsistent instance state."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one comparison experiment.

    m_rule "n075" sets m = round(n^0.75); "fixed" uses m_fixed. timing=False
    records runtime_ms as 0 so reruns are byte-identical.
    """

    n_values: tuple[int, ...] = (100, 316, 1000)
    p: float = 0.3
    instances: int = 20
    base_seed: int = 0
    algorithms: tuple[str, ...] = ("bingreedy", "randomized")
    m_rule: str = "n075"
    m_fixed: int | None = None
    timing: bool = True

    def __post_init__(self):
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ValueError(f"n values must be >= 1, got {self.n_values}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {self.p}")
        if self.instances < 1:
            raise ValueError(f"instances must be >= 1, got {self.instances}")
        if self.m_rule not in ("n075", "fixed"):
            raise ValueError(f"unknown m rule {self.m_rule!r}")
        if self.m_rule == "fixed" and (self.m_fixed is None or self.m_fixed < 1):
            raise ValueError("m_rule 'fixed' requires m_fixed >= 1")
        for alg in self.algorithms:
            if alg not in ("bingreedy", "randomized"):
                raise ValueError(f"unknown algorithm {alg!r}")

    def m_for(self, n: int) -> int:
        if self.m_rule == "fixed":
            return int(self.m_fixed)
        return max(1, round(n**0.75))


@dataclass(frozen=True)
class ResultRow:
    n: int
    m: int
    p: float
    seed: int
    algorithm: str
    code_length_raw: int
    code_length_pruned: int
    rounds: int
    satisfied: int
    runtime_ms: int

    def to_csv_line(self) -> str:
        return (
            f"{self.n},{self.m},{self.p:g},{self.seed},{self.algorithm},"
            f"{self.code_length_raw},{self.code_length_pruned},{self.rounds},"
            f"{self.satisfied},{self.runtime_ms}"
        )


def run_benchmark(config: ExperimentConfig) -> tuple[list[ResultRow], dict]:
    """Run every configured algorithm on every (n, seed) instance.

    Instance seeds derive deterministically from (base_seed, n, seed index);
    the seed CSV column is the index. Returns sorted rows plus a summary of
    mean/max pruned code length per (n, algorithm).
    """
    rows: list[ResultRow] = []
    for n in config.n_values:
        m = config.m_for(n)
        for idx in range(config.instances):
            stream = [config.base_seed, n, idx]
            instance = random_instance(n, m, config.p, seed=stream)
            digest = instance_hash(instance)
            satisfied = len(instance.non_vacuous_clients())
            for alg in config.algorithms:
                t0 = time.perf_counter()
                if alg == "bingreedy":
                    matrix, report = bingreedy(instance)
                    rounds = len(report.rounds)
                else:
                    matrix, report = randomized_code(instance, seed=stream)
                    rounds = len(report.bins)
                elapsed = (time.perf_counter() - t0) * 1000.0
                if instance_hash(instance) != digest:
                    raise BenchmarkError("instance mutated during encoding")
                if not is_valid_code(matrix, instance):
                    raise BenchmarkError(f"{alg} produced an invalid code at n={n}, seed={idx}")
                rows.append(
                    ResultRow(
                        n=n,
                        m=m,
                        p=config.p,
                        seed=idx,
                        algorithm=alg,
                        code_length_raw=report.rows_raw,
                        code_length_pruned=report.rows_pruned,
                        rounds=rounds,
                        satisfied=satisfied,
                        runtime_ms=int(round(elapsed)) if config.timing else 0,
                    )
                )
    rows.sort(key=lambda r: (r.n, r.seed, r.algorithm))
    return rows, summarize(rows)


def summarize(rows: list[ResultRow]) -> dict:
    """Mean, max, and worst/mean ratio of pruned code length per (n, algorithm)."""
    groups: dict[tuple[int, str], list[int]] = {}
    for r in rows:
        groups.setdefault((r.n, r.algorithm), []).append(r.code_length_pruned)
    out: dict = {}
    for (n, alg), lengths in sorted(groups.items()):
        mean = statistics.fmean(lengths)
        worst = max(lengths)
        out.setdefault(n, {})[alg] = {
            "mean": mean,
            "max": worst,
            "worst_over_mean": worst / mean if mean else float("nan"),
            "count": len(lengths),
        }
    return out


def rows_to_csv(rows: list[ResultRow]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        buf.write(r.to_csv_line() + "\n")
    return buf.getvalue()


def write_csv(rows: list[ResultRow], path) -> None:
    with open(path, "w") as fh:
        fh.write(rows_to_csv(rows))

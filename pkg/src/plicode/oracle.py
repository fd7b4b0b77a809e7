"""Desk-scale exact computations: optimal code length, constrained minrank,
and the field-size threshold for the all-pairs instance family.

The two main searches are deliberately independent of each other:
optimal_code_length enumerates coding matrices column by column with
client-complete pruning, while minrank_fitted enumerates low-dimensional
subspaces through canonical reduced-echelon bases. Witnesses are always
re-verified through the decodability engine before being returned.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .decoding import is_valid_code
from .fields import FieldSpec, FMatrix, essential_columns
from .instances import PliableInstance, all_pairs_instance


class BudgetError(RuntimeError):
    """The requested search exceeds the configured enumeration budget."""


class OracleError(RuntimeError):
    """A search produced a witness that failed independent re-verification."""


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact search; value is None when the cap was exhausted."""

    value: int | None
    witness: FMatrix | None
    enumerated: int
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "K": self.value,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "enumerated": self.enumerated,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _client_finalizable(assigned: np.ndarray, req: list[int], q: int) -> bool:
    return bool(essential_columns(assigned[:, req], q).any())


def _vector_options(q: int, k: int) -> list[tuple[int, ...]]:
    # Lexicographic by integer value, first row most significant.
    return [
        tuple((v // q ** (k - 1 - r)) % q for r in range(k)) for v in range(q**k)
    ]


def _search_fixed_length(
    instance: PliableInstance, q: int, k: int, counter: list[int]
) -> np.ndarray | None:
    """Backtracking over columns; exhaustive thanks to client-complete pruning.

    A client's satisfaction depends only on its own requirement columns, so
    it can be checked (and the branch pruned) as soon as its last required
    column is assigned.
    """
    m = instance.m
    finish: list[list[list[int]]] = [[] for _ in range(m)]
    for i in instance.non_vacuous_clients():
        req = sorted(instance.requirements[i])
        finish[req[-1]].append(req)
    options = _vector_options(q, k)
    assigned = np.zeros((k, m), dtype=np.int64)

    def dfs(col: int) -> bool:
        if col == m:
            return True
        for vec in options:
            counter[0] += 1
            assigned[:, col] = vec
            if all(_client_finalizable(assigned, req, q) for req in finish[col]):
                if dfs(col + 1):
                    return True
        assigned[:, col] = 0
        return False

    return assigned.copy() if dfs(0) else None


def optimal_code_length(
    instance: PliableInstance,
    q: int,
    max_K: int,
    max_matrices: int = 10**9,
) -> SearchResult:
    """Smallest K <= max_K admitting a valid K x m code over F_q.

    Raises BudgetError when the search must enter a length level whose
    nominal space q^(K * m) exceeds max_matrices without having found a
    code yet. value is None when no code of length <= max_K exists.
    """
    spec = FieldSpec(q)
    t0 = time.perf_counter()
    if not instance.non_vacuous_clients():
        return SearchResult(0, FMatrix.zeros(0, instance.m, q), 0, _ms(t0))
    counter = [0]
    for k in range(1, max_K + 1):
        if q ** (k * instance.m) > max_matrices:
            raise BudgetError(
                f"search space q^(K*m) = {q}^{k * instance.m} exceeds budget {max_matrices}"
            )
        found = _search_fixed_length(instance, q, k, counter)
        if found is not None:
            witness = FMatrix(found, spec)
            if not is_valid_code(witness, instance):
                raise OracleError("length search returned an invalid witness")
            return SearchResult(k, witness, counter[0], _ms(t0))
    return SearchResult(None, None, counter[0], _ms(t0))


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^m."""
    if r < 0 or r > m:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_rref_bases(m: int, r: int, q: int):
    """Yield each r-dimensional subspace of F_q^m once, as its canonical
    reduced-echelon basis (r x m array), in lexicographic order."""
    for pivots in itertools.combinations(range(m), r):
        pivot_set = set(pivots)
        free_pos = [
            (row, col)
            for row in range(r)
            for col in range(pivots[row] + 1, m)
            if col not in pivot_set
        ]
        for values in itertools.product(range(q), repeat=len(free_pos)):
            basis = np.zeros((r, m), dtype=np.int64)
            for row, col in enumerate(pivots):
                basis[row, col] = 1
            for (row, col), v in zip(free_pos, values):
                basis[row, col] = v
            yield basis


def minrank_fitted(
    instance: PliableInstance,
    q: int,
    max_r: int,
    max_subspaces: int = 10**6,
) -> SearchResult:
    """Smallest r such that some r-dimensional subspace of F_q^m contains,
    for every non-vacuous client, a vector with exactly one 1 inside R_i and
    zeros on the rest of R_i (coordinates outside R_i are unconstrained)."""
    spec = FieldSpec(q)
    t0 = time.perf_counter()
    nonvac = instance.non_vacuous_clients()
    if not nonvac:
        return SearchResult(0, FMatrix.zeros(0, instance.m, q), 0, _ms(t0))
    total = sum(gaussian_binomial(instance.m, r, q) for r in range(1, max_r + 1))
    if total > max_subspaces:
        raise BudgetError(f"{total} subspaces to enumerate exceeds budget {max_subspaces}")
    reqs = [np.array(sorted(instance.requirements[i]), dtype=np.int64) for i in nonvac]
    count = 0
    for r in range(1, max_r + 1):
        coeffs = np.array(list(itertools.product(range(q), repeat=r)), dtype=np.int64)[1:]
        for basis in enumerate_rref_bases(instance.m, r, q):
            count += 1
            vecs = (coeffs @ basis) % q
            if all(_has_fitting_vector(vecs, req) for req in reqs):
                witness = FMatrix(basis, spec)
                if not is_valid_code(witness, instance):
                    raise OracleError("minrank search returned an invalid witness")
                return SearchResult(r, witness, count, _ms(t0))
    return SearchResult(None, None, count, _ms(t0))


def _has_fitting_vector(vecs: np.ndarray, req: np.ndarray) -> bool:
    sub = vecs[:, req]
    return bool((((sub == 1).sum(axis=1) == 1) & ((sub != 0).sum(axis=1) == 1)).any())


DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)


def min_field_for_length2(
    m: int,
    primes=DEFAULT_PRIMES,
    max_matrices: int = 10**9,
) -> int | None:
    """Smallest listed prime q admitting a length-2 code for the all-pairs
    instance on m messages; None if no listed prime works."""
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    instance = all_pairs_instance(m)
    for q in primes:
        res = optimal_code_length(instance, q, max_K=2, max_matrices=max_matrices)
        if res.value == 2:
            return q
    return None


def count_pairwise_independent(q: int) -> int:
    """Maximum number of pairwise linearly independent nonzero vectors in F_q^2.

    Counted by exhaustive enumeration of direction classes (one
    representative per class, first nonzero coordinate normalized to 1) and
    cross-checked against the closed form 2 + (q - 1)."""
    spec = FieldSpec(q)
    directions = set()
    for x in range(q):
        for y in range(q):
            if x == 0 and y == 0:
                continue
            lead = x if x != 0 else y
            inv = spec.inv(lead)
            directions.add((spec.mul(x, inv), spec.mul(y, inv)))
    count = len(directions)
    if count != 2 + (q - 1):
        raise OracleError(f"direction count {count} disagrees with 2+(q-1) for q={q}")
    return count


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0

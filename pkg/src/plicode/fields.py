"""Linear algebra over prime fields F_q.

Matrices are dense numpy integer arrays with entries reduced mod q.
Degenerate-shape conventions: an empty matrix has rank 0, and the span of
an empty set of vectors is {0}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class FieldError(ValueError):
    """Invalid field order or field-element operation."""


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class InconsistentSystemError(ValueError):
    """The linear system has no solution.

    Transmission systems built from genuine encoded values are always
    consistent, so hitting this signals a bug in the caller.
    """


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for the small moduli used here."""
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field F_q, validated at construction."""

    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise FieldError(f"field order must be a prime >= 2, got {self.q}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise FieldError("no inverse for zero")
        return pow(a, -1, self.q)


@dataclass(frozen=True, eq=False)
class FMatrix:
    """A K x m matrix over a prime field; rows are broadcast transmissions."""

    entries: np.ndarray
    field: FieldSpec

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise DimensionError(f"matrix entries must be 2-D, got ndim={a.ndim}")
        if a.size and (a.min() < 0 or a.max() >= self.field.q):
            raise FieldError(f"entries must lie in [0, {self.field.q})")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def from_rows(cls, rows, q: int) -> "FMatrix":
        return cls(np.asarray(rows, dtype=np.int64), FieldSpec(q))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int, q: int) -> "FMatrix":
        return cls(np.zeros((n_rows, n_cols), dtype=np.int64), FieldSpec(q))

    @property
    def n_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j].copy()

    def mul_vector(self, b) -> np.ndarray:
        """Compute x = A b mod q."""
        b = np.asarray(b, dtype=np.int64)
        if b.shape != (self.n_cols,):
            raise DimensionError(f"vector length {b.shape} incompatible with {self.n_cols} columns")
        return (self.entries @ b) % self.field.q

    def prune_zero_rows(self) -> "FMatrix":
        keep = np.any(self.entries != 0, axis=1)
        return FMatrix(self.entries[keep], self.field)

    def equals(self, other: "FMatrix") -> bool:
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def to_json(self) -> dict:
        return {"q": self.field.q, "rows": self.entries.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "FMatrix":
        return cls.from_rows(obj["rows"], int(obj["q"]))


def _rref(a: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_q; returns (R, pivot column list)."""
    r = np.asarray(a, dtype=np.int64).copy() % q
    n_rows, n_cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        p = int(nz[0]) + row
        if p != row:
            r[[row, p]] = r[[p, row]]
        if q > 2 and r[row, col] != 1:
            r[row] = (r[row] * pow(int(r[row, col]), -1, q)) % q
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            r[others] = (r[others] - np.outer(r[others, col], r[row])) % q
        pivots.append(col)
        row += 1
    return r, pivots


def rank_generic(a: np.ndarray, q: int) -> int:
    """Rank over F_q via Gaussian elimination on a plain array."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return len(_rref(a, q)[1])


def rank_gf2_bits(a: np.ndarray) -> int:
    """Rank over F_2 using bit-packed rows (python ints as bitsets)."""
    a = np.asarray(a, dtype=np.int64) % 2
    if a.size == 0:
        return 0
    words = [int("".join("1" if x else "0" for x in row), 2) if row.any() else 0 for row in a]
    rank = 0
    basis: list[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
            rank += 1
    return rank


def rank(mat: FMatrix, method: str = "auto") -> int:
    """Rank of a matrix over its field.

    method: "auto" picks the bitset path for F_2, "generic" forces plain
    elimination, "bitset" forces the F_2 path (error for q != 2). Both paths
    are behaviorally identical; tests exercise them against each other.
    """
    if method == "bitset" or (method == "auto" and mat.field.q == 2):
        if mat.field.q != 2:
            raise FieldError("bitset rank path requires q = 2")
        return rank_gf2_bits(mat.entries)
    return rank_generic(mat.entries, mat.field.q)


def in_span(v, vectors, spec: FieldSpec) -> bool:
    """True iff v is an F_q-linear combination of the given vectors.

    The span of an empty collection is {0}.
    """
    v = np.asarray(v, dtype=np.int64) % spec.q
    vecs = [np.asarray(c, dtype=np.int64) % spec.q for c in vectors]
    for c in vecs:
        if c.shape != v.shape:
            raise DimensionError("span members and test vector must share the same length")
    if not vecs:
        return not np.any(v)
    base = np.stack(vecs)
    r0 = rank_generic(base, spec.q)
    r1 = rank_generic(np.vstack([base, v[None, :]]), spec.q)
    return r1 == r0


def essential_columns(a: np.ndarray, q: int) -> np.ndarray:
    """Boolean mask of columns not contained in the span of the other columns.

    Column j is outside the span of the rest iff every null-space vector of
    the matrix has a zero j-th coordinate, which can be read off the RREF:
    j must be a pivot column whose pivot row is zero on all free columns.
    """
    a = np.asarray(a, dtype=np.int64)
    n_cols = a.shape[1]
    out = np.zeros(n_cols, dtype=bool)
    if n_cols == 0:
        return out
    r, pivots = _rref(a, q)
    pivot_set = set(pivots)
    free = np.array([c for c in range(n_cols) if c not in pivot_set], dtype=np.int64)
    for row_idx, col in enumerate(pivots):
        out[col] = free.size == 0 or not np.any(r[row_idx, free])
    return out


@dataclass(frozen=True)
class LinearSolution:
    """A particular solution plus per-coordinate uniqueness flags."""

    values: np.ndarray
    unique: np.ndarray


def solve_consistent(mat: FMatrix, rhs) -> LinearSolution:
    """Solve M y = rhs over F_q, assuming consistency.

    Returns one solution (free variables set to 0) and, per coordinate, a
    flag that is True iff the coordinate takes the same value across all
    solutions. Raises InconsistentSystemError if no solution exists.
    """
    q = mat.field.q
    rhs = np.asarray(rhs, dtype=np.int64) % q
    if rhs.shape != (mat.n_rows,):
        raise DimensionError(f"rhs length {rhs.shape} incompatible with {mat.n_rows} rows")
    aug = np.hstack([mat.entries, rhs[:, None]])
    r, pivots = _rref(aug, q)
    m = mat.n_cols
    if m in pivots:
        raise InconsistentSystemError("rhs is not in the column space")
    values = np.zeros(m, dtype=np.int64)
    unique = np.zeros(m, dtype=bool)
    pivot_set = set(pivots)
    free = np.array([c for c in range(m) if c not in pivot_set], dtype=np.int64)
    for row_idx, col in enumerate(pivots):
        values[col] = r[row_idx, m]
        unique[col] = free.size == 0 or not np.any(r[row_idx, free])
    return LinearSolution(values=values, unique=unique)

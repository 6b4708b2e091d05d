"""Dense scalar linear algebra over F_p on top of numpy.

Entries are held in ``int64`` arrays when ``p < 2**31`` so that a product of two
residues never overflows; larger primes fall back to ``object`` arrays of
Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import PrimeField


class SingularMatrixError(ValueError):
    """Raised by :func:`solve_linear` when the system matrix is not invertible."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"singular matrix: rank {rank} < {size}")
        self.rank = rank
        self.size = size


def _dtype(p: int):
    return np.int64 if p < 2**31 else object


def as_array(rows, p: int) -> np.ndarray:
    data = [[int(v) % p for v in row] for row in rows]
    if not data:
        return np.zeros((0, 0), dtype=_dtype(p))
    return np.array(data, dtype=_dtype(p))


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row echelon form with its pivot columns."""

    matrix: np.ndarray
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


_SMALL = 400


def _rref_lists(a: list[list[int]], cols: int, p: int) -> tuple[list[list[int]], list[int]]:
    # same elimination on Python lists; numpy call overhead dominates tiny inputs
    rows = len(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if a[i][c]), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        inv = pow(a[r][c], -1, p)
        pr = [x * inv % p for x in a[r]]
        a[r] = pr
        for i in range(rows):
            t = a[i][c]
            if i != r and t:
                a[i] = [(x - t * y) % p for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(a: np.ndarray, p: int) -> EchelonForm:
    """Gauss-Jordan elimination mod p; pivot columns are the column rank profile."""
    a = np.array(a, dtype=_dtype(p)) % p
    if a.size <= _SMALL:
        rows, pivots = _rref_lists(a.tolist(), a.shape[1], p)
        return EchelonForm(np.array(rows, dtype=_dtype(p)).reshape(a.shape), tuple(pivots))
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return EchelonForm(a, tuple(pivots))


class ScalarMatrix:
    """A rectangular matrix over F_p."""

    def __init__(self, field: PrimeField, entries, cols: int | None = None):
        self.field = field
        arr = as_array(entries, field.p) if not isinstance(entries, np.ndarray) else entries.astype(_dtype(field.p)) % field.p
        if cols is not None and arr.size == 0:
            arr = arr.reshape(arr.shape[0], cols)
        if arr.ndim != 2:
            raise ValueError("ScalarMatrix entries must be two-dimensional")
        self.entries = arr

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> ScalarMatrix:
        return cls(field, np.eye(n, dtype=_dtype(field.p)))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> ScalarMatrix:
        return cls(field, np.zeros((rows, cols), dtype=_dtype(field.p)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __getitem__(self, ij):
        return int(self.entries[ij])

    def __matmul__(self, other):
        p = self.field.p
        if isinstance(other, ScalarMatrix):
            return ScalarMatrix(self.field, _matmul(self.entries, other.entries, p))
        v = np.array([int(x) % p for x in other], dtype=_dtype(p))
        return [int(x) for x in _matmul(self.entries, v.reshape(-1, 1), p)[:, 0]]

    def __eq__(self, other):
        return (
            isinstance(other, ScalarMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self.entries == other.entries))
        )

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def transpose(self) -> ScalarMatrix:
        return ScalarMatrix(self.field, self.entries.T.copy())

    def rref(self) -> EchelonForm:
        return rref(self.entries, self.field.p)

    def rank(self) -> int:
        return self.rref().rank

    def row_rank_profile(self) -> tuple[int, ...]:
        """Lexicographically first set of row indices spanning the row space."""
        return rref(self.entries.T, self.field.p).pivots

    def column_rank_profile(self) -> tuple[int, ...]:
        return self.rref().pivots

    def nullspace(self) -> list[list[int]]:
        """Basis of the right kernel ``{x : A x = 0}``."""
        p = self.field.p
        ech = self.rref()
        free = [c for c in range(self.cols) if c not in ech.pivots]
        basis = []
        for fc in free:
            x = [0] * self.cols
            x[fc] = 1
            for i, pc in enumerate(ech.pivots):
                x[pc] = (-int(ech.matrix[i, fc])) % p
            basis.append(x)
        return basis

    def __repr__(self):
        return f"ScalarMatrix(p={self.field.p}, {self.tolist()})"


def _matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        return (a.astype(object) @ b.astype(object)) % p
    # reduce after each rank-one update: p**2 + p < 2**63
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k, :])) % p
    return out


def solve_linear(A: ScalarMatrix, b) -> list[int]:
    """Solve the square system ``A x = b`` exactly.

    Raises :class:`SingularMatrixError` (carrying the rank) if ``A`` is singular.
    """
    n = A.rows
    if A.cols != n:
        raise ValueError("solve_linear needs a square matrix")
    p = A.field.p
    bcol = np.array([int(x) % p for x in b], dtype=_dtype(p)).reshape(n, 1)
    aug = np.concatenate([A.entries, bcol], axis=1)
    ech = rref(aug, p)
    if ech.pivots[:n] != tuple(range(n)):
        raise SingularMatrixError(A.rank(), n)
    return [int(x) for x in ech.matrix[:n, n]]

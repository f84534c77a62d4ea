"""Dense Gaussian elimination over a :class:`~addikit.field.FieldSpec`.

Matrices are 2-D numpy int64 arrays of element reps.  Every function takes
the field first and never mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from addikit.errors import DimensionMismatch, SingularMatrix
from addikit.field import FieldSpec


def _as_matrix(M) -> np.ndarray:
    M = np.array(M, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {M.shape}")
    return M


def rref(F: FieldSpec, M, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns.

    Args:
        F: the field.
        M: matrix of reps.
        ncols: pivot only in the first ``ncols`` columns (for augmented
            systems); row operations still act on the full width.
    """
    R = _as_matrix(M).copy()
    rows, cols = R.shape
    ncols = cols if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.mul(F.inv(int(R[r, c])), R[r])
        factors = R[:, c].copy()
        factors[r] = 0
        if factors.any():
            R = F.sub(R, F.mul(factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FieldSpec, M) -> int:
    M = _as_matrix(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def det(F: FieldSpec, M) -> int:
    R = _as_matrix(M).copy()
    n = R.shape[0]
    if R.shape != (n, n):
        raise DimensionMismatch(f"determinant of non-square {R.shape} matrix")
    d = 1
    for c in range(n):
        nz = np.nonzero(R[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            R[[c, i]] = R[[i, c]]
            d = F.neg(d)
        piv = int(R[c, c])
        d = F.mul(d, piv)
        below = F.mul(R[c + 1 :, c], F.inv(piv))
        R[c + 1 :] = F.sub(R[c + 1 :], F.mul(below[:, None], R[c][None, :]))
    return int(d)


def is_nonsingular(F: FieldSpec, M) -> bool:
    M = _as_matrix(M)
    return M.shape[0] == M.shape[1] and rank(F, M) == M.shape[0]


def inverse(F: FieldSpec, M) -> np.ndarray:
    M = _as_matrix(M)
    n = M.shape[0]
    if M.shape != (n, n):
        raise DimensionMismatch(f"inverse of non-square {M.shape} matrix")
    R, piv = rref(F, np.hstack([M, np.eye(n, dtype=np.int64)]), ncols=n)
    if len(piv) < n:
        raise SingularMatrix("matrix is singular")
    return R[:, n:]


def nullspace(F: FieldSpec, M) -> np.ndarray:
    """Basis of ``{x : M x = 0}`` as rows, one per free column."""
    M = _as_matrix(M)
    cols = M.shape[1]
    R, piv = rref(F, M)
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for r, pc in enumerate(piv):
            basis[b, pc] = F.neg(int(R[r, f]))
    return basis


@dataclass(frozen=True)
class Solution:
    """A particular solution plus nullspace basis, or ``particular=None``."""

    particular: np.ndarray | None
    nullspace: np.ndarray

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def solve(F: FieldSpec, A, b) -> Solution:
    """Solve ``A x = b``."""
    A = _as_matrix(A)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.shape[0] != A.shape[0]:
        raise DimensionMismatch(f"rhs length {b.shape[0]} vs {A.shape[0]} rows")
    cols = A.shape[1]
    R, piv = rref(F, np.hstack([A, b[:, None]]), ncols=cols)
    ns = nullspace(F, A)
    if R[len(piv) :, cols].any():
        return Solution(None, ns)
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = R[r, cols]
    return Solution(x, ns)


def matmul(F: FieldSpec, A, B) -> np.ndarray:
    """``A @ B`` over ``F``; leading batch dimensions broadcast."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[-1] != B.shape[-2]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    if F.m == 1 and F.p < 2**20:
        return np.matmul(A, B) % F.p
    out = F.mul(A[..., :, :1], B[..., :1, :])
    for l in range(1, A.shape[-1]):
        out = F.add(out, F.mul(A[..., :, l : l + 1], B[..., l : l + 1, :]))
    return out


def vecmat(F: FieldSpec, v, M) -> np.ndarray:
    return matmul(F, np.asarray(v, dtype=np.int64)[..., None, :], M)[..., 0, :]


def matvec(F: FieldSpec, M, v) -> np.ndarray:
    return matmul(F, M, np.asarray(v, dtype=np.int64)[..., :, None])[..., 0]


@dataclass(frozen=True)
class MatrixFq:
    """A matrix over one finite field, with JSON round-tripping."""

    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self) -> None:
        e = _as_matrix(self.entries)
        if e.size and (e.min() < 0 or e.max() >= self.field.order):
            raise DimensionMismatch(f"entries outside {self.field!r}")
        object.__setattr__(self, "entries", e)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def rank(self) -> int:
        return rank(self.field, self.entries)

    def det(self) -> int:
        return det(self.field, self.entries)

    def is_nonsingular(self) -> bool:
        return is_nonsingular(self.field, self.entries)

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        return MatrixFq(self.field, matmul(self.field, self.entries, other.entries))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.entries.tolist()}

    @staticmethod
    def from_json(obj: dict, field: FieldSpec) -> MatrixFq:
        entries = np.array(obj["entries"], dtype=np.int64).reshape(obj["rows"], obj["cols"])
        return MatrixFq(field, entries)

"""Linear [n, k, d]_q codes given by generator matrices.

The columns of a generator matrix are read as points of PG(k-1, q) (a
multiset: repeated columns are allowed).  A ``j``-dimensional subspace ``V``
of F_q^k spans the subcode ``D(V) = <vG : v in V>`` whose support has size
``n - |V^perp cap X|``; the generalised Hamming weight ``d_j`` minimises this
over all ``V`` of dimension ``j``.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from addikit import linalg
from addikit.config import check_budget
from addikit.enumeration import min_weight, projective_vectors, weight_distribution
from addikit.errors import DependentRows, DimensionMismatch, InvalidDimension, SingularMatrix, ZeroColumn
from addikit.field import FieldSpec, gf


def weight(v) -> int:
    """Number of nonzero coordinates."""
    return int(np.count_nonzero(np.asarray(v)))


def support(words) -> set[int]:
    """Union of the nonzero positions of ``words``."""
    words = np.asarray(words, dtype=np.int64)
    if words.size == 0:
        return set()
    words = words.reshape(-1, words.shape[-1])
    return set(np.nonzero((words != 0).any(axis=0))[0].tolist())


def gaussian_binomial(k: int, j: int, q: int) -> int:
    """Number of ``j``-dimensional subspaces of F_q^k."""
    if not 0 <= j <= k:
        return 0
    num = den = 1
    for i in range(j):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def normalise_projective(F: FieldSpec, v) -> np.ndarray:
    """Scale ``v`` so its first nonzero entry is 1."""
    v = np.asarray(v, dtype=np.int64)
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        raise ZeroColumn("the zero vector is not a projective point")
    return F.mul(F.inv(int(v[nz[0]])), v)


@dataclass(frozen=True)
class ProjectivePointSet:
    field: FieldSpec
    points: np.ndarray  # (n, k), each row normalised

    def __len__(self) -> int:
        return len(self.points)

    def distinct(self) -> bool:
        return len({tuple(p) for p in self.points.tolist()}) == len(self.points)


@dataclass(frozen=True)
class SubspaceFq:
    """A subspace of F_q^k stored by its RREF basis."""

    field: FieldSpec
    basis: np.ndarray

    @staticmethod
    def span(F: FieldSpec, vectors) -> SubspaceFq:
        R, piv = linalg.rref(F, vectors)
        return SubspaceFq(F, R[: len(piv)])

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def perp(self) -> SubspaceFq:
        """``{x : v . x = 0 for all v}`` under the standard dot product."""
        return SubspaceFq.span(self.field, linalg.nullspace(self.field, self.basis))

    def contains(self, x) -> bool:
        stacked = np.vstack([self.basis, np.asarray(x, dtype=np.int64)[None, :]])
        return linalg.rank(self.field, stacked) == self.dim


def rref_subspaces(F: FieldSpec, k: int, j: int):
    """Yield every ``j``-dimensional subspace of F_q^k as a batch of RREF bases.

    Pivot sets run lexicographically; for each, one array of shape
    ``(q^free, j, k)`` holds all matrices with the free entries in odometer
    order.
    """
    q = F.order
    for pivots in itertools.combinations(range(k), j):
        free = [
            (r, c)
            for r, pc in enumerate(pivots)
            for c in range(pc + 1, k)
            if c not in pivots
        ]
        vals = np.array(list(itertools.product(range(q), repeat=len(free))), dtype=np.int64)
        vals = vals.reshape(q ** len(free), len(free))
        batch = np.zeros((len(vals), j, k), dtype=np.int64)
        for r, pc in enumerate(pivots):
            batch[:, r, pc] = 1
        for f, (r, c) in enumerate(free):
            batch[:, r, c] = vals[:, f]
        yield batch


class LinearCode:
    """The row space of a full-rank ``k x n`` matrix over F_q."""

    def __init__(self, field: FieldSpec, G, name: str | None = None) -> None:
        G = np.array(G, dtype=np.int64)
        if G.ndim != 2 or G.shape[1] < 1:
            raise DimensionMismatch(f"generator matrix must be k x n with n >= 1, got {G.shape}")
        if G.min() < 0 or G.max() >= field.order:
            raise DimensionMismatch(f"entries outside {field!r}")
        if linalg.rank(field, G) != G.shape[0]:
            raise DependentRows("generator matrix is not of full row rank")
        G.setflags(write=False)
        self.field = field
        self.G = G
        self.name = name

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def q(self) -> int:
        return self.field.order

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}]_{self.q})"

    def codeword(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if v.shape[-1] != self.k:
            raise DimensionMismatch(f"message length {v.shape[-1]} != k = {self.k}")
        return linalg.vecmat(self.field, v, self.G)

    def with_generator(self, B) -> LinearCode:
        """The same code generated by ``B G`` for nonsingular ``B``."""
        if not linalg.is_nonsingular(self.field, B):
            raise SingularMatrix("basis change must be nonsingular")
        return LinearCode(self.field, linalg.matmul(self.field, B, self.G), self.name)

    def min_distance(self, budget: int | None = None, jobs: int = 1) -> int:
        return self.min_distance_witness(budget, jobs)[0]

    def min_distance_witness(self, budget: int | None = None, jobs: int = 1):
        ident = np.arange(self.q, dtype=np.int64)
        return min_weight(self.field, self.G, ident, budget, jobs)

    def weight_distribution(self, budget: int | None = None) -> np.ndarray:
        return weight_distribution(self.field, self.G, np.arange(self.q), budget)

    def columns_as_points(self) -> ProjectivePointSet:
        cols = self.G.T
        zero = np.nonzero(~cols.any(axis=1))[0]
        if zero.size:
            raise ZeroColumn(f"column {int(zero[0])} is zero")
        pts = np.array([normalise_projective(self.field, c) for c in cols])
        return ProjectivePointSet(self.field, pts)

    def hyperplane_count(self, V) -> int:
        """``|V^perp cap X|`` with multiplicity: columns ``x`` with ``V x = 0``."""
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.k)
        return int((~linalg.matmul(self.field, V, self.G).any(axis=0)).sum())

    def subcode_support(self, V) -> set[int]:
        """Support of ``D(V)``, from the rows of ``V G``."""
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.k)
        return support(linalg.matmul(self.field, V, self.G))

    def ghw(self, j: int, budget: int | None = None) -> int:
        """The ``j``-th generalised Hamming weight by subspace enumeration."""
        return self.ghw_witness(j, budget)[0]

    def ghw_witness(self, j: int, budget: int | None = None) -> tuple[int, np.ndarray]:
        if not 1 <= j <= self.k:
            raise InvalidDimension(f"j must lie in [1, {self.k}], got {j}")
        check_budget(f"{j}-subspace enumeration", gaussian_binomial(self.k, j, self.q), budget)
        best, witness = -1, None
        for batch in rref_subspaces(self.field, self.k, j):
            zero_cols = ~linalg.matmul(self.field, batch, self.G).any(axis=1)
            counts = zero_cols.sum(axis=1)
            i = int(counts.argmax())
            if counts[i] > best:
                best, witness = int(counts[i]), batch[i]
        return self.n - best, witness

    def ghw_hierarchy(self, budget: int | None = None) -> list[int]:
        return [self.ghw(j, budget) for j in range(1, self.k + 1)]

    # -- I/O -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {"q": self.field.to_json(), "k": self.k, "n": self.n, "rows": self.G.tolist()}

    @staticmethod
    def from_json(obj: dict) -> LinearCode:
        field = FieldSpec.from_json(obj["q"])
        rows = np.array(obj["rows"], dtype=np.int64)
        if rows.shape != (obj["k"], obj["n"]):
            raise DimensionMismatch(f"rows have shape {rows.shape}, header says {obj['k']}x{obj['n']}")
        return LinearCode(field, rows)


def ghw_table_csv(code: LinearCode, budget: int | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "d_j"])
    for j, d in enumerate(code.ghw_hierarchy(budget), start=1):
        w.writerow([j, d])
    return buf.getvalue()


def weight_table_csv(code: LinearCode, budget: int | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "count"])
    for wt, c in enumerate(code.weight_distribution(budget).tolist()):
        if c:
            w.writerow([wt, c])
    return buf.getvalue()


# -- named codes ---------------------------------------------------------------


def hamming74() -> LinearCode:
    G = [
        [1, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ]
    return LinearCode(gf(2), G, "hamming74")


def simplex73() -> LinearCode:
    # columns: every nonzero vector of F_2^3
    cols = [v for v in projective_vectors(2, 3)]
    return LinearCode(gf(2), np.array(cols).T, "simplex73")


def identity_code(q: int, k: int) -> LinearCode:
    return LinearCode(gf(q), np.eye(k, dtype=np.int64), f"identity{k}")


NAMED_CODES = {"hamming74": hamming74, "simplex73": simplex73}


def load_code(spec: str) -> LinearCode:
    """A named code or a JSON generator-matrix file."""
    if spec in NAMED_CODES:
        return NAMED_CODES[spec]()
    return LinearCode.from_json(json.loads(Path(spec).read_text()))

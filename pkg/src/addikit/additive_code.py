"""Additive codes: F_q-linear subspaces of F_{q^h}^n.

An additive code is the F_q-row-span of a ``k x n`` matrix over F_{q^h}; it
has ``q^k`` codewords and parameters written ``[n, k/h, d]_q^h``.  The code is
closed under F_q-scalars only, so the minimum-distance search deduplicates by
the ``q - 1`` nonzero F_q-multiples and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from addikit import linalg
from addikit.config import check_budget
from addikit.enumeration import all_vectors, min_weight, span_words, weight_distribution
from addikit.errors import DependentRows, DimensionMismatch
from addikit.field import FieldSpec
from addikit.tower import TowerContext


@dataclass(frozen=True)
class AdditiveParams:
    n: int
    k: int
    h: int
    q: int
    d: int
    lower_bound: int | None = None

    @property
    def dim(self) -> Fraction:
        return Fraction(self.k, self.h)

    @property
    def dim_display(self) -> str:
        f = self.dim
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    @property
    def bound_met(self) -> bool | None:
        return None if self.lower_bound is None else self.d >= self.lower_bound

    def __str__(self) -> str:
        return f"[{self.n}, {self.dim_display}, {self.d}]_{self.q}^{self.h}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "h": self.h,
            "dim": self.dim_display,
            "d": self.d,
            "q": self.q,
            "lower_bound": self.lower_bound,
            "bound_met": self.bound_met,
        }


class AdditiveCode:
    """F_q-row-span of ``rows`` (reps of F_{q^h}).

    Raises:
        DependentRows: if the rows are F_q-dependent, i.e. ``v -> v G`` is
            not injective.
    """

    def __init__(self, q: int, h: int, rows, ctx: TowerContext | None = None) -> None:
        self.ctx = ctx if ctx is not None else TowerContext(q, h=h)
        if self.ctx.q != q or self.ctx.h != h:
            raise DimensionMismatch("tower context does not match (q, h)")
        rows = np.array(rows, dtype=np.int64)
        if rows.ndim != 2 or rows.shape[1] < 1:
            raise DimensionMismatch(f"generator must be k x n, got shape {rows.shape}")
        if rows.min() < 0 or rows.max() >= self.ctx.Fqh.order:
            raise DimensionMismatch(f"entries outside {self.ctx.Fqh!r}")
        rows.setflags(write=False)
        self.rows = rows
        self.q = q
        self.h = h
        if self.fq_rank() != self.k:
            raise DependentRows(
                f"rows have F_q-rank {self.fq_rank()} < k = {self.k}; codewords would repeat"
            )

    @property
    def Fq(self) -> FieldSpec:
        return self.ctx.Fq

    @property
    def Fqh(self) -> FieldSpec:
        return self.ctx.Fqh

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    def __repr__(self) -> str:
        return f"AdditiveCode(n={self.n}, k={self.k}, q={self.q}, h={self.h})"

    def expanded(self) -> np.ndarray:
        """``k x (n h)`` F_q-matrix: entry ``(r, i h + j)`` is the ``e_j``-coordinate of ``G[r, i]``."""
        return self.ctx.coords_qh.to_coords(self.rows).reshape(self.k, self.n * self.h)

    def fq_rank(self) -> int:
        return linalg.rank(self.Fq, self.expanded())

    def codeword(self, v) -> np.ndarray:
        """``v G`` for ``v`` in F_q^k (batched over leading axes)."""
        v = np.asarray(v, dtype=np.int64)
        if v.shape[-1] != self.k:
            raise DimensionMismatch(f"message length {v.shape[-1]} != k = {self.k}")
        return span_words(self.Fqh, self.rows, self.ctx.emb_q_qh.table, v)

    def codewords(self, budget: int | None = 2**20) -> np.ndarray:
        """All ``q^k`` codewords, in lexicographic order of the message."""
        check_budget("codeword table", self.q**self.k, budget)
        return self.codeword(all_vectors(self.q, self.k))

    def min_distance(self, budget: int | None = None, jobs: int = 1) -> int:
        return self.min_distance_witness(budget, jobs)[0]

    def min_distance_witness(self, budget: int | None = None, jobs: int = 1):
        return min_weight(self.Fqh, self.rows, self.ctx.emb_q_qh.table, budget, jobs)

    def weight_distribution(self, budget: int | None = None) -> np.ndarray:
        return weight_distribution(self.Fqh, self.rows, self.ctx.emb_q_qh.table, budget)

    def params(self, lower_bound: int | None = None, budget: int | None = None, jobs: int = 1) -> AdditiveParams:
        return AdditiveParams(self.n, self.k, self.h, self.q, self.min_distance(budget, jobs), lower_bound)

    def permute_columns(self, perm) -> AdditiveCode:
        return AdditiveCode(self.q, self.h, self.rows[:, list(perm)], self.ctx)

    def scale_column(self, i: int, c: int) -> AdditiveCode:
        rows = self.rows.copy()
        rows[:, i] = self.Fqh.mul(rows[:, i], c)
        return AdditiveCode(self.q, self.h, rows, self.ctx)

    def to_json(self) -> dict:
        return {
            "q": self.Fq.to_json(),
            "h": self.h,
            "k": self.k,
            "n": self.n,
            "rows": self.rows.tolist(),
        }

    @staticmethod
    def from_json(obj: dict) -> AdditiveCode:
        Fq = FieldSpec.from_json(obj["q"])
        rows = np.array(obj["rows"], dtype=np.int64)
        if rows.shape != (obj["k"], obj["n"]):
            raise DimensionMismatch(f"rows have shape {rows.shape}, header says {obj['k']}x{obj['n']}")
        return AdditiveCode(Fq.order, int(obj["h"]), rows)

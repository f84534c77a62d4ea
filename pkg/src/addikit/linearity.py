"""Certificates that an additive code is not equivalent to a linear one.

An additive ``[n, k/h, d]_q^h`` code is equivalent to a linear code over
F_{q^h} exactly when its column subspaces lie in a Desarguesian spread, and in
that case every union of members spans an F_q-space whose dimension is a
multiple of ``h``.  A set of members whose union has rank not divisible by
``h`` therefore certifies non-linearity.  Failing to find one is
inconclusive: it does not prove the code linear.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from addikit import linalg
from addikit.config import check_budget
from addikit.errors import IndexOutOfRange, InvalidParams
from addikit.field import FieldSpec


@dataclass(frozen=True)
class SubspaceFamily:
    """``generators[i]`` is an ``h x K`` F_q-matrix spanning member ``i``."""

    field: FieldSpec
    h: int
    generators: np.ndarray
    s: int | None = None
    t: int | None = None

    def __len__(self) -> int:
        return self.generators.shape[0]

    @staticmethod
    def from_norm_trace(family) -> SubspaceFamily:
        p = family.params
        return SubspaceFamily(family.ctx.Fq, p.h, family.generators, p.s, p.t)


def spread_family(ctx, rows) -> SubspaceFamily:
    """Members ``{lambda c : lambda in F_{q^h}}`` for the columns ``c`` of a linear code over F_{q^h}.

    Each column spans the F_q-space ``<e_1 c, ..., e_h c>``; these lie in a
    Desarguesian spread, so this family never admits a witness.
    """
    Fqh = ctx.Fqh
    rows = np.asarray(rows, dtype=np.int64)
    cols = rows.T  # (n, k')
    scaled = Fqh.mul(ctx.e_basis[None, :, None], cols[:, None, :])  # (n, h, k')
    gens = ctx.coords_qh.to_coords(scaled).reshape(cols.shape[0], ctx.h, -1)
    return SubspaceFamily(ctx.Fq, ctx.h, gens)


def divisibility_precheck(s: int, t: int, h: int) -> bool:
    """Whether ``s(t+1) = -1 (mod h)``, i.e. ``(st + s + 1)/h`` is an integer.

    ``False`` on its own certifies non-linearity.
    """
    if h < 1:
        raise InvalidParams(f"h must be positive, got {h}")
    return (s * (t + 1) + 1) % h == 0


def union_rank(family: SubspaceFamily, indices) -> int:
    idx = list(indices)
    for i in idx:
        if not 0 <= i < len(family):
            raise IndexOutOfRange(f"member {i} out of range [0, {len(family)})")
    if not idx:
        return 0
    stacked = family.generators[idx].reshape(-1, family.generators.shape[2])
    return linalg.rank(family.field, stacked)


@dataclass(frozen=True)
class NonlinearityCertificate:
    verdict: str  # "nonlinear" or "inconclusive"
    witness: tuple[int, ...]
    rank: int | None
    h: int
    reason: str
    subsets_checked: int = 0
    params: dict | None = None

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": list(self.witness),
            "rank": self.rank,
            "h": self.h,
            "subsets_checked": self.subsets_checked,
        }


def certify_nonlinear(
    family: SubspaceFamily,
    h: int | None = None,
    max_m: int = 3,
    budget: int | None = None,
) -> NonlinearityCertificate:
    """Look for members whose union rank is not a multiple of ``h``.

    The whole-family rank is checked first (the dimension test); then subsets
    of size ``2..max_m`` are scanned lexicographically, stopping at the first
    witness.
    """
    h = family.h if h is None else h
    if max_m < 2:
        raise InvalidParams(f"max_m must be >= 2, got {max_m}")
    n = len(family)
    params = None
    if family.s is not None:
        params = {"q": family.field.order, "s": family.s, "t": family.t, "h": h}
    if h == 1:
        return NonlinearityCertificate("inconclusive", (), None, h, "h=1: the code is linear", 0, params)
    total = union_rank(family, range(n))
    if total % h:
        return NonlinearityCertificate(
            "nonlinear", tuple(range(n)), total, h, "dimension", 0, params
        )
    check_budget("subset search", sum(comb(n, m) for m in range(2, max_m + 1)), budget)
    checked = 0
    for m in range(2, max_m + 1):
        for subset in itertools.combinations(range(n), m):
            checked += 1
            r = union_rank(family, subset)
            if r % h:
                return NonlinearityCertificate("nonlinear", subset, r, h, "subset-rank", checked, params)
    return NonlinearityCertificate("inconclusive", (), None, h, "no-witness", checked, params)


def verify_certificate(family: SubspaceFamily, cert: NonlinearityCertificate) -> bool:
    """Recompute the witness rank independently of the search."""
    if cert.verdict != "nonlinear":
        return False
    r = union_rank(family, cert.witness)
    return r == cert.rank and r % cert.h != 0

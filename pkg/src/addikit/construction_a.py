"""Additive codes from a linear code and a partial semifield.

A partial semifield is a list ``A_1, ..., A_h`` of ``k x k`` matrices over
F_q such that every nonzero F_q-combination ``sum lambda_j A_j`` is
nonsingular.  Given a linear ``[n, k, d]_q`` code with generator columns
``x_1, ..., x_n``, the matrix whose ``i``-th column is
``sum_j (A_j x_i) e_j`` generates an additive ``[n, k/h, >= d_h]_q^h`` code,
because coordinate ``i`` of ``v G_add`` vanishes exactly when ``x_i`` lies in
the codimension-``h`` space ``<v A_1, ..., v A_h>^perp``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from addikit import linalg
from addikit.additive_code import AdditiveCode
from addikit.bounds import ghw_lower_bound
from addikit.enumeration import projective_vectors
from addikit.errors import (
    BudgetExceeded,
    DependentRows,
    DimensionMismatch,
    InternalInconsistency,
    InvalidParams,
    SingularMatrix,
)
from addikit.field import FieldSpec, gf
from addikit.linear_code import LinearCode
from addikit.tower import Coordinates, TowerContext, canonical_embedding


@dataclass(frozen=True)
class SemifieldCheck:
    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _combination(F: FieldSpec, matrices: np.ndarray, lam) -> np.ndarray:
    out = np.zeros(matrices.shape[1:], dtype=np.int64)
    for c, A in zip(lam, matrices):
        if c:
            out = F.add(out, F.mul(c, A))
    return out


def verify_partial_semifield(F: FieldSpec, matrices) -> SemifieldCheck:
    """Check every projective combination class for nonsingularity.

    Returns a falsy result carrying the first singular combination ``lambda``
    (lexicographic over representatives with leading coefficient 1).
    """
    matrices = np.asarray(matrices, dtype=np.int64)
    if matrices.ndim != 3 or matrices.shape[1] != matrices.shape[2]:
        raise DimensionMismatch(f"expected h square matrices, got shape {matrices.shape}")
    h, k, _ = matrices.shape
    if h > k:
        raise DimensionMismatch(f"h = {h} exceeds k = {k}")
    for lam in projective_vectors(F.order, h):
        if not linalg.is_nonsingular(F, _combination(F, matrices, lam)):
            return SemifieldCheck(False, lam)
    return SemifieldCheck(True)


class PartialSemifield:
    """A verified partial semifield ``A_1, ..., A_h`` over F_q."""

    def __init__(self, field: FieldSpec, matrices) -> None:
        matrices = np.array(matrices, dtype=np.int64)
        check = verify_partial_semifield(field, matrices)
        if not check:
            raise SingularMatrix(f"combination {check.witness} is singular")
        matrices.setflags(write=False)
        self.field = field
        self.matrices = matrices

    @property
    def h(self) -> int:
        return self.matrices.shape[0]

    @property
    def k(self) -> int:
        return self.matrices.shape[1]

    @property
    def q(self) -> int:
        return self.field.order

    def to_json(self) -> dict:
        return {"q": self.field.to_json(), "k": self.k, "h": self.h, "matrices": self.matrices.tolist()}

    @staticmethod
    def from_json(obj: dict) -> PartialSemifield:
        F = FieldSpec.from_json(obj["q"])
        M = np.array(obj["matrices"], dtype=np.int64)
        if M.shape != (obj["h"], obj["k"], obj["k"]):
            raise DimensionMismatch(f"matrices have shape {M.shape}")
        return PartialSemifield(F, M)


def multiplication_matrix(coords: Coordinates, b: int) -> np.ndarray:
    """Matrix of ``y -> b y`` on F_{q^k}; column ``c`` holds the coordinates of ``b * basis_c``."""
    L = coords.emb.L
    return coords.to_coords(L.mul(b, coords.basis)).T.copy()


def desarguesian_partial_semifield(q: int, k: int, h: int) -> PartialSemifield:
    """Multiplication by ``1, g, ..., g^(h-1)`` in F_{q^k}, as F_q-matrices."""
    if not 1 <= h <= k:
        raise InvalidParams(f"need 1 <= h <= k, got h={h}, k={k}")
    Fq = gf(q)
    Fqk = TowerContext(q, s=k).Fqs
    coords = Coordinates(canonical_embedding(Fq, Fqk))
    mats = [multiplication_matrix(coords, int(b)) for b in coords.basis[:h]]
    return PartialSemifield(Fq, mats)


@dataclass(frozen=True)
class ConstructionAResult:
    code: AdditiveCode
    source: LinearCode
    semifield: PartialSemifield
    guaranteed_d: int | None
    bound_kind: str  # "exact-ghw", "griesmer-ghw" or "none"
    actual_d: int | None = None
    basis_change: np.ndarray | None = None

    @property
    def bound_met(self) -> bool | None:
        if self.actual_d is None or self.guaranteed_d is None:
            return None
        return self.actual_d >= self.guaranteed_d

    def report(self) -> dict:
        return {
            "n": self.code.n,
            "k": self.code.k,
            "h": self.code.h,
            "dim": _dim(self.code),
            "d": self.actual_d,
            "q": self.code.q,
            "lower_bound": self.guaranteed_d,
            "bound": self.bound_kind,
            "bound_met": self.bound_met,
        }


def _dim(code: AdditiveCode) -> str:
    from fractions import Fraction

    f = Fraction(code.k, code.h)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def check_basis(ctx: TowerContext, basis) -> np.ndarray:
    """Validate ``h`` elements of F_{q^h} as an F_q-basis."""
    basis = np.asarray(basis, dtype=np.int64).reshape(-1)
    if basis.shape[0] != ctx.h:
        raise DimensionMismatch(f"basis has {basis.shape[0]} elements, h = {ctx.h}")
    if basis.min(initial=0) < 0 or basis.max(initial=0) >= ctx.Fqh.order:
        raise InvalidParams(f"basis entries must be reps in [0, {ctx.Fqh.order})")
    if linalg.rank(ctx.Fq, ctx.coords_qh.to_coords(basis)) < ctx.h:
        raise DependentRows(f"basis {basis.tolist()} is not F_q-independent")
    return basis


def additive_generator(C: LinearCode, A: PartialSemifield, ctx: TowerContext, basis=None) -> np.ndarray:
    """``G_add``: column ``i`` is ``sum_j (A_j x_i) e_j``.

    ``basis`` replaces the default polynomial basis ``e_j = x^(j-1)``.
    """
    F = C.field
    Y = np.stack([linalg.matmul(F, Aj, C.G) for Aj in A.matrices], axis=-1)  # (k, n, h)
    if basis is None:
        return ctx.coords_qh.from_coords(Y)
    basis = check_basis(ctx, basis)
    Fqh = ctx.Fqh
    up = ctx.emb_q_qh.table[Y]
    out = np.zeros(Y.shape[:2], dtype=np.int64)
    for j in range(ctx.h):
        out = Fqh.add(out, Fqh.mul(up[..., j], int(basis[j])))
    return out


def construct_a(
    C: LinearCode,
    A: PartialSemifield,
    ctx: TowerContext | None = None,
    budget: int | None = None,
    verify: bool = True,
    jobs: int = 1,
    basis=None,
) -> ConstructionAResult:
    """Build the additive code and, within budget, certify its distance.

    ``guaranteed_d`` is the exact ``d_h(C)`` when the subspace enumeration
    fits the budget, otherwise the ceiling-sum lower bound from ``d(C)``.

    Raises:
        InternalInconsistency: the brute-forced distance is below the guarantee.
    """
    if A.field != C.field:
        raise DimensionMismatch(f"semifield over {A.field!r}, code over {C.field!r}")
    if A.k != C.k:
        raise DimensionMismatch(f"semifield has k = {A.k}, code has k = {C.k}")
    ctx = ctx if ctx is not None else TowerContext(C.q, h=A.h)
    if ctx.h != A.h or ctx.q != C.q:
        raise DimensionMismatch("tower context does not match (q, h)")
    C.columns_as_points()  # rejects zero columns

    code = AdditiveCode(C.q, A.h, additive_generator(C, A, ctx, basis), ctx)

    try:
        guaranteed, kind = C.ghw(A.h, budget), "exact-ghw"
    except BudgetExceeded:
        try:
            guaranteed, kind = ghw_lower_bound(A.h, C.min_distance(budget), C.q), "griesmer-ghw"
        except BudgetExceeded:
            guaranteed, kind = None, "none"

    actual = None
    if verify:
        try:
            actual = code.min_distance(budget, jobs)
        except BudgetExceeded:
            actual = None
    if actual is not None and guaranteed is not None and actual < guaranteed:
        raise InternalInconsistency(f"brute-forced d = {actual} below guaranteed {guaranteed}")
    return ConstructionAResult(code, C, A, guaranteed, kind, actual)


def construct_a_with_basis_change(
    C: LinearCode,
    A: PartialSemifield,
    B,
    ctx: TowerContext | None = None,
    budget: int | None = None,
    jobs: int = 1,
    basis=None,
    verify: bool = True,
) -> ConstructionAResult:
    """Construction A applied to the generator ``B G``.

    ``d_h`` is an invariant of the code, so the guarantee is unchanged; the
    additive code itself, and its actual distance, may differ.
    """
    B = np.asarray(B, dtype=np.int64)
    res = construct_a(C.with_generator(B), A, ctx, budget, verify=verify, jobs=jobs, basis=basis)
    return ConstructionAResult(
        res.code, C, A, res.guaranteed_d, res.bound_kind, res.actual_d, B
    )


def coordinate_subspace(A: PartialSemifield, v) -> np.ndarray:
    """Rows ``v A_1, ..., v A_h`` spanning the space ``V`` for message ``v``."""
    return np.stack([linalg.vecmat(A.field, v, Aj) for Aj in A.matrices])


def weight_identity_sides(res: ConstructionAResult, v) -> tuple[int, int]:
    """``(weight(v G_add), n - |V^perp cap X|)`` computed along separate paths.

    The left side runs over F_{q^h}; the right side is F_q linear algebra on
    the columns of the generator that was actually used.
    """
    from addikit.linear_code import weight

    lhs = weight(res.code.codeword(v))
    G = res.source.G if res.basis_change is None else linalg.matmul(
        res.source.field, res.basis_change, res.source.G
    )
    V = coordinate_subspace(res.semifield, v)
    zero = ~linalg.matmul(res.source.field, V, G).any(axis=0)
    return lhs, res.code.n - int(zero.sum())


def load_semifield(path: str) -> PartialSemifield:
    return PartialSemifield.from_json(json.loads(Path(path).read_text()))

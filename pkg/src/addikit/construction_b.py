"""Small-dimension additive codes from the norm and trace of a field tower.

For ``h <= s`` and ``t >= 2`` pick F_q-independent ``lambda_1..lambda_h`` in
F_{q^s}.  Each nonzero ``x`` in F_{q^st} contributes the rank-``h`` F_q-space

    < (1, lambda_j N(x), lambda_j x) : j = 1..h >

of F_q x F_{q^s} x F_{q^st}, where ``N`` is the norm to F_{q^s}.  The column
for ``x`` of the generator over F_{q^h} is ``sum_j e_j g_j(x)`` with
``g_j(x)`` the F_q-coordinates of the ``j``-th generator.  The result is an
additive ``[q^st - 1, (st + s + 1)/h, d]_q^h`` code with
``d >= q^st - 1 - ((q^st - 1)/(q^s - 1)) q^(s - h)``.

Hyperplanes are described either by F_q-coordinate functionals (the
generator's own dot product) or by ``(a1, a2, a3)`` under the trace form
``a1 x1 + tr(a2 x2) + Tr(a3 x3)``; :func:`trace_form_functional` converts the
latter into the former.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from addikit import linalg
from addikit.additive_code import AdditiveCode, AdditiveParams
from addikit.bounds import construction_b_lower_bound
from addikit.errors import (
    BudgetExceeded,
    DependentLambdas,
    DependentRows,
    InternalInconsistency,
    InvalidParams,
    RankDeficientCode,
    RankDeficientMember,
    SingularMoore,
)
from addikit.tower import TowerContext


def moore_matrix(ctx: TowerContext, lambdas) -> np.ndarray:
    """``Lambda[i, j] = lambda_j^(q^(s-1-i))`` for ``i = 0..h-1``."""
    F = ctx.Fqs
    lam = np.asarray(lambdas, dtype=np.int64)
    return np.stack([F.pow(lam, ctx.q ** (ctx.s - 1 - i)) for i in range(len(lam))])


def choose_lambdas(ctx: TowerContext, lambdas=None) -> np.ndarray:
    """Validate user ``lambdas`` or default to ``1, g, ..., g^(h-1)`` in F_{q^s}.

    The default is checked for F_q-independence, which keeps the affine span
    away from zero; both paths check the Moore matrix directly.

    Raises:
        DependentLambdas: zero entries, or a dependent default.
        SingularMoore: the Moore matrix is singular; ``witness`` is a
            nullspace vector.
    """
    h, s = ctx.h, ctx.s
    if h > s:
        raise InvalidParams(f"need h <= s, got h={h}, s={s}")
    if lambdas is None:
        lam = ctx.coords_qs.basis[:h].copy()
        if linalg.rank(ctx.Fq, ctx.coords_qs.to_coords(lam)) != h:
            raise DependentLambdas("default lambdas are F_q-dependent")
    else:
        lam = np.asarray(lambdas, dtype=np.int64).reshape(-1)
        if lam.shape[0] != h:
            raise InvalidParams(f"expected {h} lambdas, got {lam.shape[0]}")
        if (lam <= 0).any() or (lam >= ctx.Fqs.order).any():
            raise DependentLambdas("lambdas must be nonzero elements of F_{q^s}")
        if len(set(lam.tolist())) < h:
            raise DependentLambdas("lambdas repeat")
    M = moore_matrix(ctx, lam)
    if not linalg.is_nonsingular(ctx.Fqs, M):
        ns = linalg.nullspace(ctx.Fqs, M)
        raise SingularMoore("Moore matrix of lambdas is singular", witness=ns[0].tolist())
    return lam


def solve_thetas(ctx: TowerContext, lambdas) -> np.ndarray:
    """Canonical ``theta`` killing the first ``h - 1`` Moore rows.

    Solves ``sum_j theta_j lambda_j^(q^(s-1-i)) = 0`` for ``i = 0..h-2`` over
    F_{q^s}, normalises the first nonzero coordinate to 1, and checks
    ``sum_j theta_j lambda_j^(q^(s-h)) != 0``.
    """
    F = ctx.Fqs
    M = moore_matrix(ctx, lambdas)
    h = M.shape[0]
    if not linalg.is_nonsingular(F, M):
        raise SingularMoore("Moore matrix of lambdas is singular")
    if h == 1:
        theta = np.ones(1, dtype=np.int64)
    else:
        ns = linalg.nullspace(F, M[: h - 1])
        if ns.shape[0] != 1:
            raise InternalInconsistency(f"theta nullspace has dimension {ns.shape[0]}, expected 1")
        theta = ns[0]
        lead = int(theta[np.nonzero(theta)[0][0]])
        theta = F.mul(F.inv(lead), theta)
    side = linalg.vecmat(F, theta, M[h - 1][:, None])[0]
    if side == 0:
        raise InternalInconsistency("theta also kills the last Moore row")
    return theta


@dataclass(frozen=True)
class ConstructionBParams:
    q: int
    s: int
    t: int
    h: int
    lambdas: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.h > self.s:
            raise InvalidParams(f"need h <= s, got h={self.h}, s={self.s}")
        if self.t < 2:
            raise InvalidParams(f"need t >= 2, got t={self.t}")
        if self.h < 1 or self.s < 1:
            raise InvalidParams("s and h must be positive")

    @property
    def n(self) -> int:
        return self.q ** (self.s * self.t) - 1

    @property
    def k(self) -> int:
        return self.s * self.t + self.s + 1

    @property
    def lower_bound(self) -> int:
        return construction_b_lower_bound(self.q, self.s, self.t, self.h)

    @property
    def max_zero_count(self) -> int:
        """``((q^st - 1)/(q^s - 1)) q^(s-h)``: most zeros any nonzero codeword may have."""
        return (self.n // (self.q**self.s - 1)) * self.q ** (self.s - self.h)

    def context(self) -> TowerContext:
        return TowerContext(self.q, self.s, self.t, self.h)


@dataclass
class NormTraceSubspaceFamily:
    """The ``q^st - 1`` generator blocks, F_q-coordinatised.

    ``generators[i, j]`` is the length-``1 + s + st`` coordinate vector of
    ``(1, lambda_j N(x_i), lambda_j x_i)`` where ``x_i = g^i``.
    """

    params: ConstructionBParams
    ctx: TowerContext
    lambdas: np.ndarray
    xs: np.ndarray
    norms: np.ndarray
    generators: np.ndarray

    @property
    def h(self) -> int:
        return self.params.h

    @property
    def ambient_dim(self) -> int:
        return self.generators.shape[2]

    def __len__(self) -> int:
        return self.generators.shape[0]

    def member(self, i: int) -> np.ndarray:
        return self.generators[i]


def build_family(params: ConstructionBParams, ctx: TowerContext | None = None) -> NormTraceSubspaceFamily:
    ctx = ctx if ctx is not None else params.context()
    lam = choose_lambdas(ctx, params.lambdas)
    Fqs, Fqst = ctx.Fqs, ctx.Fqst
    xs = Fqst.nonzero_in_generator_order()
    norms = ctx.N(xs)
    lam_up = ctx.emb_qs_qst(lam)
    first = np.ones((len(xs), ctx.h, 1), dtype=np.int64)
    mid = ctx.coords_qs.to_coords(Fqs.mul(lam[None, :], norms[:, None]))
    last = ctx.coords_qst.to_coords(Fqst.mul(lam_up[None, :], xs[:, None]))
    gens = np.concatenate([first, mid, last], axis=2)
    for i in range(len(xs)):
        if linalg.rank(ctx.Fq, gens[i]) != ctx.h:
            raise RankDeficientMember(f"member for x = {int(xs[i])} has rank < {ctx.h}", x=int(xs[i]))
    return NormTraceSubspaceFamily(params, ctx, lam, xs, norms, gens)


@dataclass
class ConstructionBResult:
    params: ConstructionBParams
    family: NormTraceSubspaceFamily
    code: AdditiveCode
    thetas: np.ndarray
    exact_d: int | None = None

    @cached_property
    def additive_params(self) -> AdditiveParams | None:
        if self.exact_d is None:
            return None
        return AdditiveParams(self.code.n, self.code.k, self.code.h, self.code.q, self.exact_d, self.params.lower_bound)

    def report(self) -> dict:
        p = self.params
        out = {
            "q": p.q,
            "s": p.s,
            "t": p.t,
            "h": p.h,
            "n": self.code.n,
            "k": self.code.k,
            "dim": AdditiveParams(self.code.n, self.code.k, p.h, p.q, 1).dim_display,
            "bound_d": p.lower_bound,
            "family_size": len(self.family),
            "lambdas": self.family.lambdas.tolist(),
            "thetas": self.thetas.tolist(),
        }
        if self.exact_d is not None:
            out["exact_d"] = self.exact_d
            out["bound_met"] = self.exact_d >= p.lower_bound
        return out


def build_code_b(
    params: ConstructionBParams,
    ctx: TowerContext | None = None,
    budget: int | None = None,
    verify: bool = True,
    jobs: int = 1,
) -> ConstructionBResult:
    """Build the generator over F_{q^h}, check its F_q-rank, and brute-force ``d``.

    Raises:
        RankDeficientCode: the rows are F_q-dependent (the rank claim fails).
        InternalInconsistency: the brute-forced ``d`` is below the bound.
    """
    ctx = ctx if ctx is not None else params.context()
    family = build_family(params, ctx)
    thetas = solve_thetas(ctx, family.lambdas)
    # column for x: sum_j e_j g_j(x); row r of the generator picks coordinate r
    rows = ctx.coords_qh.from_coords(np.transpose(family.generators, (2, 0, 1)))
    try:
        code = AdditiveCode(params.q, params.h, rows, ctx)
    except DependentRows as exc:
        raise RankDeficientCode(f"F_q-rank below k = {params.k}: {exc}") from exc
    exact = None
    if verify:
        try:
            exact = code.min_distance(budget, jobs)
        except BudgetExceeded:
            exact = None
    if exact is not None and exact < params.lower_bound:
        raise InternalInconsistency(f"brute-forced d = {exact} below bound {params.lower_bound}")
    return ConstructionBResult(params, family, code, thetas, exact)


def split_functional(ctx: TowerContext, a) -> tuple[int, int, int]:
    """Read ``a`` in F_q^k as ``(a1, a2, a3)`` in F_q x F_{q^s} x F_{q^st}."""
    a = np.asarray(a, dtype=np.int64)
    s = ctx.s
    a1 = int(a[0])
    a2 = int(ctx.coords_qs.from_coords(a[1 : 1 + s]))
    a3 = int(ctx.coords_qst.from_coords(a[1 + s :]))
    return a1, a2, a3


def hyperplane_zero_count(family: NormTraceSubspaceFamily, a) -> int:
    """Number of nonzero ``x`` with ``a1 + tr(a2 lambda_j N(x)) + Tr(a3 lambda_j x) = 0`` for all ``j``.

    ``a`` is a vector of F_q^k read through :func:`split_functional`; the
    forms are evaluated directly with field traces, not via the generator.
    """
    ctx = family.ctx
    Fq, Fqs, Fqst = ctx.Fq, ctx.Fqs, ctx.Fqst
    a1, a2, a3 = split_functional(ctx, a)
    lam = family.lambdas
    lam_up = ctx.emb_qs_qst(lam)
    xs, norms = family.xs, family.norms
    t2 = ctx.tr(Fqs.mul(Fqs.mul(a2, lam)[None, :], norms[:, None]))
    t3 = ctx.Tr(Fqst.mul(Fqst.mul(a3, lam_up)[None, :], xs[:, None]))
    vals = Fq.add(Fq.add(np.full_like(t2, a1), t2), t3)
    return int((~vals.any(axis=1)).sum())


def trace_form_functional(ctx: TowerContext, a) -> np.ndarray:
    """Coordinate functional equal to ``(a1, a2, a3)`` under the trace form.

    ``Tr(a3 y) = sum_i y_i Tr(a3 b_i)`` for ``y = sum_i y_i b_i``, so the
    functional has entries ``a1``, ``tr(a2 b_i)``, ``Tr(a3 b'_i)``.
    """
    a1, a2, a3 = split_functional(ctx, a)
    w2 = ctx.tr(ctx.Fqs.mul(a2, ctx.coords_qs.basis))
    w3 = ctx.Tr(ctx.Fqst.mul(a3, ctx.coords_qst.basis))
    return np.concatenate([[a1], w2, w3]).astype(np.int64)

from __future__ import annotations

import numpy as np
import pytest

from addikit import errors, linalg
from addikit.bounds import construction_b_lower_bound
from addikit.construction_b import (
    ConstructionBParams,
    build_code_b,
    build_family,
    choose_lambdas,
    hyperplane_zero_count,
    moore_matrix,
    solve_thetas,
    split_functional,
    trace_form_functional,
)
from addikit.enumeration import all_vectors
from addikit.tower import TowerContext

# (q, s, t, h) -> (n, k, exact d); d frozen from exhaustive codeword enumeration
GRID = {
    (2, 2, 2, 1): (15, 7, 5),
    (2, 2, 2, 2): (15, 7, 10),
    (2, 3, 2, 2): (63, 10, 45),
    (2, 3, 2, 3): (63, 10, 54),
    (3, 2, 2, 2): (80, 7, 70),
}


def test_bound_formula_values():
    assert construction_b_lower_bound(2, 3, 2, 2) == 45
    assert construction_b_lower_bound(2, 2, 2, 2) == 10
    assert construction_b_lower_bound(3, 2, 2, 2) == 70
    assert construction_b_lower_bound(2, 2, 2, 1) == 5


def test_param_validation():
    with pytest.raises(errors.InvalidParams):
        ConstructionBParams(2, 2, 2, 3)
    with pytest.raises(errors.InvalidParams):
        ConstructionBParams(2, 3, 1, 2)
    P = ConstructionBParams(2, 3, 2, 2)
    assert (P.n, P.k, P.lower_bound, P.max_zero_count) == (63, 10, 45, 18)


def test_lambdas_and_thetas_example():
    ctx = TowerContext(2, s=3, t=2, h=2)
    lam = choose_lambdas(ctx)
    assert lam.tolist() == [1, 2]  # 1, x
    F = ctx.Fqs
    M = moore_matrix(ctx, lam)
    assert M.tolist() == [[1, F.pow(2, 4)], [1, F.pow(2, 2)]]
    assert linalg.det(F, M) != 0
    theta = solve_thetas(ctx, lam)
    assert theta.tolist() == [1, 5]  # theta_2 = x^-4 = x^3 = x^2 + 1
    assert F.add(theta[0], F.mul(theta[1], F.pow(2, 4))) == 0
    assert F.add(theta[0], F.mul(theta[1], F.pow(2, 2))) != 0


def test_lambda_errors():
    ctx = TowerContext(2, s=3, t=2, h=2)
    with pytest.raises(errors.DependentLambdas):
        choose_lambdas(ctx, [1, 1])
    with pytest.raises(errors.DependentLambdas):
        choose_lambdas(ctx, [0, 1])
    with pytest.raises(errors.InvalidParams):
        choose_lambdas(ctx, [1])
    # over F_2 any two distinct nonzero elements are independent
    assert choose_lambdas(TowerContext(2, s=2, t=2, h=2), [2, 3]).tolist() == [2, 3]


def test_singular_moore_with_witness():
    # over F_9 with q = 3: lambda_2 = 2 * lambda_1 is F_3-dependent, Moore matrix singular
    ctx = TowerContext(3, s=2, t=2, h=2)
    with pytest.raises(errors.SingularMoore) as exc:
        choose_lambdas(ctx, [1, 2])
    w = np.array(exc.value.witness)
    M = moore_matrix(ctx, [1, 2])
    assert w.any() and not linalg.matvec(ctx.Fqs, M, w).any()


@pytest.mark.parametrize("q,s,h", [(2, 2, 1), (2, 3, 3), (2, 4, 4), (3, 2, 2), (2, 4, 2), (3, 3, 3)])
def test_theta_cancellation(q, s, h):
    ctx = TowerContext(q, s=s, t=2, h=h)
    F = ctx.Fqs
    lam = choose_lambdas(ctx)
    theta = solve_thetas(ctx, lam)
    assert theta[np.nonzero(theta)[0][0]] == 1
    for i in range(h - 1):
        terms = F.mul(theta, F.pow(lam, q ** (s - 1 - i)))
        assert _sum(F, terms) == 0
    assert _sum(F, F.mul(theta, F.pow(lam, q ** (s - h)))) != 0
    if h == s:
        assert linalg.nullspace(F, moore_matrix(ctx, lam)[: h - 1]).shape[0] == 1


def _sum(F, xs):
    out = 0
    for x in np.asarray(xs).tolist():
        out = F.add(out, x)
    return out


@pytest.mark.parametrize("P", list(GRID))
def test_family(P):
    params = ConstructionBParams(*P)
    fam = build_family(params)
    ctx = fam.ctx
    q, s, t, h = P
    assert len(fam) == q ** (s * t) - 1
    assert fam.ambient_dim == s * t + s + 1
    assert fam.xs.tolist() == ctx.Fqst.exp_table[: len(fam)].tolist()
    assert (fam.generators[:, :, 0] == 1).all()
    for i in range(len(fam)):
        assert linalg.rank(ctx.Fq, fam.member(i)) == h
    # norms via x^((q^st - 1)/(q^s - 1)), pulled back into F_{q^s}
    e = (q ** (s * t) - 1) // (q**s - 1)
    assert (ctx.emb_qs_qst.preimage(ctx.Fqst.pow(fam.xs, e)) == fam.norms).all()
    # decode the coordinates back into field elements
    mid = ctx.coords_qs.from_coords(fam.generators[:, :, 1 : 1 + s])
    last = ctx.coords_qst.from_coords(fam.generators[:, :, 1 + s :])
    assert (mid == ctx.Fqs.mul(fam.lambdas[None, :], fam.norms[:, None])).all()
    assert (last == ctx.Fqst.mul(ctx.emb_qs_qst(fam.lambdas)[None, :], fam.xs[:, None])).all()


@pytest.mark.parametrize("P", list(GRID))
def test_code_parameters(P):
    n, k, d = GRID[P]
    res = build_code_b(ConstructionBParams(*P))
    assert (res.code.n, res.code.k, res.code.fq_rank()) == (n, k, k)
    assert res.exact_d == d
    assert d >= res.params.lower_bound
    rep = res.report()
    assert rep["bound_d"] == res.params.lower_bound and rep["family_size"] == n and rep["bound_met"]


def test_example_63_display():
    res = build_code_b(ConstructionBParams(2, 3, 2, 2))
    assert str(res.additive_params) == "[63, 5, 45]_2^2"
    assert res.report()["dim"] == "5"
    assert build_code_b(ConstructionBParams(2, 2, 2, 2)).report()["dim"] == "7/2"


def test_column_construction():
    res = build_code_b(ConstructionBParams(2, 3, 2, 2))
    fam, ctx = res.family, res.family.ctx
    Fqh = ctx.Fqh
    for i in range(len(fam)):
        col = np.zeros(fam.ambient_dim, dtype=np.int64)
        for j, e in enumerate(ctx.e_basis.tolist()):
            col = Fqh.add(col, Fqh.mul(e, ctx.emb_q_qh(fam.generators[i, j])))
        assert (res.code.rows[:, i] == col).all()


@pytest.mark.parametrize("P", [(2, 2, 2, 1), (2, 2, 2, 2), (2, 3, 2, 2), (2, 3, 2, 3), (3, 2, 2, 2)])
def test_duality_identity_exhaustive(P):
    res = build_code_b(ConstructionBParams(*P))
    fam, ctx = res.family, res.family.ctx
    A = all_vectors(P[0], res.code.k)[1:]
    W = np.array([trace_form_functional(ctx, a) for a in A])
    # the trace form is nondegenerate: a -> functional is a bijection
    assert len({w.tobytes() for w in W}) == len(A) and W.any(axis=1).all()
    weights = (res.code.codeword(W) != 0).sum(axis=1)
    zeros = np.array([hyperplane_zero_count(fam, a) for a in A])
    assert (weights == res.code.n - zeros).all()
    assert zeros.max() <= res.params.max_zero_count


def test_hyperplane_zero_examples():
    fam = build_family(ConstructionBParams(2, 2, 2, 2))
    a = np.zeros(7, dtype=np.int64)
    a[0] = 1
    assert hyperplane_zero_count(fam, a) == 0
    assert split_functional(fam.ctx, a) == (1, 0, 0)


def test_user_lambdas():
    res = build_code_b(ConstructionBParams(2, 3, 2, 2, lambdas=(3, 6)))
    assert res.family.lambdas.tolist() == [3, 6]
    assert res.exact_d >= 45


def test_budget_skips_verification():
    res = build_code_b(ConstructionBParams(2, 3, 2, 2), budget=100)
    assert res.exact_d is None and "exact_d" not in res.report()

from __future__ import annotations

import itertools
import json

import numpy as np
import pytest

from addikit import errors, linalg
from addikit.bounds import ghw_lower_bound
from addikit.construction_a import (
    PartialSemifield,
    additive_generator,
    check_basis,
    construct_a,
    construct_a_with_basis_change,
    coordinate_subspace,
    desarguesian_partial_semifield,
    load_semifield,
    verify_partial_semifield,
    weight_identity_sides,
)
from addikit.enumeration import all_vectors
from addikit.field import gf
from addikit.linear_code import LinearCode, hamming74, identity_code, simplex73
from addikit.tower import TowerContext

TERNARY = LinearCode(gf(3), [[1, 0, 1, 1], [0, 1, 1, 2]])


def test_verify_examples():
    F2 = gf(2)
    assert verify_partial_semifield(F2, [np.eye(3, dtype=np.int64)])
    assert verify_partial_semifield(F2, [np.eye(2, dtype=np.int64), [[0, 1], [1, 1]]])
    bad = verify_partial_semifield(F2, [np.eye(2, dtype=np.int64)] * 2)
    assert not bad and bad.witness == (1, 1)
    with pytest.raises(errors.SingularMatrix):
        PartialSemifield(F2, [np.eye(2, dtype=np.int64)] * 2)
    with pytest.raises(errors.DimensionMismatch):
        verify_partial_semifield(F2, [np.eye(2, dtype=np.int64)] * 3)


def test_desarguesian_examples():
    A = desarguesian_partial_semifield(2, 2, 2)
    assert A.matrices.tolist() == [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]
    A = desarguesian_partial_semifield(2, 4, 2)
    assert (A.matrices[0] == np.eye(4)).all() and A.h == 2
    assert desarguesian_partial_semifield(3, 2, 1).matrices.tolist() == [[[1, 0], [0, 1]]]
    with pytest.raises(errors.InvalidParams):
        desarguesian_partial_semifield(2, 2, 3)


@pytest.mark.parametrize("q,k,h", [(2, 3, 2), (2, 4, 3), (3, 3, 2), (4, 2, 2), (2, 5, 5)])
def test_desarguesian_combinations_exhaustive(q, k, h):
    A = desarguesian_partial_semifield(q, k, h)
    F = A.field
    for lam in itertools.product(range(q), repeat=h):
        M = np.zeros((k, k), dtype=np.int64)
        for c, Aj in zip(lam, A.matrices):
            M = F.add(M, F.mul(c, Aj))
        assert linalg.is_nonsingular(F, M) == any(lam)


@pytest.mark.parametrize("q,k,h", [(2, 4, 2), (2, 3, 3), (3, 2, 2), (2, 5, 3)])
def test_coordinate_subspace_rank_is_h(q, k, h):
    A = desarguesian_partial_semifield(q, k, h)
    for v in all_vectors(q, k)[1:]:
        assert linalg.rank(A.field, coordinate_subspace(A, v)) == h


def test_hamming_example():
    # d_2(Hamming) = 5 by exhaustive subspace enumeration; brute-forced d frozen from a full run
    res = construct_a(hamming74(), desarguesian_partial_semifield(2, 4, 2))
    assert (res.code.n, res.code.k, res.code.h) == (7, 4, 2)
    assert res.guaranteed_d == 5 and res.bound_kind == "exact-ghw"
    assert res.actual_d == 5 and res.bound_met
    assert res.report()["dim"] == "2"


def test_simplex_example():
    res = construct_a(simplex73(), desarguesian_partial_semifield(2, 3, 2))
    assert res.guaranteed_d == 6
    assert res.actual_d >= 6
    assert res.report()["dim"] == "3/2"


@pytest.mark.parametrize("q,k,h", [(2, 3, 2), (3, 3, 2), (2, 4, 4)])
def test_identity_code(q, k, h):
    res = construct_a(identity_code(q, k), desarguesian_partial_semifield(q, k, h))
    assert res.guaranteed_d == h
    assert res.actual_d >= h


def test_weight_identity_exhaustive():
    cases = [
        (hamming74(), desarguesian_partial_semifield(2, 4, 2)),
        (simplex73(), desarguesian_partial_semifield(2, 3, 3)),
        (TERNARY, desarguesian_partial_semifield(3, 2, 2)),
    ]
    for C, A in cases:
        res = construct_a(C, A)
        for v in all_vectors(C.q, C.k):
            lhs, rhs = weight_identity_sides(res, v)
            assert lhs == rhs


def test_coordinate_zero_criterion():
    C, A = hamming74(), desarguesian_partial_semifield(2, 4, 2)
    res = construct_a(C, A)
    F = C.field
    for v in all_vectors(2, 4):
        word = res.code.codeword(v)
        for i in range(C.n):
            killed = all(linalg.vecmat(F, v, linalg.matvec(F, Aj, C.G[:, i])[:, None])[0] == 0 for Aj in A.matrices)
            assert (word[i] == 0) == killed


def test_basis_change():
    C, A = hamming74(), desarguesian_partial_semifield(2, 4, 2)
    base = construct_a(C, A)
    same = construct_a_with_basis_change(C, A, np.eye(4, dtype=np.int64))
    assert (same.code.rows == base.code.rows).all()
    perm = np.eye(4, dtype=np.int64)[[2, 0, 3, 1]]
    res = construct_a_with_basis_change(C, A, perm)
    assert res.guaranteed_d == 5 and res.actual_d >= 5
    rng = np.random.default_rng(7)
    done = 0
    while done < 5:
        B = rng.integers(0, 2, size=(4, 4))
        if not linalg.is_nonsingular(C.field, B):
            continue
        res = construct_a_with_basis_change(C, A, B)
        assert res.actual_d >= 5
        for v in all_vectors(2, 4):
            lhs, rhs = weight_identity_sides(res, v)
            assert lhs == rhs
        done += 1
    with pytest.raises(errors.SingularMatrix):
        construct_a_with_basis_change(C, A, np.zeros((4, 4), dtype=np.int64))


def test_alternative_basis():
    C, A = hamming74(), desarguesian_partial_semifield(2, 4, 2)
    ctx = TowerContext(2, h=2)
    default = additive_generator(C, A, ctx)
    assert (additive_generator(C, A, ctx, basis=[1, 2]) == default).all()
    res = construct_a(C, A, ctx, basis=[3, 1])
    assert res.actual_d >= 5
    with pytest.raises(errors.DependentRows):
        check_basis(ctx, [3, 3])
    with pytest.raises(errors.DimensionMismatch):
        check_basis(ctx, [1])


def test_budget_fallbacks():
    C, A = hamming74(), desarguesian_partial_semifield(2, 4, 2)
    res = construct_a(C, A, budget=20)  # 35 two-dim subspaces > 20 >= 16 messages
    assert res.bound_kind == "griesmer-ghw"
    assert res.guaranteed_d == ghw_lower_bound(2, 3, 2) == 5
    res = construct_a(C, A, budget=4, verify=True)
    assert res.bound_kind == "none" and res.actual_d is None and res.bound_met is None


def test_mismatch_errors():
    with pytest.raises(errors.DimensionMismatch):
        construct_a(hamming74(), desarguesian_partial_semifield(2, 3, 2))
    with pytest.raises(errors.DimensionMismatch):
        construct_a(TERNARY, desarguesian_partial_semifield(2, 2, 2))
    with pytest.raises(errors.ZeroColumn):
        construct_a(LinearCode(gf(2), [[1, 0, 1], [0, 0, 1]]), desarguesian_partial_semifield(2, 2, 2))


def test_semifield_json(tmp_path):
    A = desarguesian_partial_semifield(3, 3, 2)
    path = tmp_path / "a.json"
    path.write_text(json.dumps(A.to_json()))
    B = load_semifield(str(path))
    assert (B.matrices == A.matrices).all() and B.field == A.field

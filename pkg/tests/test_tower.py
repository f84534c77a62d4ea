from __future__ import annotations

import numpy as np
import pytest

import _oracle as oracle
from addikit import errors
from addikit.field import field_create, gf
from addikit.tower import (
    Coordinates,
    TowerContext,
    canonical_embedding,
    embed,
    norm,
    norm_reps,
    trace,
    trace_reps,
)

PAIRS = [(2, 1, 2), (2, 1, 4), (2, 2, 4), (2, 2, 6), (2, 3, 6), (3, 1, 2), (3, 1, 3), (5, 1, 2), (2, 1, 8), (2, 4, 8)]


@pytest.mark.parametrize("p,a,b", PAIRS)
def test_embedding_is_ring_homomorphism(p, a, b):
    K, L = field_create(p, a), field_create(p, b)
    emb = canonical_embedding(K, L)
    y = K.elements()
    P, Q = np.meshgrid(y, y, indexing="ij")
    assert (emb(K.add(P, Q)) == L.add(emb(P), emb(Q))).all()
    assert (emb(K.mul(P, Q)) == L.mul(emb(P), emb(Q))).all()
    assert len(set(emb.table.tolist())) == K.order
    # the image is exactly the fixed field of x -> x^|K|
    x = L.elements()
    fixed = np.nonzero(L.pow(x, K.order) == x)[0]
    assert sorted(emb.table.tolist()) == fixed.tolist()


@pytest.mark.parametrize("p,a,b", PAIRS)
def test_trace_norm_against_conjugate_sums(p, a, b):
    K, L = field_create(p, a), field_create(p, b)
    emb = canonical_embedding(K, L)
    N = oracle.NaiveField(p, b, L.modulus[:-1])
    deg = b // a
    x = L.elements()
    tr, nm = trace_reps(emb, x), norm_reps(emb, x)
    for v in range(L.order):
        conj = [N.pow(v, K.order**i) for i in range(deg)]
        s, pr = 0, 1
        for c in conj:
            s, pr = N.add(s, c), N.mul(pr, c)
        assert emb(int(tr[v])) == s
        assert emb(int(nm[v])) == pr


@pytest.mark.parametrize("p,a,b", PAIRS)
def test_trace_norm_fibres(p, a, b):
    K, L = field_create(p, a), field_create(p, b)
    emb = canonical_embedding(K, L)
    x = L.elements()
    assert (np.bincount(trace_reps(emb, x), minlength=K.order) == L.order // K.order).all()
    fib = np.bincount(norm_reps(emb, x[1:]), minlength=K.order)
    assert fib[0] == 0
    assert (fib[1:] == (L.order - 1) // (K.order - 1)).all()


@pytest.mark.parametrize("q,s,t", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3), (4, 2, 2)])
def test_transitivity(q, s, t):
    ctx = TowerContext(q, s, t)
    x = ctx.Fqst.elements()
    mid = trace_reps(ctx.emb_qs_qst, x)
    assert (ctx.Tr(x) == ctx.tr(mid)).all()
    full = norm_reps(ctx.emb_q_qst, x[1:])
    assert (full == norm_reps(ctx.emb_q_qs, ctx.N(x[1:]))).all()
    # composite embedding agrees with the direct canonical one
    direct = canonical_embedding(ctx.Fq, ctx.Fqst)
    assert sorted(direct.table.tolist()) == sorted(ctx.emb_q_qst.table.tolist())


def test_field_element_helpers():
    K, L = gf(4), gf(16)
    x = K(2)
    y = embed(x, L)
    assert y.field == L
    assert trace(y, K) == K(0)  # Tr(x) = 2x = 0 for x in the subfield, char 2
    assert norm(y, K) == x * x
    with pytest.raises(errors.ResultNotInSubfield):
        canonical_embedding(K, L).preimage(int(L.gen))
    with pytest.raises(errors.NotASubfield):
        canonical_embedding(gf(8), L)


@pytest.mark.parametrize("q,d", [(2, 2), (2, 3), (3, 2), (4, 2), (2, 6)])
def test_coordinates_roundtrip(q, d):
    K = gf(q)
    p, m = K.p, K.m
    L = field_create(p, m * d)
    co = Coordinates(canonical_embedding(K, L))
    x = L.elements()
    assert (co.from_coords(co.to_coords(x)) == x).all()
    assert co.basis[0] == 1
    assert co.basis.tolist() == L.exp_table[:d].tolist()


def test_context_fields():
    ctx = TowerContext(2, s=3, t=2, h=2)
    assert (ctx.Fq.order, ctx.Fqs.order, ctx.Fqst.order, ctx.Fqh.order) == (2, 8, 64, 4)
    assert ctx.e_basis.tolist() == [1, 2]
    with pytest.raises(errors.InvalidParams):
        TowerContext(2, s=0)

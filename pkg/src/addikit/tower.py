"""Subfield embeddings, trace and norm, and F_q-coordinates in field towers.

All fields share a characteristic ``p`` and are the canonical fields from
:func:`addikit.field.field_create`.  An embedding ``K -> L`` sends the
canonical generator of ``K`` to a power of the canonical generator of ``L``;
the exponent is the first ``j * (|L|-1)/(|K|-1)`` with ``gcd(j, |K|-1) = 1``
for which the resulting multiplicative map is also additive.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache

import numpy as np

from addikit.errors import InvalidParams, NotASubfield, ResultNotInSubfield
from addikit.field import FieldElement, FieldSpec, field_create, prime_power


class Embedding:
    """An injective ring homomorphism ``K -> L``, stored as a lookup table."""

    def __init__(self, K: FieldSpec, L: FieldSpec, table: np.ndarray) -> None:
        self.K = K
        self.L = L
        self.table = table
        self.table.setflags(write=False)
        pre = np.full(L.order, -1, dtype=np.int64)
        pre[table] = np.arange(K.order, dtype=np.int64)
        self.preimage_table = pre
        self.preimage_table.setflags(write=False)

    def __call__(self, a):
        out = self.table[np.asarray(a, dtype=np.int64)]
        return out if isinstance(a, np.ndarray) else int(out)

    def preimage(self, b):
        """Pull ``b`` back into ``K``; raise if it is outside the image."""
        out = self.preimage_table[np.asarray(b, dtype=np.int64)]
        if (np.asarray(out) < 0).any():
            raise ResultNotInSubfield(f"element not in the image of {self.K!r} in {self.L!r}")
        return out if isinstance(b, np.ndarray) else int(out)

    def contains(self, b) -> np.ndarray:
        return self.preimage_table[np.asarray(b, dtype=np.int64)] >= 0

    def compose(self, other: Embedding) -> Embedding:
        """``other`` after ``self`` (``K -> L -> M``)."""
        if other.K != self.L:
            raise NotASubfield("embeddings do not chain")
        return Embedding(self.K, other.L, other.table[self.table].copy())

    def __repr__(self) -> str:
        return f"Embedding({self.K!r} -> {self.L!r})"


def _is_additive(emb: np.ndarray, K: FieldSpec, L: FieldSpec) -> bool:
    # additive iff F_p-linear iff emb(a) = sum_i a_i * emb(x^i) for every a
    basis_img = emb[np.array([K.p**i for i in range(K.m)], dtype=np.int64)]
    digits = K.digits(K.elements())
    acc = np.zeros(K.order, dtype=np.int64)
    for i in range(K.m):
        acc = L.add(acc, L.mul(digits[:, i], basis_img[i]))
    return bool((acc == emb).all())


@lru_cache(maxsize=None)
def canonical_embedding(K: FieldSpec, L: FieldSpec) -> Embedding:
    if K.p != L.p or L.m % K.m:
        raise NotASubfield(f"{K!r} is not a subfield of {L!r}")
    nK, nL = K.order - 1, L.order - 1
    c = nL // nK
    logK = K.log_table
    for j in range(1, nK + 1):
        if math.gcd(j, nK) != 1:
            continue
        emb = np.zeros(K.order, dtype=np.int64)
        nonzero = np.arange(1, K.order)
        emb[nonzero] = L.exp_table[(logK[nonzero] * j * c) % nL]
        if _is_additive(emb, K, L):
            return Embedding(K, L, emb)
    raise AssertionError(f"no additive embedding {K!r} -> {L!r}")  # pragma: no cover


def embed(x: FieldElement, L: FieldSpec, ctx: TowerContext | None = None) -> FieldElement:
    """Image of ``x`` in ``L``, through ``ctx``'s embeddings when given."""
    emb = ctx.embedding(x.field, L) if ctx is not None else canonical_embedding(x.field, L)
    return FieldElement(L, emb(x.rep))


def _frobenius_sum(L: FieldSpec, x, qK: int, terms: int):
    acc = np.zeros_like(np.asarray(x, dtype=np.int64))
    y = np.asarray(x, dtype=np.int64)
    for _ in range(terms):
        acc = L.add(acc, y)
        y = L.pow(y, qK)
    return acc


def trace_reps(emb: Embedding, x):
    """Trace from ``emb.L`` down to ``emb.K`` on reps (vectorised)."""
    K, L = emb.K, emb.L
    arr = isinstance(x, np.ndarray)
    t = _frobenius_sum(L, x, K.order, L.m // K.m)
    out = emb.preimage(np.asarray(t))
    return out if arr else int(out)


def norm_reps(emb: Embedding, x):
    K, L = emb.K, emb.L
    arr = isinstance(x, np.ndarray)
    y = L.pow(np.asarray(x, dtype=np.int64), (L.order - 1) // (K.order - 1))
    out = emb.preimage(np.asarray(y))
    return out if arr else int(out)


def trace(x: FieldElement, K: FieldSpec, ctx: TowerContext | None = None) -> FieldElement:
    """``sum_{i < [L:K]} x^(|K|^i)``, returned as an element of ``K``."""
    emb = ctx.embedding(K, x.field) if ctx is not None else canonical_embedding(K, x.field)
    return FieldElement(K, trace_reps(emb, x.rep))


def norm(x: FieldElement, K: FieldSpec, ctx: TowerContext | None = None) -> FieldElement:
    """``x^((|L|-1)/(|K|-1))``, returned as an element of ``K``."""
    emb = ctx.embedding(K, x.field) if ctx is not None else canonical_embedding(K, x.field)
    return FieldElement(K, norm_reps(emb, x.rep))


class Coordinates:
    """F_q-coordinates of an extension ``L`` w.r.t. ``1, g, ..., g^(d-1)``.

    ``g`` is the canonical generator of ``L``; it generates ``L`` over F_q so
    the powers form a basis.
    """

    def __init__(self, emb: Embedding) -> None:
        self.emb = emb
        Fq, L = emb.K, emb.L
        self.degree = d = L.m // Fq.m
        self.basis = L.exp_table[:d].copy() if L.order > 2 else np.ones(1, dtype=np.int64)
        combos = np.array(list(itertools.product(range(Fq.order), repeat=d)), dtype=np.int64)
        combos = combos.reshape(-1, d)
        values = self.from_coords(combos)
        table = np.full((L.order, d), -1, dtype=np.int64)
        table[values] = combos
        if (table < 0).any():
            raise InvalidParams(f"polynomial basis does not span {L!r} over {Fq!r}")
        self.table = table
        self.table.setflags(write=False)

    def from_coords(self, c) -> np.ndarray:
        L = self.emb.L
        c = np.asarray(c, dtype=np.int64)
        img = self.emb.table[c]
        return _reduce_add(L, L.mul(img, self.basis))

    def to_coords(self, y) -> np.ndarray:
        return self.table[np.asarray(y, dtype=np.int64)]


def _reduce_add(F: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Field sum along the last axis."""
    out = a[..., 0]
    for i in range(1, a.shape[-1]):
        out = F.add(out, a[..., i])
    return out


@dataclass(frozen=True)
class TowerContext:
    """The tower F_q < F_{q^s} < F_{q^st} together with F_q < F_{q^h}.

    ``e_1, ..., e_h`` is the polynomial basis of F_{q^h} over F_q.  The
    embedding F_q -> F_{q^st} is the composite through F_{q^s} so that trace
    and norm are transitive.
    """

    q: int
    s: int = 1
    t: int = 1
    h: int = 1
    Fq: FieldSpec = dc_field(init=False)
    Fqs: FieldSpec = dc_field(init=False)
    Fqst: FieldSpec = dc_field(init=False)
    Fqh: FieldSpec = dc_field(init=False)

    def __post_init__(self) -> None:
        if min(self.s, self.t, self.h) < 1:
            raise InvalidParams("s, t, h must be positive")
        p, m = prime_power(self.q)
        object.__setattr__(self, "Fq", field_create(p, m))
        object.__setattr__(self, "Fqs", field_create(p, m * self.s))
        object.__setattr__(self, "Fqst", field_create(p, m * self.s * self.t))
        object.__setattr__(self, "Fqh", field_create(p, m * self.h))

    @cached_property
    def emb_q_qs(self) -> Embedding:
        return canonical_embedding(self.Fq, self.Fqs)

    @cached_property
    def emb_qs_qst(self) -> Embedding:
        return canonical_embedding(self.Fqs, self.Fqst)

    @cached_property
    def emb_q_qst(self) -> Embedding:
        return self.emb_q_qs.compose(self.emb_qs_qst)

    @cached_property
    def emb_q_qh(self) -> Embedding:
        return canonical_embedding(self.Fq, self.Fqh)

    def embedding(self, K: FieldSpec, L: FieldSpec) -> Embedding:
        if K == self.Fq and L == self.Fqst:
            return self.emb_q_qst
        if K == self.Fq and L == self.Fqs:
            return self.emb_q_qs
        if K == self.Fqs and L == self.Fqst:
            return self.emb_qs_qst
        return canonical_embedding(K, L)

    @cached_property
    def coords_qh(self) -> Coordinates:
        return Coordinates(self.emb_q_qh)

    @cached_property
    def coords_qs(self) -> Coordinates:
        return Coordinates(self.emb_q_qs)

    @cached_property
    def coords_qst(self) -> Coordinates:
        return Coordinates(self.emb_q_qst)

    @property
    def e_basis(self) -> np.ndarray:
        """``e_1, ..., e_h`` as reps of F_{q^h}."""
        return self.coords_qh.basis

    def tr(self, x):
        """Trace F_{q^s} -> F_q on reps."""
        return trace_reps(self.emb_q_qs, x)

    def Tr(self, x):
        """Trace F_{q^st} -> F_q on reps."""
        return trace_reps(self.emb_q_qst, x)

    def N(self, x):
        """Norm F_{q^st} -> F_{q^s} on reps."""
        return norm_reps(self.emb_qs_qst, x)

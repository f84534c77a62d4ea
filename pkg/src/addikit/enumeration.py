"""Exhaustive codeword enumeration for F_q-linear codes.

Both linear codes (entries in F_q) and additive codes (entries in F_{q^h})
are the F_q-row-span of a generator matrix, so one kernel serves both.  Only
F_q-scalar classes are deduplicated: every coefficient vector is taken with
its first nonzero entry equal to 1.

The coefficient vector is split into a high part, iterated in Python, and a
low part whose ``q^k_low`` combinations are tabulated once and added to each
high combination with a single vectorised field addition.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from addikit.config import check_budget
from addikit.field import FieldSpec

_TABLE_CELLS = 1 << 22


def projective_vectors(q: int, k: int):
    """Coefficient vectors with first nonzero entry 1, lexicographic."""
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def all_vectors(q: int, k: int) -> np.ndarray:
    """All of F_q^k as rows, lexicographic (first coordinate slowest)."""
    return np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int64).reshape(-1, k)


def span_words(big: FieldSpec, rows: np.ndarray, scalar_emb: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Codewords ``sum_i coeffs[..., i] * rows[i]`` for a batch of coefficient vectors."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    out = np.zeros(coeffs.shape[:-1] + (rows.shape[1],), dtype=np.int64)
    for i in range(rows.shape[0]):
        out = big.add(out, big.mul(scalar_emb[coeffs[..., i]][..., None], rows[i]))
    return out


@dataclass(frozen=True)
class _Plan:
    big: FieldSpec
    q: int
    k_high: int
    scaled: np.ndarray  # (k, q, n)
    table: np.ndarray  # (q^k_low, n)
    table_coeffs: np.ndarray  # (q^k_low, k_low)
    low_projective: np.ndarray  # bool mask over table rows


def _plan(big: FieldSpec, rows: np.ndarray, scalar_emb: np.ndarray) -> _Plan:
    k, n = rows.shape
    q = len(scalar_emb)
    scaled = big.mul(scalar_emb[None, :, None], rows[:, None, :])
    k_low = 1
    while k_low < k and q ** (k_low + 1) * n <= _TABLE_CELLS:
        k_low += 1
    k_low = min(k_low, k)
    k_high = k - k_low
    coeffs = all_vectors(q, k_low)
    table = span_words(big, rows[k_high:], scalar_emb, coeffs)
    nz = coeffs != 0
    first = np.where(nz.any(axis=1), nz.argmax(axis=1), 0)
    low_proj = nz.any(axis=1) & (coeffs[np.arange(len(coeffs)), first] == 1)
    return _Plan(big, q, k_high, scaled, table, coeffs, low_proj)


def _high_vectors(plan: _Plan) -> list[tuple[int, ...]]:
    return [(0,) * plan.k_high] + list(projective_vectors(plan.q, plan.k_high))


def _words_for(plan: _Plan, high: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Codewords for one high part, and the table rows they correspond to."""
    big = plan.big
    if not any(high):
        idx = np.nonzero(plan.low_projective)[0]
        return plan.table[idx], idx
    H = np.zeros(plan.table.shape[1], dtype=np.int64)
    for i, c in enumerate(high):
        if c:
            H = big.add(H, plan.scaled[i, c])
    return big.add(plan.table, H[None, :]), np.arange(len(plan.table))


def _chunk_min(plan: _Plan, highs: list[tuple[int, ...]]):
    best = None
    for high in highs:
        words, idx = _words_for(plan, high)
        if len(words) == 0:
            continue
        w = np.count_nonzero(words, axis=1)
        j = int(w.argmin())
        if best is None or w[j] < best[0]:
            best = (int(w[j]), high + tuple(int(c) for c in plan.table_coeffs[idx[j]]))
    return best


def _chunks(items: list, jobs: int) -> list[list]:
    size = max(1, -(-len(items) // (jobs * 4)))
    return [items[i : i + size] for i in range(0, len(items), size)]


def min_weight(
    big: FieldSpec,
    rows: np.ndarray,
    scalar_emb: np.ndarray,
    budget: int | None = None,
    jobs: int = 1,
) -> tuple[int, tuple[int, ...]]:
    """Minimum weight over nonzero F_q-combinations of ``rows``.

    Args:
        big: field holding the entries of ``rows``.
        rows: ``k x n`` generator matrix (reps of ``big``).
        scalar_emb: image of each F_q rep in ``big``.
        budget: cap on ``q^k``.
        jobs: worker threads; the result does not depend on it.

    Returns:
        ``(d, v)`` where ``v`` is the first coefficient vector (in enumeration
        order) whose codeword has weight ``d``.
    """
    rows = np.asarray(rows, dtype=np.int64)
    k = rows.shape[0]
    q = len(scalar_emb)
    check_budget("codeword enumeration", q**k, budget)
    plan = _plan(big, rows, np.asarray(scalar_emb, dtype=np.int64))
    chunks = _chunks(_high_vectors(plan), max(1, jobs))
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            results = list(pool.map(lambda c: _chunk_min(plan, c), chunks))
    else:
        results = [_chunk_min(plan, c) for c in chunks]
    best = None
    for r in results:
        if r is not None and (best is None or r[0] < best[0]):
            best = r
    assert best is not None, "code has no nonzero codeword"
    return best


def weight_distribution(
    big: FieldSpec,
    rows: np.ndarray,
    scalar_emb: np.ndarray,
    budget: int | None = None,
) -> np.ndarray:
    """Number of codewords of each weight ``0..n`` over all ``q^k`` vectors."""
    rows = np.asarray(rows, dtype=np.int64)
    k, n = rows.shape
    q = len(scalar_emb)
    check_budget("codeword enumeration", q**k, budget)
    plan = _plan(big, rows, np.asarray(scalar_emb, dtype=np.int64))
    counts = np.zeros(n + 1, dtype=np.int64)
    for high in _high_vectors(plan):
        words, _ = _words_for(plan, high)
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    counts *= q - 1
    counts[0] += 1
    return counts

"""Finite fields, towers, trace and norm.

Run: python3 demos/field_arithmetic.py
"""

from __future__ import annotations

import numpy as np

from addikit.field import gf
from addikit.tower import canonical_embedding, norm_reps, trace_reps


def main() -> None:
    F = gf(16)
    print(f"GF(16) modulus (constant term first): {F.modulus}")
    a, b = 7, 11
    print(f"{a} * {b} = {F.mul(a, b)},  {a} + {b} = {F.add(a, b)},  {a}^-1 = {F.inv(a)}")

    K = gf(4)
    emb = canonical_embedding(K, F)
    print(f"image of GF(4) inside GF(16): {[int(emb(y)) for y in K.elements()]}")
    x = F.elements()
    print(f"trace fibre sizes: {np.bincount(trace_reps(emb, x), minlength=4).tolist()}")
    print(f"norm fibre sizes (nonzero): {np.bincount(norm_reps(emb, x[1:]), minlength=4).tolist()}")


if __name__ == "__main__":
    main()

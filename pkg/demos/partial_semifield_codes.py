"""Additive codes from a linear code and a partial semifield.

Run: python3 demos/partial_semifield_codes.py
"""

from __future__ import annotations

from addikit.construction_a import construct_a, desarguesian_partial_semifield
from addikit.linear_code import hamming74, simplex73


def main() -> None:
    for name, code, k in [("Hamming [7,4,3]", hamming74(), 4), ("simplex [7,3,4]", simplex73(), 3)]:
        res = construct_a(code, desarguesian_partial_semifield(2, k, 2))
        print(f"{name} -> additive code over GF(4)")
        print(f"  guaranteed d >= {res.guaranteed_d}, exact d = {res.actual_d}")
        print(f"  parameters: {res.code.params()}")


if __name__ == "__main__":
    main()

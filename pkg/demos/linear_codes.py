"""Minimum distance and generalized Hamming weights of small linear codes.

Run: python3 demos/linear_codes.py
"""

from __future__ import annotations

from addikit.bounds import ghw_lower_bound, griesmer_linear
from addikit.linear_code import hamming74, simplex73


def main() -> None:
    for name, code in [("Hamming [7,4]", hamming74()), ("simplex [7,3]", simplex73())]:
        d = code.min_distance()
        hier = code.ghw_hierarchy()
        print(f"{name}: d = {d}, weight hierarchy = {hier}")
        print(f"  Griesmer length for k={code.k}, d={d}: {griesmer_linear(code.k, d, 2)}")
        print(f"  Griesmer-type GHW lower bounds: {[ghw_lower_bound(j, d, 2) for j in range(1, code.k + 1)]}")


if __name__ == "__main__":
    main()

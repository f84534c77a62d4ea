"""Additive codes from norm-trace subspace families.

Run: python3 demos/norm_trace_codes.py
"""

from __future__ import annotations

from addikit.bounds import additive_griesmer_max_d
from addikit.construction_b import ConstructionBParams, build_code_b


def main() -> None:
    for q, s, t, h in [(2, 2, 2, 2), (2, 3, 2, 2), (3, 2, 2, 2)]:
        res = build_code_b(ConstructionBParams(q, s, t, h))
        n, r = res.code.n, res.code.k
        print(
            f"(q,s,t,h)=({q},{s},{t},{h}): n={n}, F_q-dimension={r}, "
            f"bound d>={res.params.lower_bound}, exact d={res.exact_d}, "
            f"additive Griesmer max d={additive_griesmer_max_d(n, r, h, q)}"
        )


if __name__ == "__main__":
    main()

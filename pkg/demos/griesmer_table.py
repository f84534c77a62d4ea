"""Additive Griesmer feasibility: intermediates for a few instances.

Run: python3 demos/griesmer_table.py
"""

from __future__ import annotations

from addikit.bounds import additive_griesmer_check


def main() -> None:
    print(f"{'n':>4} {'r':>3} {'h':>2} {'q':>2} {'d':>4} {'k':>3} {'r0':>3} {'m':>3} {'f':>8} {'rhs':>5} verdict")
    for n, r, h, q, d in [(15, 7, 2, 2, 10), (15, 7, 2, 2, 11), (15, 7, 2, 2, 12), (21, 6, 2, 3, 18), (63, 10, 2, 2, 45)]:
        i = additive_griesmer_check(n, r, h, q, d)
        f = "inf" if i.f is None else str(i.f)
        print(f"{n:>4} {r:>3} {h:>2} {q:>2} {d:>4} {i.k:>3} {i.r0:>3} {i.m:>3} {f:>8} {i.rhs:>5} {'feasible' if i.feasible else 'infeasible'}")


if __name__ == "__main__":
    main()

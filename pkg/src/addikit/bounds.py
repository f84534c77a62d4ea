"""Griesmer-type bounds for linear and additive codes.

Everything is exact: ``f(q, m)`` is a :class:`fractions.Fraction` and
ceilings are taken on exact rationals.

For an additive ``[n, r/h, d]_q^h`` code write ``k = ceil(r/h)`` and
``r = (k-1) h + r0`` with ``1 <= r0 <= h``; let ``m`` be the integer with
``q^((m-2)h + r0) < d <= q^((m-1)h + r0)``.  Then

    n >= k + d - m + ceil(d / f(q, m)),
    f(q, m) = q^e (q^h - 1) / (q^e - 1),   e = (m-2)h + r0.

Two edge conventions apply.  For ``d = 1`` the lower window inequality is
vacuous and ``m`` is the smallest integer ``>= 1`` meeting the upper one.
When ``e = 0`` the denominator vanishes; ``f`` is then taken as infinite and
``ceil(d/f) = 0``, which makes single-generator codes (``r <= h``) satisfy
``n >= d`` with equality for ``d <= q^r0``.

The inequality is applied exactly as written, with no extra hypotheses.  Once
``m > k`` it rejects codes that exist: the binary repetition code
``[3, 1, 3]`` has ``m = 2 > k = 1`` and gets ``rhs = 4``.  Verdicts carry
``m_exceeds_k`` so callers can tell which regime they are in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from addikit.errors import InvalidParams
from addikit.field import prime_power


def _check_q(q: int) -> None:
    prime_power(q)


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def griesmer_linear(k: int, d: int, q: int) -> int:
    """Smallest ``n`` allowed for a linear ``[n, k, d]_q`` code."""
    if k < 1 or d < 1:
        raise InvalidParams(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    _check_q(q)
    return sum(-(-d // q**i) for i in range(k))


def ghw_lower_bound(j: int, d: int, q: int) -> int:
    """``sum_{i<j} ceil(d / q^i)``: lower bound on ``d_j`` of a code of distance ``d``."""
    if j < 1:
        raise InvalidParams(f"j must be >= 1, got {j}")
    return sum(-(-d // q**i) for i in range(j))


def construction_a_lower_bound(d: int, q: int, h: int) -> int:
    return ghw_lower_bound(h, d, q)


def construction_b_lower_bound(q: int, s: int, t: int, h: int) -> int:
    """``q^st - 1 - ((q^st - 1)/(q^s - 1)) q^(s-h)``."""
    n = q ** (s * t) - 1
    return n - (n // (q**s - 1)) * q ** (s - h)


def split_dimension(r: int, h: int) -> tuple[int, int]:
    """``(k, r0)`` with ``k = ceil(r/h)`` and ``r = (k-1) h + r0``, ``1 <= r0 <= h``."""
    if r < 1 or h < 1:
        raise InvalidParams(f"need r >= 1 and h >= 1, got r={r}, h={h}")
    k = -(-r // h)
    return k, r - (k - 1) * h


def m_window(d: int, q: int, h: int, r0: int) -> int:
    """The ``m`` with ``q^((m-2)h+r0) < d <= q^((m-1)h+r0)``."""
    if d < 1:
        raise InvalidParams(f"d must be >= 1, got {d}")
    m = 1
    # q^((m-1)h + r0) grows with m; the first m meeting the upper bound
    # also meets the strict lower bound whenever d >= 2
    while q ** ((m - 1) * h + r0) < d:
        m += 1
    return m


def f_value(q: int, h: int, m: int, r0: int) -> Fraction | None:
    """``f(q, m)`` exactly; ``None`` stands for infinity (zero denominator)."""
    e = (m - 2) * h + r0
    num = Fraction(q) ** e * (q**h - 1)
    den = Fraction(q) ** e - 1
    if den == 0:
        return None
    return num / den


@dataclass(frozen=True)
class AdditiveGriesmerInstance:
    n: int
    r: int
    h: int
    q: int
    d: int
    k: int
    r0: int
    m: int
    f: Fraction | None
    ceil_d_over_f: int
    rhs: int

    @property
    def feasible(self) -> bool:
        return self.n >= self.rhs

    @property
    def m_exceeds_k(self) -> bool:
        return self.m > self.k

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"

    def to_json(self) -> dict:
        f = "inf" if self.f is None else f"{self.f.numerator}/{self.f.denominator}"
        return {
            "n": self.n,
            "r": self.r,
            "h": self.h,
            "q": self.q,
            "d": self.d,
            "k": self.k,
            "r_0": self.r0,
            "m": self.m,
            "f": f,
            "ceil_d_over_f": self.ceil_d_over_f,
            "rhs": self.rhs,
            "m_exceeds_k": self.m_exceeds_k,
            "verdict": self.verdict,
        }


def additive_griesmer_check(n: int, r: int, h: int, q: int, d: int) -> AdditiveGriesmerInstance:
    """Evaluate the additive Griesmer inequality with every intermediate."""
    _check_q(q)
    if n < 1 or d < 1:
        raise InvalidParams(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    k, r0 = split_dimension(r, h)
    m = m_window(d, q, h, r0)
    f = f_value(q, h, m, r0)
    c = 0 if f is None else _ceil(Fraction(d) / f)
    rhs = k + d - m + c
    return AdditiveGriesmerInstance(n, r, h, q, d, k, r0, m, f, c, rhs)


def additive_griesmer_max_d(n: int, r: int, h: int, q: int) -> int:
    """Largest ``d <= n`` passing :func:`additive_griesmer_check` (descending scan)."""
    for d in range(n, 0, -1):
        if additive_griesmer_check(n, r, h, q, d).feasible:
            return d
    return 0


def f_m3_closed_form(q: int, h: int) -> Fraction:
    """``q^(h+1) (q^h - 1) / (q^(h+1) - 1)``: ``f(q, 3)`` when ``r0 = 1``."""
    return Fraction(q ** (h + 1) * (q**h - 1), q ** (h + 1) - 1)


def optimality_rhs(q: int, h: int) -> int:
    """Right-hand side for a hypothetical ``[q^2h - 1, (3h+1)/h, q^2h - q^h]_q^h`` code."""
    return additive_griesmer_check(q ** (2 * h) - 1, 3 * h + 1, h, q, q ** (2 * h) - q**h).rhs


__all__ = [
    "AdditiveGriesmerInstance",
    "additive_griesmer_check",
    "additive_griesmer_max_d",
    "construction_a_lower_bound",
    "construction_b_lower_bound",
    "f_m3_closed_form",
    "f_value",
    "ghw_lower_bound",
    "griesmer_linear",
    "m_window",
    "optimality_rhs",
    "split_dimension",
]

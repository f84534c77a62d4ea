"""Executable checks for the headline results.

Each ``check_*`` function recomputes one result from scratch and returns a
:class:`CheckResult`; :data:`CHECKS` maps the CLI target names to them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from addikit import bounds
from addikit.construction_a import (
    construct_a,
    construct_a_with_basis_change,
    desarguesian_partial_semifield,
    weight_identity_sides,
)
from addikit.construction_b import (
    ConstructionBParams,
    build_code_b,
    build_family,
    hyperplane_zero_count,
)
from addikit.enumeration import all_vectors
from addikit.field import field_create, is_prime
from addikit.linalg import nullspace
from addikit.linear_code import LinearCode, hamming74, simplex73
from addikit.linearity import SubspaceFamily, certify_nonlinear, spread_family, verify_certificate
from addikit.tower import TowerContext, canonical_embedding, norm_reps, trace_reps

THEOREM_GRID = [(2, 2, 2, 1), (2, 2, 2, 2), (2, 3, 2, 2), (2, 3, 2, 3), (3, 2, 2, 2)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}"

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "passed": self.passed, "details": self.details}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(fn):
    def wrapper(*args, **kwargs) -> CheckResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_example_63(jobs: int = 1) -> CheckResult:
    """(2,3,2,2): n = 63, F_2-rank 10, brute-forced d >= 45."""
    res = build_code_b(ConstructionBParams(2, 3, 2, 2), jobs=jobs)
    rank = res.code.fq_rank()
    ok = res.code.n == 63 and rank == 10 and res.code.k == 10 and res.exact_d is not None and res.exact_d >= 45
    return CheckResult(
        "example-63",
        ok,
        {"n": res.code.n, "fq_rank": rank, "dim": "5", "d": res.exact_d, "claimed_d": 45},
    )


@_timed
def check_theorem_grid(jobs: int = 1) -> CheckResult:
    rows, ok = [], True
    for q, s, t, h in THEOREM_GRID:
        res = build_code_b(ConstructionBParams(q, s, t, h), jobs=jobs)
        bound = bounds.construction_b_lower_bound(q, s, t, h)
        good = res.exact_d is not None and res.exact_d >= bound
        ok &= good
        rows.append({"q": q, "s": s, "t": t, "h": h, "n": res.code.n, "k": res.code.k, "d": res.exact_d, "bound": bound, "ok": good})
    return CheckResult("theorem-grid", ok, {"grid": rows})


@_timed
def check_optimality(jobs: int = 1) -> CheckResult:
    """Additive Griesmer at (q, h) = (2, 2), against the (2,2,2,2) construction."""
    inst = bounds.additive_griesmer_check(15, 7, 2, 2, 12)
    max_d = bounds.additive_griesmer_max_d(15, 7, 2, 2)
    res = build_code_b(ConstructionBParams(2, 2, 2, 2), jobs=jobs)
    parts = {
        "d12_infeasible": not inst.feasible,
        "intermediates": inst.m == 3 and inst.k == 4 and inst.r0 == 1 and inst.ceil_d_over_f == 4,
        "max_d_is_11": max_d == 11,
        "constructed_d_le_11": res.exact_d is not None and res.exact_d <= 11,
    }
    return CheckResult(
        "optimality",
        all(parts.values()),
        {
            "check_d12": inst.to_json(),
            "max_d": max_d,
            "constructed_d": res.exact_d,
            "construction_bound": bounds.construction_b_lower_bound(2, 2, 2, 2),
            "claimed_upper": 2**4 - 2**2 - 1,
            "parts": parts,
        },
    )


@_timed
def check_mathon() -> CheckResult:
    inst = bounds.additive_griesmer_check(21, 6, 2, 3, 18)
    return CheckResult("mathon", inst.feasible and inst.rhs == 21, inst.to_json())


@_timed
def check_construction_a(jobs: int = 1) -> CheckResult:
    H = hamming74()
    res = construct_a(H, desarguesian_partial_semifield(2, 4, 2), jobs=jobs)
    hier = H.ghw_hierarchy()
    lower = [bounds.ghw_lower_bound(j, 3, 2) for j in range(1, 5)]
    ok = (
        res.actual_d is not None
        and res.actual_d >= H.ghw(2) == 5
        and hier == [3, 5, 6, 7]
        and all(lb <= ex for lb, ex in zip(lower, hier))
    )
    return CheckResult(
        "construction-a",
        ok,
        {"d": res.actual_d, "ghw": hier, "ghw_lower_bound": lower, "guaranteed_d": res.guaranteed_d},
    )


def hamming_code(r: int) -> LinearCode:
    """Binary Hamming ``[2^r - 1, 2^r - 1 - r, 3]`` code."""
    F = field_create(2)
    H = all_vectors(2, r)[1:].T
    return LinearCode(F, nullspace(F, H), f"hamming{2**r - 1}")


def _construction_a_instances():
    yield "hamming74/desarguesian(2,4,2)", construct_a(hamming74(), desarguesian_partial_semifield(2, 4, 2))
    yield "simplex73/desarguesian(2,3,2)", construct_a(simplex73(), desarguesian_partial_semifield(2, 3, 2))
    B = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]], dtype=np.int64)
    yield "hamming74/basis-change", construct_a_with_basis_change(hamming74(), desarguesian_partial_semifield(2, 4, 2), B)
    F3 = field_create(3)
    tern = LinearCode(F3, [[1, 0, 1, 1], [0, 1, 1, 2]], "ternary-hamming")
    yield "ternary[4,2]/desarguesian(3,2,2)", construct_a(tern, desarguesian_partial_semifield(3, 2, 2))
    ham15 = hamming_code(4)
    yield "hamming15/desarguesian(2,11,3)", construct_a(
        ham15, desarguesian_partial_semifield(2, 11, 3), budget=2**16, verify=False
    )


@_timed
def check_weight_identity(samples: int = 200, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    rows, mismatches = [], 0
    for name, res in _construction_a_instances():
        q, k = res.source.q, res.source.k
        vs = [rng.integers(0, q, size=k) for _ in range(samples)]
        exhaustive = q**k <= 2**10
        if exhaustive:
            vs += list(all_vectors(q, k))
        bad = 0
        for v in vs:
            lhs, rhs = weight_identity_sides(res, v)
            bad += lhs != rhs
        mismatches += bad
        rows.append({"instance": name, "checked": len(vs), "exhaustive": exhaustive, "mismatches": bad})
    return CheckResult("weight-identity", mismatches == 0, {"instances": rows})


@_timed
def check_hyperplane_cap() -> CheckResult:
    rows, ok = [], True
    for P in [(2, 2, 2, 2), (2, 3, 2, 2)]:
        params = ConstructionBParams(*P)
        fam = build_family(params)
        counts = [hyperplane_zero_count(fam, a) for a in all_vectors(params.q, params.k)[1:]]
        mx = max(counts)
        good = mx <= params.max_zero_count
        ok &= good
        rows.append({"params": P, "functionals": len(counts), "max_zero_count": mx, "cap": params.max_zero_count})
    return CheckResult("hyperplane-cap", ok, {"cases": rows})


@_timed
def check_nonlinear(max_m: int = 3) -> CheckResult:
    rows, ok = [], True
    main = None
    for s in (2, 3, 4):
        for h in range(2, s + 1):
            fam = SubspaceFamily.from_norm_trace(build_family(ConstructionBParams(2, s, 2, h)))
            cert = certify_nonlinear(fam, max_m=max_m)
            good = cert.verdict == "nonlinear" and verify_certificate(fam, cert)
            ok &= good
            rows.append({"q": 2, "s": s, "t": 2, "h": h, **cert.to_json()})
            if (s, h) == (3, 2):
                main = cert
    ok &= main is not None and main.reason == "subset-rank" and len(main.witness) <= 3
    ctx = TowerContext(2, h=2)
    control_rows = np.array(
        [[1, 0, 0, 1, 1, 1, 2, 3], [0, 1, 0, 1, 2, 3, 1, 1], [0, 0, 1, 1, 3, 2, 3, 2]], dtype=np.int64
    )
    control = certify_nonlinear(spread_family(ctx, control_rows), max_m=max_m)
    ok &= control.verdict == "inconclusive"
    return CheckResult("nonlinear", ok, {"grid": rows, "negative_control": control.to_json()})


def _prime_powers(limit: int):
    for p in range(2, limit + 1):
        if is_prime(p):
            m = 1
            while p**m <= limit:
                yield p, m
                m += 1


def field_axiom_failures(F) -> int:
    """Exhaustive axiom check; the number of violated identities."""
    x = F.elements()
    A, B = np.meshgrid(x, x, indexing="ij")
    bad = 0
    bad += int((F.add(A, B) != F.add(B, A)).sum())
    bad += int((F.mul(A, B) != F.mul(B, A)).sum())
    bad += int((F.add(x, 0) != x).sum() + (F.mul(x, 1) != x).sum())
    bad += int((F.add(x, F.neg(x)) != 0).sum())
    bad += int((F.mul(x[1:], F.inv(x[1:])) != 1).sum())
    for a in x:
        bad += int((F.add(F.add(a, A), B) != F.add(a, F.add(A, B))).sum())
        bad += int((F.mul(F.mul(a, A), B) != F.mul(a, F.mul(A, B))).sum())
        bad += int((F.mul(a, F.add(A, B)) != F.add(F.mul(a, A), F.mul(a, B))).sum())
    return bad


@_timed
def check_field_engine() -> CheckResult:
    axiom_bad, fields = 0, 0
    for p, m in _prime_powers(2**8):
        axiom_bad += field_axiom_failures(field_create(p, m))
        fields += 1
    tower_bad, towers = 0, 0
    for p, m in _prime_powers(2**12):
        L = field_create(p, m)
        for a in range(1, m):
            if m % a:
                continue
            K = field_create(p, a)
            emb = canonical_embedding(K, L)
            towers += 1
            x = L.elements()
            tr = trace_reps(emb, x)
            nm = norm_reps(emb, x[1:])
            tower_bad += int((np.bincount(tr, minlength=K.order) != L.order // K.order).sum())
            fib = np.bincount(nm, minlength=K.order)
            tower_bad += int(fib[0] != 0) + int((fib[1:] != (L.order - 1) // (K.order - 1)).sum())
            if K.order <= 64:
                y = K.elements()
                P, Q = np.meshgrid(y, y, indexing="ij")
                tower_bad += int((emb(K.add(P, Q)) != L.add(emb(P), emb(Q))).sum())
                tower_bad += int((emb(K.mul(P, Q)) != L.mul(emb(P), emb(Q))).sum())
            tower_bad += int((emb(np.arange(p)) != np.arange(p)).sum())
    return CheckResult(
        "field-engine",
        axiom_bad == 0 and tower_bad == 0,
        {"fields": fields, "axiom_failures": axiom_bad, "towers": towers, "tower_failures": tower_bad},
    )


CHECKS = {
    "example-63": check_example_63,
    "theorem-grid": check_theorem_grid,
    "optimality": check_optimality,
    "mathon": check_mathon,
    "construction-a": check_construction_a,
    "weight-identity": check_weight_identity,
    "hyperplane-cap": check_hyperplane_cap,
    "nonlinear": check_nonlinear,
    "field-engine": check_field_engine,
}

_ACCEPTS_JOBS = {"example-63", "theorem-grid", "optimality", "construction-a"}


def run(target: str = "all", jobs: int = 1) -> list[CheckResult]:
    names = list(CHECKS) if target == "all" else [target]
    out = []
    for name in names:
        fn = CHECKS[name]
        out.append(fn(jobs=jobs) if name in _ACCEPTS_JOBS else fn())
    return out

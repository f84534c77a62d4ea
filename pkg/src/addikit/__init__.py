"""Additive codes over F_{q^h} built from linear codes over F_q.

Finite-field towers, linear and additive codes with brute-force distance and
generalised Hamming weights, two constructions (partial semifields and a
norm-trace family), Griesmer-type bounds and non-linearity certificates.
"""

from __future__ import annotations

__version__ = "0.1.0"

from addikit.additive_code import AdditiveCode, AdditiveParams
from addikit.bounds import (
    additive_griesmer_check,
    additive_griesmer_max_d,
    ghw_lower_bound,
    griesmer_linear,
)
from addikit.construction_a import (
    PartialSemifield,
    construct_a,
    construct_a_with_basis_change,
    desarguesian_partial_semifield,
    verify_partial_semifield,
)
from addikit.construction_b import (
    ConstructionBParams,
    build_code_b,
    build_family,
    hyperplane_zero_count,
)
from addikit.field import FieldElement, FieldSpec, field_create, gf
from addikit.linear_code import LinearCode, hamming74, load_code, simplex73
from addikit.linearity import SubspaceFamily, certify_nonlinear, divisibility_precheck
from addikit.tower import TowerContext, canonical_embedding, embed, norm, trace

__all__ = [
    "AdditiveCode",
    "AdditiveParams",
    "ConstructionBParams",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "PartialSemifield",
    "SubspaceFamily",
    "TowerContext",
    "additive_griesmer_check",
    "additive_griesmer_max_d",
    "build_code_b",
    "build_family",
    "canonical_embedding",
    "certify_nonlinear",
    "construct_a",
    "construct_a_with_basis_change",
    "desarguesian_partial_semifield",
    "divisibility_precheck",
    "embed",
    "field_create",
    "gf",
    "ghw_lower_bound",
    "griesmer_linear",
    "hamming74",
    "hyperplane_zero_count",
    "load_code",
    "norm",
    "simplex73",
    "trace",
    "verify_partial_semifield",
]

"""Certify that norm-trace codes are not linear over the larger field.

Run: python3 demos/nonlinearity.py
"""

from __future__ import annotations

from addikit.construction_b import ConstructionBParams, build_family
from addikit.linearity import SubspaceFamily, certify_nonlinear, verify_certificate


def main() -> None:
    for s, h in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        fam = SubspaceFamily.from_norm_trace(build_family(ConstructionBParams(2, s, 2, h)))
        cert = certify_nonlinear(fam)
        witness = cert.witness if len(cert.witness) <= 4 else f"all {len(cert.witness)} subspaces"
        print(
            f"(2,{s},2,{h}): {cert.verdict} via {cert.reason}, witness={witness}, "
            f"rank={cert.rank}, re-verified={verify_certificate(fam, cert)}"
        )


if __name__ == "__main__":
    main()

"""Difference-norm sequences for correct and perturbed coefficients.

The correct m_lambda should give sequences of degree < e|R+|; bumping any
single coefficient should break both the exact identity and the growth bound.

    python scripts/asymptotics_scan.py --group GL2 --mu 2,0 2,0 --n-max 8
"""

import argparse
from dataclasses import dataclass, field

from bmcycles import (
    CycleCoefficients,
    HodgeType,
    bm_coefficients,
    build_root_datum,
    degree_estimate,
    difference_norm_sequence,
    exact_antisym_identity,
    parse_weight,
)


@dataclass
class ScanConfig:
    group: str = "GL2"
    mus: list = field(default_factory=lambda: ["2,0", "2,0"])
    n_max: int = 8


def report(label, h, cc, rd, n_max):
    ident = all(exact_antisym_identity(h, cc, n, rd) for n in (1, 2, 3))
    seq = difference_norm_sequence(h, cc, n_max, rd)
    d = h.e * len(rd.positive_roots)
    verdict = degree_estimate(seq, d).verdict if len(seq) >= d + 2 else "insufficient data"
    print(f"{label:<28} identity={ident!s:<5} norms={seq} -> {verdict}")


def run(cfg: ScanConfig):
    rd = build_root_datum(cfg.group)
    mus = tuple(parse_weight(m) for m in cfg.mus)
    h = HodgeType(len(mus), mus)
    cc = bm_coefficients(h, rd, override=True)
    report("computed", h, cc, rd, cfg.n_max)
    for lam in cc.coeffs:
        bumped = dict(cc.coeffs)
        bumped[lam] += 1
        report(f"m[{','.join(map(str, lam))}] + 1", h, CycleCoefficients(bumped, h, cc.rho), rd, cfg.n_max)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default=ScanConfig.group)
    ap.add_argument("--mu", nargs="+", default=None)
    ap.add_argument("--n-max", type=int, default=ScanConfig.n_max)
    a = ap.parse_args()
    cfg = ScanConfig(a.group, a.mu or ScanConfig().mus, a.n_max)
    run(cfg)


if __name__ == "__main__":
    main()

"""Scan upper unitriangular g0 over F_p and list where the adjoint slope check holds.

    python scripts/adjoint_scan.py --p 7 --h 2 1 0
"""

import argparse
import itertools
from dataclasses import dataclass

from bmcycles import GF, adjoint_slope_check


@dataclass
class AdjointConfig:
    p: int = 7
    h: tuple = (2, 1, 0)


def run(cfg: AdjointConfig):
    F = GF(cfg.p)
    a, b, c = (F(x) for x in cfg.h)
    hits = []
    for x, y, z in itertools.product(range(cfg.p), repeat=3):
        if adjoint_slope_check((a, b, c), [[1, x, z], [0, 1, y], [0, 0, 1]], F):
            hits.append((x, y, z))
    predicted = {(x, y, int(-F(x) * F(y) * (c - b) / (a - c))) for x in range(1, cfg.p) for y in range(1, cfg.p)}
    print(f"H = diag{tuple(cfg.h)} over F_{cfg.p}: {len(hits)} of {cfg.p ** 3} points pass")
    print(f"matches z = -xy(c-b)/(a-c), x,y != 0: {set(hits) == predicted}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=AdjointConfig.p)
    ap.add_argument("--h", type=int, nargs=3, default=list(AdjointConfig.h))
    a = ap.parse_args()
    run(AdjointConfig(a.p, tuple(a.h)))


if __name__ == "__main__":
    main()

"""Print cycle coefficients m_lambda for a grid of Hodge types.

    python scripts/bm_table.py --group GL3 --e 2 --max-pairing 4
"""

import argparse
import itertools
from dataclasses import dataclass

from bmcycles import HodgeType, bm_coefficients, build_root_datum, dimension_bookkeeping


@dataclass
class TableConfig:
    group: str = "GL2"
    e: int = 2
    max_pairing: int = 4


def strictly_dominant(rd, max_pairing):
    # GL_n only: differences between consecutive entries in 1..max_pairing, last entry 0
    n = rd.dim
    for gaps in itertools.product(range(1, max_pairing + 1), repeat=n - 1):
        if sum(gaps) > max_pairing:
            continue
        mu = [0] * n
        for i in range(n - 2, -1, -1):
            mu[i] = mu[i + 1] + gaps[i]
        yield tuple(mu)


def run(cfg: TableConfig):
    rd = build_root_datum(cfg.group)
    mus = list(strictly_dominant(rd, cfg.max_pairing))
    for combo in itertools.combinations_with_replacement(mus, cfg.e):
        h = HodgeType(cfg.e, combo)
        cc = bm_coefficients(h, rd, override=True)
        lhs, rhs = dimension_bookkeeping(cc, rd)
        terms = " + ".join(f"{m}*[{','.join(map(str, lam))}]" for lam, m in cc.coeffs.items())
        print(f"{' '.join(','.join(map(str, m)) for m in combo):<24} -> {terms}   (dim {lhs}={rhs})")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default=TableConfig.group)
    ap.add_argument("--e", type=int, default=TableConfig.e)
    ap.add_argument("--max-pairing", type=int, default=TableConfig.max_pairing)
    a = ap.parse_args()
    run(TableConfig(a.group, a.e, a.max_pairing))


if __name__ == "__main__":
    main()

"""Hodge-type bounds and the cycle coefficients m_lambda.

Hodge types are tuples of cocharacters (coweights of ``rd``).  The
coefficients are tensor multiplicities for the dual group, so the
representation-theoretic work runs on the weight side of ``rd.dual()``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .charring import weyl_dimension
from .rootdata import (
    RootDatum,
    dominance_leq,
    dominance_predicates,
    dominant_weights_below,
    twisting_element,
    weights_below,
)
from .tensor import character_product_decompose, multi_tensor_decompose


class NoTwistingElement(ValueError):
    def __init__(self, msg="no twisting element"):
        super().__init__(msg)


class BoundViolation(ValueError):
    pass


@dataclass(frozen=True)
class HodgeType:
    e: int
    mus: tuple
    residue_char: int = 0
    nu: int = 1

    def __post_init__(self):
        object.__setattr__(self, "mus", tuple(tuple(int(x) for x in m) for m in self.mus))
        if self.e < 1:
            raise ValueError("e must be positive")
        if len(self.mus) != self.e:
            raise ValueError(f"expected {self.e} cocharacters, got {len(self.mus)}")
        if self.nu < 1:
            raise ValueError("nu must be a positive integer")
        if self.residue_char < 0:
            raise ValueError("residue characteristic must be 0 or a prime")

    @property
    def total(self):
        return tuple(sum(col) for col in zip(*self.mus))

    def to_json(self):
        return {"e": self.e, "mus": [_fmt(m) for m in self.mus], "char": self.residue_char, "nu": self.nu}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["e"]), tuple(parse_weight(m) for m in d["mus"]), int(d.get("char", 0)), int(d.get("nu", 1)))


def parse_weight(s):
    if isinstance(s, str):
        s = s.strip().strip("()[]")
        return tuple(int(x) for x in s.split(",")) if s else ()
    return tuple(int(x) for x in s)


def _fmt(w):
    return ",".join(str(x) for x in w)


@dataclass(frozen=True)
class BoundsReport:
    gateA1: bool
    gateA2: bool
    gateNu: bool
    max_pairing_sum: int
    dominant: tuple
    strictly_dominant: tuple
    thresholds: dict = field(default_factory=dict)

    def gate(self, name: str) -> bool:
        if name == "all":
            return self.gateA1 and self.gateA2 and self.gateNu
        return {"A1": self.gateA1, "A2": self.gateA2, "nu": self.gateNu}[name]

    def to_json(self):
        return {
            "gateA1": self.gateA1,
            "gateA2": self.gateA2,
            "gateNu": self.gateNu,
            "max_pairing_sum": self.max_pairing_sum,
            "dominant": list(self.dominant),
            "strictly_dominant": list(self.strictly_dominant),
            "thresholds": {k: _fmt_rat(v) for k, v in self.thresholds.items()},
        }


def _fmt_rat(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def check_bounds(h: HodgeType, rd: RootDatum) -> BoundsReport:
    """Evaluate the three numeric gates on the sums  sum_i <alpha, mu_i>."""
    s = max((sum(rd.pair(a, m) for m in h.mus) for a in rd.roots), default=0)
    preds = [dominance_predicates(m, rd) for m in h.mus]
    p = h.residue_char
    if p == 0:
        a1 = a2 = anu = True
        thresholds = {}
    else:
        nu_bound = Fraction(p - 1, h.nu) + 1
        a1, a2, anu = s <= p + h.e - 1, s <= p, s <= nu_bound
        thresholds = {"A1": p + h.e - 1, "A2": p, "nu": nu_bound}
    return BoundsReport(a1, a2, anu, s, tuple(d for d, _ in preds), tuple(t for _, t in preds), thresholds)


def check_bounds_product(hs, rd: RootDatum) -> BoundsReport:
    """Residue degree f > 1: one Hodge type per embedding kappa_0, gates combined."""
    reps = [check_bounds(h, rd) for h in hs]
    return BoundsReport(
        all(r.gateA1 for r in reps),
        all(r.gateA2 for r in reps),
        all(r.gateNu for r in reps),
        max(r.max_pairing_sum for r in reps),
        tuple(x for r in reps for x in r.dominant),
        tuple(x for r in reps for x in r.strictly_dominant),
        {},
    )


def enumerate_dominant_below(bound, rd: RootDatum):
    """Dominant coweights <= bound, highest first."""
    return dominant_weights_below(tuple(bound), rd.dual())


def coweights_below(bound, rd: RootDatum):
    """All coweights whose dominant conjugate is <= bound (the weight polytope)."""
    return weights_below(tuple(bound), rd.dual())


@dataclass(frozen=True)
class CycleCoefficients:
    coeffs: dict
    base: HodgeType
    rho: tuple

    @property
    def leading_weight(self):
        e = self.base.e
        return tuple(t - e * r for t, r in zip(self.base.total, self.rho))

    def to_json(self):
        return {"rho": _fmt(self.rho), "coefficients": {_fmt(k): v for k, v in self.coeffs.items()}}


def _shifted(h, rho):
    return [tuple(x - r for x, r in zip(m, rho)) for m in h.mus]


def bm_coefficients(h: HodgeType, rd: RootDatum, override: bool = False, oracle: bool = False) -> CycleCoefficients:
    """m_lambda: multiplicities of W(lambda) in the tensor product of W(mu_i - rho).

    ``oracle=True`` uses full character products and greedy subtraction
    instead of Brauer-Klimyk.
    """
    rho = twisting_element(rd)
    if rho is None:
        raise NoTwistingElement()
    for m in h.mus:
        if len(m) != rd.dim:
            raise ValueError(f"cocharacter {m} has the wrong length for {rd.name or 'this datum'}")
        if not dominance_predicates(m, rd)[1]:
            raise ValueError(f"cocharacter {m} is not strictly dominant")
    rep = check_bounds(h, rd)
    if not rep.gateA1:
        msg = f"bound violated: max pairing sum {rep.max_pairing_sum} > p + e - 1 = {h.residue_char + h.e - 1}"
        if not override:
            raise BoundViolation(msg)
        warnings.warn(msg + " (override in effect)", stacklevel=2)
    dual = rd.dual()
    ws = _shifted(h, rho)
    m = character_product_decompose(ws, dual) if oracle else multi_tensor_decompose(ws, dual)
    cc = CycleCoefficients(dict(sorted(m.items(), reverse=True)), h, tuple(rho))
    top = cc.leading_weight
    allowed = set(enumerate_dominant_below(top, rd))
    if not set(m) <= allowed:
        raise AssertionError(f"coefficients outside the dominant range below {top}")
    if m.get(top) != 1:
        raise AssertionError(f"leading coefficient at {top} is {m.get(top)}, expected 1")
    return cc


def cycle_dimension(lam, e: int, rd: RootDatum) -> int:
    """sum over positive roots of min(e, <alpha, lam>)."""
    return sum(min(e, rd.pair(a, lam)) for a in rd.positive_roots)


def schubert_dimension(lam, rd: RootDatum) -> int:
    """<2 rho, lam>, i.e. the sum of pairings with the positive roots."""
    return rd.pair(rd.two_rho, lam)


def dimension_tally(h: HodgeType, rd: RootDatum, f: int = 1) -> dict:
    npos = len(rd.positive_roots)
    return {
        "e_dim_G_over_B": h.e * npos,
        "dim_G_plus_degree_dim_G_over_B": rd.dim + len(rd.roots) + h.e * f * npos,
    }


def dimension_bookkeeping(cc: CycleCoefficients, rd: RootDatum) -> tuple[int, int]:
    """(sum m_lambda dim W(lambda), prod dim W(mu_i - rho)) for the dual group."""
    dual = rd.dual()
    lhs = sum(m * weyl_dimension(lam, dual) for lam, m in cc.coeffs.items())
    rhs = 1
    for w in _shifted(cc.base, cc.rho):
        rhs *= weyl_dimension(w, dual)
    return lhs, rhs


def cycle_report(h: HodgeType, rd: RootDatum, cc: CycleCoefficients | None, bounds: BoundsReport) -> dict:
    out = {"hodge_type": h.to_json(), "gates": bounds.to_json(), "dimensions": dimension_tally(h, rd)}
    if cc is not None:
        e = h.e
        rows = []
        for lam, m in cc.coeffs.items():
            shifted = tuple(x + e * r for x, r in zip(lam, cc.rho))
            rows.append({
                "lambda": _fmt(lam),
                "m": m,
                "cycle_dim": cycle_dimension(shifted, e, rd),
                "schubert_dim": schubert_dimension(shifted, rd),
            })
        top = cc.leading_weight
        out["rho"] = _fmt(cc.rho)
        out["coefficients"] = rows
        out["leading_term"] = {"lambda": _fmt(top), "m": cc.coeffs.get(top, 0), "ok": cc.coeffs.get(top) == 1}
    return out


def coefficients_from_report(d: dict) -> CycleCoefficients:
    """Re-parse the coefficient part of a cycle report."""
    h = HodgeType.from_json(d["hodge_type"])
    coeffs = {parse_weight(r["lambda"]): int(r["m"]) for r in d["coefficients"]}
    return CycleCoefficients(dict(sorted(coeffs.items(), reverse=True)), h, parse_weight(d["rho"]))


__all__ = [
    "HodgeType", "BoundsReport", "CycleCoefficients", "NoTwistingElement", "BoundViolation",
    "check_bounds", "check_bounds_product", "enumerate_dominant_below", "coweights_below",
    "bm_coefficients", "cycle_dimension", "schubert_dimension", "dimension_tally",
    "dimension_bookkeeping", "cycle_report", "coefficients_from_report", "parse_weight", "dominance_leq",
]

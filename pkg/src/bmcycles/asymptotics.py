"""Finite checks of the antisymmetrized identity and of polynomial growth."""

from __future__ import annotations

from dataclasses import dataclass

from .charring import CharacterElement, antisymmetrize, l1_norm, weyl_character
from .coefficients import CycleCoefficients, HodgeType
from .rootdata import RootDatum, p_map

N_CAP = 12


def _scale(v, n):
    return tuple(n * x for x in v)


def _plus(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _check_match(h: HodgeType, cc: CycleCoefficients):
    if cc.base.mus != h.mus or cc.base.e != h.e:
        raise ValueError("cycle coefficients were computed for a different Hodge type")


def antisym_difference(h: HodgeType, cc: CycleCoefficients, n: int, rd: RootDatum) -> CharacterElement:
    """prod A(n mu_i) - sum m_lam A(n(lam + rho)) A(n rho)^(e-1), in Z[X_*(T)]."""
    _check_match(h, cc)
    if n < 1:
        raise ValueError("n must be positive")
    dual = rd.dual()
    lhs = CharacterElement.one(rd.dim)
    for m in h.mus:
        lhs = lhs * antisymmetrize(_scale(m, n), dual)
    tail = antisymmetrize(_scale(cc.rho, n), dual) ** (h.e - 1)
    rhs = CharacterElement.zero(rd.dim)
    for lam, m in cc.coeffs.items():
        rhs = rhs + (antisymmetrize(_scale(_plus(lam, cc.rho), n), dual) * tail).scale(m)
    return lhs - rhs


def exact_antisym_identity(h: HodgeType, cc: CycleCoefficients, n: int, rd: RootDatum) -> bool:
    return not antisym_difference(h, cc, n, rd)


def difference_element(h: HodgeType, cc: CycleCoefficients, n: int, rd: RootDatum) -> CharacterElement:
    """prod W(p(n mu_i)) - sum m_lam W(p(n(lam+rho))) W(p(n rho))^(e-1), weight side."""
    _check_match(h, cc)
    lhs = CharacterElement.one(rd.dim)
    for m in h.mus:
        lhs = lhs * weyl_character(p_map(_scale(m, n), rd), rd)
    tail = weyl_character(p_map(_scale(cc.rho, n), rd), rd) ** (h.e - 1)
    rhs = CharacterElement.zero(rd.dim)
    for lam, m in cc.coeffs.items():
        rhs = rhs + (weyl_character(p_map(_scale(_plus(lam, cc.rho), n), rd), rd) * tail).scale(m)
    return lhs - rhs


def difference_norm_sequence(h: HodgeType, cc: CycleCoefficients, n_max: int, rd: RootDatum, cap: int = N_CAP):
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > cap:
        raise ValueError(f"n_max {n_max} exceeds cap {cap}")
    return [l1_norm(difference_element(h, cc, n, rd)) for n in range(1, n_max + 1)]


def forward_differences(seq, d: int):
    s = list(seq)
    for _ in range(d):
        s = [b - a for a, b in zip(s, s[1:])]
    return s


@dataclass(frozen=True)
class DegreeVerdict:
    consistent: bool
    verdict: str
    d: int
    differences: tuple

    def to_json(self):
        return {"consistent": self.consistent, "verdict": self.verdict, "d": self.d,
                "differences": list(self.differences)}


def degree_estimate(seq, d: int) -> DegreeVerdict:
    """Heuristic test that seq grows like a polynomial of degree < d.

    Consistent iff |d-th forward differences| never increase and the last
    one is 0 or strictly smaller than the first.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if len(seq) < d + 2:
        raise ValueError(f"insufficient data: need at least {d + 2} terms, got {len(seq)}")
    diffs = forward_differences(seq, d)
    mags = [abs(x) for x in diffs]
    ok = all(b <= a for a, b in zip(mags, mags[1:])) and (mags[-1] == 0 or mags[-1] < mags[0])
    return DegreeVerdict(ok, f"consistent with degree < {d}" if ok else "inconsistent", d, tuple(diffs))

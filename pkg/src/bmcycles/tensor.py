"""Tensor products of Weyl modules in the Grothendieck group (weight side)."""

from __future__ import annotations

from .charring import CharacterElement, weyl_character, weyl_dimension
from .rootdata import RootDatum


def straighten(nu, rd: RootDatum):
    """Dot-action straightening: None, or (sign, dominant weight).

    Works with 2*rho, so no twisting element is needed: x = 2(nu + rho) is
    reflected into the dominant chamber; a wall hit means zero.
    """
    x = tuple(2 * a + r for a, r in zip(nu, rd.two_rho))
    dom, flips = rd.dominant_representative(x)
    if not rd.is_dominant_weight(dom, strict=True):
        return None
    shifted = tuple(a - r for a, r in zip(dom, rd.two_rho))
    assert all(v % 2 == 0 for v in shifted)
    return (-1) ** flips, tuple(v // 2 for v in shifted)


def _require_dominant(ws, rd):
    for w in ws:
        if not rd.is_dominant_weight(w):
            raise ValueError(f"weight {tuple(w)} is not dominant")


def product_decompose(a, b, rd: RootDatum) -> dict:
    """Brauer-Klimyk: multiplicities of W(nu) in W(a) (x) W(b)."""
    a, b = tuple(a), tuple(b)
    _require_dominant((a, b), rd)
    if weyl_dimension(a, rd) > weyl_dimension(b, rd):
        a, b = b, a
    out = {}
    for eta, m in weyl_character(a, rd).terms.items():
        s = straighten(tuple(x + y for x, y in zip(eta, b)), rd)
        if s is None:
            continue
        sign, nu = s
        out[nu] = out.get(nu, 0) + sign * m
    out = {k: v for k, v in out.items() if v}
    if any(v < 0 for v in out.values()):
        raise ArithmeticError(f"negative tensor multiplicity in {a} x {b}: {out}")
    return dict(sorted(out.items(), reverse=True))


def multi_tensor_decompose(ws, rd: RootDatum) -> dict:
    """Left fold of product_decompose; the empty product is {0: 1}."""
    ws = [tuple(w) for w in ws]
    _require_dominant(ws, rd)
    acc = {(0,) * rd.dim: 1}
    for w in ws:
        nxt = {}
        for nu, m in acc.items():
            for lam, k in product_decompose(nu, w, rd).items():
                nxt[lam] = nxt.get(lam, 0) + m * k
        acc = nxt
    return dict(sorted(acc.items(), reverse=True))


def decompose_character(x: CharacterElement, rd: RootDatum) -> dict:
    """Write a W-invariant character as a Z-combination of Weyl characters.

    Greedy: peel off the character of a highest remaining weight.
    """
    rest = CharacterElement(dict(x.terms), x.lattice_dim)
    out = {}
    while rest:
        top = max(rest.terms, key=lambda w: (rd.weight_height(w), w))
        if not rd.is_dominant_weight(top):
            raise ValueError(f"character is not Weyl-invariant (top weight {top})")
        c = rest.terms[top]
        out[top] = c
        rest = rest - weyl_character(top, rd).scale(c)
    return dict(sorted(out.items(), reverse=True))


def character_product_decompose(ws, rd: RootDatum) -> dict:
    """Oracle route: multiply full characters, then decompose greedily."""
    prod = CharacterElement.one(rd.dim)
    for w in ws:
        prod = prod * weyl_character(tuple(w), rd)
    return decompose_character(prod, rd)

import itertools
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_dominant_below

from bmcycles.coefficients import (
    BoundViolation,
    HodgeType,
    NoTwistingElement,
    bm_coefficients,
    check_bounds,
    check_bounds_product,
    coefficients_from_report,
    coweights_below,
    cycle_dimension,
    cycle_report,
    dimension_bookkeeping,
    enumerate_dominant_below,
    schubert_dimension,
)
from bmcycles.rootdata import build_root_datum, dominance_leq, dominance_predicates

GL2 = build_root_datum("GL2")
GL3 = build_root_datum("GL3")


def test_check_bounds_examples():
    r = check_bounds(HodgeType(2, ((2, 0), (2, 0)), 5), GL2)
    assert r.gateA1 and r.gateA2 and r.max_pairing_sum == 4
    r = check_bounds(HodgeType(2, ((3, 0), (2, 0)), 3), GL2)
    assert not r.gateA1 and not r.gateA2


def test_check_bounds_char_zero_vacuous():
    r = check_bounds(HodgeType(1, ((40, 0),)), GL2)
    assert r.gate("all")


def test_gate_nu_is_rational():
    # (p-1)/nu + 1 with p=7, nu=4 is 5/2
    r = check_bounds(HodgeType(1, ((3, 0),), 7, 4), GL2)
    assert r.gateA2 and not r.gateNu
    r = check_bounds(HodgeType(1, ((3, 0),), 7, 3), GL2)
    assert r.gateNu


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=3),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_gate_a2_gl_reading(mus, p):
    mus = [tuple(sorted(m, reverse=True)) for m in mus]
    r = check_bounds(HodgeType(len(mus), tuple(mus), p), GL3)
    assert r.gateA2 == (sum(m[0] - m[-1] for m in mus) <= p)


def test_dominance_flags():
    r = check_bounds(HodgeType(2, ((2, 0), (1, 1))), GL2)
    assert r.dominant == (True, True)
    assert r.strictly_dominant == (True, False)


def test_product_bounds():
    hs = [HodgeType(1, ((2, 0),), 3), HodgeType(1, ((4, 0),), 3)]
    r = check_bounds_product(hs, GL2)
    assert r.gateA1 is False and r.max_pairing_sum == 4
    assert check_bounds_product(hs[:1], GL2).gateA2


def test_enumerate_examples():
    assert enumerate_dominant_below((2, 0), GL2) == [(2, 0), (1, 1)]
    assert enumerate_dominant_below((2, 1, 0), GL3) == [(2, 1, 0), (1, 1, 1)]
    assert enumerate_dominant_below((0, 0), GL2) == [(0, 0)]
    with pytest.raises(ValueError):
        enumerate_dominant_below((0, 2), GL2)


@pytest.mark.parametrize("name", ["GL3", "GL4", "SO5", "Sp4", "PGL3"])
def test_enumerate_against_box_scan(name):
    rd = build_root_datum(name)
    doms = [w for w in itertools.product(range(-2, 4), repeat=rd.dim) if dominance_predicates(w, rd)[0]]
    for b in doms[:25]:
        assert sorted(enumerate_dominant_below(b, rd)) == brute_dominant_below(b, rd)


def test_bm_examples():
    assert bm_coefficients(HodgeType(2, ((2, 0), (2, 0))), GL2).coeffs == {(2, 0): 1, (1, 1): 1}
    assert bm_coefficients(HodgeType(2, ((3, 1, 0), (3, 1, 0))), GL3).coeffs == {(2, 0, 0): 1, (1, 1, 0): 1}
    assert bm_coefficients(HodgeType(1, ((2, 0),)), GL2).coeffs == {(1, 0): 1}


def test_bm_errors():
    with pytest.raises(NoTwistingElement, match="no twisting element"):
        bm_coefficients(HodgeType(1, ((3,),)), build_root_datum("SL2"))
    with pytest.raises(ValueError, match="strictly dominant"):
        bm_coefficients(HodgeType(2, ((2, 0), (1, 1))), GL2)
    h = HodgeType(2, ((3, 0), (2, 0)), 3)
    with pytest.raises(BoundViolation):
        bm_coefficients(h, GL2)
    with pytest.warns(UserWarning, match="override"):
        cc = bm_coefficients(h, GL2, override=True)
    assert cc.coeffs[cc.leading_weight] == 1


def test_oracle_route_agrees():
    for mus in [((3, 1, 0), (4, 1, 0)), ((2, 1, 0),) * 3, ((4, 2, 0), (3, 1, -1))]:
        h = HodgeType(len(mus), mus)
        assert bm_coefficients(h, GL3).coeffs == bm_coefficients(h, GL3, oracle=True).coeffs


def test_cycle_dimension_examples():
    assert cycle_dimension((4, 0), 2, GL2) == 2
    assert cycle_dimension((2, 2), 2, GL2) == 0
    assert cycle_dimension((2, 1, 0), 1, GL3) == 3


def test_schubert_dimension_examples():
    assert schubert_dimension((4, 0), GL2) == 4
    assert schubert_dimension((1, 0, -1), GL3) == 4
    for rd in (GL2, GL3, build_root_datum("SO5")):
        assert schubert_dimension((0,) * rd.dim, rd) == 0


strict_gl3 = st.tuples(st.integers(1, 3), st.integers(1, 3), st.integers(-1, 1)).map(
    lambda t: (t[2] + t[0] + t[1], t[2] + t[1], t[2]))


@given(st.lists(strict_gl3, min_size=1, max_size=3))
def test_bookkeeping_and_leading_term(mus):
    h = HodgeType(len(mus), tuple(mus))
    cc = bm_coefficients(h, GL3)
    lhs, rhs = dimension_bookkeeping(cc, GL3)
    assert lhs == rhs
    assert cc.coeffs[cc.leading_weight] == 1
    assert all(v > 0 and dominance_leq(k, cc.leading_weight, GL3) for k, v in cc.coeffs.items())


@given(strict_gl3)
def test_single_factor_degenerates(mu):
    cc = bm_coefficients(HodgeType(1, (mu,)), GL3)
    assert cc.coeffs == {tuple(x - r for x, r in zip(mu, cc.rho)): 1}


@pytest.mark.parametrize("mus", [((2, 0), (3, 0)), ((3, 1), (2, 0), (2, 1)), ((2, 1, 0), (3, 1, 0)), ((3, 1, 0),) * 3])
def test_top_dimensional_iff_dominant(mus):
    rd = GL2 if len(mus[0]) == 2 else GL3
    h = HodgeType(len(mus), mus)
    cc = bm_coefficients(h, rd)
    e = h.e
    top = e * len(rd.positive_roots)
    bound = cc.leading_weight
    dom = set(enumerate_dominant_below(bound, rd))
    for lam in coweights_below(bound, rd):
        shifted = tuple(x + e * r for x, r in zip(lam, cc.rho))
        assert (cycle_dimension(shifted, e, rd) == top) == (lam in dom)


def test_report_roundtrip():
    h = HodgeType(2, ((2, 0), (2, 0)), 5)
    cc = bm_coefficients(h, GL2)
    rep = cycle_report(h, GL2, cc, check_bounds(h, GL2))
    assert rep["leading_term"] == {"lambda": "2,0", "m": 1, "ok": True}
    assert [r["lambda"] for r in rep["coefficients"]] == ["2,0", "1,1"]
    assert rep["coefficients"][0]["cycle_dim"] == 2 and rep["coefficients"][0]["schubert_dim"] == 4
    back = coefficients_from_report(rep)
    assert back.coeffs == cc.coeffs and back.rho == cc.rho and back.base == h


def test_hodge_type_validation():
    with pytest.raises(ValueError):
        HodgeType(2, ((1, 0),))
    with pytest.raises(ValueError):
        HodgeType(0, ())
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        HodgeType(1, ((1, 0),), 5, 2)

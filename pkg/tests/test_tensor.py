import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import clebsch_gordan_gl2, pieri_gl3

from bmcycles.charring import CharacterElement, weyl_character, weyl_dimension
from bmcycles.rootdata import build_root_datum
from bmcycles.tensor import (
    character_product_decompose,
    decompose_character,
    multi_tensor_decompose,
    product_decompose,
    straighten,
)

GL2 = build_root_datum("GL2")
GL3 = build_root_datum("GL3")


def test_straighten_examples():
    assert straighten((0, 2), GL2) == (-1, (1, 1))
    assert straighten((0, 1), GL2) is None
    assert straighten((3, 0), GL2) == (1, (3, 0))


def test_straighten_without_integral_rho():
    # SL2 has no integral half-sum; straightening still works through 2*rho
    sl2 = build_root_datum("SL2")
    assert sl2.simple_roots == ((2,),)
    assert straighten((-1,), sl2) is None
    assert straighten((-2,), sl2) == (-1, (0,))
    assert straighten((-3,), sl2) == (-1, (1,))


def test_product_examples():
    assert product_decompose((1, 0), (1, 0), GL2) == {(2, 0): 1, (1, 1): 1}
    assert product_decompose((1, 0, 0), (1, 0, 0), GL3) == {(2, 0, 0): 1, (1, 1, 0): 1}
    for rd, lam in ((GL2, (3, 1)), (GL3, (2, 1, 0))):
        assert product_decompose(lam, (0,) * rd.dim, rd) == {lam: 1}


def test_multi_examples():
    assert multi_tensor_decompose([(1, 0)] * 3, GL2) == {(3, 0): 1, (2, 1): 2}
    assert multi_tensor_decompose([], GL2) == {(0, 0): 1}
    assert multi_tensor_decompose([(1, 1), (1, 0)], GL2) == {(2, 1): 1}


def test_rejects_nondominant():
    with pytest.raises(ValueError):
        product_decompose((0, 1), (1, 0), GL2)
    with pytest.raises(ValueError):
        multi_tensor_decompose([(1, 0), (0, 1)], GL2)


def test_adjoint_square_gl3():
    # sl3 adjoint squared: 27 + 10 + 10bar + 2*8 + 1
    got = product_decompose((1, 0, -1), (1, 0, -1), GL3)
    assert got == {(2, 0, -2): 1, (2, -1, -1): 1, (1, 1, -2): 1, (1, 0, -1): 2, (0, 0, 0): 1}


gl2_dom = st.tuples(st.integers(0, 6), st.integers(-2, 2)).map(lambda t: (t[1] + t[0], t[1]))


@given(gl2_dom, gl2_dom)
def test_clebsch_gordan(a, b):
    assert product_decompose(a, b, GL2) == clebsch_gordan_gl2(a, b)


gl3_dom = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(-1, 1)).map(
    lambda t: (t[2] + t[0] + t[1], t[2] + t[1], t[2]))


@given(gl3_dom)
def test_pieri(lam):
    assert product_decompose(lam, (1, 0, 0), GL3) == pieri_gl3(lam)


def _check_against_characters(ws, rd):
    got = multi_tensor_decompose(ws, rd)
    assert all(v > 0 for v in got.values())
    prod = CharacterElement.one(rd.dim)
    for w in ws:
        prod = prod * weyl_character(w, rd)
    total = CharacterElement.zero(rd.dim)
    for nu, m in got.items():
        total = total + weyl_character(nu, rd).scale(m)
    assert total == prod
    dims = 1
    for w in ws:
        dims *= weyl_dimension(w, rd)
    assert sum(m * weyl_dimension(nu, rd) for nu, m in got.items()) == dims
    top = tuple(map(sum, zip(*ws)))
    assert got[top] == 1


def test_character_oracle_gl2_exhaustive():
    for a, b in itertools.product(range(7), repeat=2):
        _check_against_characters([(a, 0), (b, 0)], GL2)


def test_character_oracle_gl3_exhaustive():
    ws = [(a + b, b, 0) for a, b in itertools.product(range(7), repeat=2) if a + b <= 6]
    for x, y in itertools.combinations_with_replacement(ws, 2):
        if weyl_dimension(x, GL3) * weyl_dimension(y, GL3) > 800:
            continue
        assert product_decompose(x, y, GL3) == character_product_decompose([x, y], GL3)


@pytest.mark.parametrize("name", ["SO5", "Sp4", "PGL3"])
def test_character_oracle_other_types(name):
    rd = build_root_datum(name)
    doms = [w for w in itertools.product(range(-2, 3), repeat=rd.dim) if rd.is_dominant_weight(w)]
    doms = [w for w in doms if weyl_dimension(w, rd) <= 20][:6]
    for x, y in itertools.combinations_with_replacement(doms, 2):
        _check_against_characters([x, y], rd)


@given(st.lists(gl3_dom, min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_order_independence(ws, rnd):
    ws = [w for w in ws if max(w) - min(w) <= 3]
    if not ws:
        return
    shuffled = list(ws)
    rnd.shuffle(shuffled)
    assert multi_tensor_decompose(ws, GL3) == multi_tensor_decompose(shuffled, GL3)


@given(gl2_dom, gl2_dom, gl2_dom)
def test_bracketing_independence(a, b, c):
    left = multi_tensor_decompose([a, b, c], GL2)
    bc = product_decompose(b, c, GL2)
    right = {}
    for nu, m in bc.items():
        for lam, k in product_decompose(a, nu, GL2).items():
            right[lam] = right.get(lam, 0) + m * k
    assert left == dict(sorted(right.items(), reverse=True))


def test_decompose_character_rejects_non_invariant():
    with pytest.raises(ValueError):
        decompose_character(CharacterElement.monomial((0, 1)), GL2)

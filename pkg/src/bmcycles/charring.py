"""Sparse integer group rings Z[X] and the Weyl/Kostant character formulas.

Everything here works on the weight side X*(T) of the datum passed in.
Characters of the dual group live on the weight side of ``rd.dual()``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .linalg import _invert, det_int
from .rootdata import RootDatum, dominant_weights_below

DENSE_THRESHOLD = 40_000


class CharacterElement:
    """Finitely supported map weight -> nonzero integer."""

    __slots__ = ("terms", "lattice_dim")

    def __init__(self, terms=None, lattice_dim: int | None = None):
        clean = {}
        for k, v in (terms or {}).items():
            v = int(v)
            if v:
                clean[tuple(int(x) for x in k)] = v
        if lattice_dim is None:
            if not clean:
                raise ValueError("lattice_dim needed for an empty element")
            lattice_dim = len(next(iter(clean)))
        self.terms = clean
        self.lattice_dim = lattice_dim

    @classmethod
    def monomial(cls, w, c: int = 1):
        return cls({tuple(w): c}, len(w))

    @classmethod
    def zero(cls, d: int):
        return cls({}, d)

    @classmethod
    def one(cls, d: int):
        return cls({(0,) * d: 1}, d)

    @classmethod
    def from_pairs(cls, pairs, d: int | None = None):
        out = {}
        for w, c in pairs:
            w = tuple(w)
            out[w] = out.get(w, 0) + int(c)
        return cls(out, d)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, w):
        return self.terms.get(tuple(w), 0)

    def _check(self, other):
        if other.lattice_dim != self.lattice_dim:
            raise ValueError("lattice dimensions differ")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return CharacterElement(out, self.lattice_dim)

    def __neg__(self):
        return CharacterElement({k: -v for k, v in self.terms.items()}, self.lattice_dim)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return CharacterElement({k: c * v for k, v in self.terms.items()}, self.lattice_dim)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        if len(self) * len(other) > DENSE_THRESHOLD:
            dense = _dense_product(self, other)
            if dense is not None:
                return dense
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(i + j for i, j in zip(a, b))
                out[k] = out.get(k, 0) + x * y
        return CharacterElement(out, self.lattice_dim)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not in the group ring")
        out = CharacterElement.one(self.lattice_dim)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CharacterElement):
            return NotImplemented
        return self.lattice_dim == other.lattice_dim and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_pairs(self):
        return [[list(w), c] for w, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e{w}" for w, c in self.sorted_terms())


def dilate(x: CharacterElement, n: int) -> CharacterElement:
    if n == 0:
        raise ValueError("dilation by 0 is not injective")
    return CharacterElement({tuple(n * a for a in w): c for w, c in x.terms.items()}, x.lattice_dim)


def l1_norm(x: CharacterElement) -> int:
    return sum(abs(c) for c in x.terms.values())


# -- dense products -----------------------------------------------------------

def _affine_chart(diffs):
    """Coordinate subset S and integer data (adj, det, B) with v = (v_S adj B) / det
    for every v in the rational span of ``diffs``."""
    r = np.linalg.matrix_rank(diffs.astype(np.float64)) if len(diffs) else 0
    if r == 0:
        return (), None
    rows = []
    for row in diffs:
        trial = rows + [row]
        if np.linalg.matrix_rank(np.array(trial, dtype=np.float64)) == len(trial):
            rows = trial
        if len(rows) == r:
            break
    B = np.array(rows, dtype=np.int64)
    cols = []
    for j in range(B.shape[1]):
        trial = cols + [j]
        if np.linalg.matrix_rank(B[:, trial].astype(np.float64)) == len(trial):
            cols = trial
        if len(cols) == r:
            break
    BS = B[:, cols].tolist()
    det = det_int(BS)
    inv = _invert([[int(x) for x in row] for row in BS])
    adj = np.array([[int(x * det) for x in row] for row in inv], dtype=np.int64)
    return tuple(cols), (adj, det, B)


def _kronecker_convolve(A, B):
    """Full N-d convolution via one 1-d integer convolution on flattened arrays."""
    out_shape = tuple(x + y - 1 for x, y in zip(A.shape, B.shape))
    if A.ndim == 1:
        return np.convolve(A, B)
    pa = np.zeros(out_shape, dtype=np.int64)
    pa[tuple(slice(0, s) for s in A.shape)] = A
    pb = np.zeros(out_shape, dtype=np.int64)
    pb[tuple(slice(0, s) for s in B.shape)] = B
    fa = np.trim_zeros(pa.ravel(), "b")
    fb = np.trim_zeros(pb.ravel(), "b")
    flat = np.zeros(int(np.prod(out_shape)), dtype=np.int64)
    c = np.convolve(fa, fb)
    flat[: len(c)] = c[: len(flat)]
    return flat.reshape(out_shape)


def _dense_product(a: CharacterElement, b: CharacterElement):
    # exact int64 convolution when coefficients are provably small enough
    ma = max(abs(v) for v in a.terms.values())
    mb = max(abs(v) for v in b.terms.values())
    if ma * mb * min(len(a), len(b)) >= 2**62:
        return None
    wa = np.array(list(a.terms), dtype=np.int64)
    wb = np.array(list(b.terms), dtype=np.int64)
    diffs = np.vstack([wa - wa[0], wb - wb[0]])
    S, chart = _affine_chart(diffs)
    if chart is None or len(S) > 4:
        return None
    arrays = []
    for ws, x in ((wa, a), (wb, b)):
        co = ws[:, S]
        lo = co.min(axis=0)
        shape = tuple(int(s) for s in co.max(axis=0) - lo + 1)
        if np.prod(shape, dtype=np.float64) > 2e7:
            return None
        arr = np.zeros(shape, dtype=np.int64)
        arr[tuple((co - lo).T)] = np.fromiter(x.terms.values(), dtype=np.int64, count=len(x))
        arrays.append((arr, lo))
    (A, la), (B, lb) = arrays
    C = _kronecker_convolve(A, B)
    idx = np.array(np.nonzero(C)).T
    if not len(idx):
        return CharacterElement.zero(a.lattice_dim)
    vals = C[tuple(idx.T)]
    base = wa[0] + wb[0]
    vS = idx + la + lb - base[list(S)]
    adj, det, Bm = chart
    num = vS @ adj @ Bm
    if np.any(num % det):
        return None
    full = num // det + base
    out = {tuple(int(v) for v in w): int(c) for w, c in zip(full, vals)}
    return CharacterElement(out, a.lattice_dim)


# -- Weyl group constructions --------------------------------------------------

def antisymmetrize(lam, rd: RootDatum) -> CharacterElement:
    """Signed Weyl orbit sum  sum_w (-1)^l(w) e(w lam)."""
    out = {}
    for w in rd.weyl:
        k = RootDatum.act(w.on_weights, lam)
        out[k] = out.get(k, 0) + w.sign
    return CharacterElement(out, rd.dim)


def _require_dominant(lam, rd):
    if not rd.is_dominant_weight(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")


def weyl_dimension(lam, rd: RootDatum) -> int:
    """Weyl dimension formula written with 2*rho so every pairing is integral."""
    lam = tuple(lam)
    _require_dominant(lam, rd)
    num = den = 1
    x = tuple(2 * a + r for a, r in zip(lam, rd.two_rho))
    for c in rd.positive_coroots:
        num *= rd.pair(x, c)
        den *= rd.pair(rd.two_rho, c)
    assert num % den == 0
    return num // den


class _KostantTable:
    """Memoised Kostant partition counts keyed on simple-root coordinates."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        self.pos = rd.positive_root_coords
        self.memo = {}

    def count(self, coords) -> int:
        if any(c < 0 for c in coords):
            return 0
        return self._count(tuple(coords), len(self.pos))

    def _count(self, c, k):
        if not any(c):
            return 1
        if k == 0:
            return 0
        key = (c, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        beta = self.pos[k - 1]
        total = 0
        cur = c
        while all(x >= 0 for x in cur):
            total += self._count(cur, k - 1)
            cur = tuple(x - b for x, b in zip(cur, beta))
        self.memo[key] = total
        return total


@lru_cache(maxsize=None)
def _kostant_table(rd: RootDatum) -> _KostantTable:
    return _KostantTable(rd)


def kostant_partition(mu, rd: RootDatum) -> int:
    """Number of ways to write mu as a nonnegative sum of positive roots."""
    c = rd.root_coords.int_coords(tuple(mu))
    if c is None:
        return 0
    return _kostant_table(rd).count(c)


def _kostant_from_doubled(diff2, rd, table):
    # diff2 = 2 * (target); halve in simple-root coordinates
    c = rd.root_coords.coords(diff2)
    if c is None:
        return 0
    half = []
    for x in c:
        if x.denominator != 1 or x.numerator % 2:
            return 0
        half.append(x.numerator // 2)
    return table.count(half)


def kostant_multiplicity(lam, eta, rd: RootDatum) -> int:
    """Multiplicity of eta in W(lam) by Kostant's alternating sum."""
    lam = tuple(lam)
    _require_dominant(lam, rd)
    return _kostant_mult(lam, tuple(eta), rd)


def _kostant_mult(lam, eta, rd):
    table = _kostant_table(rd)
    top = np.array([2 * a + r for a, r in zip(lam, rd.two_rho)], dtype=np.int64)
    base = np.array([2 * a + r for a, r in zip(eta, rd.two_rho)], dtype=np.int64)
    total = 0
    for w in rd.weyl:
        d = w.on_weights @ top - base
        total += w.sign * _kostant_from_doubled(tuple(int(x) for x in d), rd, table)
    return total


@lru_cache(maxsize=4096)
def _weyl_character_cached(lam, rd):
    out = {}
    W = rd.weyl_weight_stack[0]
    for eta in dominant_weights_below(lam, rd):
        m = _kostant_mult(lam, eta, rd)
        if m == 0:
            continue
        orbit = {tuple(int(x) for x in v) for v in W @ np.array(eta, dtype=np.int64)}
        for v in orbit:
            out[v] = m
    return CharacterElement(out, rd.dim)


def weyl_character(lam, rd: RootDatum) -> CharacterElement:
    """Character of the Weyl module W(lam), assembled from Kostant multiplicities."""
    lam = tuple(lam)
    _require_dominant(lam, rd)
    return _weyl_character_cached(lam, rd)

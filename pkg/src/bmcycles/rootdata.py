"""Split reductive root data, Weyl groups and dominance.

Both lattices are concrete ``Z^d``.  ``roots`` live in the character lattice
X*(T), ``coroots`` in the cocharacter lattice X_*(T), and a single integer
matrix ``pairing`` gives <x, y> = x^T P y for x in X*(T), y in X_*(T).

Functions named ``*_weight`` act on X*(T); plain operations on "coweights"
act on X_*(T).  ``rd.dual()`` swaps the two sides, so every weight-side
routine doubles as a coweight routine of the dual datum.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from .linalg import LatticeCoords, det_int, integer_solve

WEYL_CAP = 10**6
POLYTOPE_CAP = 2 * 10**6


class WeylCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class WeylElement:
    on_weights: np.ndarray  # acts on column vectors of X*(T)
    on_coweights: np.ndarray
    length: int
    word: tuple

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1


@dataclass(frozen=True, eq=False)
class RootDatum:
    pairing: tuple
    roots: tuple
    coroots: tuple
    simple_indices: tuple
    name: str = ""
    weyl_cap: int = WEYL_CAP
    _dual: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        d = len(self.pairing)
        if any(len(r) != d for r in self.pairing):
            raise ValueError("pairing matrix must be square")
        if d and abs(det_int(self.pairing)) != 1:
            raise ValueError("pairing matrix must be unimodular (perfect pairing)")
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must be in bijection")
        for a, c in zip(self.roots, self.coroots):
            if len(a) != d or len(c) != d:
                raise ValueError("root/coroot vectors must have lattice dimension")
            if self.pair(a, c) != 2:
                raise ValueError(f"<root, coroot> = {self.pair(a, c)} != 2 for root {a}")
        n = len(self.simple_indices)
        for i, j in itertools.product(range(n), repeat=2):
            v = self.cartan[i][j]
            if i == j:
                continue
            if v > 0 or (v == 0) != (self.cartan[j][i] == 0):
                raise ValueError(f"simple pairings do not form a generalized Cartan matrix: {self.cartan}")
        rset = set(self.roots)
        cset = set(self.coroots)
        for a, c in zip(self.roots, self.coroots):
            for b in self.roots:
                if self.reflect_weight(b, a, c) not in rset:
                    raise ValueError(f"reflection in {a} does not permute the roots")
            for b in self.coroots:
                if self.reflect_coweight(b, a, c) not in cset:
                    raise ValueError(f"reflection in {c} does not permute the coroots")
        # positivity must be decidable from the simple roots
        self.positive_indices  # noqa: B018

    # -- basic linear algebra ---------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.pairing)

    char_lattice_dim = dim

    @property
    def rank(self) -> int:
        return len(self.simple_indices)

    @cached_property
    def _P(self):
        return np.array(self.pairing, dtype=np.int64).reshape(self.dim, self.dim)

    def pair(self, x, y) -> int:
        P = self.pairing
        return sum(x[i] * P[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])

    def reflect_weight(self, x, a, c):
        k = self.pair(x, c)
        return tuple(xi - k * ai for xi, ai in zip(x, a))

    def reflect_coweight(self, y, a, c):
        k = self.pair(a, y)
        return tuple(yi - k * ci for yi, ci in zip(y, c))

    @cached_property
    def simple_roots(self):
        return tuple(self.roots[i] for i in self.simple_indices)

    @cached_property
    def simple_coroots(self):
        return tuple(self.coroots[i] for i in self.simple_indices)

    @cached_property
    def cartan(self):
        return tuple(tuple(self.pair(a, c) for a in self.simple_roots) for c in self.simple_coroots)

    @cached_property
    def root_coords(self) -> LatticeCoords:
        return LatticeCoords(self.simple_roots)

    @cached_property
    def coroot_coords(self) -> LatticeCoords:
        return LatticeCoords(self.simple_coroots)

    @cached_property
    def positive_indices(self):
        pos = []
        for i, a in enumerate(self.roots):
            c = self.root_coords.int_coords(a)
            if c is None:
                raise ValueError(f"root {a} is not an integral combination of simple roots")
            if all(x >= 0 for x in c):
                pos.append(i)
            elif not all(x <= 0 for x in c):
                raise ValueError(f"root {a} is neither positive nor negative")
        return tuple(pos)

    @cached_property
    def positive_roots(self):
        return tuple(self.roots[i] for i in self.positive_indices)

    @cached_property
    def positive_coroots(self):
        return tuple(self.coroots[i] for i in self.positive_indices)

    @cached_property
    def positive_root_coords(self):
        return tuple(self.root_coords.int_coords(a) for a in self.positive_roots)

    @cached_property
    def two_rho(self):
        """Sum of the positive roots (twice the half-sum), in X*(T)."""
        return tuple(sum(col) for col in zip(*self.positive_roots)) if self.positive_roots else (0,) * self.dim

    @property
    def rho_vee_half(self):
        """The half-sum of positive roots, stored doubled (divide by 2 on use)."""
        return self.two_rho

    @cached_property
    def two_rho_check(self):
        """Sum of the positive coroots, in X_*(T)."""
        return tuple(sum(col) for col in zip(*self.positive_coroots)) if self.positive_coroots else (0,) * self.dim

    # -- Weyl group -------------------------------------------------------
    def _simple_matrices(self):
        P = self._P
        out = []
        for a, c in zip(self.simple_roots, self.simple_coroots):
            a_ = np.array(a, dtype=np.int64).reshape(-1, 1)
            c_ = np.array(c, dtype=np.int64).reshape(-1, 1)
            on_w = np.eye(self.dim, dtype=np.int64) - a_ @ (P @ c_).T
            on_cw = np.eye(self.dim, dtype=np.int64) - c_ @ (a_.T @ P)
            out.append((on_w, on_cw))
        return out

    @cached_property
    def weyl(self):
        """All Weyl elements, breadth first from the identity (so lengths are exact)."""
        gens = self._simple_matrices()
        e = WeylElement(np.eye(self.dim, dtype=np.int64), np.eye(self.dim, dtype=np.int64), 0, ())
        seen = {e.on_weights.tobytes(): e}
        queue = deque([e])
        out = [e]
        while queue:
            w = queue.popleft()
            for i, (sw, scw) in enumerate(gens):
                m = w.on_weights @ sw
                key = m.tobytes()
                if key in seen:
                    continue
                x = WeylElement(m, w.on_coweights @ scw, w.length + 1, w.word + (i,))
                seen[key] = x
                out.append(x)
                queue.append(x)
                if len(out) > self.weyl_cap:
                    raise WeylCapExceeded(f"Weyl group larger than cap {self.weyl_cap}")
        for w in out:
            w.on_weights.setflags(write=False)
            w.on_coweights.setflags(write=False)
        return tuple(out)

    @cached_property
    def longest(self) -> WeylElement:
        return max(self.weyl, key=lambda w: w.length)

    @cached_property
    def weyl_weight_stack(self):
        """(|W|, d, d) stack of weight-side matrices and matching signs."""
        return np.stack([w.on_weights for w in self.weyl]), np.array([w.sign for w in self.weyl], dtype=np.int64)

    @staticmethod
    def act(mat, v):
        return tuple(int(x) for x in mat @ np.asarray(v, dtype=np.int64))

    # -- dominance on the weight side -------------------------------------
    def is_dominant_weight(self, x, strict=False) -> bool:
        lo = 1 if strict else 0
        return all(self.pair(x, c) >= lo for c in self.simple_coroots)

    def weight_leq(self, a, b) -> bool:
        diff = tuple(y - x for x, y in zip(a, b))
        c = self.root_coords.int_coords(diff)
        return c is not None and all(v >= 0 for v in c)

    def dominant_representative(self, x):
        """(dominant W-conjugate of x, parity of the reflections used)."""
        x = tuple(x)
        flips = 0
        while True:
            for a, c in zip(self.simple_roots, self.simple_coroots):
                k = self.pair(x, c)
                if k < 0:
                    x = tuple(xi - k * ai for xi, ai in zip(x, a))
                    flips += 1
                    break
            else:
                return x, flips

    def weight_height(self, x) -> int:
        return self.pair(x, self.two_rho_check)

    # -- duality ------------------------------------------------------------
    def dual(self) -> RootDatum:
        if self._dual is None:
            P = tuple(tuple(self.pairing[j][i] for j in range(self.dim)) for i in range(self.dim))
            d = RootDatum(P, self.coroots, self.roots, self.simple_indices, _dual_name(self.name), self.weyl_cap, self)
            object.__setattr__(self, "_dual", d)
        return self._dual

    def describe(self) -> dict:
        return {
            "pairing": [list(r) for r in self.pairing],
            "roots": [list(a) for a in self.roots],
            "coroots": [list(c) for c in self.coroots],
            "simple": list(self.simple_indices),
        }

    def __repr__(self):
        return f"RootDatum({self.name or 'custom'}, dim={self.dim}, roots={len(self.roots)})"


def _dual_name(name):
    swaps = {"GL": "GL", "SL": "PGL", "PGL": "SL", "Sp": "SO", "SO": "Sp"}
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name or "")
    if not m or m.group(1) not in swaps:
        return f"dual({name})" if name else ""
    t, n = m.groups()
    n = int(n)
    if t == "Sp":
        return f"SO{n + 1}"
    if t == "SO":
        return f"Sp{n - 1}"
    return f"{swaps[t]}{n}"


# -- named data ---------------------------------------------------------------

def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def _gl(n: int) -> RootDatum:
    roots, simple = [], []
    for i, j in itertools.permutations(range(n), 2):
        v = tuple(_unit(n, i)[k] - _unit(n, j)[k] for k in range(n))
        if j == i + 1:
            simple.append(len(roots))
        roots.append(v)
    I = tuple(_unit(n, i) for i in range(n))
    return RootDatum(I, tuple(roots), tuple(roots), tuple(simple), f"GL{n}")


def _pgl(n: int) -> RootDatum:
    if n < 2:
        raise ValueError("PGL_n needs n >= 2")
    m = n - 1
    roots, coroots, simple = [], [], []
    for i, j in itertools.permutations(range(n), 2):
        full = [int(k == i) - int(k == j) for k in range(n)]
        roots.append(tuple(full[:m]))
        coroots.append(tuple(full[k] - full[m] for k in range(m)))
        if j == i + 1:
            simple.append(len(roots) - 1)
    I = tuple(_unit(m, i) for i in range(m))
    return RootDatum(I, tuple(roots), tuple(coroots), tuple(simple), f"PGL{n}")


def _sp(n2: int) -> RootDatum:
    if n2 % 2 or n2 < 2:
        raise ValueError("Sp needs an even size 2n >= 2")
    n = n2 // 2
    roots, coroots, simple = [], [], []
    e = [_unit(n, i) for i in range(n)]

    def add(r, c, is_simple=False):
        if is_simple:
            simple.append(len(roots))
        roots.append(tuple(r))
        coroots.append(tuple(c))

    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [si * e[i][k] + sj * e[j][k] for k in range(n)]
            add(v, v, is_simple=(si == 1 and sj == -1 and j == i + 1))
    for i in range(n):
        for s in (1, -1):
            add([2 * s * x for x in e[i]], [s * x for x in e[i]], is_simple=(s == 1 and i == n - 1))
    I = tuple(e)
    return RootDatum(I, tuple(roots), tuple(coroots), tuple(simple), f"Sp{n2}")


def build_root_datum(spec, weyl_cap: int = WEYL_CAP) -> RootDatum:
    """Build a root datum from a named type or explicit data.

    Accepts ``("GL", 3)``, ``"GL3"``, ``{"type": "GL", "n": 3}``, the same
    wrapped as ``{"group": ...}``, or ``{"pairing", "roots", "coroots", "simple"}``.
    Named types: GL n, SL n, PGL n, Sp 2n, SO 2n+1.
    """
    if isinstance(spec, RootDatum):
        return spec
    if isinstance(spec, dict) and "group" in spec:
        spec = spec["group"]
    if isinstance(spec, str):
        m = re.fullmatch(r"\s*([A-Za-z]+)[\s_(]*(\d+)\)?\s*", spec)
        if not m:
            raise ValueError(f"cannot parse group name {spec!r}")
        spec = (m.group(1), int(m.group(2)))
    if isinstance(spec, dict) and "type" in spec:
        spec = (spec["type"], int(spec["n"]))
    if isinstance(spec, (tuple, list)) and len(spec) == 2 and isinstance(spec[0], str):
        t, n = spec[0].upper(), int(spec[1])
        if n < 1:
            raise ValueError("group size must be positive")
        if t == "GL":
            rd = _gl(n)
        elif t == "PGL":
            rd = _pgl(n)
        elif t == "SL":
            if n < 2:
                raise ValueError("SL_n needs n >= 2")
            rd = _pgl(n).dual()
        elif t == "SP":
            rd = _sp(n)
        elif t == "SO":
            if n % 2 == 0:
                raise ValueError("only odd orthogonal groups SO(2n+1) are built in")
            rd = _sp(n - 1).dual()
        else:
            raise ValueError(f"unknown group type {spec[0]!r}")
        if weyl_cap != WEYL_CAP:
            rd = RootDatum(rd.pairing, rd.roots, rd.coroots, rd.simple_indices, rd.name, weyl_cap)
        rd.weyl  # noqa: B018  enumerate eagerly so the cap is enforced at build time
        return rd
    if isinstance(spec, dict) and "pairing" in spec:
        def vecs(key):
            return tuple(tuple(int(x) for x in v) for v in spec[key])

        P = vecs("pairing")
        rd = RootDatum(P, vecs("roots"), vecs("coroots"), tuple(int(i) for i in spec["simple"]),
                       spec.get("name", ""), weyl_cap)
        rd.weyl  # noqa: B018
        return rd
    raise ValueError(f"unrecognised group description {spec!r}")


# -- coweight-side operations --------------------------------------------------

def dominance_predicates(a, rd: RootDatum):
    """(dominant, strictly dominant) for a coweight."""
    pairs = [rd.pair(r, a) for r in rd.simple_roots]
    return all(p >= 0 for p in pairs), all(p >= 1 for p in pairs)


def dominance_leq(a, b, rd: RootDatum) -> bool:
    """a <= b: b - a is a nonnegative integer combination of simple coroots."""
    diff = tuple(y - x for x, y in zip(a, b))
    c = rd.coroot_coords.int_coords(diff)
    return c is not None and all(v >= 0 for v in c)


def p_map(a, rd: RootDatum):
    """Sum over all roots of <root, a> * root; a coweight goes to a weight."""
    out = [0] * rd.dim
    for r in rd.roots:
        k = rd.pair(r, a)
        if k:
            for i, x in enumerate(r):
                out[i] += k * x
    return tuple(out)


def act_coweight(w: WeylElement, a):
    return RootDatum.act(w.on_coweights, a)


def act_weight(w: WeylElement, x):
    return RootDatum.act(w.on_weights, x)


def twisting_element(rd: RootDatum):
    """A coweight pairing to 1 with every simple root, or None.

    Choice rule: prefer nonnegative solutions of least coordinate sum, else
    least sum of absolute values; among the optimal vectors take the
    lexicographically largest.  GL_n gives (n-1, ..., 1, 0).
    """
    if rd.rank == 0:
        return (0,) * rd.dim
    A = [list(_row_pairing(rd, r)) for r in rd.simple_roots]
    sol = integer_solve(A, [1] * rd.rank)
    if sol is None:
        return None
    x0, kernel = sol
    if not kernel:
        return tuple(x0)
    best = _lexmax_l1(A, nonneg=True, dim=rd.dim)
    if best is None:
        best = _lexmax_l1(A, nonneg=False, dim=rd.dim)
    if best is None or any(sum(a * x for a, x in zip(row, best)) != 1 for row in A):
        return tuple(x0)
    return tuple(best)


def _row_pairing(rd, r):
    # coefficients c with <r, y> = c . y
    return tuple(sum(r[i] * rd.pairing[i][j] for i in range(rd.dim)) for j in range(rd.dim))


def _lexmax_l1(A, nonneg: bool, dim: int):
    """Integer program: minimise the L1 norm subject to A x = 1, then
    lexicographically maximise coordinates with the norm fixed."""
    m = len(A)
    A = np.array(A, dtype=float)
    if nonneg:
        nv = dim
        Aeq = A
        bounds = Bounds(np.zeros(nv), np.full(nv, np.inf))
        norm = np.ones(nv)

        def value(x):
            return [int(round(v)) for v in x[:dim]]
    else:
        # x = p - q with p, q >= 0
        nv = 2 * dim
        Aeq = np.hstack([A, -A])
        bounds = Bounds(np.zeros(nv), np.full(nv, np.inf))
        norm = np.ones(nv)

        def value(x):
            return [int(round(a - b)) for a, b in zip(x[:dim], x[dim:])]
    integ = np.ones(nv)
    cons = [LinearConstraint(Aeq, np.ones(m), np.ones(m))]
    res = milp(norm, constraints=cons, integrality=integ, bounds=bounds)
    if res.status != 0:
        return None
    opt = round(res.fun)
    cons.append(LinearConstraint(norm.reshape(1, -1), opt, opt))
    fixed = []
    for k in range(dim):
        obj = np.zeros(nv)
        obj[k] = -1.0
        if not nonneg:
            obj[dim + k] = 1.0
        res = milp(obj, constraints=cons + fixed, integrality=integ, bounds=bounds)
        if res.status != 0:
            return None
        xk = value(res.x)[k]
        row = np.zeros(nv)
        row[k] = 1.0
        if not nonneg:
            row[dim + k] = -1.0
        fixed.append(LinearConstraint(row.reshape(1, -1), xk, xk))
    return value(res.x)


# -- polytopes ----------------------------------------------------------------

def weights_below(bound, rd: RootDatum, cap: int = POLYTOPE_CAP):
    """All weights x (weight side) whose dominant conjugate is <= bound.

    Breadth-first subtraction of simple roots from ``bound``; this is the
    weight set of the Weyl module of highest weight ``bound``.
    """
    bound = tuple(bound)
    if not rd.is_dominant_weight(bound):
        raise ValueError(f"bound {bound} is not dominant")
    seen = {bound}
    queue = deque([bound])
    while queue:
        x = queue.popleft()
        for a in rd.simple_roots:
            y = tuple(xi - ai for xi, ai in zip(x, a))
            if y in seen:
                continue
            dom, _ = rd.dominant_representative(y)
            if rd.weight_leq(dom, bound):
                seen.add(y)
                queue.append(y)
                if len(seen) > cap:
                    raise ValueError(f"weight polytope exceeds cap {cap}")
    return seen


def dominant_weights_below(bound, rd: RootDatum, cap: int = POLYTOPE_CAP):
    """Dominant weights <= bound, highest first."""
    bound = tuple(bound)
    if not rd.is_dominant_weight(bound):
        raise ValueError(f"bound {bound} is not dominant")
    out = [x for x in weights_below(bound, rd, cap) if rd.is_dominant_weight(x)]
    out.sort(key=lambda x: (rd.weight_height(x), x), reverse=True)
    return out

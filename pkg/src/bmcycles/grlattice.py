"""GL_n lattice model of the affine Grassmannian over F((u)) / F[u].

Lattices are column spans of invertible :class:`SeriesMatrix` generators.
Special-fibre mode works locally at u = 0 with E = u^e and allows truncated
entries.  Generic-fibre mode uses distinct points pi_i, E = prod (u - pi_i),
and needs exact polynomial entries.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .fields import GF, QQ, Field, parse_scalar
from .series import PrecisionError, Series, SeriesMatrix


def default_precision(e: int, max_pairing: int) -> int:
    return 2 * (e + max_pairing) + 4


@dataclass(frozen=True)
class EConfig:
    e: int
    pis: tuple
    special: bool
    field: Field

    def __post_init__(self):
        if self.e < 1:
            raise ValueError("e must be positive")
        pis = tuple(self.field(p) for p in self.pis)
        object.__setattr__(self, "pis", pis)
        if len(pis) != self.e:
            raise ValueError(f"need {self.e} points, got {len(pis)}")
        if self.special:
            if any(pis):
                raise ValueError("special fibre means every pi_i = 0")
        elif len(set(pis)) != len(pis):
            raise ValueError("points pi_i must be pairwise distinct")

    @classmethod
    def special_fibre(cls, e: int, field: Field = QQ):
        return cls(e, (0,) * e, True, field)

    @classmethod
    def generic(cls, pis, field: Field = QQ):
        return cls(len(pis), tuple(pis), False, field)

    @property
    def E(self) -> Series:
        out = Series.one(self.field)
        for p in self.pis:
            out = out * Series(self.field, {1: 1, 0: -p})
        return out


@dataclass(frozen=True)
class Lattice:
    gens: SeriesMatrix

    @property
    def n(self):
        return self.gens.n


def _as_matrix(X) -> SeriesMatrix:
    return X.gens if isinstance(X, Lattice) else X


# -- dlog and the nabla condition ---------------------------------------------

def dlog_u(X: SeriesMatrix, prec: int | None = None) -> SeriesMatrix:
    """X^{-1} dX/du.  Exact when det X is an exact monomial."""
    X = _as_matrix(X)
    d = X.det()
    if not d.coeffs:
        if d.prec is None:
            raise ZeroDivisionError("X is singular")
        raise PrecisionError("det X vanishes to the known precision")
    if prec is None and X.is_exact and len(d.coeffs) > 1:
        span = max((x.degree() for x in X.entries() if x.coeffs), default=0) - X.min_degree
        prec = default_precision(1, span)
    return X.inverse(prec) @ X.deriv()


def ad_inverse(Y: SeriesMatrix, M: SeriesMatrix, prec: int | None = None) -> SeriesMatrix:
    """Ad(Y^{-1}) M = Y^{-1} M Y."""
    return Y.inverse(prec) @ M @ Y


def _negative_part_verdict(entries):
    undecided = False
    for x in entries:
        if any(k < 0 for k in x.coeffs):
            return False
        if x.prec is not None and x.prec < 0:
            undecided = True
    if undecided:
        raise PrecisionError("negative-degree coefficients are beyond the known precision")
    return True


def in_nabla(X, ec: EConfig) -> bool:
    """Is E(u) X^{-1} dX/du integral (no poles at u = 0 resp. at the pi_i)?"""
    X = _as_matrix(X)
    E = ec.E
    if not X.is_exact:
        if not ec.special:
            raise ValueError("generic-fibre checks need exact polynomial entries")
        M = dlog_u(X).scale(E)
        return _negative_part_verdict(M.entries())
    d = X.det()
    if not d.coeffs:
        raise ZeroDivisionError("X is singular")
    N = (X.adjugate() @ X.deriv()).scale(E)
    if ec.special:
        v = d.valuation()
        return all(x.valuation() >= v for x in N.entries())
    # global: every entry of N / det must be a polynomial
    D, t = d.to_polynomial()
    for x in N.entries():
        if not x.coeffs:
            continue
        P, s = x.to_polynomial()
        # x / d = P u^{t-s} / D
        if t - s >= 0:
            num, den = P.shift(t - s), D
        else:
            num, den = P, D.shift(s - t)
        _, r = num.divmod(den)
        if r.coeffs:
            return False
    return True


def loop_rotate(X: SeriesMatrix, t, ec: EConfig) -> SeriesMatrix:
    """Substitute u -> t u (special fibre only)."""
    if not ec.special:
        raise ValueError("loop rotation is only defined in special-fibre mode")
    X = _as_matrix(X)
    t = X.field(t)
    if not t:
        raise ValueError("t must be a unit")
    return X.subs_scale(t)


# -- Schubert conditions and relative position ----------------------------------

def _mus_of(h):
    mus = h.mus if hasattr(h, "mus") else h
    return [tuple(sorted((int(x) for x in m), reverse=True)) for m in mus]


def wedge_condition(L, h, ec: EConfig) -> bool:
    """Each j x j minor divisible by prod (u - pi_i)^(sum of the j smallest mu_i entries)."""
    X = _as_matrix(L)
    n = X.n
    mus = _mus_of(h)
    if len(mus) != ec.e:
        raise ValueError("Hodge type length differs from e")
    if any(len(m) != n for m in mus):
        raise ValueError("cocharacters must have n entries")
    undecided = False
    for j in range(1, n + 1):
        need = [sum(m[n - j:]) for m in mus]
        for minor in X.minors(j):
            if ec.special:
                req = sum(need)
                if any(k < req for k in minor.coeffs):
                    return False
                if minor.prec is not None and minor.prec < req:
                    undecided = True
            else:
                if not minor.is_exact:
                    raise ValueError("generic-fibre checks need exact entries")
                for p, s in zip(ec.pis, need):
                    if minor.order_at(p) < s:
                        return False
    if undecided:
        raise PrecisionError("minor valuations beyond the known precision")
    return True


def _localize(X: SeriesMatrix, point):
    if point is None or not X.field(point):
        return X
    if not X.is_exact:
        raise ValueError("re-centering needs exact entries")
    return X.shift_center(point)


def relative_position(L, point=None) -> tuple:
    """Elementary-divisor exponents at u = point, sorted decreasingly.

    Pivoting Smith normal form over the local power-series ring; exact input
    is first truncated at a precision that provably suffices.
    """
    X = _localize(_as_matrix(L), point)
    n = X.n
    s = -X.min_degree
    Y = X.map(lambda x: x.shift(s))
    if Y.is_exact:
        d = Y.det()
        if not d.coeffs:
            raise ZeroDivisionError("lattice generator matrix is singular")
        Y = Y.truncate(d.valuation() + 2)
    A = [list(r) for r in Y.rows]
    exps = []
    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                x = A[i][j]
                if x.coeffs:
                    v = min(x.coeffs)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            raise PrecisionError("remaining block vanishes to the known precision")
        v, i, j = best
        for r in range(k, n):
            for c in range(k, n):
                x = A[r][c]
                if not x.coeffs and x.prec is not None and x.prec < v:
                    raise PrecisionError("pivot choice depends on unknown coefficients")
        A[k], A[i] = A[i], A[k]
        for row in A:
            row[k], row[j] = row[j], row[k]
        inv = A[k][k].inverse()
        for r in range(k + 1, n):
            if not A[r][k].coeffs and A[r][k].prec is None:
                continue
            f = A[r][k] * inv
            A[r] = [A[r][c] - f * A[k][c] if c > k else A[r][c] for c in range(n)]
        exps.append(v - s)
    return tuple(sorted(exps, reverse=True))


def relative_position_divisors(L, point=None) -> tuple:
    """Same invariant via determinantal divisors (exact input only)."""
    X = _localize(_as_matrix(L), point)
    if not X.is_exact:
        raise ValueError("determinantal divisors need exact entries")
    n = X.n
    prev = 0
    out = []
    for j in range(1, n + 1):
        dj = min(m.valuation() for m in X.minors(j))
        if dj == math.inf:
            raise ZeroDivisionError("lattice generator matrix is singular")
        out.append(dj - prev)
        prev = dj
    return tuple(sorted(out, reverse=True))


def psi_of_frobenius(C: SeriesMatrix, ec: EConfig) -> Lattice:
    """Column lattice of a Frobenius matrix C after checking det C lives on E."""
    d = C.det()
    if not d.coeffs:
        if d.prec is None:
            raise ZeroDivisionError("Frobenius matrix is singular")
        raise PrecisionError("det C vanishes to the known precision")
    if not ec.special:
        # special fibre: every nonzero det is u^k times a unit of F[[u]]
        if not d.is_exact:
            raise ValueError("generic-fibre checks need exact entries")
        rest, shift = d.to_polynomial()
        if shift and 0 not in ec.pis:
            raise ValueError("det C has a pole at u = 0, away from the points pi_i")
        for p in ec.pis:
            lin = Series(d.field, {1: 1, 0: -p})
            while True:
                q, r = rest.divmod(lin)
                if r.coeffs:
                    break
                rest = q
        if set(rest.coeffs) != {0}:
            raise ValueError("det C vanishes away from the points pi_i")
    return Lattice(C)


# -- Step-4 coordinate families -------------------------------------------------

def _positive_roots_gl(n):
    return sorted(((i, j) for i in range(n) for j in range(i + 1, n)), key=lambda r: (r[1] - r[0], r))


def step4_layout(lam, e: int):
    """Per positive root (i, j): pairing k, free degrees, solved degrees."""
    lam = tuple(lam)
    out = []
    for i, j in _positive_roots_gl(len(lam)):
        k = lam[i] - lam[j]
        if k <= 0:
            continue
        free = [0] + list(range(max(1, k - e + 1), k))
        solved = list(range(1, k - e + 1))
        out.append(((i, j), k, free, solved))
    return out


def step4_dimension(lam, e: int) -> int:
    return sum(len(free) for _, _, free, _ in step4_layout(lam, e))


def _root_group(n, ij, a: Series, field):
    i, j = ij
    rows = [[Series.one(field) if r == c else Series.zero(field) for c in range(n)] for r in range(n)]
    rows[i][j] = a
    return SeriesMatrix(field, tuple(tuple(r) for r in rows))


def _unipotent_product(n, params, field):
    g = SeriesMatrix.identity(field, n)
    for ij, a in params:
        g = g @ _root_group(n, ij, a, field)
    return g


def step4_family(lam, e: int, coeffs=None, field: Field = QQ, rng=None) -> SeriesMatrix:
    """X = g u^lam with g a product of root-group elements x_gamma(a_gamma(u)).

    For each positive root with k = <gamma, lam> > 0, a_gamma has free
    coefficients in degrees 0 and max(1, k-e+1)..k-1; degrees 1..k-e are
    solved so that E X^{-1} X' is integral (E = u^e).  ``coeffs`` maps each
    root (i, j) to its free values in that order; missing ones are drawn from
    ``rng``.
    """
    lam = tuple(int(x) for x in lam)
    n = len(lam)
    if n not in (2, 3):
        raise ValueError("step-4 families are implemented for GL_2 and GL_3 only")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("lam must be dominant")
    layout = step4_layout(lam, e)
    if field.char:
        worst = max((k - e for _, k, _, _ in layout), default=0)
        if worst >= field.char:
            raise ValueError(f"characteristic {field.char} too small: need > {worst}")
    rng = rng or random.Random(0)
    coeffs = dict(coeffs or {})
    params = []
    for ij, k, free, solved in layout:
        vals = coeffs.get(ij)
        if vals is None:
            vals = [field.random(rng) for _ in free]
        if len(vals) != len(free):
            raise ValueError(f"root {ij} takes {len(free)} free coefficients, got {len(vals)}")
        a = Series(field, {deg: parse_scalar(field, v) for deg, v in zip(free, vals)})
        params.append([ij, a])
        if solved:
            g = _unipotent_product(n, params, field)
            M = g.inverse() @ g.deriv()
            entry = M[ij]
            fix = {d: -entry.coefficient(d - 1) / d for d in solved}
            params[-1][1] = a + Series(field, fix)
    g = _unipotent_product(n, params, field)
    X = g @ SeriesMatrix.diag_monomial(field, lam)
    assert in_nabla(X, EConfig.special_fibre(e, field)), "step-4 family left Gr^nabla"
    return X


# -- adjoint condition ----------------------------------------------------------

def adjoint_slope_check(H, g0, field: Field = QQ) -> bool:
    """g0^{-1} H g0 - H supported exactly on the simple root spaces, all nonzero."""
    if H and isinstance(H[0], (list, tuple)):
        n = len(H)
        if any(H[i][j] for i in range(n) for j in range(n) if i != j):
            raise ValueError("H must be diagonal")
        H = [H[i][i] for i in range(n)]
    h = [parse_scalar(field, x) for x in H]
    n = len(h)
    if len(set(h)) != n:
        raise ValueError("H is not regular (repeated diagonal entries)")
    g = [[parse_scalar(field, x) for x in row] for row in g0]
    if len(g) != n or any(len(r) != n for r in g):
        raise ValueError("g0 has the wrong size")
    for i in range(n):
        if g[i][i] != 1 or any(g[i][j] for j in range(i)):
            raise ValueError("g0 must be upper unitriangular")
    ginv = _unitri_inverse(g, field)
    Hg = [[h[i] * g[i][j] for j in range(n)] for i in range(n)]
    ad = [[sum((ginv[i][k] * Hg[k][j] for k in range(n)), field.zero) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            x = ad[i][j] - (h[i] if i == j else 0)
            if j == i + 1:
                if not x:
                    return False
            elif x:
                return False
    return True


def _unitri_inverse(g, field):
    n = len(g)
    inv = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            inv[i][j] = -sum((g[i][k] * inv[k][j] for k in range(i + 1, j + 1)), field.zero)
    return inv


# -- flags to lattices ----------------------------------------------------------

@dataclass(frozen=True)
class Filtration:
    """Flag given by a basis (columns) and a decreasing jump type.

    The local lattice at pi is basis * diag((u - pi)^jumps) * O^n; it only
    depends on the partial flag spanned by trailing basis columns.
    """

    basis: tuple
    jumps: tuple


def _poly_column_basis(cols, n, field):
    """Column Hermite reduction over F[u]: an n x n basis of the column span."""
    cols = [list(c) for c in cols]
    out = []
    for r in range(n):
        active = [c for c in cols if c[r].coeffs]
        idle = [c for c in cols if not c[r].coeffs]
        while len(active) > 1:
            active.sort(key=lambda c: c[r].degree())
            piv = active[0]
            nxt = [piv]
            for c in active[1:]:
                q, _ = c[r].divmod(piv[r])
                c = [x - q * y for x, y in zip(c, piv)]
                (nxt if c[r].coeffs else idle).append(c)
            active = nxt
        if not active:
            raise ValueError("generators do not span a full-rank lattice")
        out.append(active[0])
        cols = idle
    if any(x.coeffs for c in cols for x in c):
        raise AssertionError("leftover generators after reduction")
    return SeriesMatrix(field, tuple(tuple(out[j][i] for j in range(n)) for i in range(n)))


def flag_to_lattice(fils, ec: EConfig) -> Lattice:
    """Global lattice equal to basis_i * (u - pi_i)^type_i * O^n near each pi_i
    and to the standard lattice elsewhere."""
    if ec.special:
        raise ValueError("flag_to_lattice needs generic-fibre mode")
    fils = [f if isinstance(f, Filtration) else Filtration(*f) for f in fils]
    if len(fils) != ec.e:
        raise ValueError(f"need {ec.e} filtrations, got {len(fils)}")
    field = ec.field
    n = None
    K = 0
    prepared = []
    for f in fils:
        B = [[parse_scalar(field, x) for x in row] for row in f.basis]
        jumps = tuple(int(x) for x in f.jumps)
        n = n or len(B)
        if len(B) != n or any(len(r) != n for r in B) or len(jumps) != n:
            raise ValueError("filtration data must be n x n with n jumps")
        if any(a < b for a, b in zip(jumps, jumps[1:])):
            raise ValueError("jump types must be decreasing")
        if any(j < 0 for j in jumps):
            raise ValueError("jump types must be effective (nonnegative)")
        Bm = SeriesMatrix.build(field, B)
        if Bm.det().is_zero():
            raise ValueError("flag basis is not invertible")
        prepared.append((Bm, jumps))
        K = max(K, max(jumps))
    gens = []
    for i, (Bm, jumps) in enumerate(prepared):
        lin = [Series(field, {1: 1, 0: -p}) for p in ec.pis]
        cofactor = Series.one(field)
        for j, l in enumerate(lin):
            if j != i:
                cofactor = cofactor * l ** K
        D = SeriesMatrix.diag(field, [lin[i] ** k for k in jumps])
        G = (Bm @ D).scale(cofactor)
        for c in range(n):
            gens.append([G[r, c] for r in range(n)])
    return Lattice(_poly_column_basis(gens, n, field))


# -- matrix files ---------------------------------------------------------------

def field_from_spec(spec) -> Field:
    if spec in (None, "QQ", "Q", 0):
        return QQ
    if isinstance(spec, dict) and "prime" in spec:
        return GF(int(spec["prime"]))
    if isinstance(spec, int):
        return GF(spec)
    raise ValueError(f"unknown field spec {spec!r}")


def field_to_spec(field: Field):
    return "QQ" if not field.char else {"prime": field.char}


def matrix_from_json(d) -> SeriesMatrix:
    n = int(d["size"])
    prec = d.get("precision")
    field = field_from_spec(d.get("field", "QQ"))
    rows = d["entries"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("entries must be an n x n array")
    out = tuple(tuple(Series.from_pairs(field, cell, None if prec is None else int(prec)) for cell in row) for row in rows)
    return SeriesMatrix(field, out)


def matrix_to_json(X: SeriesMatrix) -> dict:
    return {"size": X.n, "precision": X.precision, "field": field_to_spec(X.field), "entries": X.to_json()}


__all__ = [
    "EConfig", "Lattice", "Filtration", "default_precision", "dlog_u", "ad_inverse", "in_nabla",
    "loop_rotate", "wedge_condition", "relative_position", "relative_position_divisors",
    "psi_of_frobenius", "step4_layout", "step4_dimension", "step4_family", "adjoint_slope_check",
    "flag_to_lattice", "matrix_from_json", "matrix_to_json", "field_from_spec", "field_to_spec",
]

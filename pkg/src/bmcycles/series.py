"""Truncated Laurent series in ``u`` over an exact field, and matrices of them.

A :class:`Series` stores finitely many known coefficients and an absolute
precision ``prec``: every coefficient of degree ``>= prec`` is unknown.
``prec=None`` marks an exact Laurent polynomial.  Arithmetic propagates
precision the way p-adic numbers do, and any question whose answer depends
on an unknown coefficient raises :class:`PrecisionError`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .fields import Field, format_scalar, parse_scalar


class PrecisionError(ArithmeticError):
    """The answer depends on coefficients beyond the known precision."""


def _min_prec(*ps):
    ps = [p for p in ps if p is not None and p != math.inf]
    return min(ps) if ps else None


class Series:
    __slots__ = ("field", "coeffs", "prec")

    def __init__(self, field: Field, coeffs=None, prec: int | None = None):
        self.field = field
        self.prec = prec
        clean = {}
        for k, c in (coeffs or {}).items():
            if prec is not None and k >= prec:
                continue
            c = field(c)
            if c:
                clean[int(k)] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def monomial(cls, field, c, k: int = 0, prec=None):
        return cls(field, {k: c}, prec)

    @classmethod
    def zero(cls, field, prec=None):
        return cls(field, {}, prec)

    @classmethod
    def one(cls, field):
        return cls(field, {0: 1})

    @classmethod
    def from_pairs(cls, field, pairs, prec=None):
        coeffs = {}
        for k, c in pairs:
            coeffs[int(k)] = coeffs.get(int(k), field.zero) + parse_scalar(field, c)
        return cls(field, coeffs, prec)

    @classmethod
    def from_poly(cls, field, coeffs_low_to_high, prec=None):
        return cls(field, dict(enumerate(coeffs_low_to_high)), prec)

    def _lift(self, other):
        if isinstance(other, Series):
            if other.field != self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return Series(self.field, {0: other})

    # -- basic queries -----------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def valuation(self):
        """Lowest known nonzero degree; ``prec`` if nothing is known, inf for exact 0."""
        if self.coeffs:
            return min(self.coeffs)
        return math.inf if self.prec is None else self.prec

    def degree(self):
        if not self.coeffs:
            return -math.inf
        return max(self.coeffs)

    def leading(self):
        v = self.valuation()
        if not self.coeffs:
            raise PrecisionError("series is zero to its known precision")
        return self.coeffs[v]

    def coefficient(self, k: int):
        if self.prec is not None and k >= self.prec:
            raise PrecisionError(f"coefficient of u^{k} unknown (precision {self.prec})")
        return self.coeffs.get(k, self.field.zero)

    def is_zero(self) -> bool:
        """True for the exact zero; errors if zero only up to precision."""
        if self.coeffs:
            return False
        if self.prec is not None:
            raise PrecisionError("series vanishes only to its known precision")
        return True

    def known_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, n: int) -> Series:
        return Series(self.field, self.coeffs, _min_prec(self.prec, n))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        prec = _min_prec(self.prec, other.prec)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return Series(self.field, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.field, {k: -c for k, c in self.coeffs.items()}, self.prec)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        va, vb = self.valuation(), other.valuation()
        cands = []
        if self.prec is not None:
            cands.append(self.prec + vb)
        if other.prec is not None:
            cands.append(other.prec + va)
        prec = _min_prec(*cands)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                if prec is not None and k >= prec:
                    continue
                out[k] = out[k] + a * b if k in out else a * b
        return Series(self.field, out, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Series.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> Series:
        """Multiply by ``u^k``."""
        prec = None if self.prec is None else self.prec + k
        return Series(self.field, {e + k: c for e, c in self.coeffs.items()}, prec)

    def deriv(self) -> Series:
        prec = None if self.prec is None else self.prec - 1
        return Series(self.field, {k - 1: c * k for k, c in self.coeffs.items() if k}, prec)

    def inverse(self, prec: int | None = None) -> Series:
        """Multiplicative inverse in the Laurent field.

        Exact monomials invert exactly.  Other exact series need a working
        absolute precision ``prec``; truncated series get the precision
        their known terms support.
        """
        if not self.coeffs:
            if self.prec is None:
                raise ZeroDivisionError("inverse of exact zero series")
            raise PrecisionError("cannot invert a series that is zero to its precision")
        v = min(self.coeffs)
        c = self.coeffs[v]
        if self.prec is None and len(self.coeffs) == 1:
            return Series(self.field, {-v: self.field.one / c})
        if self.prec is None:
            if prec is None:
                raise ValueError("exact non-monomial inverse needs a working precision")
            target = prec
        else:
            target = self.prec - 2 * v
            if prec is not None:
                target = min(target, prec)
        nterms = target + v
        cinv = self.field.one / c
        b = []
        for k in range(max(nterms, 0)):
            if k == 0:
                b.append(cinv)
                continue
            s = self.field.zero
            for j in range(1, k + 1):
                a = self.coeffs.get(v + j)
                if a is not None:
                    s = s + a * b[k - j]
            b.append(-cinv * s)
        return Series(self.field, {k - v: bk for k, bk in enumerate(b)}, target)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return self * (self.field.one / self.field(other))

    # -- substitutions ----------------------------------------------------
    def subs_scale(self, t) -> Series:
        """u -> t*u for a unit t of the field."""
        t = self.field(t)
        return Series(self.field, {k: c * t**k for k, c in self.coeffs.items()}, self.prec)

    def shift_center(self, c) -> Series:
        """Exact re-expansion in the variable u - c (i.e. substitute u -> u + c)."""
        if not self.is_exact:
            raise PrecisionError("re-centering needs an exact polynomial")
        if self.coeffs and min(self.coeffs) < 0:
            raise ValueError("re-centering needs a polynomial without negative powers")
        c = self.field(c)
        out = {}
        for k, a in self.coeffs.items():
            for j in range(k + 1):
                term = a * math.comb(k, j) * c ** (k - j)
                out[j] = out[j] + term if j in out else term
        return Series(self.field, out)

    def evaluate(self, x):
        if not self.is_exact:
            raise PrecisionError("evaluation needs an exact polynomial")
        x = self.field(x)
        return sum((a * x**k for k, a in self.coeffs.items()), self.field.zero)

    # -- exact polynomial algebra -----------------------------------------
    def is_polynomial(self) -> bool:
        return self.is_exact and all(k >= 0 for k in self.coeffs)

    def to_polynomial(self) -> tuple[Series, int]:
        """Return (polynomial, s) with self = polynomial * u^-s."""
        if not self.is_exact:
            raise PrecisionError("exact Laurent polynomial required")
        s = max(0, -min(self.coeffs)) if self.coeffs else 0
        return self.shift(s), s

    def divmod(self, other: Series) -> tuple[Series, Series]:
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("divmod needs exact polynomials")
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = dict(self.coeffs)
        q = {}
        d = max(other.coeffs)
        lc = other.coeffs[d]
        while r:
            k = max(r)
            if k < d:
                break
            f = r[k] / lc
            q[k - d] = f
            for j, b in other.coeffs.items():
                e = j + k - d
                val = r.get(e, self.field.zero) - f * b
                if val:
                    r[e] = val
                else:
                    r.pop(e, None)
        return Series(self.field, q), Series(self.field, r)

    def order_at(self, c) -> int | float:
        """Order of vanishing at u = c of an exact Laurent polynomial."""
        if not self.is_exact:
            raise PrecisionError("order at a point needs an exact element")
        if not self.coeffs:
            return math.inf
        if self.field(c) == 0:
            return min(self.coeffs)
        poly, _ = self.to_polynomial()
        return poly.shift_center(c).valuation()

    # -- comparison / display ----------------------------------------------
    def agrees(self, other) -> bool:
        """Equal on every coefficient known in both."""
        other = self._lift(other)
        prec = _min_prec(self.prec, other.prec)
        keys = set(self.coeffs) | set(other.coeffs)
        for k in keys:
            if prec is not None and k >= prec:
                continue
            if self.coeffs.get(k, self.field.zero) != other.coeffs.get(k, self.field.zero):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Series):
            try:
                other = self._lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.prec == other.prec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.prec))

    def __repr__(self):
        terms = []
        for k in sorted(self.coeffs):
            c = format_scalar(self.coeffs[k])
            terms.append(f"{c}" if k == 0 else f"{c}*u^{k}")
        if self.prec is not None:
            terms.append(f"O(u^{self.prec})")
        return " + ".join(terms) if terms else "0"

    def to_pairs(self):
        return [[k, format_scalar(self.coeffs[k])] for k in sorted(self.coeffs)]


@dataclass(frozen=True)
class SeriesMatrix:
    """Square matrix of :class:`Series` entries."""

    field: Field
    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("SeriesMatrix must be square")

    @classmethod
    def build(cls, field, entries, prec=None):
        rows = []
        for row in entries:
            out = []
            for x in row:
                if isinstance(x, Series):
                    out.append(x if prec is None else x.truncate(prec))
                else:
                    out.append(Series(field, {0: x}, prec))
            rows.append(tuple(out))
        return cls(field, tuple(rows))

    @classmethod
    def identity(cls, field, n, prec=None):
        return cls.build(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], prec)

    @classmethod
    def diag(cls, field, entries):
        n = len(entries)
        zero = Series.zero(field)
        return cls.build(field, [[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag_monomial(cls, field, exps):
        return cls.diag(field, [Series.monomial(field, 1, k) for k in exps])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for row in self.rows:
            yield from row

    @property
    def precision(self):
        return _min_prec(*(x.prec for x in self.entries()))

    @property
    def is_exact(self) -> bool:
        return all(x.is_exact for x in self.entries())

    @property
    def min_degree(self):
        vals = [min(x.coeffs) for x in self.entries() if x.coeffs]
        return min(vals) if vals else 0

    def map(self, f) -> SeriesMatrix:
        return SeriesMatrix(self.field, tuple(tuple(f(x) for x in row) for row in self.rows))

    def __add__(self, other):
        return SeriesMatrix(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return SeriesMatrix(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return self.map(lambda x: -x)

    def __matmul__(self, other):
        n = self.n
        cols = list(zip(*other.rows))
        rows = []
        for r in self.rows:
            out = []
            for c in cols:
                acc = Series.zero(self.field)
                for a, b in zip(r, c):
                    if a.coeffs or a.prec is not None:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        assert len(rows) == n
        return SeriesMatrix(self.field, tuple(rows))

    def scale(self, s) -> SeriesMatrix:
        return self.map(lambda x: x * s)

    def transpose(self):
        return SeriesMatrix(self.field, tuple(zip(*self.rows)))

    def deriv(self):
        return self.map(Series.deriv)

    def subs_scale(self, t):
        return self.map(lambda x: x.subs_scale(t))

    def shift_center(self, c):
        return self.map(lambda x: x.shift_center(c))

    def truncate(self, n):
        return self.map(lambda x: x.truncate(n))

    def det(self) -> Series:
        return _det([list(r) for r in self.rows], self.field)

    def minor(self, rows, cols) -> Series:
        return _det([[self.rows[i][j] for j in cols] for i in rows], self.field)

    def minors(self, j: int):
        idx = list(itertools.combinations(range(self.n), j))
        return [self.minor(r, c) for r in idx for c in idx]

    def adjugate(self) -> SeriesMatrix:
        n = self.n
        if n == 1:
            return SeriesMatrix.identity(self.field, 1)
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows = [r for r in range(n) if r != j]
                cols = [c for c in range(n) if c != i]
                m = self.minor(rows, cols)
                out[i][j] = m if (i + j) % 2 == 0 else -m
        return SeriesMatrix(self.field, tuple(tuple(r) for r in out))

    def inverse(self, prec: int | None = None) -> SeriesMatrix:
        d = self.det()
        if not d.coeffs and d.prec is None:
            raise ZeroDivisionError("matrix is singular")
        return self.adjugate().scale(d.inverse(prec))

    def agrees(self, other) -> bool:
        return all(a.agrees(b) for a, b in zip(self.entries(), other.entries()))

    def __repr__(self):
        return "SeriesMatrix(" + repr([list(r) for r in self.rows]) + ")"

    def to_json(self):
        return [[x.to_pairs() for x in row] for row in self.rows]


def _det(m, field) -> Series:
    n = len(m)
    if n == 0:
        return Series.one(field)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = Series.zero(field)
    for j in range(n):
        a = m[0][j]
        if not a.coeffs and a.prec is None:
            continue
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * _det(sub, field)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc

"""Random test inputs for the lattice checks."""

from __future__ import annotations

from bmcycles.grlattice import Filtration
from bmcycles.series import Series, SeriesMatrix


def rand_poly(field, rng, deg, lo=0, density=0.7):
    coeffs = {}
    for k in range(lo, deg + 1):
        if rng.random() < density:
            coeffs[k] = field.random(rng)
    return Series(field, coeffs)


def rand_unit(field, rng):
    while True:
        x = field.random(rng)
        if x:
            return x


def rand_constant_gl(field, n, rng):
    while True:
        g = SeriesMatrix.build(field, [[field.random(rng) for _ in range(n)] for _ in range(n)])
        if not g.det().is_zero():
            return g


def elementary(field, n, i, j, a):
    rows = [[Series.one(field) if r == c else Series.zero(field) for c in range(n)] for r in range(n)]
    rows[i][j] = a
    return SeriesMatrix(field, tuple(tuple(r) for r in rows))


def rand_poly_gl(field, n, rng, deg=2, steps=3):
    """Product of elementary matrices with polynomial entries and a constant diagonal: det is a nonzero constant."""
    g = SeriesMatrix.diag(field, [Series.monomial(field, rand_unit(field, rng), 0) for _ in range(n)])
    if n == 1:
        return g
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        g = g @ elementary(field, n, i, j, rand_poly(field, rng, deg))
    return g


def rand_coweight(n, rng, lo=-2, hi=3):
    return tuple(rng.randint(lo, hi) for _ in range(n))


def rand_lattice(field, n, rng, lo=-2, hi=3, deg=2):
    """g1 u^lam g2 with g1, g2 invertible over F[u]; returns (matrix, sorted lam)."""
    lam = rand_coweight(n, rng, lo, hi)
    X = rand_poly_gl(field, n, rng, deg) @ SeriesMatrix.diag_monomial(field, lam) @ rand_poly_gl(field, n, rng, deg)
    return X, tuple(sorted(lam, reverse=True))


def rand_upper_unipotent(field, n, rng, deg=3, lo=0):
    g = SeriesMatrix.identity(field, n)
    for i in range(n):
        for j in range(i + 1, n):
            g = g @ elementary(field, n, i, j, rand_poly(field, rng, deg, lo))
    return g


def rand_flag(field, n, rng, max_jump=2):
    jumps = tuple(sorted((rng.randint(0, max_jump) for _ in range(n)), reverse=True))
    while True:
        basis = [[field.random(rng) for _ in range(n)] for _ in range(n)]
        if not SeriesMatrix.build(field, basis).det().is_zero():
            return Filtration(tuple(tuple(r) for r in basis), jumps)

"""Small exact linear algebra over Z and Q used by the root-datum code."""

from __future__ import annotations

from fractions import Fraction


def rational_solve(A, b):
    """Solve A x = b over Q (free variables set to 0); None if inconsistent."""
    m = len(A)
    k = len(A[0]) if m else 0
    rows = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][k] != 0:
            return None
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = rows[i][k]
    return x


def rank(A) -> int:
    m = len(A)
    if not m:
        return 0
    rows = [[Fraction(x) for x in row] for row in A]
    k = len(rows[0])
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def det_int(M) -> int:
    n = len(M)
    rows = [[Fraction(x) for x in row] for row in M]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d *= rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[c][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    assert d.denominator == 1
    return int(d)


class LatticeCoords:
    """Coordinates with respect to linearly independent integer vectors.

    ``coords(v)`` returns the unique rational coefficient tuple expressing v
    in the basis, or None when v is outside the rational span.
    """

    def __init__(self, basis):
        self.basis = [tuple(int(x) for x in b) for b in basis]
        self.k = len(self.basis)
        self.dim = len(self.basis[0]) if self.basis else 0
        if self.k == 0:
            self.rows = []
            self._inv = []
            return
        # columns are basis vectors; pick k independent coordinate rows
        cols = self.basis
        chosen = []
        for i in range(self.dim):
            trial = chosen + [i]
            if rank([[cols[j][r] for j in range(self.k)] for r in trial]) == len(trial):
                chosen = trial
            if len(chosen) == self.k:
                break
        if len(chosen) < self.k:
            raise ValueError("basis vectors are linearly dependent")
        self.rows = chosen
        sq = [[Fraction(cols[j][r]) for j in range(self.k)] for r in chosen]
        self._inv = _invert(sq)

    def coords(self, v):
        if self.k == 0:
            return () if not any(v) else None
        vs = [v[r] for r in self.rows]
        c = tuple(sum((self._inv[i][j] * vs[j] for j in range(self.k)), Fraction(0)) for i in range(self.k))
        for r in range(self.dim):
            if sum(c[j] * self.basis[j][r] for j in range(self.k)) != v[r]:
                return None
        return c

    def int_coords(self, v):
        """Integer coordinates, or None if v is not an integral combination."""
        c = self.coords(v)
        if c is None or any(x.denominator != 1 for x in c):
            return None
        return tuple(int(x) for x in c)


def _invert(M):
    n = len(M)
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def integer_solve(A, b):
    """Integer solutions of A x = b.

    Returns (x0, kernel) with x0 a particular solution and kernel a Z-basis
    of the integer null space, or None when no integer solution exists.
    Column-style Hermite reduction: A U = H with U unimodular.
    """
    m = len(A)
    k = len(A[0]) if m else 0
    H = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(k)] for i in range(k)]

    def colop(target, src, f):
        # column target -= f * column src
        for row in H:
            row[target] -= f * row[src]
        for row in U:
            row[target] -= f * row[src]

    def swap(a, c):
        for row in H:
            row[a], row[c] = row[c], row[a]
        for row in U:
            row[a], row[c] = row[c], row[a]

    piv_rows = []
    col = 0
    for r in range(m):
        if col >= k:
            break
        while True:
            nz = [j for j in range(col, k) if H[r][j] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(H[r][j]))
            swap(col, j)
            done = True
            for j in range(col + 1, k):
                if H[r][j]:
                    colop(j, col, H[r][j] // H[r][col])
                    if H[r][j]:
                        done = False
            if done:
                break
        if col < k and H[r][col] != 0:
            piv_rows.append(r)
            col += 1
    # forward substitution H y = b on pivot columns
    y = [0] * k
    for c, r in enumerate(piv_rows):
        s = b[r] - sum(H[r][j] * y[j] for j in range(c))
        if s % H[r][c]:
            return None
        y[c] = s // H[r][c]
    for r in range(m):
        if sum(H[r][j] * y[j] for j in range(k)) != b[r]:
            return None
    x0 = [sum(U[i][j] * y[j] for j in range(k)) for i in range(k)]
    kernel = [[U[i][j] for i in range(k)] for j in range(col, k)]
    return x0, kernel

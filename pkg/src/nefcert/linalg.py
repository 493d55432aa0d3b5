"""Exact integer and rational linear algebra.

Everything here runs on Python's arbitrary-precision integers and
``fractions.Fraction``; there is no floating point anywhere.  These routines
are the arithmetic substrate for the polytope and binomial-ideal modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InternalInconsistency


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major entries, arbitrary precision."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return IntMatrix(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @staticmethod
    def from_columns(cols) -> "IntMatrix":
        cols = [list(c) for c in cols]
        nrows = len(cols[0]) if cols else 0
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged columns")
        return IntMatrix(nrows, len(cols),
                         tuple(int(cols[j][i]) for i in range(nrows) for j in range(len(cols))))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        orows = other.row_list()
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * orows[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))


@dataclass(frozen=True)
class SmithInvariants:
    """Diagonal of the Smith normal form: d_1 | d_2 | ... | d_r, then zeros."""

    diagonal: tuple[int, ...]

    def __post_init__(self):
        diag = self.diagonal
        if any(d < 0 for d in diag):
            raise ValueError("invariants must be nonnegative")
        nz = [d for d in diag if d != 0]
        if list(diag[:len(nz)]) != nz:
            raise ValueError("zeros must trail the nonzero invariants")
        for a, b in zip(nz, nz[1:]):
            if b % a != 0:
                raise ValueError("divisibility chain violated")

    def all_ones(self) -> bool:
        return all(d == 1 for d in self.diagonal)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _bareiss_rank(mat: list[list[int]]) -> int:
    """Fraction-free elimination rank of an integer matrix."""
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            mrc = m[r][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (row_i[j] * mrc - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (input is consumed)."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        mkk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = mkk
    return sign * m[n - 1][n - 1]


def rank(M: IntMatrix) -> int:
    """Rank over the rationals, computed fraction-free."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return _bareiss_rank(M.row_list())


def row_rank(vectors) -> int:
    """Rank of a list of integer vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return _bareiss_rank(vectors)


def greedy_row_basis(vectors) -> list[int]:
    """Indices of the lexicographically first maximal independent subset."""
    chosen: list[list[int]] = []
    idx: list[int] = []
    for i, v in enumerate(vectors):
        if _bareiss_rank(chosen + [list(v)]) > len(chosen):
            chosen.append(list(v))
            idx.append(i)
    return idx


def maximal_minor_profile(M: IntMatrix) -> tuple[int, ...]:
    """Multiset (sorted) of |det| over all nonzero rank x rank minors.

    When the matrix has more rows than rank, minors are taken on the first
    independent row subset so the enumeration stays deterministic.
    """
    r = rank(M)
    if r == 0:
        return ()
    rows = M.row_list()
    base = greedy_row_basis(rows) if M.rows > r else list(range(M.rows))
    rows = [rows[i] for i in base]
    profile = []
    for cols in itertools.combinations(range(M.cols), r):
        sub = [[row[j] for j in cols] for row in rows]
        d = _bareiss_det(sub)
        if d != 0:
            profile.append(abs(d))
    return tuple(sorted(profile))


def is_unimodular(M: IntMatrix) -> bool:
    """True iff rank equals the row count and all nonzero maximal minors
    share one absolute value.  Exits early on the first mismatch."""
    d = M.rows
    if d == 0:
        return True
    if M.cols < d:
        return False
    rows = M.row_list()
    seen = None
    for cols in itertools.combinations(range(M.cols), d):
        sub = [[row[j] for j in cols] for row in rows]
        v = abs(_bareiss_det(sub))
        if v == 0:
            continue
        if seen is None:
            seen = v
        elif v != seen:
            return False
    return seen is not None


def hnf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form.

    Returns (H, U) with M * U = H and |det U| = 1.  H is in column echelon
    form: pivot rows strictly increase left to right, pivots are positive,
    and entries to the left of a pivot in its row lie in [0, pivot).  This
    normalization makes H unique.
    """
    d, n = M.rows, M.cols
    H = [list(c) for c in M.columns()]
    U = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    r = 0
    for i in range(d):
        piv = next((j for j in range(r, n) if H[j][i] != 0), None)
        if piv is None:
            continue
        H[r], H[piv] = H[piv], H[r]
        U[r], U[piv] = U[piv], U[r]
        for j in range(r + 1, n):
            if H[j][i] == 0:
                continue
            a, b = H[r][i], H[j][i]
            g, s, t = _ext_gcd(a, b)
            aq, bq = a // g, b // g
            cr_h, cj_h = H[r], H[j]
            cr_u, cj_u = U[r], U[j]
            H[r] = [s * x + t * y for x, y in zip(cr_h, cj_h)]
            H[j] = [-bq * x + aq * y for x, y in zip(cr_h, cj_h)]
            U[r] = [s * x + t * y for x, y in zip(cr_u, cj_u)]
            U[j] = [-bq * x + aq * y for x, y in zip(cr_u, cj_u)]
        if H[r][i] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][i]
        for j in range(r):
            q = H[j][i] // p
            if q:
                H[j] = [x - q * y for x, y in zip(H[j], H[r])]
                U[j] = [x - q * y for x, y in zip(U[j], U[r])]
        r += 1
        if r == n:
            break
    Hm = IntMatrix.from_columns(H) if n else IntMatrix(d, 0, ())
    Um = IntMatrix.from_columns(U) if n else IntMatrix(0, 0, ())
    return Hm, Um


def smith_invariants(M: IntMatrix) -> SmithInvariants:
    """Smith normal form diagonal of an integer matrix."""
    a = M.row_list()
    nrows, ncols = M.rows, M.cols
    k = min(nrows, ncols)
    t = 0
    while t < k:
        best = None
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, piv = v, (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        p = abs(a[t][t])
        bad = None
        for i in range(t + 1, nrows):
            if any(a[i][j] % p for j in range(t + 1, ncols)):
                bad = i
                break
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        a[t][t] = p
        t += 1
    diag = tuple(abs(a[i][i]) for i in range(t)) + (0,) * (k - t)
    return SmithInvariants(diag)


def kernel_lattice_basis(M: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the saturated lattice {u in Z^n : M u = 0}.

    Extracted from the unimodular transform of the column HNF: the columns
    of U sitting over zero columns of H span the full integer kernel.
    """
    H, U = hnf(M)
    out = []
    for j in range(M.cols):
        if all(H[i, j] == 0 for i in range(M.rows)):
            v = U.column(j)
            lead = next((x for x in v if x != 0), 0)
            if lead < 0:
                v = tuple(-x for x in v)
            out.append(v)
    out.sort()
    for v in out:
        if any(sum(M[i, j] * v[j] for j in range(M.cols)) for i in range(M.rows)):
            raise InternalInconsistency("kernel vector fails M u = 0")
    return out


def solve_rational(M: IntMatrix, b) -> tuple[Fraction, ...] | None:
    """Some exact solution x of M^T x = b, or None when inconsistent.

    Free variables are set to zero, so the returned solution is canonical
    for a fixed input.
    """
    d, n = M.rows, M.cols
    b = [Fraction(v) for v in b]
    if len(b) != n:
        raise ValueError("right-hand side length must equal the column count")
    aug = [[Fraction(M[i, j]) for i in range(d)] + [b[j]] for j in range(n)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][d] != 0:
            return None
    x = [Fraction(0)] * d
    for row, col in pivots:
        x[col] = aug[row][d]
    return tuple(x)


def solve_rational_rows(rows, rhs) -> tuple[Fraction, ...] | None:
    """Solve `rows . x = rhs` exactly; rows are coefficient vectors."""
    if not rows:
        return ()
    mat = IntMatrix.from_rows(rows).transpose()
    return solve_rational(mat, rhs)


def parse_matrix(text: str) -> IntMatrix:
    """Parse the shared matrix format: first line "d n", then d rows."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a 'd n' header")
    d, n = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != d * n:
        raise ValueError(f"expected {d * n} entries, found {len(body)}")
    return IntMatrix(d, n, tuple(int(x) for x in body))


def render_matrix(M: IntMatrix) -> str:
    lines = [f"{M.rows} {M.cols}"]
    for i in range(M.rows):
        lines.append(" ".join(str(x) for x in M.row(i)))
    return "\n".join(lines) + "\n"

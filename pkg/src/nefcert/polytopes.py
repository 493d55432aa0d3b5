"""Lattice polytopes with exact rational geometry.

V-representations are vertex tuples; facets come from a double-description
sweep over the dual cone; lattice points come from a bounding-box scan with
interval pruning.  All predicates (reflexive, Gorenstein index, spanning,
IDP) are decided in exact arithmetic, with non-full-dimensional polytopes
handled through a unimodular model on their affine lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import (
    DimensionMismatch,
    EmptyInput,
    InternalInconsistency,
)
from .linalg import (
    IntMatrix,
    greedy_row_basis,
    kernel_lattice_basis,
    row_rank,
    smith_invariants,
)


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(v):
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def _sign_canonical(v):
    lead = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


# ---------------------------------------------------------------------------
# Exact rational feasibility (phase-1 simplex with Bland's rule)

def point_in_convex_hull(point, points) -> bool:
    """Exact test: does `point` lie in conv(points)?"""
    pts = list(points)
    if not pts:
        return False
    d = len(point)
    rows = [[Fraction(q[i]) for q in pts] for i in range(d)]
    rhs = [Fraction(point[i]) for i in range(d)]
    rows.append([Fraction(1)] * len(pts))
    rhs.append(Fraction(1))
    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    k = len(pts)
    width = k + m
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]]
           for i in range(m)]
    basis = [k + i for i in range(m)]
    # reduced costs for min(sum of artificials); last slot holds -objective
    obj = [Fraction(0)] * (width + 1)
    for j in range(k):
        obj[j] = -sum(tab[i][j] for i in range(m))
    obj[width] = -sum(tab[i][width] for i in range(m))
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise InternalInconsistency("phase-1 simplex unbounded")
        r = best[1]
        piv = tab[r][enter]
        tab[r] = [x / piv for x in tab[r]]
        for i in range(m):
            if i != r and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[r])]
        basis[r] = enter
    return obj[width] == 0


def extreme_points(points) -> list[tuple[int, ...]]:
    """Extreme points of conv(points); a point survives iff it is not a
    convex combination of the remaining candidates."""
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if len(pts) <= 2:
        return pts
    alive = list(pts)
    for p in pts:
        others = [q for q in alive if q != p]
        if point_in_convex_hull(p, others):
            alive.remove(p)
    return alive


# ---------------------------------------------------------------------------
# Double description: facets of a full-dimensional polytope from vertices

def _adjugate(mat):
    n = len(mat)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[mat[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = _det_copy(minor)
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof
    return adj


def _det_copy(mat) -> int:
    from .linalg import _bareiss_det
    return _bareiss_det([row[:] for row in mat])


def _facets_full_dim(vertices, dim) -> list[tuple[tuple[int, ...], int]]:
    """Facets (primitive normal, rhs) of a full-dimensional lattice polytope,
    computed as the extreme rays of the dual cone {y : <(v,1), y> >= 0}."""
    m = dim + 1
    dual = [tuple(v) + (1,) for v in vertices]
    base = greedy_row_basis(dual)
    if len(base) != m:
        raise InternalInconsistency("polytope is not full-dimensional")
    N = [list(dual[i]) for i in base]
    det = _det_copy(N)
    adj = _adjugate(N)
    sgn = 1 if det > 0 else -1
    rays = [_primitive(tuple(sgn * adj[r][j] for r in range(m))) for j in range(m)]
    zmasks = []
    for j in range(m):
        mask = 0
        for i in base:
            mask |= 1 << i
        mask &= ~(1 << base[j])
        zmasks.append(mask)
    for pos in range(len(dual)):
        if pos in base:
            continue
        row = dual[pos]
        vals = [_dot(row, r) for r in rays]
        if min(vals) >= 0:
            for idx, v in enumerate(vals):
                if v == 0:
                    zmasks[idx] |= 1 << pos
            continue
        keep_rays, keep_masks = [], []
        neg = []
        posi = []
        for idx, v in enumerate(vals):
            if v > 0:
                posi.append(idx)
                keep_rays.append(rays[idx])
                keep_masks.append(zmasks[idx])
            elif v == 0:
                keep_rays.append(rays[idx])
                keep_masks.append(zmasks[idx] | (1 << pos))
            else:
                neg.append(idx)
        new_rays, new_masks = [], []
        for ip in posi:
            for iq in neg:
                zpq = zmasks[ip] & zmasks[iq]
                adjacent = True
                for w in range(len(rays)):
                    if w != ip and w != iq and (zpq & zmasks[w]) == zpq:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sp, sq = vals[ip], vals[iq]
                ray = _primitive(tuple(sp * b - sq * a for a, b in zip(rays[ip], rays[iq])))
                new_rays.append(ray)
                new_masks.append(zpq | (1 << pos))
        rays = keep_rays + new_rays
        zmasks = keep_masks + new_masks
    facets = set()
    for ray in rays:
        a, a0 = ray[:-1], ray[-1]
        if all(x == 0 for x in a):
            raise InternalInconsistency("dual cone produced a vertical ray")
        facets.add((tuple(-x for x in a), a0))
    return sorted(facets)


# ---------------------------------------------------------------------------
# Bounding-box scan with interval pruning

def _scan_count(ineqs, box) -> int:
    """|{x integer in box : A x <= b}| for integer inequalities."""
    D = len(box)
    if D == 0:
        return 1 if all(r >= 0 for _, r in ineqs) else 0
    C = [c for c, _ in ineqs]
    R = [r for _, r in ineqs]
    F = len(ineqs)
    smin = [[0] * (D + 1) for _ in range(F)]
    smax = [[0] * (D + 1) for _ in range(F)]
    for i in range(F):
        for t in range(D - 1, -1, -1):
            c = C[i][t]
            lo, hi = box[t]
            a, b = c * lo, c * hi
            smin[i][t] = smin[i][t + 1] + min(a, b)
            smax[i][t] = smax[i][t + 1] + max(a, b)
    active0 = []
    for i in range(F):
        if smin[i][0] > R[i]:
            return 0
        if smax[i][0] > R[i]:
            active0.append((i, 0))

    def rec(t, active):
        nt = t + 1
        lo, hi = box[t]
        zero_keep = []
        nz = []
        for i, s in active:
            c = C[i][t]
            if c == 0:
                if s + smin[i][nt] > R[i]:
                    return 0
                if s + smax[i][nt] > R[i]:
                    zero_keep.append((i, s))
            else:
                b = R[i] - s - smin[i][nt]
                if c > 0:
                    q = b // c
                    if q < hi:
                        hi = q
                else:
                    q = -(b // (-c))
                    if q > lo:
                        lo = q
                nz.append((i, s, c))
        if lo > hi:
            return 0
        if t == D - 1:
            return hi - lo + 1
        total = 0
        for x in range(lo, hi + 1):
            child = list(zero_keep)
            for i, s, c in nz:
                s2 = s + c * x
                if s2 + smax[i][nt] > R[i]:
                    child.append((i, s2))
            total += rec(nt, child)
        return total

    return rec(0, active0)


def _scan_points(ineqs, box) -> list[tuple[int, ...]]:
    """Integer points of the box satisfying all inequalities, lex sorted."""
    D = len(box)
    if D == 0:
        return [()] if all(r >= 0 for _, r in ineqs) else []
    out = []

    def rec(t, prefix, active):
        nt = t + 1
        lo, hi = box[t]
        zero_keep = []
        nz = []
        for i, s in active:
            c = ineqs[i][0][t]
            if c == 0:
                rest_min = sum(min(ineqs[i][0][u] * box[u][0], ineqs[i][0][u] * box[u][1])
                               for u in range(nt, D))
                if s + rest_min > ineqs[i][1]:
                    return
                zero_keep.append((i, s))
            else:
                rest_min = sum(min(ineqs[i][0][u] * box[u][0], ineqs[i][0][u] * box[u][1])
                               for u in range(nt, D))
                b = ineqs[i][1] - s - rest_min
                if c > 0:
                    q = b // c
                    if q < hi:
                        hi = q
                else:
                    q = -(b // (-c))
                    if q > lo:
                        lo = q
                nz.append((i, s, c))
        for x in range(lo, hi + 1):
            child = [(i, s) for i, s in zero_keep]
            ok = True
            for i, s, c in nz:
                s2 = s + c * x
                if t == D - 1:
                    if s2 > ineqs[i][1]:
                        ok = False
                        break
                child.append((i, s2))
            if not ok:
                continue
            if t == D - 1:
                if all(s <= ineqs[i][1] for i, s in child):
                    out.append(prefix + (x,))
            else:
                rec(nt, prefix + (x,), child)

    rec(0, (), [(i, 0) for i in range(len(ineqs))])
    return out


# ---------------------------------------------------------------------------
# Affine lattice model

@dataclass(frozen=True)
class AffineLatticeMap:
    """Unimodular affine bijection between aff(P) inside Z^d and Z^D."""

    base: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def model_dim(self) -> int:
        return len(self.basis)

    def from_model(self, y) -> tuple[int, ...]:
        x = list(self.base)
        for coef, vec in zip(y, self.basis):
            for i, v in enumerate(vec):
                x[i] += coef * v
        return tuple(x)

    def to_model(self, point) -> tuple[int, ...]:
        diff = [Fraction(p - b) for p, b in zip(point, self.base)]
        cols = [list(v) for v in self.basis]
        D = len(cols)
        aug = [[Fraction(cols[j][i]) for j in range(D)] + [diff[i]]
               for i in range(len(self.base))]
        sol = [Fraction(0)] * D
        pivots = []
        r = 0
        for c in range(D):
            piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / aug[r][c]
            aug[r] = [x * inv for x in aug[r]]
            for i in range(len(aug)):
                if i != r and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
            pivots.append((r, c))
            r += 1
        for i in range(r, len(aug)):
            if aug[i][D] != 0:
                raise InternalInconsistency("point is outside the affine span")
        for row, c in pivots:
            sol[c] = aug[row][D]
        for c in range(D):
            if sol[c].denominator != 1:
                raise InternalInconsistency("point is not on the affine lattice")
        return tuple(int(s) for s in sol)


@dataclass(frozen=True)
class HRep:
    """Irredundant inequalities <normal, x> <= rhs plus affine-hull equations."""

    inequalities: tuple[tuple[tuple[int, ...], int], ...]
    equations: tuple[tuple[tuple[int, ...], int], ...]


# ---------------------------------------------------------------------------
# The polytope class

class LatticePolytope:
    """Immutable lattice polytope; caches are write-once and idempotent."""

    __slots__ = ("ambient_dim", "vertices", "_cache")

    def __init__(self, ambient_dim: int, vertices: tuple[tuple[int, ...], ...]):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self._cache = {}

    @classmethod
    def from_points(cls, points, ambient_dim: int | None = None) -> "LatticePolytope":
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise EmptyInput("a polytope needs at least one point")
        if ambient_dim is None:
            ambient_dim = len(pts[0])
        if any(len(p) != ambient_dim for p in pts):
            raise DimensionMismatch("points of mixed dimension")
        return cls(ambient_dim, tuple(extreme_points(pts)))

    def __eq__(self, other):
        return (isinstance(other, LatticePolytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, ambient={self.ambient_dim}, nverts={len(self.vertices)})"

    @property
    def dim(self) -> int:
        if "dim" not in self._cache:
            v0 = self.vertices[0]
            diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
            self._cache["dim"] = row_rank(diffs)
        return self._cache["dim"]

    # -- affine model ------------------------------------------------------

    def full_dim_model(self) -> tuple["LatticePolytope", AffineLatticeMap]:
        if "model" not in self._cache:
            d = self.ambient_dim
            D = self.dim
            if D == d:
                amap = AffineLatticeMap((0,) * d,
                                        tuple(tuple(1 if i == j else 0 for i in range(d))
                                              for j in range(d)))
                self._cache["model"] = (self, amap)
            else:
                v0 = self.vertices[0]
                diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
                if D == 0:
                    amap = AffineLatticeMap(v0, ())
                    model = LatticePolytope(0, ((),))
                else:
                    mdiff = IntMatrix.from_columns(diffs)
                    lker = kernel_lattice_basis(mdiff.transpose())
                    basis = kernel_lattice_basis(IntMatrix.from_rows(lker))
                    if len(basis) != D:
                        raise InternalInconsistency("affine lattice basis has wrong rank")
                    amap = AffineLatticeMap(v0, tuple(basis))
                    mverts = sorted(amap.to_model(v) for v in self.vertices)
                    model = LatticePolytope(D, tuple(mverts))
                self._cache["model"] = (model, amap)
        return self._cache["model"]

    def _model_facets(self):
        model, _ = self.full_dim_model()
        if "mfacets" not in model._cache:
            if model.dim == 0:
                model._cache["mfacets"] = []
            else:
                model._cache["mfacets"] = _facets_full_dim(model.vertices, model.dim)
        return model._cache["mfacets"]

    def _model_box(self, m: int = 1):
        model, _ = self.full_dim_model()
        D = model.dim
        box = []
        for t in range(D):
            vals = [v[t] for v in model.vertices]
            box.append((m * min(vals), m * max(vals)))
        return box

    # -- H-representation ---------------------------------------------------

    def facets(self) -> HRep:
        if "hrep" in self._cache:
            return self._cache["hrep"]
        model, amap = self.full_dim_model()
        mfacets = self._model_facets()
        d = self.ambient_dim
        if model is self:
            ineqs = tuple(mfacets)
            eqs = ()
        else:
            v0 = self.vertices[0]
            diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
            if diffs:
                lker = kernel_lattice_basis(IntMatrix.from_columns(diffs).transpose())
            else:
                lker = kernel_lattice_basis(IntMatrix.from_columns([(0,) * d]).transpose())
            eqs = tuple(sorted((_sign_canonical(_primitive(c)), _dot(_sign_canonical(_primitive(c)), v0))
                               for c in lker))
            ineqs = []
            if amap.basis:
                pinv = _left_inverse(amap.basis)
                for a, b in mfacets:
                    nf = [sum(Fraction(a[r]) * pinv[r][i] for r in range(len(a)))
                          for i in range(d)]
                    den = 1
                    for x in nf:
                        den = den * x.denominator // math.gcd(den, x.denominator)
                    nint = _primitive(tuple(int(x * den) for x in nf))
                    rhs = max(_dot(nint, v) for v in self.vertices)
                    ineqs.append((nint, rhs))
            ineqs = tuple(sorted(ineqs))
        self._cache["hrep"] = HRep(ineqs, eqs)
        return self._cache["hrep"]

    # -- lattice points and counting ----------------------------------------

    def lattice_points(self) -> list[tuple[int, ...]]:
        if "points" not in self._cache:
            model, amap = self.full_dim_model()
            mpts = _scan_points(self._model_facets(), self._model_box())
            pts = sorted(amap.from_model(y) for y in mpts)
            self._cache["points"] = pts
        return list(self._cache["points"])

    def dilate_count(self, m: int) -> int:
        if m == 0:
            return 1
        counts = self._cache.setdefault("counts", {})
        if m not in counts:
            scaled = [(c, m * r) for c, r in self._model_facets()]
            counts[m] = _scan_count(scaled, self._model_box(m))
        return counts[m]

    def h_star(self) -> "HStarPoly":
        if "hstar" not in self._cache:
            D = self.dim
            L = [1] + [self.dilate_count(m) for m in range(1, D + 1)]
            coeffs = []
            for i in range(D + 1):
                h = sum((-1) ** j * math.comb(D + 1, j) * L[i - j] for j in range(i + 1))
                if h < 0:
                    raise InternalInconsistency("negative h* coefficient")
                coeffs.append(h)
            while len(coeffs) > 1 and coeffs[-1] == 0:
                coeffs.pop()
            self._cache["hstar"] = HStarPoly(tuple(coeffs))
        return self._cache["hstar"]

    def ehrhart_value(self, m: int) -> int:
        """Evaluate the Ehrhart polynomial reconstructed from h*."""
        D = self.dim
        h = self.h_star().coefficients
        return sum(h[i] * math.comb(m + D - i, D) for i in range(len(h)))

    # -- predicates ----------------------------------------------------------

    def is_reflexive(self) -> bool:
        """Reflexivity up to lattice translation: exactly one interior lattice
        point, and all facets at lattice distance one from it."""
        model, _ = self.full_dim_model()
        if model.dim == 0:
            return True
        facets = self._model_facets()
        pts = _scan_points(facets, self._model_box())
        interior = [p for p in pts if all(_dot(n, p) < b for n, b in facets)]
        if len(interior) != 1:
            return False
        v = interior[0]
        return all(b - _dot(n, v) == 1 for n, b in facets)

    def interior_lattice_points(self) -> list[tuple[int, ...]]:
        model, amap = self.full_dim_model()
        facets = self._model_facets()
        pts = _scan_points(facets, self._model_box())
        inner = [p for p in pts if all(_dot(n, p) < b for n, b in facets)]
        return sorted(amap.from_model(p) for p in inner)

    def gorenstein_index(self) -> int | None:
        """Index r when h* is palindromic of degree dim+1-r, else None."""
        h = self.h_star().coefficients
        if list(h) != list(reversed(h)):
            return None
        return self.dim + 1 - (len(h) - 1)

    def is_spanning(self) -> bool:
        """True iff the model's lattice points, homogenized at height one,
        generate the full ambient lattice."""
        model, _ = self.full_dim_model()
        mpts = _scan_points(self._model_facets(), self._model_box())
        cols = [p + (1,) for p in mpts]
        return smith_invariants(IntMatrix.from_columns(cols)).all_ones()

    def idp_check(self, k_max: int) -> bool:
        """Bounded integer-decomposition check: every point of kP is a sum of
        k lattice points of P, for all k <= k_max."""
        if k_max < 2:
            raise ValueError("k_max must be at least 2")
        pts = [tuple(p) for p in self.lattice_points()]
        base = set(pts)
        sums = set(pts)
        for k in range(2, k_max + 1):
            sums = {tuple(a + b for a, b in zip(s, p)) for s in sums for p in base}
            if len(sums) != self.dilate_count(k):
                return False
        return True

    # -- affine images --------------------------------------------------------

    def negate(self) -> "LatticePolytope":
        return LatticePolytope(self.ambient_dim,
                               tuple(sorted(tuple(-x for x in v) for v in self.vertices)))

    def translate(self, t) -> "LatticePolytope":
        return LatticePolytope(self.ambient_dim,
                               tuple(sorted(tuple(a + b for a, b in zip(v, t))
                                            for v in self.vertices)))

    def dilate(self, k: int) -> "LatticePolytope":
        if k < 1:
            raise ValueError("dilation factor must be positive")
        return LatticePolytope(self.ambient_dim,
                               tuple(sorted(tuple(k * x for x in v) for v in self.vertices)))


def _left_inverse(basis):
    """Rational left inverse of the column matrix formed by `basis`."""
    D = len(basis)
    d = len(basis[0])
    gram = [[sum(basis[a][i] * basis[b][i] for i in range(d)) for b in range(D)]
            for a in range(D)]
    aug = [[Fraction(gram[i][j]) for j in range(D)] +
           [Fraction(1 if j == i else 0) for j in range(D)] for i in range(D)]
    for c in range(D):
        piv = next(i for i in range(c, D) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(D):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    ginv = [row[D:] for row in aug]
    # left inverse rows indexed by ambient coordinate: pinv[r][i] = (G^-1 B^T)[r][i]
    pinv = [[sum(ginv[r][a] * basis[a][i] for a in range(D)) for i in range(d)]
            for r in range(D)]
    return pinv


@dataclass(frozen=True)
class HStarPoly:
    """Nonnegative h* coefficients, low to high, trailing zeros trimmed."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = self.coefficients
        if not c or c[0] != 1:
            raise InternalInconsistency("h* must have constant term 1")
        if any(x < 0 for x in c):
            raise InternalInconsistency("h* coefficients must be nonnegative")
        if len(c) > 1 and c[-1] == 0:
            raise InternalInconsistency("trailing zeros must be trimmed")

    def degree(self) -> int:
        return len(self.coefficients) - 1


# ---------------------------------------------------------------------------
# Constructions

def polytope_from_columns(M: IntMatrix) -> LatticePolytope:
    if M.cols < 1:
        raise EmptyInput("need at least one column")
    return LatticePolytope.from_points(M.columns(), M.rows)


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch("Minkowski sum needs equal ambient dimensions")
    sums = {tuple(a + b for a, b in zip(p, q))
            for p in P.vertices for q in Q.vertices}
    return LatticePolytope.from_points(sums, P.ambient_dim)


def cayley_sum(Ps) -> LatticePolytope:
    Ps = list(Ps)
    r = len(Ps)
    if r < 2:
        raise ValueError("a Cayley sum needs at least two polytopes")
    d = Ps[0].ambient_dim
    if any(P.ambient_dim != d for P in Ps):
        raise DimensionMismatch("Cayley sum needs equal ambient dimensions")
    pts = []
    for i, P in enumerate(Ps[:-1]):
        prefix = tuple(1 if j == i else 0 for j in range(r - 1))
        pts.extend(prefix + v for v in P.vertices)
    pts.extend((0,) * (r - 1) + v for v in Ps[-1].vertices)
    return LatticePolytope.from_points(pts, r - 1 + d)


def check_oda(P: LatticePolytope, Q: LatticePolytope) -> bool:
    """True iff (P cap Z) + (Q cap Z) covers every lattice point of P + Q."""
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch("operands live in different dimensions")
    sums = {tuple(a + b for a, b in zip(p, q))
            for p in P.lattice_points() for q in Q.lattice_points()}
    total = set(minkowski_sum(P, Q).lattice_points())
    if not sums <= total:
        raise InternalInconsistency("sumset escaped the Minkowski sum")
    return sums == total


def is_unimodular_simplex(points) -> bool:
    """True iff the points span a simplex whose edge vectors form a basis of
    the ambient lattice restricted to their affine span."""
    pts = [tuple(int(x) for x in p) for p in points]
    if len(set(pts)) != len(pts) or len(pts) < 1:
        return False
    D = len(pts) - 1
    if D == 0:
        return True
    edges = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    if row_rank(edges) != D:
        return False
    return smith_invariants(IntMatrix.from_columns(edges)).all_ones()


# ---------------------------------------------------------------------------
# Text format

def parse_polytope(text: str) -> LatticePolytope:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dim"):
        raise ValueError("polytope text must start with 'dim d'")
    d = int(lines[0].split()[1])
    verts = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    if any(len(v) != d for v in verts):
        raise ValueError("vertex arity does not match the declared dimension")
    return LatticePolytope.from_points(verts, d)


def render_polytope(P: LatticePolytope) -> str:
    lines = [f"dim {P.ambient_dim}"]
    lines.extend(" ".join(str(x) for x in v) for v in P.vertices)
    return "\n".join(lines) + "\n"

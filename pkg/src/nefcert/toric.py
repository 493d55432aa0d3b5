"""Binomial ideal engine: toric ideals, Buchberger with graded reverse-lex
orders, reduced bases, initial ideals, Stanley-Reisner complexes, and the
structure checkers for the three predicted reduced-basis shapes.

Binomials are exponent-vector pairs x^plus - x^minus kept with disjoint
supports.  Cancelling a common monomial factor stays inside the toric ideal
(it is prime and contains no monomials), and iterating reduced-basis passes
with each variable smallest until nothing changes lands exactly on the fully
saturated lattice ideal.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field

from .configurations import Configuration, centrally_symmetric
from .exceptions import (
    HypothesisNotMet,
    NonHomogeneousInput,
    NotSquarefree,
    NotUnimodular,
)
from .linalg import IntMatrix, is_unimodular, kernel_lattice_basis, row_rank


@dataclass(frozen=True)
class TermOrder:
    """Graded reverse-lexicographic order with an explicit variable ranking,
    listed from smallest to largest variable."""

    nvars: int
    ranking: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ranking) != list(range(self.nvars)):
            raise ValueError("ranking must be a permutation of the variables")

    @staticmethod
    def grevlex(nvars: int, ranking=None) -> "TermOrder":
        if ranking is None:
            ranking = tuple(range(nvars))
        return TermOrder(nvars, tuple(ranking))

    def key(self, mono: tuple[int, ...]):
        """Monotone sort key: key(u) > key(v) iff u > v in the order."""
        return (sum(mono), tuple(-mono[r] for r in self.ranking))

    def greater(self, u, v) -> bool:
        return self.key(u) > self.key(v)


@dataclass(frozen=True)
class Binomial:
    """x^plus - x^minus with disjoint supports; plus is the leading side
    whenever the binomial came out of a basis computation."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("exponent vectors of different lengths")
        if any(a and b for a, b in zip(self.plus, self.minus)):
            raise ValueError("binomial sides must have disjoint supports")
        if self.plus == self.minus:
            raise ValueError("zero binomial")

    def degree(self) -> int:
        return sum(self.plus)

    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def as_pair(self):
        return (self.plus, self.minus)


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    elements: tuple[Binomial, ...]
    reduced: bool = True

    def leading_terms(self) -> list[tuple[int, ...]]:
        return [g.plus for g in self.elements]


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators as exponent vectors."""

    nvars: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = self.generators
        for a, b in itertools.permutations(gens, 2):
            if all(x <= y for x, y in zip(a, b)):
                raise ValueError("generators must be incomparable under divisibility")


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        fs = [frozenset(f) for f in self.facets]
        for a, b in itertools.permutations(fs, 2):
            if a < b:
                raise ValueError("facets must be inclusion-maximal")


@dataclass(frozen=True)
class HPoly:
    """h-polynomial coefficients of a quotient by a squarefree monomial
    ideal, low to high, trailing zeros trimmed."""

    coefficients: tuple[int, ...]


def palindromic(h) -> bool:
    """True iff the coefficient vector reads the same reversed, after
    trimming trailing zeros."""
    coeffs = list(getattr(h, "coefficients", h))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs == coeffs[::-1]


# ---------------------------------------------------------------------------
# Raw exponent-vector arithmetic (engine internals)

def _cancel(u, v):
    if any(a and b for a, b in zip(u, v)):
        c = tuple(min(a, b) for a, b in zip(u, v))
        u = tuple(a - m for a, m in zip(u, c))
        v = tuple(b - m for b, m in zip(v, c))
    return u, v


def _orient(u, v, order: TermOrder):
    """Disjoint-support, oriented pair (lead, trail); None for zero."""
    u, v = _cancel(tuple(u), tuple(v))
    if u == v:
        return None
    return (u, v) if order.key(u) > order.key(v) else (v, u)


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mask(mono: tuple[int, ...]) -> int:
    m = 0
    for i, e in enumerate(mono):
        if e:
            m |= 1 << i
    return m


class _Basis:
    """Parallel arrays for the working basis, with support-mask and degree
    prefilters in front of the divisibility scans."""

    __slots__ = ("leads", "trails", "masks", "degs")

    def __init__(self):
        self.leads = []
        self.trails = []
        self.masks = []
        self.degs = []

    def append(self, pair):
        lead, trail = pair
        self.leads.append(lead)
        self.trails.append(trail)
        self.masks.append(_mask(lead))
        self.degs.append(sum(lead))

    def __len__(self):
        return len(self.leads)

    def find_divisor(self, mono, mono_mask, mono_deg, skip=-1):
        leads = self.leads
        masks = self.masks
        degs = self.degs
        for i in range(len(leads)):
            if i == skip:
                continue
            if degs[i] > mono_deg or masks[i] & ~mono_mask:
                continue
            if _divides(leads[i], mono):
                return i
        return -1


def _reduce_lead(pair, basis: _Basis, order, skip=-1):
    """Top-reduce until the lead is irreducible, cancelling common factors as
    they appear; returns an oriented pair or None."""
    while pair is not None:
        plus, minus = pair
        i = basis.find_divisor(plus, _mask(plus), sum(plus), skip)
        if i < 0:
            return pair
        lead, trail = basis.leads[i], basis.trails[i]
        new_plus = tuple(p - l + t for p, l, t in zip(plus, lead, trail))
        pair = _orient(new_plus, minus, order)
    return None


def _normal_form(pair, basis: _Basis, order, skip=-1):
    """Fully reduce both sides; returns an oriented pair or None."""
    pair = _reduce_lead(pair, basis, order, skip)
    while pair is not None:
        plus, minus = pair
        i = basis.find_divisor(minus, _mask(minus), sum(minus), skip)
        if i < 0:
            return pair
        lead, trail = basis.leads[i], basis.trails[i]
        new_minus = tuple(p - l + t for p, l, t in zip(minus, lead, trail))
        pair = _orient(plus, new_minus, order)
        pair = _reduce_lead(pair, basis, order, skip)
    return None


def _buchberger_pairs(gens, order, counter=None):
    """Core loop on oriented exponent pairs.  Returns the basis (a _Basis),
    or None when the shared S-pair counter runs out."""
    basis = _Basis()
    seen = set()
    for g in gens:
        if g is not None and g not in seen:
            seen.add(g)
            basis.append(g)
    heap = []

    def push_pairs(k):
        lead_k = basis.leads[k]
        mask_k = basis.masks[k]
        for i in range(k):
            if not (basis.masks[i] & mask_k):
                continue  # coprime leads: S-pair reduces to zero
            lead_i = basis.leads[i]
            lcm = tuple(max(a, b) for a, b in zip(lead_i, lead_k))
            heapq.heappush(heap, (sum(lcm), order.key(lcm)[1], i, k))

    for k in range(len(basis)):
        push_pairs(k)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        if counter is not None:
            counter[0] -= 1
            if counter[0] < 0:
                return None
        li, ti = basis.leads[i], basis.trails[i]
        lj, tj = basis.leads[j], basis.trails[j]
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        # S-pair of binomials: (lcm/lead_i)*trail_i - (lcm/lead_j)*trail_j
        m1 = tuple(l - a + t for l, a, t in zip(lcm, li, ti))
        m2 = tuple(l - a + t for l, a, t in zip(lcm, lj, tj))
        pair = _orient(m1, m2, order)
        pair = _reduce_lead(pair, basis, order)
        if pair is not None:
            basis.append(pair)
            push_pairs(len(basis) - 1)
    return basis


def _interreduce(raw: _Basis, order):
    """Minimal, fully tail-reduced, sorted basis as a list of pairs."""
    elements = sorted(set(zip(raw.leads, raw.trails)), key=lambda g: order.key(g[0]))
    basis = _Basis()
    for g in elements:
        if basis.find_divisor(g[0], _mask(g[0]), sum(g[0])) < 0:
            basis.append(g)
    while True:
        changed = False
        for idx in range(len(basis)):
            g = (basis.leads[idx], basis.trails[idx])
            nf = _normal_form(g, basis, order, skip=idx)
            if nf != g:
                elements = [(basis.leads[i], basis.trails[i])
                            for i in range(len(basis)) if i != idx]
                if nf is not None:
                    elements.append(nf)
                elements.sort(key=lambda g: order.key(g[0]))
                basis = _Basis()
                for e in elements:
                    basis.append(e)
                changed = True
                break
        if not changed:
            break
    return sorted(zip(basis.leads, basis.trails), key=lambda g: order.key(g[0]))


def buchberger_reduced(gens, order: TermOrder, pair_budget=None) -> GroebnerBasis | None:
    """The unique reduced Groebner basis of a homogeneous binomial ideal.

    With a pair budget set, returns None when the budget runs out.
    """
    pairs = []
    for g in gens:
        b = g.as_pair() if isinstance(g, Binomial) else tuple(g)
        if sum(b[0]) != sum(b[1]):
            raise NonHomogeneousInput("generators must be homogeneous")
        pairs.append(_orient(b[0], b[1], order))
    counter = [pair_budget] if pair_budget is not None else None
    raw = _buchberger_pairs([p for p in pairs if p is not None], order, counter)
    if raw is None:
        return None
    reduced = _interreduce(raw, order)
    return GroebnerBasis(order, tuple(Binomial(p, m) for p, m in reduced), True)


# ---------------------------------------------------------------------------
# Toric ideals with saturation

def toric_ideal(source, pair_budget=None) -> list[Binomial] | None:
    """Generating set of the toric ideal of a configuration (or an already
    homogenized integer matrix).

    Starts from a kernel lattice basis and saturates: for each variable in
    turn, recompute the reduced basis under grevlex with that variable
    smallest and divide out variable powers (which the disjoint-support
    normalization performs on the fly), until a full pass changes nothing.
    The optional pair budget is cumulative over all passes.
    """
    M = source.matrix if isinstance(source, Configuration) else source
    n = M.cols
    kernel = kernel_lattice_basis(M)
    if not kernel:
        return []
    gens = []
    for u in kernel:
        plus = tuple(x if x > 0 else 0 for x in u)
        minus = tuple(-x if x < 0 else 0 for x in u)
        if sum(plus) != sum(minus):
            raise NonHomogeneousInput("matrix does not define a graded toric ideal")
        gens.append((plus, minus))
    counter = [pair_budget] if pair_budget is not None else None
    current = gens
    while True:
        before = sorted(current)
        for v in range(n):
            ranking = (v,) + tuple(i for i in range(n) if i != v)
            order = TermOrder.grevlex(n, ranking)
            oriented = [_orient(p, m, order) for p, m in current]
            raw = _buchberger_pairs([p for p in oriented if p is not None], order, counter)
            if raw is None:
                return None
            current = _interreduce(raw, order)
        if sorted(current) == before:
            break
    return [Binomial(p, m) for p, m in sorted(current)]


def s_pair(f: Binomial, g: Binomial, order: TermOrder) -> Binomial | None:
    """S-binomial of two oriented binomials; None when it cancels to zero."""
    lcm = tuple(max(a, b) for a, b in zip(f.plus, g.plus))
    m1 = tuple(l - a + t for l, a, t in zip(lcm, f.plus, f.minus))
    m2 = tuple(l - a + t for l, a, t in zip(lcm, g.plus, g.minus))
    pair = _orient(m1, m2, order)
    return Binomial(*pair) if pair else None


def reduce_binomial(b: Binomial, G: GroebnerBasis) -> Binomial | None:
    """Normal form of a binomial against a basis; None when it reduces to
    zero, which certifies ideal membership."""
    basis = _Basis()
    for g in G.elements:
        basis.append(g.as_pair())
    pair = _orient(b.plus, b.minus, G.order)
    nf = _normal_form(pair, basis, G.order) if pair else None
    return Binomial(*nf) if nf else None


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    """Leading terms of a reduced basis are automatically minimal."""
    if not G.reduced:
        raise ValueError("initial ideal extraction expects a reduced basis")
    return MonomialIdeal(G.order.nvars, tuple(sorted(g.plus for g in G.elements)))


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(all(e <= 1 for e in g) for g in I.generators)


def stanley_reisner(I: MonomialIdeal, n: int) -> SimplicialComplex:
    """Facets = maximal subsets of [n] containing no generator's support."""
    if not is_squarefree(I):
        raise NotSquarefree("Stanley-Reisner extraction needs a squarefree ideal")
    gen_masks = []
    for g in I.generators:
        mask = 0
        for i, e in enumerate(g):
            if e:
                mask |= 1 << i
        gen_masks.append(mask)
    faces = [f for f in range(1 << n)
             if not any((f & m) == m for m in gen_masks)]
    face_set = set(faces)
    facets = []
    for f in faces:
        if any((f | (1 << v)) in face_set for v in range(n) if not f & (1 << v)):
            continue
        facets.append(tuple(v for v in range(n) if f & (1 << v)))
    facets.sort()
    return SimplicialComplex(n, tuple(facets))


def _face_counts(K: SimplicialComplex) -> list[int]:
    """f_i = number of faces with i vertices (f_0 = 1 for the empty face)."""
    seen = set()
    for facet in K.facets:
        for r in range(len(facet) + 1):
            seen.update(itertools.combinations(facet, r))
    top = max((len(f) for f in K.facets), default=0)
    counts = [0] * (top + 1)
    for face in seen:
        counts[len(face)] += 1
    return counts


def h_polynomial(K: SimplicialComplex) -> HPoly:
    """h-vector from the f-vector: h_k = sum_i (-1)^(k-i) C(D-i, k-i) f_{i-1},
    D the maximal facet size."""
    f = _face_counts(K)
    D = len(f) - 1
    h = []
    for k in range(D + 1):
        h.append(sum((-1) ** (k - i) * math.comb(D - i, k - i) * f[i]
                     for i in range(k + 1)))
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return HPoly(tuple(h))


def triangulation_unimodular(K: SimplicialComplex, points) -> bool:
    """Every maximal face must be a unimodular simplex with respect to the
    ambient lattice restricted to the affine span of the point set."""
    pts = [tuple(p) for p in points]
    if len(pts) != K.vertex_count:
        raise ValueError("one point per complex vertex is required")
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    D = row_rank(diffs)
    if D == 0:
        return all(len(f) == 1 for f in K.facets)
    # saturated basis of the span lattice
    span_basis = kernel_lattice_basis(
        IntMatrix.from_rows(kernel_lattice_basis(IntMatrix.from_columns(diffs).transpose()))
    ) if len(diffs[0]) > D else [tuple(1 if i == j else 0 for i in range(D)) for j in range(D)]
    from .polytopes import AffineLatticeMap, is_unimodular_simplex
    amap = AffineLatticeMap(base, tuple(span_basis))
    model_pts = {}
    for facet in K.facets:
        fpts = []
        for v in facet:
            if v not in model_pts:
                model_pts[v] = amap.to_model(pts[v])
            fpts.append(model_pts[v])
        if len(fpts) != D + 1:
            return False
        if not is_unimodular_simplex(fpts):
            return False
    return True


# ---------------------------------------------------------------------------
# Structure checkers for the three predicted reverse-lex basis shapes

def _binomial_from_vars(n_total, plus_vars, minus_vars) -> Binomial:
    plus = [0] * n_total
    minus = [0] * n_total
    for v, e in plus_vars:
        plus[v] += e
    for v, e in minus_vars:
        minus[v] += e
    return Binomial(tuple(plus), tuple(minus))


@dataclass(frozen=True)
class StructureReport:
    """Clause-by-clause outcome of one basis-form check."""

    kind: str
    n: int
    s: int
    conforms: bool
    failures: tuple[str, ...]
    variable_names: tuple[str, ...]
    extras: tuple[Binomial, ...] = field(default=())

    def g_set_xy(self) -> frozenset:
        """The extra binomials restricted to the shared x/y coordinates."""
        n2 = 2 * self.n
        return frozenset((g.plus[:n2], g.minus[:n2]) for g in self.extras)


def _require_unimodular(A: Configuration):
    if not is_unimodular(A.matrix):
        raise NotUnimodular("the base matrix must be a unimodular configuration")


_PM_CACHE: dict = {}


def _pm_cached(A: Configuration):
    key = (A.matrix.rows, A.matrix.cols, A.matrix.entries)
    if key not in _PM_CACHE:
        _PM_CACHE[key] = _conform_pm_impl(A)
    return _PM_CACHE[key]


def pm_order(n: int) -> TermOrder:
    """z < x1 < y1 < ... < xn < yn on columns ordered x1..xn, y1..yn, z."""
    ranking = (2 * n,) + tuple(v for i in range(n) for v in (i, n + i))
    return TermOrder.grevlex(2 * n + 1, ranking)


def cayley_order(n: int) -> TermOrder:
    """x1 < y1 < ... < xn < yn on columns ordered x1..xn, y1..yn."""
    ranking = tuple(v for i in range(n) for v in (i, n + i))
    return TermOrder.grevlex(2 * n, ranking)


def azero_order(n: int) -> TermOrder:
    """x0 < y0 < x1 < y1 < ... on columns ordered x1..xn, y1..yn, x0, y0."""
    ranking = (2 * n, 2 * n + 1) + tuple(v for i in range(n) for v in (i, n + i))
    return TermOrder.grevlex(2 * n + 2, ranking)


def conform_pmGB(A: Configuration) -> tuple[GroebnerBasis, StructureReport]:
    """Reduced basis of the centrally symmetric ideal under the z-smallest
    order, checked against the form {x_i y_i - z^2} plus z-free extras with
    squarefree monomials and leads avoiding x1, y1."""
    _require_unimodular(A)
    return _pm_cached(A)


def _conform_pm_impl(A: Configuration) -> tuple[GroebnerBasis, StructureReport]:
    n = A.ncols
    cs = centrally_symmetric(A)
    order = pm_order(n)
    gb = buchberger_reduced(toric_ideal(cs.full), order)
    nvars = 2 * n + 1
    expected = set()
    for i in range(n):
        expected.add(_binomial_from_vars(nvars, [(i, 1), (n + i, 1)], [(2 * n, 2)]))
    failures = []
    extras = []
    present = set()
    for g in gb.elements:
        if g in expected:
            present.add(g)
            continue
        extras.append(g)
        name = _render(g, cs.names)
        if g.plus[2 * n] or g.minus[2 * n]:
            failures.append(f"z appears in {name}")
        if g.plus[0] or g.plus[n]:
            failures.append(f"leading term of {name} touches x1 or y1")
        if any(e > 1 for e in g.plus) or any(e > 1 for e in g.minus):
            failures.append(f"non-squarefree monomial in {name}")
    if len(present) != n:
        failures.append(f"only {len(present)} of {n} diagonal binomials x_i y_i - z^2 present")
    report = StructureReport("pm", n, len(extras), not failures, tuple(failures),
                             cs.names, tuple(extras))
    return gb, report


def _check_lattice_points(polytope, expected_points, what: str):
    got = [tuple(p) for p in polytope.lattice_points()]
    want = sorted(set(tuple(p) for p in expected_points))
    if got != want:
        raise HypothesisNotMet(f"lattice points of {what} are not exactly the given columns")


def cayley_matrix(A: Configuration) -> IntMatrix:
    """Exponent matrix of x_i -> t0 t^{a_i} s, y_i -> t^{-a_i} s, columns
    ordered x1..xn then y1..yn."""
    cols = [(1,) + a + (1,) for a in A.columns()]
    cols += [(0,) + tuple(-x for x in a) + (1,) for a in A.columns()]
    return IntMatrix.from_columns(cols)


def azero_matrix(A: Configuration) -> IntMatrix:
    """Same with the appended pair x0 -> t0 s, y0 -> s at the end."""
    d = A.dim
    cols = [(1,) + a + (1,) for a in A.columns()]
    cols += [(0,) + tuple(-x for x in a) + (1,) for a in A.columns()]
    cols.append((1,) + (0,) * d + (1,))
    cols.append((0,) + (0,) * d + (1,))
    return IntMatrix.from_columns(cols)


def conform_cayleyGB(A: Configuration, pm_report: StructureReport | None = None
                     ) -> tuple[GroebnerBasis, StructureReport]:
    """Reduced basis of the Cayley ideal of (P_A, -P_A): must be
    {x_i y_i - x_1 y_1 : i >= 2} plus exactly the pm extras."""
    from .polytopes import polytope_from_columns
    _require_unimodular(A)
    n = A.ncols
    _check_lattice_points(polytope_from_columns(A.matrix), A.columns(), "P_A")
    order = cayley_order(n)
    gb = buchberger_reduced(toric_ideal(cayley_matrix(A)), order)
    nvars = 2 * n
    names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"y{i}" for i in range(1, n + 1))
    expected = set()
    for i in range(1, n):
        expected.add(_binomial_from_vars(nvars, [(i, 1), (n + i, 1)], [(0, 1), (n, 1)]))
    failures = []
    extras = []
    present = set()
    for g in gb.elements:
        if g in expected:
            present.add(g)
        else:
            extras.append(g)
    if len(present) != n - 1:
        failures.append(f"only {len(present)} of {n - 1} binomials x_i y_i - x_1 y_1 present")
    report = StructureReport("cayley", n, len(extras), False, (), names, tuple(extras))
    if pm_report is None:
        pm_report = conform_pmGB(A)[1]
    if report.g_set_xy() != pm_report.g_set_xy():
        failures.append("extras differ from the centrally symmetric basis")
    report = StructureReport("cayley", n, len(extras), not failures, tuple(failures),
                             names, tuple(extras))
    return gb, report


def conform_azeroGB(A: Configuration, pm_report: StructureReport | None = None
                    ) -> tuple[GroebnerBasis, StructureReport]:
    """Reduced basis of the Cayley ideal of (P_{A0}, -P_{A0}): must be
    {x_i y_i - x_0 y_0 : i in [n]} plus exactly the pm extras."""
    from .polytopes import LatticePolytope
    _require_unimodular(A)
    n = A.ncols
    d = A.dim
    p0 = LatticePolytope.from_points(A.columns() + [(0,) * d], d)
    _check_lattice_points(p0, A.columns() + [(0,) * d], "P_{A_0}")
    order = azero_order(n)
    gb = buchberger_reduced(toric_ideal(azero_matrix(A)), order)
    nvars = 2 * n + 2
    names = tuple(f"x{i}" for i in range(1, n + 1)) + \
        tuple(f"y{i}" for i in range(1, n + 1)) + ("x0", "y0")
    expected = set()
    for i in range(n):
        expected.add(_binomial_from_vars(nvars, [(i, 1), (n + i, 1)], [(2 * n, 1), (2 * n + 1, 1)]))
    failures = []
    extras = []
    present = set()
    for g in gb.elements:
        if g in expected:
            present.add(g)
        else:
            extras.append(g)
    if len(present) != n:
        failures.append(f"only {len(present)} of {n} binomials x_i y_i - x_0 y_0 present")
    for g in extras:
        if g.plus[2 * n] or g.minus[2 * n] or g.plus[2 * n + 1] or g.minus[2 * n + 1]:
            failures.append(f"x0/y0 appears in extra {_render(g, names)}")
    report = StructureReport("azero", n, len(extras), False, (), names, tuple(extras))
    if pm_report is None:
        pm_report = conform_pmGB(A)[1]
    if report.g_set_xy() != pm_report.g_set_xy():
        failures.append("extras differ from the centrally symmetric basis")
    report = StructureReport("azero", n, len(extras), not failures, tuple(failures),
                             names, tuple(extras))
    return gb, report


# ---------------------------------------------------------------------------
# Rendering

def _render_monomial(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _render(b: Binomial, names) -> str:
    return f"{_render_monomial(b.plus, names)} - {_render_monomial(b.minus, names)}"


def render_binomial(b: Binomial, names) -> str:
    return _render(b, names)


def render_basis(gb: GroebnerBasis, names) -> list[str]:
    return [_render(g, names) for g in gb.elements]

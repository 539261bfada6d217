"""Gröbner bases, multivariate division and footprints of point ideals."""

from __future__ import annotations

import heapq
import itertools

from .field import FieldSpec
from .polyring import (
    Polynomial,
    PolynomialError,
    divides,
    get_order,
    monomial_div,
    monomial_lcm,
    monomial_text,
)


class GroebnerError(ValueError):
    pass


class GroebnerBasis:
    """A reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial."""

    def __init__(self, polys, order=None):
        self.order = get_order(order)
        polys = list(polys)
        if not polys:
            raise GroebnerError("a Gröbner basis needs at least one generator")
        self.field = polys[0].field
        self.nvars = polys[0].nvars
        self.polys = tuple(sorted(polys, key=lambda g: self.order.key(g.leading_monomial(self.order))))
        self.leading_monomials = tuple(g.leading_monomial(self.order) for g in self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.order == other.order and set(self.polys) == set(other.polys)

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(g.to_text(self.order) for g in self.polys) + "])"

    def remainder(self, f: Polynomial) -> Polynomial:
        return remainder(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not remainder(f, self)

    def is_standard(self, m) -> bool:
        return not any(divides(lm, m) for lm in self.leading_monomials)

    def footprint(self) -> "Footprint":
        return footprint(self)

    def to_text(self):
        return [g.to_text(self.order) for g in self.polys]


class Footprint:
    """Standard monomials of S/I, ascending in the monomial order."""

    def __init__(self, monomials, order=None):
        self.order = get_order(order)
        self.monomials = tuple(self.order.sorted(set(map(tuple, monomials))))
        self._index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    def __contains__(self, m):
        return tuple(m) in self._index

    def __eq__(self, other):
        if isinstance(other, Footprint):
            return self.monomials == other.monomials
        return NotImplemented

    def __repr__(self):
        return "Footprint([" + ", ".join(monomial_text(m) for m in self.monomials) + "])"

    def index(self, m) -> int:
        return self._index[tuple(m)]

    @property
    def nvars(self) -> int:
        return len(self.monomials[0])

    @property
    def largest(self):
        return self.monomials[-1]

    def max_degree(self) -> int:
        return max(sum(m) for m in self.monomials)

    def up_to_degree(self, d: int):
        return [m for m in self.monomials if sum(m) <= d]

    def to_text(self):
        return [monomial_text(m) for m in self.monomials]


# --- division -------------------------------------------------------------

def divide(f: Polynomial, divisors, order=None):
    """Multivariate division: f = sum(q_i g_i) + r, no term of r divisible by any in(g_i).

    Divisors are tried in list order.
    """
    order = get_order(order)
    F = f.field
    divisors = list(divisors)
    lead = [(g.leading_monomial(order), g.leading_coefficient(order)) for g in divisors]
    quotients = [dict() for _ in divisors]
    p = dict(f.terms)
    rem = {}
    while p:
        m = max(p, key=order.key)
        c = p[m]
        for i, (lm, lc) in enumerate(lead):
            if divides(lm, m):
                shift = monomial_div(m, lm)
                factor = F.div(c, lc)
                quotients[i][shift] = F.add(quotients[i].get(shift, 0), factor)
                for gm, gc in divisors[i].terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = F.sub(p.get(t, 0), F.mul(factor, gc))
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    qs = [Polynomial(F, f.nvars, q) for q in quotients]
    return qs, Polynomial(F, f.nvars, rem)


def remainder(f: Polynomial, G) -> Polynomial:
    """Remainder of f on division by a Gröbner basis (unique for a GB)."""
    if isinstance(G, GroebnerBasis):
        return divide(f, G.polys, G.order)[1]
    return divide(f, G)[1]


# --- Buchberger ------------------------------------------------------------

def s_polynomial(f: Polynomial, g: Polynomial, order) -> Polynomial:
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = monomial_lcm(mf, mg)
    F = f.field
    return f.mul_term(monomial_div(lcm, mf), F.inv(cf)) - g.mul_term(monomial_div(lcm, mg), F.inv(cg))


def reduce_basis(G, order) -> list[Polynomial]:
    """Minimalize, inter-reduce and make monic."""
    order = get_order(order)
    G = [g.monic(order) for g in G if g]
    # drop generators whose leading monomial is divisible by another's
    minimal = []
    lms = [g.leading_monomial(order) for g in G]
    for i, g in enumerate(G):
        lm = lms[i]
        redundant = any(
            divides(lms[j], lm) and (lms[j] != lm or j < i)
            for j in range(len(G)) if j != i
        )
        if not redundant:
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = g.leading_monomial(order)
        tail = Polynomial(g.field, g.nvars, {m: c for m, c in g.terms.items() if m != lm})
        tail = divide(tail, others, order)[1] if others else tail
        out.append(Polynomial(g.field, g.nvars, {lm: 1}) + tail)
    return out


def buchberger(gens, order=None) -> GroebnerBasis:
    """Reduced Gröbner basis by Buchberger's algorithm (normal selection strategy)."""
    order = get_order(order)
    G = [g for g in gens if g]
    if not gens:
        raise GroebnerError("buchberger needs a nonempty generator list")
    if not G:
        raise GroebnerError("the zero ideal has no finite footprint here")
    ring = (G[0].field, G[0].nvars)
    if any((g.field, g.nvars) != ring for g in G):
        raise PolynomialError("generators live in different rings")
    G = [g.monic(order) for g in G]
    counter = itertools.count()

    def pair_key(i, j):
        lcm = monomial_lcm(G[i].leading_monomial(order), G[j].leading_monomial(order))
        return (order.key(lcm), next(counter))

    pairs = [(pair_key(i, j), i, j) for i in range(len(G)) for j in range(i)]
    heapq.heapify(pairs)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        mi, mj = G[i].leading_monomial(order), G[j].leading_monomial(order)
        # product criterion: coprime leading monomials reduce to zero
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue
        r = divide(s_polynomial(G[i], G[j], order), G, order)[1]
        if r:
            G.append(r.monic(order))
            k = len(G) - 1
            for l in range(k):
                heapq.heappush(pairs, (pair_key(k, l), k, l))
    return GroebnerBasis(reduce_basis(G, order), order)


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Buchberger criterion: all S-polynomials reduce to zero."""
    for f, g in itertools.combinations(G.polys, 2):
        if divide(s_polynomial(f, g, G.order), G.polys, G.order)[1]:
            return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    for g, lm in zip(G.polys, G.leading_monomials):
        if g.terms[lm] != 1:
            return False
        for h_lm in G.leading_monomials:
            if h_lm != lm and any(divides(h_lm, m) for m in g.terms):
                return False
    return True


# --- point ideals ----------------------------------------------------------

def _check_points(points, nvars=None):
    points = [tuple(P) for P in points]
    if not points:
        raise GroebnerError("the point set is empty")
    s = len(points[0]) if nvars is None else nvars
    if any(len(P) != s for P in points):
        raise GroebnerError("points have inconsistent dimension")
    if len(set(points)) != len(points):
        raise GroebnerError("the point set contains duplicates")
    return points, s


def vanishing_ideal(points, field: FieldSpec, order=None):
    """Reduced GB of I(X) and its footprint, by Buchberger-Möller interpolation.

    Monomials are visited in increasing order; each one's evaluation vector is
    reduced against those of the standard monomials found so far. A zero
    residue yields a GB element, anything else a new standard monomial.
    """
    order = get_order(order)
    F = field
    points, s = _check_points(points)
    m = len(points)
    def eval_vector(mono):
        vec = []
        for k, P in enumerate(points):
            val = 1
            for i, e in enumerate(mono):
                if e:
                    val = F.mul(val, F.pow(P[i], e))
            vec.append(val)
        return vec

    rows = []  # (vector normalized at pivot, pivot column, polynomial terms over standard monomials)
    standard = []
    gb = []
    lms = []
    start = (0,) * s
    heap = [(order.key(start), start)]
    seen = {start}
    while heap:
        _, mono = heapq.heappop(heap)
        if any(divides(lm, mono) for lm in lms):
            continue
        v = eval_vector(mono)
        poly = {mono: 1}
        for rv, pc, rp in rows:
            c = v[pc]
            if c:
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, rv)]
                for mm, cc in rp.items():
                    poly[mm] = F.sub(poly.get(mm, 0), F.mul(c, cc))
        if not any(v):
            gb.append(Polynomial(F, s, poly))
            lms.append(mono)
            continue
        pc = next(i for i, a in enumerate(v) if a)
        inv = F.inv(v[pc])
        rows.append(([F.mul(inv, a) for a in v], pc, {mm: F.mul(inv, cc) for mm, cc in poly.items() if cc}))
        standard.append(mono)
        for i in range(s):
            nxt = tuple(e + (1 if j == i else 0) for j, e in enumerate(mono))
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (order.key(nxt), nxt))
    assert len(standard) == m
    return GroebnerBasis(gb, order), Footprint(standard, order)


def point_ideal_generators(P, field: FieldSpec):
    """Generators t_i - p_i of the maximal ideal of a point."""
    s = len(P)
    return [Polynomial(field, s, {tuple(int(j == i) for j in range(s)): 1, (0,) * s: field.neg(P[i])})
            for i in range(s)]


def vanishing_ideal_buchberger(points, field: FieldSpec, order=None) -> GroebnerBasis:
    """I(X) as an iterated product of point ideals, reduced by Buchberger.

    Maximal ideals of distinct points are pairwise comaximal, so the product
    equals the intersection; after each product the generators are replaced
    by a reduced GB to keep them few. Slow, used as a cross-check.
    """
    order = get_order(order)
    points, s = _check_points(points)
    G = buchberger(point_ideal_generators(points[0], field), order)
    for P in points[1:]:
        gens = [g * h for g in G for h in point_ideal_generators(P, field)]
        G = buchberger(gens, order)
    return G


def footprint(G: GroebnerBasis) -> Footprint:
    """Standard monomials of a zero-dimensional GB, enumerated within pure-power bounds."""
    s = G.nvars
    bounds = []
    for i in range(s):
        pure = [lm[i] for lm in G.leading_monomials if all(e == 0 for j, e in enumerate(lm) if j != i) and lm[i] > 0]
        if not pure:
            raise GroebnerError(f"infinite footprint: no pure power of t{i + 1} among leading monomials")
        bounds.append(min(pure))
    mons = [m for m in itertools.product(*(range(b) for b in bounds)) if G.is_standard(m)]
    return Footprint(mons, G.order)

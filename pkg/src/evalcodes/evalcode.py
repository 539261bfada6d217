"""Point sets, linear codes and evaluation codes."""

from __future__ import annotations

import itertools

import numpy as np

from .field import FieldSpec, field_from_descriptor
from .groebner import Footprint, GroebnerBasis, GroebnerError, remainder, vanishing_ideal
from .linalg import basis_algorithm, coefficient_matrix, dot, invert, null_space, rref
from .polyring import Polynomial, PolynomialError, get_order, monomials_up_to

DEFAULT_BUDGET = 2**24


class BudgetExceeded(RuntimeError):
    pass


class CodeError(ValueError):
    pass


class PointSet:
    """An ordered set of distinct points of K^s; the order fixes codeword coordinates."""

    def __init__(self, field: FieldSpec, points, encoded: bool = False):
        self.field = field
        if encoded:
            pts = [tuple(int(c) for c in P) for P in points]
            if any(not 0 <= c < field.q for P in pts for c in P):
                raise GroebnerError("encoded coordinate outside the field")
        else:
            pts = [tuple(field.element(c) for c in P) for P in points]
        if not pts:
            raise GroebnerError("the point set is empty")
        s = len(pts[0])
        if any(len(P) != s for P in pts):
            raise GroebnerError("points have inconsistent dimension")
        if len(set(pts)) != len(pts):
            raise GroebnerError("the point set contains duplicates")
        self.points = tuple(pts)
        self.nvars = s
        self._ideals = {}
        self._evmats = {}

    @classmethod
    def from_json(cls, obj, field=None):
        """From ``{"field": descriptor, "points": [[elem, ...], ...]}``."""
        F = field_from_descriptor(field if field is not None else obj["field"])
        return cls(F, obj["points"])

    def to_json(self):
        F = self.field
        return {"field": F.descriptor(), "points": [[F.literal(c) for c in P] for P in self.points]}

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __repr__(self):
        return f"PointSet({self.field!r}, {len(self)} points in dimension {self.nvars})"

    def ideal(self, order=None) -> tuple[GroebnerBasis, Footprint]:
        """Reduced GB of I(X) and the footprint, cached per order."""
        order = get_order(order)
        if order.kind not in self._ideals:
            self._ideals[order.kind] = vanishing_ideal(self.points, self.field, order)
        return self._ideals[order.kind]

    def groebner(self, order=None) -> GroebnerBasis:
        return self.ideal(order)[0]

    def footprint(self, order=None) -> Footprint:
        return self.ideal(order)[1]

    def evaluate(self, f: Polynomial):
        if f.nvars != self.nvars:
            raise PolynomialError(f"polynomial in {f.nvars} variables, points in dimension {self.nvars}")
        return [f.evaluate(P) for P in self.points]

    def monomial_values(self, m):
        F = self.field
        out = []
        for P in self.points:
            val = 1
            for x, e in zip(P, m):
                if e:
                    val = F.mul(val, F.pow(x, e))
            out.append(val)
        return out

    def evaluation_matrix(self, order=None):
        """M_ev and its inverse: rows are points, columns the ascending footprint."""
        order = get_order(order)
        if order.kind not in self._evmats:
            D = self.footprint(order)
            cols = [self.monomial_values(m) for m in D]
            M = [list(row) for row in zip(*cols)]
            self._evmats[order.kind] = (M, invert(M, self.field))
        return self._evmats[order.kind]

    def interpolate(self, values, order=None) -> Polynomial:
        """The unique polynomial in K·footprint with the given values."""
        D = self.footprint(order)
        _, Minv = self.evaluation_matrix(order)
        F = self.field
        coeffs = [dot(row, values, F) for row in Minv]
        return Polynomial(F, self.nvars, {m: c for m, c in zip(D, coeffs) if c})


class LinearCode:
    """A linear code of length n over GF(q), stored by its RREF generator matrix."""

    def __init__(self, field: FieldSpec, length: int, rows):
        self.field = field
        self.length = length
        rows = [list(r) for r in rows]
        if any(len(r) != length for r in rows):
            raise CodeError("generator rows must all have the code length")
        self.generator = rref(rows, field)[0] if rows else []
        self.k = len(self.generator)

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.field == other.field
                and self.length == other.length and self.generator == other.generator)

    def __repr__(self):
        return f"LinearCode([{self.length}, {self.k}] over {self.field!r})"

    def dual(self) -> "LinearCode":
        return dual_code(self)

    def contains(self, word) -> bool:
        return rref(self.generator + [list(word)], self.field)[2] == self.k

    def scaled(self, beta) -> "LinearCode":
        F = self.field
        return LinearCode(F, self.length, [[F.mul(b, x) for b, x in zip(beta, row)] for row in self.generator])

    def is_self_dual(self) -> bool:
        return self == self.dual()

    def min_distance(self, budget=DEFAULT_BUDGET) -> int:
        return min_distance(self, budget)

    def to_json(self):
        F = self.field
        return {"length": self.length, "k": self.k,
                "generator": [[F.literal(x) for x in row] for row in self.generator]}

    @classmethod
    def from_json(cls, obj, field: FieldSpec):
        rows = [[field.element(x) for x in row] for row in obj["generator"]]
        return cls(field, int(obj["length"]), rows)


def dual_code(C: LinearCode) -> LinearCode:
    """C^⊥ from the null space of the generator matrix."""
    if C.k == 0:
        return LinearCode(C.field, C.length, [[int(i == j) for j in range(C.length)] for i in range(C.length)])
    return LinearCode(C.field, C.length, null_space(C.generator, C.field, C.length))


def evaluate_space(L, X: PointSet) -> LinearCode:
    """The code L_X = {(f(P_1), ..., f(P_m)) : f in L}."""
    rows = [X.evaluate(f) for f in L if f]
    return LinearCode(X.field, len(X), rows)


def standard_function_space(L, X: PointSet, order=None):
    """Basis of the unique subspace of K·footprint whose evaluation code is L_X."""
    G = X.groebner(order)
    rems = [remainder(f, G) for f in L]
    return basis_algorithm([r for r in rems if r], G.order)


def is_standard_monomial_code(L, X: PointSet, order=None):
    """(True, monomials) if the standard function space has a monomial basis."""
    basis = standard_function_space(L, X, order)
    if all(f.is_monomial() for f in basis):
        return True, [next(iter(f.terms)) for f in basis]
    return False, None


def space_matrix(polys, footprint: Footprint):
    """Coefficient rows over the footprint coordinates."""
    return coefficient_matrix(polys, list(footprint))


def canonical_space(polys, footprint: Footprint, field: FieldSpec):
    """RREF of the coefficient matrix over the ascending footprint."""
    polys = [f for f in polys if f]
    if not polys:
        return []
    return rref(space_matrix(polys, footprint), field)[0]


def same_space(A, B, footprint: Footprint, field: FieldSpec) -> bool:
    return canonical_space(A, footprint, field) == canonical_space(B, footprint, field)


def reed_muller_space(nvars: int, d: int, field: FieldSpec, order=None):
    """Monomial basis of S_{<=d}; empty for d = -1."""
    return [Polynomial.monomial(field, m) for m in monomials_up_to(nvars, d, order)] if d >= 0 else []


# --- minimum distance ------------------------------------------------------

def _add_table(F: FieldSpec):
    q = F.q
    return np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)


def _mul_table(F: FieldSpec):
    q = F.q
    return np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int32)


def min_distance(C: LinearCode, budget=DEFAULT_BUDGET) -> int:
    """Minimum Hamming weight over all nonzero codewords, by enumeration.

    Messages are enumerated with their first nonzero entry equal to 1, since
    scaling does not change weight; ``budget`` caps q^k.
    """
    if C.k == 0:
        raise CodeError("the zero code has no minimum distance")
    F = C.field
    q, k, n = F.q, C.k, C.length
    if budget is not None and q**k > budget:
        raise BudgetExceeded(f"enumerating {q}^{k} messages exceeds the budget {budget}")
    if q > 256:
        return _min_distance_scalar(C)
    add = _add_table(F)
    mul = _mul_table(F)
    G = np.array(C.generator, dtype=np.int32)
    best = n
    # all multiples c*g_i as arrays, then walk messages block by block
    multiples = [mul[:, G[i]] for i in range(k)]  # shape (q, n) per row
    for lead in range(k):
        # codewords with first nonzero message coordinate at `lead`, equal to 1
        words = G[lead][None, :].copy()
        for i in range(lead + 1, k):
            # combine every current word with every multiple of row i
            words = add[words[:, None, :], multiples[i][None, :, :]].reshape(-1, n)
            if words.shape[0] > 1 << 16:
                best = min(best, _min_weight_rest(words, multiples, i + 1, k, add, n))
                break
        else:
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
        if best == 1:
            break
    return best


def _min_weight_rest(words, multiples, start, k, add, n):
    best = n
    for w in words:
        cur = w[None, :]
        for i in range(start, k):
            cur = add[cur[:, None, :], multiples[i][None, :, :]].reshape(-1, n)
        best = min(best, int(np.count_nonzero(cur, axis=1).min()))
    return best


def _min_distance_scalar(C: LinearCode) -> int:
    F = C.field
    best = C.length
    for lead in range(C.k):
        for tail in itertools.product(range(F.q), repeat=C.k - lead - 1):
            word = list(C.generator[lead])
            for c, row in zip(tail, C.generator[lead + 1:]):
                if c:
                    word = [F.add(a, F.mul(c, b)) for a, b in zip(word, row)]
            best = min(best, sum(1 for a in word if a))
    return best

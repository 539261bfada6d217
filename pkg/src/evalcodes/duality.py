"""Algebraic duals, monomial duals and monomial equivalence of evaluation codes."""

from __future__ import annotations

from dataclasses import dataclass

from .evalcode import (
    CodeError,
    LinearCode,
    PointSet,
    canonical_space,
    dual_code,
    evaluate_space,
    standard_function_space,
)
from .invariants import indicator_functions
from .linalg import basis_algorithm, dot
from .polyring import Polynomial, get_order


class DualityError(ValueError):
    """Precondition failure; ``code`` is a short machine-readable tag."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class AlgebraicDual:
    basis: tuple        # L^⊥ as monic polynomials with decreasing initial monomials
    standard: tuple     # basis of the standard function space of L
    points: PointSet

    @property
    def dim(self) -> int:
        return len(self.basis)

    def code(self) -> LinearCode:
        return evaluate_space(self.basis, self.points)


def algebraic_dual(L, X: PointSet, order=None) -> AlgebraicDual:
    """L^⊥ inside K·footprint, pulled back from the dual code through M_ev^-1."""
    order = get_order(order)
    std = standard_function_space(L, X, order)
    C = evaluate_space(std, X)
    D = dual_code(C)
    polys = [X.interpolate(row, order) for row in D.generator] if C.k < len(X) else []
    basis = basis_algorithm(polys, order)
    if evaluate_space(basis, X) != D:
        raise AssertionError("evaluation of the algebraic dual is not the dual code")
    if len(std) + len(basis) != len(X):
        raise AssertionError("dimensions of L and its algebraic dual do not add up to |X|")
    return AlgebraicDual(tuple(basis), tuple(std), X)


def algebraic_dual_direct(L, X: PointSet, order=None):
    """Same space by solving phi(g f_j) = 0 over the footprint coordinates."""
    from .linalg import null_space

    order = get_order(order)
    F = X.field
    D = X.footprint(order)
    std = standard_function_space(L, X, order)
    if not std:
        return [Polynomial.monomial(F, m) for m in D]
    rows = []
    for f in std:
        fv = X.evaluate(f)
        rows.append([dot(fv, X.monomial_values(m), F) for m in D])
    vecs = null_space(rows, F, len(D))
    return [Polynomial(F, X.nvars, {m: c for m, c in zip(D, v) if c}) for v in vecs]


def is_dual_monomial(L, X: PointSet, order=None):
    """(True, monomials) when L^⊥ is spanned by standard monomials, else (False, None).

    Counts footprint monomials t^a with phi(t^a f) = 0 for every f in the
    standard function space and compares with |X| - dim L_X.
    """
    order = get_order(order)
    F = X.field
    std = standard_function_space(L, X, order)
    values = [X.evaluate(f) for f in std]
    hits = [m for m in X.footprint(order)
            if all(dot(v, X.monomial_values(m), F) == 0 for v in values)]
    if len(hits) == len(X) - len(std):
        return True, hits
    return False, None


def double_dual_check(L, X: PointSet, order=None) -> bool:
    order = get_order(order)
    first = algebraic_dual(L, X, order)
    second = algebraic_dual(first.basis, X, order)
    D = X.footprint(order)
    return canonical_space(second.basis, D, X.field) == canonical_space(first.standard, D, X.field)


def verify_monomial_equivalence(C1: LinearCode, C2: LinearCode, beta) -> bool:
    """True iff C2 = beta·C1."""
    if C1.length != C2.length or len(beta) != C1.length:
        raise CodeError("codes and scaling vector must share one length")
    if any(b == 0 for b in beta):
        raise DualityError("zero-scaling", "the scaling vector has a zero entry")
    return C1.scaled(beta) == C2


def monomial_space(monomials, field, nvars=None):
    monomials = [tuple(m) for m in monomials]
    return [Polynomial.monomial(field, m) for m in monomials]


def combinatorial_pairing(gamma1, gamma2, X: PointSet, order=None):
    """Scaling vector beta with beta·L(gamma1)_X = (L(gamma2)_X)^⊥.

    Here t^e is the largest standard monomial, which must occur in every
    standard indicator function, and gamma1, gamma2 are sets of footprint
    exponents with |gamma1| + |gamma2| = |X| and e outside gamma1 + gamma2.
    beta_i is the coefficient of t^e in f_i.
    """
    order = get_order(order)
    D = X.footprint(order)
    g1 = [tuple(a) for a in gamma1]
    g2 = [tuple(a) for a in gamma2]
    for a in g1 + g2:
        if a not in D:
            raise DualityError("not-standard", f"exponent {a} is not a standard monomial")
    if len(set(g1)) != len(g1) or len(set(g2)) != len(g2):
        raise DualityError("duplicate-exponent", "exponent sets must not repeat elements")
    e = D.largest
    ind = indicator_functions(X, order)
    beta = ind.coefficients_of(e)
    if any(b == 0 for b in beta):
        raise DualityError("not-essential", "the largest standard monomial is not essential")
    if len(g1) + len(g2) != len(X):
        raise DualityError("condition-1", f"|Gamma1| + |Gamma2| = {len(g1) + len(g2)} differs from |X| = {len(X)}")
    sums = {tuple(x + y for x, y in zip(a, b)) for a in g1 for b in g2}
    if e in sums:
        raise DualityError("condition-2", "the top exponent lies in Gamma1 + Gamma2")
    F = X.field
    C1 = evaluate_space(monomial_space(g1, F), X)
    C2 = evaluate_space(monomial_space(g2, F), X)
    if not verify_monomial_equivalence(C1, dual_code(C2), beta):
        raise AssertionError("pairing theorem violated")  # pragma: no cover
    return beta

"""Reed-Muller-type codes, degenerate tori and affine spaces, and the duality criterion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .duality import DualityError, verify_monomial_equivalence
from .evalcode import LinearCode, PointSet, dual_code, evaluate_space, reed_muller_space
from .field import FieldSpec
from .invariants import hilbert_profile, indicator_functions, symmetry_and_duality_condition, v_numbers
from .polyring import Polynomial, get_order


class FamilyError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CartesianSpec:
    """B_1 x ... x B_s with B_i the subgroup of K* of order d_i, plus 0 when with_zero[i]."""

    field: FieldSpec
    orders: tuple
    with_zero: tuple

    def __post_init__(self):
        if not self.orders:
            raise FamilyError("invalid-orders", "at least one axis is required")
        if len(self.with_zero) != len(self.orders):
            raise FamilyError("invalid-orders", "with_zero must have one flag per axis")
        for d in self.orders:
            if d < 1 or (self.field.q - 1) % d:
                raise FamilyError("invalid-orders", f"{d} does not divide q - 1 = {self.field.q - 1}")

    @classmethod
    def torus(cls, field, orders):
        orders = tuple(orders)
        return cls(field, orders, (False,) * len(orders))

    @classmethod
    def affine(cls, field, orders):
        orders = tuple(orders)
        return cls(field, orders, (True,) * len(orders))

    @property
    def kind(self) -> str:
        if not any(self.with_zero):
            return "torus"
        if all(self.with_zero):
            return "affine"
        return "cartesian"

    @property
    def nvars(self) -> int:
        return len(self.orders)

    @property
    def sizes(self) -> tuple:
        """e_i = |B_i|."""
        return tuple(d + z for d, z in zip(self.orders, self.with_zero))

    @property
    def r0(self) -> int:
        return sum(e - 1 for e in self.sizes)

    def axis(self, i: int):
        pts = self.field.subgroup(self.orders[i])
        return [0] + pts if self.with_zero[i] else pts

    def footprint_monomials(self):
        return list(itertools.product(*(range(e) for e in self.sizes)))

    def groebner_generators(self):
        """t_i^{d_i} - 1 on torus axes, t_i^{e_i} - t_i on axes containing 0."""
        F, s = self.field, self.nvars
        gens = []
        for i, (e, z) in enumerate(zip(self.sizes, self.with_zero)):
            top = tuple(e if j == i else 0 for j in range(s))
            low = tuple(1 if j == i else 0 for j in range(s)) if z else (0,) * s
            gens.append(Polynomial(F, s, {top: 1, low: F.neg(1)}))
        return gens


def cartesian_pointset(spec: CartesianSpec) -> PointSet:
    """Points in lexicographic order with axis 1 slowest."""
    return PointSet(spec.field, itertools.product(*(spec.axis(i) for i in range(spec.nvars))), encoded=True)


def reed_muller(X: PointSet, d: int, order=None) -> LinearCode:
    """C_X(d), the evaluation of S_{<=d}; d = -1 gives the zero code."""
    if d < -1:
        raise FamilyError("invalid-degree", "the degree must be at least -1")
    return evaluate_space(reed_muller_space(X.nvars, d, X.field, order), X)


def _check_standard(A, spec: CartesianSpec):
    A = [tuple(a) for a in A]
    for a in A:
        if len(a) != spec.nvars or any(not 0 <= c < e for c, e in zip(a, spec.sizes)):
            raise FamilyError("not-standard", f"monomial {a} is not standard")
    return A


def _complement(B, spec: CartesianSpec, order):
    B = set(B)
    return get_order(order).sorted(m for m in spec.footprint_monomials() if m not in B)


def torus_monomial_dual(A, spec: CartesianSpec, order=None):
    """Monomial basis of L^⊥ for a monomial space L on a degenerate torus.

    Each nonconstant t^a pairs with t^b where b_j = d_j - a_j on the support
    of a and 0 elsewhere; 1 pairs with itself. The dual is the footprint
    minus all the t^b.
    """
    if spec.kind != "torus":
        raise FamilyError("wrong-family", "a degenerate torus is required")
    A = _check_standard(A, spec)
    B = []
    for a in A:
        B.append(tuple(d - c if c else 0 for c, d in zip(a, spec.orders)))
    return _complement(B, spec, order)


def weakly_divisor_closed(A, spec: CartesianSpec) -> bool:
    """Closed under dividing out any set of variables that appear at exponent d_j."""
    A = set(_check_standard(A, spec))
    d = spec.orders
    if spec.nvars == 1:
        return not ((d[0],) in A and (0,) not in A)
    for a in A:
        top = [j for j, c in enumerate(a) if c == d[j]]
        for r in range(1, len(top) + 1):
            for D in itertools.combinations(top, r):
                if tuple(0 if j in D else c for j, c in enumerate(a)) not in A:
                    return False
    return True


def _check_affine_gcd(spec: CartesianSpec):
    if spec.kind != "affine":
        raise FamilyError("wrong-family", "a degenerate affine space is required")
    p = spec.field.p
    if any(e % p for e in spec.sizes):
        raise FamilyError("gcd-precondition", f"the characteristic {p} must divide every e_i = {list(spec.sizes)}")


def affine_monomial_dual(A, spec: CartesianSpec, order=None):
    """Δ minus {t^(d-a)} when A is weakly divisor-closed, else None (dual not monomial)."""
    _check_affine_gcd(spec)
    A = _check_standard(A, spec)
    if not weakly_divisor_closed(A, spec):
        return None
    B = [tuple(d - c for c, d in zip(a, spec.orders)) for a in A]
    return _complement(B, spec, order)


def affine_rm_dual(d: int, spec: CartesianSpec, order=None):
    """Standard monomials of degree at most r0 - d - 1."""
    _check_affine_gcd(spec)
    r0 = spec.r0
    if not -1 <= d <= r0:
        raise FamilyError("invalid-degree", f"the degree must lie in [-1, {r0}]")
    out = get_order(order).sorted(m for m in spec.footprint_monomials() if sum(m) <= r0 - d - 1)
    A = [m for m in spec.footprint_monomials() if sum(m) <= d]
    if out != affine_monomial_dual(A, spec, order):
        raise AssertionError("degree form and complement form of the dual disagree")  # pragma: no cover
    return out


def duality_criterion(X: PointSet, order=None) -> dict:
    """Decide whether C_X(d) is monomially equivalent to C_X(r0-d-1)^⊥ for all d.

    The condition checked is H(d) + H(r0-d-1) = |X| for -1 <= d <= r0
    together with every local v-number being r0. When it holds, beta is
    the vector of leading coefficients of the standard indicator functions
    and the equivalence is verified degree by degree.
    """
    order = get_order(order)
    if len(X) < 2:
        raise FamilyError("too-few-points", "the criterion needs at least two points")
    profile = hilbert_profile(X, order)
    cond = symmetry_and_duality_condition(profile)
    local, v = v_numbers(X, order)
    r0 = profile.r0
    report = {
        "r0": r0,
        "h_vector": list(profile.counts),
        "complement_holds": cond["complement_holds"],
        "failing_degrees": [d for d, ok in cond["hilbert_complement"].items() if not ok],
        "v_local": local,
        "v_numbers_equal_r0": all(x == r0 for x in local),
        "holds": False,
        "beta": None,
        "g": None,
    }
    if not (report["complement_holds"] and report["v_numbers_equal_r0"]):
        return report
    F = X.field
    ind = indicator_functions(X, order)
    beta = ind.leading_coefficients()
    g = Polynomial.zero(F, X.nvars)
    for c, f in zip(beta, ind):
        g = g + f.scale(c)
    if X.evaluate(g) != beta:
        raise AssertionError("g(P_i) differs from lc(f_i)")  # pragma: no cover
    for d in range(-1, r0 + 1):
        lhs = reed_muller(X, d, order)
        rhs = dual_code(reed_muller(X, r0 - d - 1, order))
        if not verify_monomial_equivalence(lhs, rhs, beta):
            raise AssertionError(f"equivalence fails in degree {d}")  # pragma: no cover
    report.update(holds=True, beta=beta, g=g)
    return report


def self_dual_code(X: PointSet, order=None) -> LinearCode:
    """alpha·C_X((r0-1)/2) with alpha_i^2 = lc(f_i), in characteristic 2 with r0 odd."""
    F = X.field
    if F.p != 2:
        raise DualityError("odd-characteristic", "self-dual construction needs characteristic 2")
    report = duality_criterion(X, order)
    r0 = report["r0"]
    if r0 % 2 == 0:
        raise DualityError("even-r0", f"r0 = {r0} must be odd")
    if not report["holds"]:
        raise DualityError("criterion-fails", "the duality criterion does not hold for X")
    alpha = [F.sqrt_char2(b) for b in report["beta"]]
    C = reed_muller(X, (r0 - 1) // 2, order).scaled(alpha)
    if not C.is_self_dual():
        raise AssertionError("constructed code is not self-dual")  # pragma: no cover
    return C

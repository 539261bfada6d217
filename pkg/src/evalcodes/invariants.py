"""Standard indicator functions, v-numbers and Hilbert-function data of I(X)."""

from __future__ import annotations

from dataclasses import dataclass

from .evalcode import DEFAULT_BUDGET, PointSet, evaluate_space, min_distance, reed_muller_space
from .groebner import Footprint
from .polyring import Polynomial, get_order


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class IndicatorSet:
    """f_1..f_m in K·footprint with f_i(P_j) = [i == j]."""

    functions: tuple
    degrees: tuple
    footprint: Footprint
    matrix: tuple
    inverse: tuple

    def __len__(self):
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)

    def __getitem__(self, i):
        return self.functions[i]

    def leading_coefficients(self):
        order = self.footprint.order
        return [f.leading_coefficient(order) for f in self.functions]

    def coefficients_of(self, m):
        """Coefficient of the monomial m in each f_i."""
        return [f.coefficient(m) for f in self.functions]


def indicator_functions(X: PointSet, order=None) -> IndicatorSet:
    """Read f_i off column i of the inverse evaluation matrix."""
    order = get_order(order)
    D = X.footprint(order)
    M, Minv = X.evaluation_matrix(order)
    F = X.field
    funcs = []
    for i in range(len(X)):
        col = [row[i] for row in Minv]
        funcs.append(Polynomial(F, X.nvars, {m: c for m, c in zip(D, col) if c}))
    degrees = tuple(f.total_degree() for f in funcs)
    return IndicatorSet(tuple(funcs), degrees, D,
                        tuple(map(tuple, M)), tuple(map(tuple, Minv)))


def v_numbers(X: PointSet, order=None):
    """Local v-numbers (degrees of the standard indicator functions) and their minimum."""
    if len(X) < 2:
        raise InvariantError("v-numbers need at least two points")
    local = list(indicator_functions(X, order).degrees)
    return local, min(local)


@dataclass(frozen=True)
class HilbertProfile:
    """Per-degree footprint counts and the affine Hilbert function."""

    counts: tuple      # psi(d) = |footprint ∩ S_d|, d = 0..r0
    cumulative: tuple  # H(d), d = 0..r0
    r0: int
    npoints: int

    @property
    def h_vector(self):
        return self.counts

    def H(self, d: int) -> int:
        """Affine Hilbert function, with H(d) = 0 for d < 0 and |X| past r0."""
        if d < 0:
            return 0
        if d >= self.r0:
            return self.npoints
        return self.cumulative[d]


def hilbert_profile(X: PointSet, order=None) -> HilbertProfile:
    D = X.footprint(order)
    return profile_from_footprint(D)


def profile_from_footprint(D: Footprint) -> HilbertProfile:
    r0 = D.max_degree()
    counts = [0] * (r0 + 1)
    for m in D:
        counts[sum(m)] += 1
    cumulative, acc = [], 0
    for c in counts:
        acc += c
        cumulative.append(acc)
    return HilbertProfile(tuple(counts), tuple(cumulative), r0, len(D))


def symmetry_and_duality_condition(profile: HilbertProfile) -> dict:
    """Compare h-vector symmetry with the identity H(d) + H(r0-d-1) = |X|.

    The two are equivalent; the report carries the per-degree values so that
    failures can be located.
    """
    h, r0, m = profile.counts, profile.r0, profile.npoints
    symmetric = all(h[i] == h[r0 - i] for i in range(r0 + 1))
    per_degree = {d: profile.H(d) + profile.H(r0 - d - 1) for d in range(-1, r0 + 1)}
    complement = {d: v == m for d, v in per_degree.items()}
    holds = all(complement.values())
    if holds != symmetric:
        raise AssertionError("h-vector symmetry and Hilbert complement disagree")
    return {"h_symmetric": symmetric, "hilbert_complement": complement,
            "complement_values": per_degree, "complement_holds": holds}


def reed_muller_distance(X: PointSet, d: int, order=None, budget=DEFAULT_BUDGET) -> int:
    L = reed_muller_space(X.nvars, d, X.field, order)
    return min_distance(evaluate_space(L, X), budget)


def reg_delta(X: PointSet, order=None, mode: str = "via-v", budget=DEFAULT_BUDGET) -> int:
    """Regularity index of d -> delta_X(d): the least d with delta_X(d) = 1.

    ``via-v`` returns v(I); ``brute-force`` scans minimum distances of the
    Reed-Muller-type codes C_X(d) for d = 0..r0.
    """
    if len(X) < 2:
        raise InvariantError("reg(delta_X) needs at least two points")
    if mode == "via-v":
        return v_numbers(X, order)[1]
    if mode != "brute-force":
        raise ValueError(f"unknown mode {mode!r}")
    r0 = X.footprint(order).max_degree()
    for d in range(r0 + 1):
        if reed_muller_distance(X, d, order, budget) == 1:
            return d
    raise AssertionError("delta_X(r0) must be 1")  # pragma: no cover


def essential_monomials(F: IndicatorSet):
    """Footprint monomials with a nonzero coefficient in every indicator function."""
    return [m for m in F.footprint if all(f.coefficient(m) for f in F.functions)]

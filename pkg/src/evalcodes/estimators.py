"""Estimator-style wrappers: fit on a point set, transform polynomials or messages."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .duality import algebraic_dual
from .evalcode import LinearCode, PointSet, dual_code, evaluate_space, reed_muller_space
from .field import FieldSpec, field_from_descriptor, make_field
from .groebner import GroebnerError, remainder
from .invariants import indicator_functions, v_numbers
from .polyring import Polynomial, get_order, parse_polynomial


def check_field(field) -> FieldSpec:
    """Accept a FieldSpec, a JSON descriptor, a (p, v) pair or a prime."""
    if isinstance(field, FieldSpec):
        return field
    if isinstance(field, dict):
        return field_from_descriptor(field)
    if isinstance(field, int):
        return make_field(field, 1)
    if isinstance(field, (tuple, list)) and len(field) == 2:
        return make_field(int(field[0]), int(field[1]))
    raise ValueError(f"cannot interpret {field!r} as a finite field")


def check_points(points, field=None) -> PointSet:
    """Validate evaluation points and return a PointSet.

    ``points`` may already be a PointSet, a JSON object with ``field`` and
    ``points`` keys, or a sequence of coordinate literals (then ``field`` is required).
    """
    if isinstance(points, PointSet):
        if field is not None and check_field(field) != points.field:
            raise ValueError("point set and estimator disagree on the field")
        return points
    if isinstance(points, dict):
        return PointSet.from_json(points, check_field(field) if field is not None else None)
    if field is None:
        raise ValueError("a field is required to read raw point coordinates")
    F = check_field(field)
    if isinstance(points, np.ndarray):
        if points.ndim != 2:
            raise GroebnerError("points must form a 2-d array")
        points = points.tolist()
    return PointSet(F, points)


def _check_polys(polys, X: PointSet):
    out = []
    for f in polys:
        if isinstance(f, str):
            f = parse_polynomial(f, X.field, X.nvars)
        if not isinstance(f, Polynomial):
            raise TypeError(f"expected a polynomial or its text, got {type(f).__name__}")
        out.append(f)
    return out


def _check_fitted(est, attr):
    if not hasattr(est, attr):
        raise NotFittedError(f"{type(est).__name__} is not fitted yet; call fit first")


class VanishingIdeal(BaseEstimator, TransformerMixin):
    """Vanishing ideal of a point set; transform reduces polynomials to normal form."""

    def __init__(self, field=None, order="grevlex"):
        self.field = field
        self.order = order

    def fit(self, X, y=None):
        pts = check_points(X, self.field)
        order = get_order(self.order)
        self.points_ = pts
        self.groebner_basis_ = pts.groebner(order)
        self.footprint_ = pts.footprint(order)
        self.indicators_ = indicator_functions(pts, order)
        self.v_local_, self.v_number_ = v_numbers(pts, order) if len(pts) > 1 else ([0], 0)
        return self

    def transform(self, X):
        _check_fitted(self, "groebner_basis_")
        return [remainder(f, self.groebner_basis_) for f in _check_polys(X, self.points_)]


class EvaluationCode(BaseEstimator, TransformerMixin):
    """Evaluation code L_X of a polynomial space on the fitted points.

    Give either ``space`` (polynomials or their text) or ``degree`` for the
    Reed-Muller-type code C_X(degree). ``transform`` encodes message rows
    over the RREF generator matrix.
    """

    def __init__(self, space=None, degree=None, field=None, order="grevlex"):
        self.space = space
        self.degree = degree
        self.field = field
        self.order = order

    def _space(self, X: PointSet):
        if (self.space is None) == (self.degree is None):
            raise ValueError("give exactly one of space and degree")
        if self.degree is not None:
            if self.degree < -1:
                raise ValueError("degree must be at least -1")
            return reed_muller_space(X.nvars, self.degree, X.field, self.order)
        return _check_polys(self.space, X)

    def fit(self, X, y=None):
        pts = check_points(X, self.field)
        L = self._space(pts)
        dual = algebraic_dual(L, pts, self.order)
        self.points_ = pts
        self.standard_space_ = list(dual.standard)
        self.code_ = evaluate_space(self.standard_space_, pts)
        self.algebraic_dual_ = list(dual.basis)
        self.dual_code_ = dual_code(self.code_)
        return self

    def transform(self, X):
        _check_fitted(self, "code_")
        C: LinearCode = self.code_
        F = C.field
        msgs = np.asarray(X, dtype=np.int64)
        if msgs.ndim == 1:
            msgs = msgs[None, :]
        if msgs.ndim != 2 or msgs.shape[1] != C.k:
            raise ValueError(f"messages must have {C.k} entries")
        if (msgs < 0).any() or (msgs >= F.q).any():
            raise ValueError("message entries must be encoded field elements")
        out = np.zeros((msgs.shape[0], C.length), dtype=np.int64)
        for r, msg in enumerate(msgs.tolist()):
            word = [0] * C.length
            for c, row in zip(msg, C.generator):
                if c:
                    word = [F.add(a, F.mul(c, b)) for a, b in zip(word, row)]
            out[r] = word
        return out

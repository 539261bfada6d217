"""Exact linear algebra over GF(q).

Matrices are lists of rows of encoded field elements (ints); every function
takes the field explicitly.
"""

from __future__ import annotations

from .field import FieldSpec
from .polyring import Polynomial, get_order


class SingularMatrixError(ArithmeticError):
    pass


def rref(M, F: FieldSpec):
    """Reduced row echelon form.

    Returns ``(R, pivots, rank)`` where R keeps only the nonzero rows.
    """
    A = [list(row) for row in M]
    if not A:
        return [], [], 0
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots, r


def rank(M, F: FieldSpec) -> int:
    return rref(M, F)[2]


def null_space(M, F: FieldSpec, ncols: int | None = None):
    """Basis of the right kernel {x : M x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    R, pivots, _ = rref(M, F) if M else ([], [], 0)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for row, pc in zip(R, pivots):
            x[pc] = F.neg(row[fc])
        basis.append(x)
    return basis


def matmul(A, B, F: FieldSpec):
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = 0
            for k, a in enumerate(row):
                if a and B[k][j]:
                    acc = F.add(acc, F.mul(a, B[k][j]))
            new.append(acc)
        out.append(new)
    return out


def matvec(A, x, F: FieldSpec):
    return [dot(row, x, F) for row in A]


def dot(u, v, F: FieldSpec) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def invert(M, F: FieldSpec):
    """Inverse of a square nonsingular matrix by Gauss-Jordan elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("only square matrices can be inverted")
    aug = [list(row) + e for row, e in zip(M, identity(n))]
    R, pivots, r = rref(aug, F)
    if r < n or pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in R]


def same_row_space(A, B, F: FieldSpec) -> bool:
    return rref(A, F)[0] == rref(B, F)[0]


# --- polynomial spaces -----------------------------------------------------

def _sigma_phi(B, order):
    """One step of the basis algorithm: max(B) and phi(B)."""
    key = order.key
    top = max(range(len(B)), key=lambda i: key(B[i].leading_monomial(order)))
    g1 = B[top]
    lm = g1.leading_monomial(order)
    lc1 = g1.terms[lm]
    F = g1.field
    reduced, rest = [], []
    for i, g in enumerate(B):
        if g.leading_monomial(order) == lm:
            if i == top:
                continue
            h = g1 - g.scale(F.div(lc1, g.terms[lm]))
            if h:
                reduced.append(h)
        else:
            rest.append(g)
    return g1, reduced + rest


def basis_algorithm(A, order=None):
    """K-basis of the span of A by repeated leading-term elimination.

    At each step the element with the largest initial monomial (first one in
    list order on ties) is emitted, and every other element sharing that
    initial monomial is replaced by its difference with it. Output elements
    are monic with strictly decreasing initial monomials.
    """
    order = get_order(order)
    B = [f for f in A if f]
    out = []
    while B:
        g, B = _sigma_phi(B, order)
        out.append(g.monic(order))
    return out


def coefficient_matrix(polys, monomials):
    """Rows of coefficients of each polynomial over the given monomial list."""
    index = {m: j for j, m in enumerate(monomials)}
    rows = []
    for f in polys:
        row = [0] * len(monomials)
        for m, c in f.terms.items():
            if m not in index:
                raise ValueError(f"monomial {m} of {f} outside the coordinate list")
            row[index[m]] = c
        rows.append(row)
    return rows


def polys_from_rows(rows, monomials, F, nvars):
    return [Polynomial(F, nvars, {m: c for m, c in zip(monomials, row) if c}) for row in rows]


def span_rank(polys, F: FieldSpec) -> int:
    polys = [f for f in polys if f]
    if not polys:
        return 0
    mons = sorted({m for f in polys for m in f.terms})
    return rank(coefficient_matrix(polys, mons), F)

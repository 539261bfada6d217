"""Sparse multivariate polynomials over GF(q) with graded monomial orders.

Monomials are exponent tuples ``(c_1, ..., c_s)``; polynomials map
monomials to nonzero encoded field elements (see :mod:`evalcodes.field`).
"""

from __future__ import annotations

import re

from .field import FieldError, FieldSpec


class PolynomialError(ValueError):
    pass


def degree(m) -> int:
    return sum(m)


def divides(a, b) -> bool:
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(s: int, d: int):
    """All exponent tuples of total degree d in s variables."""
    if s == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(s - 1, d - first):
            yield (first,) + rest


def monomials_up_to(s: int, d: int, order=None):
    """All monomials of degree <= d, ascending in ``order`` (default grevlex)."""
    order = get_order(order)
    mons = [m for k in range(d + 1) for m in monomials_of_degree(s, k)]
    return sorted(mons, key=order.key)


class MonomialOrder:
    """A monomial order with variable precedence t1 > t2 > ... > ts.

    ``key(m)`` is a sort key that is increasing in the order.
    """

    KINDS = ("grevlex", "grlex", "lex")

    def __init__(self, kind: str = "grevlex"):
        if kind not in self.KINDS:
            raise PolynomialError(f"unknown monomial order {kind!r}; expected one of {self.KINDS}")
        self.kind = kind

    @property
    def graded(self) -> bool:
        return self.kind != "lex"

    def key(self, m):
        if self.kind == "grevlex":
            # ties broken by the last variable: a smaller power of t_s is larger
            return (sum(m), tuple(-c for c in reversed(m)))
        if self.kind == "grlex":
            return (sum(m), tuple(m))
        return tuple(m)

    def compare(self, a, b) -> int:
        if len(a) != len(b):
            raise PolynomialError("monomials live in rings of different dimension")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, monomials, reverse=False):
        return sorted(monomials, key=self.key, reverse=reverse)

    def max(self, monomials):
        return max(monomials, key=self.key)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")


def get_order(order) -> MonomialOrder:
    if order is None:
        return GREVLEX
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


def order_compare(m1, m2, order=None) -> int:
    """-1, 0 or 1 as m1 is smaller than, equal to or larger than m2."""
    return get_order(order).compare(tuple(m1), tuple(m2))


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over ``field``."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: FieldSpec, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in dict(terms).items():
                m = tuple(int(e) for e in m)
                if len(m) != nvars or any(e < 0 for e in m):
                    raise PolynomialError(f"bad exponent vector {m!r} for {nvars} variables")
                if c:
                    clean[m] = c
        self.terms = clean

    # -- constructors --

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, c=1):
        return cls(field, nvars, {(0,) * nvars: field.element(c)})

    @classmethod
    def monomial(cls, field, exps, c=1):
        exps = tuple(exps)
        return cls(field, len(exps), {exps: field.element(c)})

    @classmethod
    def variable(cls, field, nvars, i):
        """The variable t_{i+1} (0-based index i)."""
        exps = [0] * nvars
        exps[i] = 1
        return cls(field, nvars, {tuple(exps): 1})

    # -- basic protocol --

    def __bool__(self):
        return bool(self.terms)

    is_zero = property(lambda self: not self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise PolynomialError(f"expected a Polynomial, got {type(other).__name__}")
        if other.field != self.field or other.nvars != self.nvars:
            raise PolynomialError("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.field, self.nvars, other)

    # -- arithmetic --

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = F.add(out.get(m, 0), c)
        return Polynomial(F, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(self.field.element(other))
        self._check(other)
        F = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                out[m] = F.add(out.get(m, 0), F.mul(c1, c2))
        return Polynomial(F, self.nvars, out)

    def __rmul__(self, other):
        return self.scale(self.field.element(other))

    def __pow__(self, n: int):
        out = Polynomial.constant(self.field, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: int):
        """Multiply by the encoded field element c."""
        F = self.field
        if c == 0:
            return Polynomial(F, self.nvars)
        return Polynomial(F, self.nvars, {m: F.mul(c, a) for m, a in self.terms.items()})

    def mul_term(self, m, c: int):
        """Multiply by the term c * t^m."""
        F = self.field
        return Polynomial(F, self.nvars, {monomial_mul(m, k): F.mul(c, a) for k, a in self.terms.items()})

    # -- order-dependent data --

    def sorted_terms(self, order=None, descending=True):
        order = get_order(order)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=descending)

    def leading_monomial(self, order=None):
        if not self.terms:
            raise PolynomialError("the zero polynomial has no leading term")
        return get_order(order).max(self.terms)

    def leading_coefficient(self, order=None) -> int:
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order=None):
        """(in(f), lc(f)) under the given order."""
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def monic(self, order=None):
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def coefficient(self, m) -> int:
        return self.terms.get(tuple(m), 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self):
        return set(self.terms)

    # -- evaluation --

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point) -> int:
        """Value at a point given as encoded field elements (0^0 = 1)."""
        if len(point) != self.nvars:
            raise PolynomialError(f"point has {len(point)} coordinates, ring has {self.nvars} variables")
        F = self.field
        total = 0
        for m, c in self.terms.items():
            val = c
            for x, e in zip(point, m):
                if e:
                    val = F.mul(val, F.pow(x, e))
                    if val == 0:
                        break
            total = F.add(total, val)
        return total

    # -- text form --

    def to_text(self, order=None) -> str:
        """Render terms in descending order, e.g. ``t2*t3^2-t2``."""
        if not self.terms:
            return "0"
        F = self.field
        out = []
        for m, c in self.sorted_terms(order):
            mono = monomial_text(m)
            if F.v == 1:
                c = F.signed(c)
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                if mono == "1":
                    body = str(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{mag}*{mono}"
            else:
                sign = "+"
                lit = "[" + ",".join(str(x) for x in F.coeffs(c)) + "]"
                if mono == "1":
                    body = lit
                elif c == 1:
                    body = mono
                else:
                    body = f"{lit}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += sign + body
        return text

    def to_json(self, order=None):
        F = self.field
        return [{"coeff": F.literal(c), "exps": list(m)} for m, c in self.sorted_terms(order)]


def monomial_text(m) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"t{i + 1}")
        elif e > 1:
            parts.append(f"t{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR_TOKEN = re.compile(r"\[[^\]]*\]|t\d+(?:\^\d+)?|\d+")
_FACTOR = re.compile(r"^t(\d+)(?:\^(\d+))?$")


def _split_terms(text):
    """Split on top-level +/- (not inside coefficient brackets)."""
    terms, depth, cur, sign = [], 0, "", "+"
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0:
            if cur:
                terms.append((sign, cur))
                cur = ""
                sign = ch
            else:
                sign = "-" if (sign == "-") != (ch == "-") else "+"
            continue
        cur += ch
    if cur:
        terms.append((sign, cur))
    elif text:
        raise PolynomialError(f"dangling sign in {text!r}")
    return terms


def parse_polynomial(text: str, field: FieldSpec, nvars: int) -> Polynomial:
    """Parse text such as ``t2*t3^2 - t2`` or ``[0,1]*t1^2 + 1``.

    Products may also be written by juxtaposition of variables (``t1t3``).
    """
    src = text.replace(" ", "").replace("−", "-")
    if not src:
        raise PolynomialError("empty polynomial text")
    if src == "0":
        return Polynomial.zero(field, nvars)
    out = Polynomial.zero(field, nvars)
    for sign, body in _split_terms(src):
        coeff = 1
        exps = [0] * nvars
        factors = []
        for piece in body.split("*"):
            if not piece:
                raise PolynomialError(f"malformed term {body!r} in {text!r}")
            # juxtaposition is a product: t1t3^2, 2t1
            found = _FACTOR_TOKEN.findall(piece)
            if "".join(found) != piece:
                raise PolynomialError(f"cannot parse factor {piece!r} in {text!r}")
            factors.extend(found)
        for f in factors:
            mt = _FACTOR.match(f)
            if mt:
                idx = int(mt.group(1))
                if not 1 <= idx <= nvars:
                    raise PolynomialError(f"variable t{idx} outside t1..t{nvars}")
                exps[idx - 1] += int(mt.group(2) or 1)
            elif f.startswith("["):
                try:
                    lit = [int(x) for x in f.strip("[]").split(",") if x != ""]
                    coeff = field.mul(coeff, field.element(lit))
                except (ValueError, FieldError) as exc:
                    raise PolynomialError(f"bad coefficient {f!r}: {exc}") from None
            else:
                try:
                    coeff = field.mul(coeff, field.element(int(f)))
                except ValueError:
                    raise PolynomialError(f"cannot parse factor {f!r} in {text!r}") from None
        c = coeff
        if sign == "-":
            c = field.neg(c)
        out = out + Polynomial(field, nvars, {tuple(exps): c})
    return out


def polynomial_from_json(obj, field: FieldSpec, nvars: int) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_json`: a list of ``{"coeff", "exps"}`` terms."""
    out = Polynomial.zero(field, nvars)
    try:
        for term in obj:
            out = out + Polynomial(field, nvars, {tuple(term["exps"]): field.element(term["coeff"])})
    except (KeyError, TypeError, FieldError) as exc:
        raise PolynomialError(f"bad polynomial term list: {exc}") from None
    return out


def poly_eval(f: Polynomial, point) -> int:
    return f.evaluate(point)

"""Exact arithmetic in GF(p^v).

Elements are stored as plain integers: the coefficient vector
``(c_0, ..., c_{v-1})`` of ``c_0 + c_1 a + ... + c_{v-1} a^{v-1}`` is
encoded as ``sum(c_i * p**i)``. Library code works on these integers through
the :class:`FieldSpec` methods; :class:`FieldElement` wraps them with Python
operators for interactive use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

MAX_ORDER = 2**16


class FieldError(ValueError):
    """Invalid field description or illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- dense polynomials over GF(p), coefficient lists, constant term first ---

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a, b, p):
    """Remainder of a by the nonzero polynomial b over GF(p)."""
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bc) % p
        a = _trim(a)
    return a


def is_irreducible(poly, p: int) -> bool:
    """Irreducibility over GF(p) by trial division with every monic factor."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for k in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=k):
            if not _pmod(poly, list(low) + [1], p):
                return False
    return True


def default_irreducible(p: int, v: int) -> list[int]:
    """Smallest monic irreducible of degree v over GF(p).

    Candidates ``x^v + c_{v-1} x^{v-1} + ... + c_0`` are ordered by the
    integer ``sum(c_i p^i)``, i.e. by their element encoding.
    """
    for code in range(p**v):
        low = [(code // p**i) % p for i in range(v)]
        if is_irreducible(low + [1], p):
            return low + [1]
    raise FieldError(f"no irreducible of degree {v} over GF({p})")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^v) with a fixed irreducible and primitive element.

    Construct through :func:`make_field`, which caches instances; two specs
    with the same (p, v, irreducible) compare equal.
    """

    def __init__(self, p: int, v: int = 1, irreducible=None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"characteristic {p!r} is not prime")
        if not isinstance(v, int) or v < 1:
            raise FieldError(f"extension degree must be >= 1, got {v!r}")
        if p**v > MAX_ORDER:
            raise FieldError(f"field order {p}^{v} exceeds {MAX_ORDER}")
        self.p = p
        self.v = v
        self.q = p**v
        if v == 1:
            if irreducible is not None and len(_trim(irreducible)) not in (0, 2):
                raise FieldError("a prime field takes no irreducible polynomial")
            self.irreducible = None
        else:
            if irreducible is None:
                irr = default_irreducible(p, v)
            else:
                irr = _trim([int(c) % p for c in irreducible])
                if len(irr) != v + 1 or irr[-1] != 1:
                    raise FieldError(f"irreducible must be monic of degree {v}: {irreducible!r}")
                if not is_irreducible(irr, p):
                    raise FieldError(f"polynomial {irreducible!r} is reducible over GF({p})")
            self.irreducible = tuple(irr)
        self._build_tables()

    # -- construction helpers --

    def _slow_mul(self, a: int, b: int) -> int:
        p, v = self.p, self.v
        ca = self.coeffs(a)
        cb = self.coeffs(b)
        prod = [0] * (2 * v - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _pmod(prod, list(self.irreducible), p)
        return self.from_coeffs(rem)

    def _build_tables(self):
        q = self.q
        if self.v == 1:
            mul = lambda a, b: (a * b) % self.p  # noqa: E731
        else:
            mul = self._slow_mul
        for g in range(1, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = mul(x, g)
            if len(powers) == q - 1:
                break
        self.generator = g
        self._exp = powers + powers
        self._log = [0] * q
        for k, x in enumerate(powers):
            self._log[x] = k
        self._add_table = None
        if self.v > 1 and self.p > 2 and q <= 729:
            self._add_table = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]

    # -- encoding --

    def coeffs(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**i) % p for i in range(self.v)]

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.v:
            raise FieldError(f"too many coefficients for GF({self.p}^{self.v}): {coeffs!r}")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def element(self, literal) -> int:
        """Parse a field literal: an integer, or a coefficient list for v > 1.

        Integers are read in the prime subfield, so ``-1`` is ``p - 1``.
        """
        if isinstance(literal, FieldElement):
            if literal.field != self:
                raise FieldError("element belongs to a different field")
            return literal.value
        if isinstance(literal, bool):
            raise FieldError(f"not a field literal: {literal!r}")
        if isinstance(literal, int):
            return literal % self.p
        if isinstance(literal, (list, tuple)):
            return self.from_coeffs(literal)
        raise FieldError(f"not a field literal: {literal!r}")

    def literal(self, a: int):
        """JSON literal: residue in [0, p) for prime fields, else a coefficient list."""
        if self.v == 1:
            return a
        return self.coeffs(a)

    def signed(self, a: int) -> int:
        """Representative of a prime-field residue in (-p/2, p/2]."""
        return a - self.p if a > self.p // 2 else a

    def __call__(self, literal) -> FieldElement:
        return FieldElement(self, self.element(literal))

    # -- arithmetic on encoded integers --

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self.v == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        if self.v == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out, place = 0, 1
        while a:
            out += ((-(a % p)) % p) * place
            a //= p
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.v == 1:
            return (a * b) % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.v == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        k = self._log[a]
        n = self.q - 1
        return n // gcd(n, k)

    def elements(self) -> range:
        return range(self.q)

    def subgroup(self, d: int) -> list[int]:
        """The cyclic subgroup of K* of order d, as powers of g^((q-1)/d)."""
        if d < 1 or (self.q - 1) % d:
            raise FieldError(f"{d} does not divide q - 1 = {self.q - 1}")
        h = self.pow(self.generator, (self.q - 1) // d)
        return [self.pow(h, k) for k in range(d)]

    def sqrt_char2(self, a: int) -> int:
        """Square root in characteristic 2 (inverse Frobenius, x -> x^(q/2))."""
        if self.p != 2:
            raise FieldError("square roots are only total in characteristic 2")
        return self.pow(a, self.q // 2)

    # -- identity --

    def descriptor(self) -> dict:
        d = {"p": self.p, "v": self.v}
        if self.irreducible is not None:
            d["irreducible"] = list(self.irreducible)
        return d

    def _key(self):
        return (self.p, self.v, self.irreducible)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.v == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.v}, irreducible={list(self.irreducible)})"


@lru_cache(maxsize=None)
def _cached_field(p, v, irreducible):
    return FieldSpec(p, v, irreducible)


def make_field(p: int, v: int = 1, irreducible=None) -> FieldSpec:
    """Build (or fetch from cache) the field GF(p^v)."""
    irr = None if irreducible is None else tuple(int(c) for c in irreducible)
    return _cached_field(p, v, irr)


def field_from_descriptor(desc) -> FieldSpec:
    """Field from a JSON descriptor ``{"p": int, "v": int, "irreducible": [...]}``."""
    if isinstance(desc, FieldSpec):
        return desc
    if not isinstance(desc, dict) or "p" not in desc:
        raise FieldError(f"bad field descriptor: {desc!r}")
    return make_field(int(desc["p"]), int(desc.get("v", 1)), desc.get("irreducible"))


@dataclass(frozen=True)
class FieldElement:
    """A field element bound to its field, with the usual operators."""

    field: FieldSpec
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands live in different fields")
            return other.value
        return self.field.element(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.element(other)
        except FieldError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.value)

    def __repr__(self):
        if self.field.v == 1:
            return f"{self.value} (mod {self.field.p})"
        return f"{self.coeffs}"

"""Exact multivariate polynomial arithmetic over QQ and prime fields.

Monomials are plain tuples of exponents; variables are identified by index
only.  A :class:`Polynomial` is an immutable mapping from monomials to nonzero
coefficients tied to a :class:`PolyRing` (variable count, field, order).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Tuple

from .errors import ContextError, DimensionError, DomainError, UndefinedLeadingTermError

Monomial = Tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class Field:
    """QQ when ``characteristic == 0``, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (_is_prime(p) and p < 2**31):
            raise DomainError(f"characteristic must be 0 or a prime < 2^31, got {p}")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    def __call__(self, value):
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def normalize(self, c):
        return c % self.characteristic if self.characteristic else c

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(c, -1, self.characteristic)
        return 1 / Fraction(c)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"FF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block`` (lex on the first ``split`` variables,
    grevlex on the rest)."""

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise DomainError(f"unknown monomial order {self.kind!r}")

    def key(self, m: Monomial):
        """Sort key: larger key means larger monomial."""
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "lex":
            return m
        k = self.split
        rest = m[k:]
        return (m[:k], sum(rest), tuple(-e for e in reversed(rest)))

    def __str__(self):
        return self.kind if self.kind != "block" else f"block({self.split})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"exponent vectors of length {len(a)} and {len(b)}")
    if a == b:
        return 0
    return 1 if order.key(a) > order.key(b) else -1


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class PolyRing:
    nvars: int
    field: Field = QQ
    order: MonomialOrder = GREVLEX

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def var(self, i: int) -> "Polynomial":
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field.one})

    def monomial(self, exps: Iterable[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise DimensionError(f"expected {self.nvars} exponents, got {len(exps)}")
        c = self.field(coeff)
        return Polynomial(self, {exps: c} if c != 0 else {})

    def from_dict(self, terms: Dict[Monomial, object]) -> "Polynomial":
        out = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise DimensionError(f"expected {self.nvars} exponents, got {len(m)}")
            out[m] = self.field.normalize(out.get(m, 0) + self.field(c))
        return Polynomial(self, {m: c for m, c in out.items() if c != 0})

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.nvars, self.field, order)


class Polynomial:
    """Immutable polynomial; ``terms`` lists (coefficient, monomial) pairs in
    strictly descending order."""

    def __init__(self, ring: PolyRing, d: Dict[Monomial, object]):
        # d must already be canonical: field-normalized, no zero coefficients
        self.ring = ring
        self._d = d

    @cached_property
    def terms(self) -> Tuple[Tuple[object, Monomial], ...]:
        key = self.ring.order.key
        return tuple((self._d[m], m) for m in sorted(self._d, key=key, reverse=True))

    def as_dict(self) -> Dict[Monomial, object]:
        return dict(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._d)

    def is_monomial(self) -> bool:
        return len(self._d) == 1

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self._d), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._d}) <= 1

    def support(self):
        return frozenset(self._d)

    def leading_term(self, order: MonomialOrder | None = None):
        """(coefficient, monomial) of the maximal term."""
        if not self._d:
            raise UndefinedLeadingTermError("zero polynomial has no leading term")
        key = (order or self.ring.order).key
        m = max(self._d, key=key)
        return self._d[m], m

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[1]

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ContextError("polynomials belong to different rings")
        return None

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        f = self.ring.field
        d = dict(self._d)
        for m, c in other._d.items():
            v = f.normalize(d.get(m, 0) + c)
            if v == 0:
                d.pop(m, None)
            else:
                d[m] = v
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.normalize(-c) for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        f = self.ring.field
        d: Dict[Monomial, object] = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: f.normalize(c) for m, c in d.items() if f.normalize(c) != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, coeff, mono: Monomial) -> "Polynomial":
        f = self.ring.field
        if coeff == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {mono_mul(m, mono): f.normalize(c * coeff) for m, c in self._d.items()})

    def scale(self, coeff) -> "Polynomial":
        return self.mul_term(self.ring.field(coeff), (0,) * self.ring.nvars)

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        c, _ = self.leading_term()
        return self.scale(self.ring.field.inv(c))

    def renormalize(self) -> "Polynomial":
        return self.ring.from_dict(self._d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._d == other._d

    def __hash__(self):
        return hash((self.ring, frozenset(self._d.items())))

    def __repr__(self):
        from .parser import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def leading_term(f: Polynomial, order: MonomialOrder | None = None):
    return f.leading_term(order)


def embed(f: Polynomial, ring: PolyRing, offset: int) -> Polynomial:
    """Map ``f`` into ``ring`` by prepending ``offset`` zero exponents."""
    pad = (0,) * offset
    tail = ring.nvars - offset - f.ring.nvars
    if tail < 0:
        raise DimensionError("target ring too small")
    return Polynomial(ring, {pad + m + (0,) * tail: c for m, c in f._d.items()})


def restrict(f: Polynomial, ring: PolyRing, offset: int) -> Polynomial:
    """Inverse of :func:`embed`; the dropped exponents must be zero."""
    out = {}
    for m, c in f._d.items():
        if any(m[:offset]) or any(m[offset + ring.nvars:]):
            raise DomainError("polynomial involves eliminated variables")
        out[m[offset:offset + ring.nvars]] = c
    return Polynomial(ring, out)

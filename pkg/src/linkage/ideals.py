"""Ideal arithmetic in polynomial rings and their quotients.

An ideal of ``R/J`` is stored as its preimage in the polynomial ring: the
generator list always carries the generators of ``J``.  Colon, intersection
and equality of quotient ideals then coincide with the same operations on
preimages, so everything below works in the ambient ring.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import ContextError, DomainError
from .groebner import GroebnerBasis, _keyfunc, _reduce, buchberger, normal_form
from .ring import GREVLEX, MonomialOrder, Polynomial, PolyRing, embed, restrict


@dataclass(frozen=True)
class RingContext:
    """Ambient polynomial ring plus an optional modulus ``J`` (quotient case)."""

    ring: PolyRing
    names: Tuple[str, ...] = ()
    modulus: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(default_names(self.ring.nvars)))
        if len(self.names) != self.ring.nvars:
            raise DomainError("one display name per variable required")
        mod = []
        for g in self.modulus:
            if g.ring != self.ring:
                raise ContextError("modulus generator outside the ambient ring")
            if not g.is_zero() and g not in mod:
                mod.append(g)
        object.__setattr__(self, "modulus", tuple(mod))
        if mod and buchberger(mod).is_unit():
            raise DomainError("modulus must be a proper ideal")

    @property
    def is_quotient(self) -> bool:
        return bool(self.modulus)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def var(self, i) -> Polynomial:
        if isinstance(i, str):
            i = self.names.index(i)
        return self.ring.var(i)

    def gens(self) -> List[Polynomial]:
        return [self.ring.var(i) for i in range(self.nvars)]

    def ideal(self, gens: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self, gens)

    @cached_property
    def _modulus(self) -> "Ideal":
        return Ideal(self, ())

    def modulus_ideal(self) -> "Ideal":
        return self._modulus

    def polynomial_context(self) -> "RingContext":
        return RingContext(self.ring, self.names)

    def maximal_ideal(self) -> "Ideal":
        """The homogeneous maximal ideal (all variables)."""
        return Ideal(self, self.gens())


def default_names(n: int) -> List[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    if n == 4:
        return ["x", "y", "z", "w"]
    return [f"x{i}" for i in range(1, n + 1)]


def polynomial_ring(n: int, field=None, order: MonomialOrder = GREVLEX, names=None, modulus=()) -> RingContext:
    from .ring import QQ

    ring = PolyRing(n, field or QQ, order)
    return RingContext(ring, tuple(names or ()), tuple(modulus))


class Ideal:
    """Finitely generated ideal with a lazily computed, cached reduced basis."""

    def __init__(self, ctx: RingContext, gens: Iterable[Polynomial]):
        own = []
        for g in gens:
            if g.ring != ctx.ring:
                raise ContextError("generator outside the context ring")
            if not g.is_zero() and g not in own:
                own.append(g)
        self.ctx = ctx
        self.own_gens: Tuple[Polynomial, ...] = tuple(own)
        self.gens: Tuple[Polynomial, ...] = tuple(own) + tuple(m for m in ctx.modulus if m not in own)
        self._gb: Dict[MonomialOrder, GroebnerBasis] = {}

    @property
    def ring(self) -> PolyRing:
        return self.ctx.ring

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        basis = self._gb.get(order)
        if basis is None:
            # single assignment keeps concurrent readers consistent
            basis = self._gb[order] = buchberger(self.gens, order)
        return basis

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise ContextError("polynomial outside the context ring")
        basis = self.gb()
        return normal_form(f, basis.generators, basis.order).is_zero()

    __contains__ = contains

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_zero(self) -> bool:
        """Zero in the ring of the context, i.e. equal to the modulus."""
        return all(g in self.ctx.modulus_ideal() for g in self.own_gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gb().generators)

    def sequence(self) -> List[Polynomial]:
        """User generators that are nonzero in the context ring."""
        if not self.ctx.is_quotient:
            return list(self.own_gens)
        J = self.ctx.modulus_ideal()
        return [g for g in self.own_gens if not J.contains(g)]

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash((self.ctx, self.gb().generators))

    def __le__(self, other: "Ideal") -> bool:
        return ideal_contains(other, self)

    def __repr__(self):
        from .parser import format_ideal

        return f"Ideal({format_ideal(self)})"


def _same(*ideals: Ideal) -> RingContext:
    ctx = ideals[0].ctx
    for I in ideals[1:]:
        if I.ctx != ctx:
            raise ContextError("ideals belong to different ring contexts")
    return ctx


def unit_ideal(ctx: RingContext) -> Ideal:
    return Ideal(ctx, [ctx.ring.one()])


def zero_ideal(ctx: RingContext) -> Ideal:
    return Ideal(ctx, ())


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    ctx = _same(A, B)
    return Ideal(ctx, A.own_gens + B.own_gens)


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    ctx = _same(A, B)
    return Ideal(ctx, [a * b for a in A.gens for b in B.gens])


def ideal_contains(A: Ideal, B: Ideal) -> bool:
    """True if ``B`` is a subset of ``A``."""
    _same(A, B)
    return all(A.contains(g) for g in B.gens)


def ideal_equal(A: Ideal, B: Ideal) -> bool:
    _same(A, B)
    return A.gb().generators == B.gb().generators


def _elimination_ring(ring: PolyRing) -> PolyRing:
    return PolyRing(ring.nvars + 1, ring.field, MonomialOrder("block", 1))


def _intersect_gens(ring: PolyRing, gens_a: Sequence[Polynomial], gens_b: Sequence[Polynomial]) -> List[Polynomial]:
    """Generators of (gens_a) ∩ (gens_b) in the polynomial ring, via
    eliminating ``t`` from t*(gens_a) + (1-t)*(gens_b)."""
    ext = _elimination_ring(ring)
    t = ext.var(0)
    one_minus_t = ext.one() - t
    gens = [t * embed(a, ext, 1) for a in gens_a] + [one_minus_t * embed(b, ext, 1) for b in gens_b]
    basis = buchberger(gens, ext.order)
    return [restrict(g, ring, 1) for g in basis.generators if all(m[0] == 0 for m in g._d)]


def ideal_intersect(A: Ideal, B: Ideal) -> Ideal:
    ctx = _same(A, B)
    if not A.gens or not B.gens:
        return Ideal(ctx, ())
    return Ideal(ctx, _intersect_gens(ctx.ring, A.gb().generators, B.gb().generators))


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient ``g / f``; raises if ``f`` does not divide ``g``."""
    ring = g.ring
    key = _keyfunc(ring.order)
    field = ring.field
    lm = max(f._d, key=key)
    lc = f._d[lm]
    inv = field.inv(lc)
    rest = dict(g._d)
    q = {}
    while rest:
        m = max(rest, key=key)
        if not all(a >= b for a, b in zip(m, lm)):
            raise DomainError("inexact polynomial division")
        c = field.normalize(rest[m] * inv)
        shift = tuple(a - b for a, b in zip(m, lm))
        q[shift] = c
        for fm, fc in f._d.items():
            t = tuple(a + b for a, b in zip(fm, shift))
            v = field.normalize(rest.get(t, 0) - c * fc)
            if v == 0:
                rest.pop(t, None)
            else:
                rest[t] = v
    return Polynomial(ring, q)


def colon_by_poly(A: Ideal, f: Polynomial) -> Ideal:
    """A : (f) = (A ∩ (f)) / f."""
    ctx = A.ctx
    if f.is_zero() or A.contains(f):
        return unit_ideal(ctx)
    inter = _intersect_gens(ctx.ring, A.gb().generators, [f])
    return Ideal(ctx, [divide_exact(g, f) for g in inter])


def ideal_colon(A: Ideal, B: Ideal) -> Ideal:
    """{r : r*B ⊆ A}; in a quotient context the preimage of the quotient colon."""
    ctx = _same(A, B)
    result = None
    for f in B.gb().generators:
        if A.contains(f):
            continue
        C = colon_by_poly(A, f)
        result = C if result is None else ideal_intersect(result, C)
    return unit_ideal(ctx) if result is None else result


def saturate(A: Ideal, B: Ideal) -> Ideal:
    """A : B^∞, iterating colons until the chain stabilizes."""
    current = A
    while True:
        nxt = ideal_colon(current, B)
        if ideal_equal(nxt, current):
            return current
        current = nxt


def radical_member(f: Polynomial, A: Ideal) -> bool:
    """f ∈ √A via 1 ∈ A + (1 - t*f) with a fresh variable t."""
    if f.ring != A.ring:
        raise ContextError("polynomial outside the context ring")
    ring = A.ring
    ext = PolyRing(ring.nvars + 1, ring.field, GREVLEX)
    t = ext.var(0)
    gens = [embed(g, ext, 1) for g in A.gens] + [ext.one() - t * embed(f, ext, 1)]
    return buchberger(gens).is_unit()


def ideal_power(A: Ideal, k: int) -> Ideal:
    result = unit_ideal(A.ctx)
    for _ in range(k):
        result = ideal_product(result, A)
    return result

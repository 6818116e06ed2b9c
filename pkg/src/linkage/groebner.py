"""Buchberger's algorithm, multivariate division and ideal membership."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import ContextError, UndefinedLeadingTermError
from .ring import (
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


def _keyfunc(order: MonomialOrder):
    cache: Dict[Monomial, object] = {}
    raw = order.key

    def key(m):
        k = cache.get(m)
        if k is None:
            k = cache[m] = raw(m)
        return k

    return key


def _sub_multiple(f: dict, g: dict, coeff, shift: Monomial, normalize) -> None:
    """In place: f -= coeff * x^shift * g."""
    for gm, gc in g.items():
        t = mono_mul(gm, shift)
        v = normalize(f.get(t, 0) - coeff * gc)
        if v == 0:
            f.pop(t, None)
        else:
            f[t] = v


def _reduce(f: dict, basis: Sequence[Tuple[Monomial, object, dict]], key, field, full: bool = True) -> dict:
    """Divide ``f`` by ``basis`` entries (lm, lc, poly); returns the remainder."""
    f = dict(f)
    rem = {}
    normalize = field.normalize
    inv = field.inv
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, lc, g in basis:
            if mono_divides(lm, m):
                q = c if lc == 1 else normalize(c * inv(lc))
                _sub_multiple(f, g, q, mono_div(m, lm), normalize)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def _monic(d: dict, key, field) -> Tuple[Monomial, dict]:
    lm = max(d, key=key)
    lc = d[lm]
    if lc == 1:
        return lm, d
    inv = field.inv(lc)
    return lm, {m: field.normalize(c * inv) for m, c in d.items()}


def _check_same_ring(polys) -> PolyRing | None:
    ring = None
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise ContextError("polynomials belong to different rings")
    return ring


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis: monic, interreduced, sorted by descending leading
    monomial.  Two bases of the same ideal and order compare equal."""

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``G`` (in list order)."""
    _check_same_ring([f, *G])
    order = order or f.ring.order
    key = _keyfunc(order)
    field = f.ring.field
    basis = []
    for g in G:
        if g.is_zero():
            continue
        lm = max(g._d, key=key)
        basis.append((lm, g._d[lm], g._d))
    if not basis:
        return f
    return Polynomial(f.ring, _reduce(f._d, basis, key, field))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise UndefinedLeadingTermError("S-polynomial of the zero polynomial")
    _check_same_ring([f, g])
    order = order or f.ring.order
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    field = f.ring.field
    lcm = mono_lcm(mf, mg)
    return f.mul_term(field.inv(cf), mono_div(lcm, mf)) - g.mul_term(field.inv(cg), mono_div(lcm, mg))


def _buchberger_raw(polys: List[dict], key, field) -> List[Tuple[Monomial, dict]]:
    """Core loop on raw dicts; returns the reduced basis as (lm, monic poly)."""
    basis: List[Tuple[Monomial, object, dict]] = []
    pairs = set()

    def add(d):
        lm, d = _monic(d, key, field)
        basis.append((lm, 1, d))
        k = len(basis) - 1
        for i in range(k):
            pairs.add((i, k))

    for d in polys:
        r = _reduce(d, basis, key, field)
        if r:
            add(r)
            if not any(basis[-1][0]):
                break  # unit ideal

    while pairs:
        if any(not any(b[0]) for b in basis):
            break
        # normal strategy: smallest lcm first
        i, j = min(pairs, key=lambda p: (sum(mono_lcm(basis[p[0]][0], basis[p[1]][0])),
                                          key(mono_lcm(basis[p[0]][0], basis[p[1]][0])), p))
        pairs.discard((i, j))
        mi, _, gi = basis[i]
        mj, _, gj = basis[j]
        lcm = mono_lcm(mi, mj)
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue  # coprime leading monomials
        if any(
            k != i and k != j
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            and mono_divides(basis[k][0], lcm)
            for k in range(len(basis))
        ):
            continue  # chain criterion
        shift = mono_div(lcm, mi)
        s = {mono_mul(m, shift): c for m, c in gi.items()}
        _sub_multiple(s, gj, 1, mono_div(lcm, mj), field.normalize)
        r = _reduce(s, basis, key, field)
        if r:
            add(r)

    # a unit element makes the basis {1}
    for lm, _, d in basis:
        if not any(lm):
            return [(lm, {lm: field.one})]

    # minimalize then interreduce
    minimal = []
    lms = [b[0] for b in basis]
    for idx, (lm, _, d) in enumerate(basis):
        if any(
            o != idx and mono_divides(lms[o], lm) and (lms[o] != lm or o < idx)
            for o in range(len(basis))
        ):
            continue
        minimal.append((lm, 1, d))
    reduced = []
    for idx, (lm, _, d) in enumerate(minimal):
        others = [b for o, b in enumerate(minimal) if o != idx]
        tail = {m: c for m, c in d.items() if m != lm}
        r = _reduce(tail, others, key, field)
        r[lm] = field.one
        reduced.append((lm, r))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return reduced


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    ring = _check_same_ring(gens)
    if ring is None:
        return GroebnerBasis((), order or MonomialOrder())
    order = order or ring.order
    key = _keyfunc(order)
    raw = [g._d for g in gens if not g.is_zero()]
    # smaller polynomials first tends to keep intermediate growth down
    raw.sort(key=lambda d: key(max(d, key=key)))
    reduced = _buchberger_raw(raw, key, ring.field)
    return GroebnerBasis(tuple(Polynomial(ring, d) for _, d in reduced), order)


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """Buchberger's criterion: all pairwise S-polynomials reduce to zero."""
    G = [g for g in G if not g.is_zero()]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if not normal_form(s_polynomial(G[a], G[b], order), G, order).is_zero():
                return False
    return True


def ideal_member(f: Polynomial, ideal) -> bool:
    """Membership of ``f`` in an :class:`~linkage.ideals.Ideal` (anything
    exposing ``gb()``) or in the ideal spanned by a list of generators."""
    if isinstance(ideal, (list, tuple)):
        gb = buchberger(list(ideal), f.ring.order)
        return normal_form(f, gb.generators, gb.order).is_zero()
    gb = ideal.gb()
    if f.ring != ideal.ring:
        raise ContextError("polynomial and ideal belong to different rings")
    return normal_form(f, gb.generators, gb.order).is_zero()

"""Linkage verdicts: linked, geometrically linked, S-set membership, partner
search and classification of radical monomial ideals.

Colons are looked up through the ``ideals`` module at call time so a test can
substitute a deliberately broken implementation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional

from . import ideals
from .errors import DomainError, PreconditionError
from .ideals import Ideal, RingContext
from .monomial import MonomialIdeal, associated_primes, is_unmixed
from .parser import format_ideal
from .syzygy import RegularSequenceWitness, grade, is_regular_sequence

STATUSES = ("linked", "geometrically-linked", "self-linked", "not-linked",
            "member-of-S", "not-member", "unknown")
CERTIFICATES = ("direct-colon", "unmixedness(c3)", "ass-representation(t6)", "sample-exhausted")

DEFAULT_MAX_SEARCH = 50
SEARCH_COEFFICIENTS = (-2, -1, 1, 2)


@dataclass
class LinkageVerdict:
    status: str
    I: Optional[Ideal]
    a: Optional[Ideal] = None
    partner: Optional[Ideal] = None
    regseq: Optional[RegularSequenceWitness] = None
    equalities: List[dict] = field(default_factory=list)
    certificate_kind: str = "direct-colon"
    diagnostic: dict = field(default_factory=dict)

    @property
    def is_linked(self) -> bool:
        return self.status in ("linked", "self-linked")


def _claim(text: str, lhs: Ideal, rhs: Ideal, holds: bool) -> dict:
    return {"claim": text, "lhs": format_ideal(lhs, "gb"), "rhs": format_ideal(rhs, "gb"), "holds": holds}


def _same_ctx(ctx: RingContext, *ideal_list: Ideal):
    for J in ideal_list:
        if J.ctx != ctx:
            raise PreconditionError("ideal outside the given ring context", code="E_CONTEXT")


def _linking_witness(ctx: RingContext, I: Ideal) -> RegularSequenceWitness:
    witness = is_regular_sequence(I.sequence(), ctx)
    if witness is None:
        raise PreconditionError(
            f"generators of {format_ideal(I)} are not a regular sequence", code="E_NOT_REGULAR")
    return witness


def _require_contained(I: Ideal, *targets: Ideal):
    for T in targets:
        if not ideals.ideal_contains(T, I):
            raise PreconditionError(
                f"{format_ideal(I)} is not contained in {format_ideal(T)}", code="E_NOT_CONTAINED")


def _require_proper(*targets: Ideal):
    for T in targets:
        if T.is_unit():
            raise PreconditionError(f"{format_ideal(T)} is the unit ideal", code="E_IMPROPER")


def check_linked(ctx: RingContext, I: Ideal, a: Ideal, b: Ideal) -> LinkageVerdict:
    """Decide a ~ b by I: I:a = b and I:b = a (all ideals as preimages)."""
    _same_ctx(ctx, I, a, b)
    _require_contained(I, a, b)
    _require_proper(a, b)
    witness = _linking_witness(ctx, I)
    Ca = ideals.ideal_colon(I, a)
    Cb = ideals.ideal_colon(I, b)
    eqs = [
        _claim("I:a ⊆ b", Ca, b, ideals.ideal_contains(b, Ca)),
        _claim("b ⊆ I:a", b, Ca, ideals.ideal_contains(Ca, b)),
        _claim("I:b ⊆ a", Cb, a, ideals.ideal_contains(a, Cb)),
        _claim("a ⊆ I:b", a, Cb, ideals.ideal_contains(Cb, a)),
    ]
    if all(e["holds"] for e in eqs):
        status = "self-linked" if ideals.ideal_equal(a, b) else "linked"
    else:
        status = "not-linked"
    return LinkageVerdict(status, I, a, b, witness, eqs, "direct-colon")


def check_geometric(ctx: RingContext, I: Ideal, a: Ideal, b: Ideal) -> LinkageVerdict:
    """Decide a ∩ b = I."""
    _same_ctx(ctx, I, a, b)
    _require_contained(I, a, b)
    _require_proper(a, b)
    witness = _linking_witness(ctx, I)
    inter = ideals.ideal_intersect(a, b)
    holds = ideals.ideal_equal(inter, I)
    eqs = [_claim("a ∩ b = I", inter, I, holds)]
    status = "geometrically-linked" if holds else "not-linked"
    return LinkageVerdict(status, I, a, b, witness, eqs, "direct-colon",
                          {"relation": "geometric"})


def _strict_preconditions(ctx: RingContext, I: Ideal, a: Ideal) -> RegularSequenceWitness:
    _same_ctx(ctx, I, a)
    _require_contained(I, a)
    _require_proper(a)
    if ideals.ideal_equal(I, a):
        raise PreconditionError("S-set membership requires I strictly inside a",
                                code="E_STRICT_CONTAINMENT")
    return _linking_witness(ctx, I)


def sset_member(ctx: RingContext, I: Ideal, a: Ideal) -> LinkageVerdict:
    """a ∈ S_(I;R/J): I ⊊ a and I:(I:a) = a."""
    witness = _strict_preconditions(ctx, I, a)
    b = ideals.ideal_colon(I, a)
    back = ideals.ideal_colon(I, b)
    holds = ideals.ideal_equal(back, a)
    eqs = [_claim("I:(I:a) = a", back, a, holds)]
    status = "member-of-S" if holds else "not-member"
    return LinkageVerdict(status, I, a, b if holds else None, witness, eqs, "direct-colon",
                          {} if holds else {"partner": format_ideal(b, "gb")})


def find_partner(ctx: RingContext, I: Ideal, a: Ideal) -> LinkageVerdict:
    """Candidate partner b = I:a; linked iff I:b = a."""
    witness = _strict_preconditions(ctx, I, a)
    b = ideals.ideal_colon(I, a)
    back = ideals.ideal_colon(I, b)
    holds = ideals.ideal_equal(back, a)
    eqs = [_claim("I:a = b", b, b, True), _claim("I:b = a", back, a, holds)]
    if holds:
        status = "self-linked" if ideals.ideal_equal(a, b) else "linked"
        return LinkageVerdict(status, I, a, b, witness, eqs, "direct-colon")
    return LinkageVerdict("not-member", I, a, None, witness, eqs, "direct-colon",
                          {"partner": format_ideal(b, "gb")})


def linked_by(ctx: RingContext, I: Ideal, a: Ideal) -> LinkageVerdict:
    """Is ``a`` linked to some ideal by ``I``?  Unlike :func:`find_partner`
    this accepts a = I, which is never linked (its only candidate partner
    I:I is the unit ideal)."""
    _same_ctx(ctx, I, a)
    _require_contained(I, a)
    _require_proper(a)
    if ideals.ideal_equal(I, a):
        witness = _linking_witness(ctx, I)
        unit = ideals.ideal_colon(I, a)
        return LinkageVerdict("not-linked", I, a, None, witness,
                              [_claim("I:a = (1)", unit, ideals.unit_ideal(ctx), unit.is_unit())],
                              "direct-colon", {"reason": "a = I; the partner I:a is the unit ideal"})
    v = find_partner(ctx, I, a)
    if not v.is_linked:
        v.status = "not-linked"
    return v


def _candidate_sequences(gens, h: int, rng: random.Random, max_search: int):
    for subset in combinations(gens, h):
        yield list(subset)
    for _ in range(max_search):
        seq = []
        for _ in range(h):
            acc = gens[0].ring.zero()
            for g in gens:
                acc = acc + g.scale(rng.choice(SEARCH_COEFFICIENTS))
            seq.append(acc)
        yield seq


def search_linking_sequence(ctx: RingContext, a: Ideal, length: int, max_search: int = DEFAULT_MAX_SEARCH,
                            seed: int = 0, gens=None):
    """Yield (sequence, verdict) for regular sequences of the given length in
    ``a`` that link it; subsets of generators come first, then random
    small-coefficient combinations.  When a sequence generates ``a`` itself
    its last element is squared."""
    rng = random.Random(seed)
    gens = list(gens if gens is not None else a.sequence())
    if not gens:
        return
    seen = set()
    for seq in _candidate_sequences(gens, length, rng, max_search):
        key = tuple(seq)
        if key in seen:
            continue
        seen.add(key)
        if is_regular_sequence(seq, ctx) is None:
            continue
        I = Ideal(ctx, seq)
        if ideals.ideal_equal(I, a):
            if not seq:
                continue
            seq = seq[:-1] + [seq[-1] * seq[-1]]
            I = Ideal(ctx, seq)
            if is_regular_sequence(seq, ctx) is None:
                continue
        yield seq, find_partner(ctx, I, a)


def classify_linked_radical(ctx: RingContext, a: MonomialIdeal, max_search: int = DEFAULT_MAX_SEARCH,
                            seed: int = 0) -> LinkageVerdict:
    """Linked / not-linked / unknown for a radical monomial ideal of a
    polynomial ring: mixed ideals are never linked, unmixed ones are linked
    once a regular sequence of length grade(a) inside a links them."""
    if ctx.is_quotient:
        raise DomainError("classification needs a polynomial ring (no modulus)")
    if not a.is_squarefree():
        raise DomainError("ideal is not radical")
    if a.is_zero() or a.is_unit():
        raise DomainError("ideal must be proper and nonzero")
    A = a.to_ideal(ctx)
    unmixed, cert = is_unmixed(a)
    ass = [{"prime": p, "height": h} for p, h in cert]
    if not unmixed:
        return LinkageVerdict("not-linked", None, A, certificate_kind="unmixedness(c3)",
                              diagnostic={"ass": ass, "reason": "associated primes of different heights"})
    h = grade(A)
    for seq, verdict in search_linking_sequence(ctx, A, h, max_search, seed):
        if verdict.is_linked:
            verdict.certificate_kind = "ass-representation(t6)"
            info = {"ass": ass, "grade": h}
            I = verdict.I
            if I.is_monomial():
                ass_I = associated_primes(MonomialIdeal.from_ideal(I))
                info["ass_of_I"] = [sorted(p) for p in ass_I]
                info["lambda"] = [p for p, _ in cert]
            verdict.diagnostic = info
            return verdict
    return LinkageVerdict("unknown", None, A, certificate_kind="sample-exhausted",
                          diagnostic={"ass": ass, "grade": h, "max_search": max_search})

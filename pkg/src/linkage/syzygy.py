"""Syzygies, Koszul homology, grade and regular sequences.

Submodules of a free module ``R^r`` are handled with Gröbner bases for the
position-over-term order (position 0 largest).  Syzygies of ``v_1..v_m`` come
from the basis of the augmented vectors ``(v_j, e_j)`` in ``R^(r+m)``: basis
elements whose leading position is at least ``r`` have vanishing first block,
and their tails generate the syzygy module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionError, DomainError, PreconditionError
from .ideals import Ideal, RingContext, ideal_colon, ideal_equal, ideal_contains
from .ring import MonomialOrder, Polynomial, PolyRing, mono_div, mono_divides, mono_lcm, mono_mul

Term = Tuple[int, tuple]


@dataclass(frozen=True)
class FreeModuleElement:
    coordinates: Tuple[Polynomial, ...]

    @property
    def rank(self) -> int:
        return len(self.coordinates)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coordinates)

    def dot(self, fs: Sequence[Polynomial]) -> Polynomial:
        if len(fs) != self.rank:
            raise DimensionError("rank mismatch")
        total = fs[0].ring.zero() if fs else None
        for a, f in zip(self.coordinates, fs):
            total = total + a * f
        return total

    def __iter__(self):
        return iter(self.coordinates)

    def __getitem__(self, i):
        return self.coordinates[i]


# -- module Gröbner bases on raw dicts {(pos, mono): coeff}

def _module_key(order: MonomialOrder):
    cache = {}
    raw = order.key

    def key(t):
        k = cache.get(t)
        if k is None:
            k = cache[t] = (-t[0], raw(t[1]))
        return k

    return key


def _to_raw(vec: Sequence[Polynomial]) -> dict:
    out = {}
    for pos, p in enumerate(vec):
        for m, c in p._d.items():
            out[(pos, m)] = c
    return out


def _from_raw(d: dict, ring: PolyRing, rank: int, offset: int = 0) -> List[Polynomial]:
    coords: List[dict] = [{} for _ in range(rank)]
    for (pos, m), c in d.items():
        if offset <= pos < offset + rank:
            coords[pos - offset][m] = c
    return [Polynomial(ring, c) for c in coords]


def _sub_multiple(f: dict, g: dict, coeff, shift, normalize):
    for (pos, gm), gc in g.items():
        t = (pos, mono_mul(gm, shift))
        v = normalize(f.get(t, 0) - coeff * gc)
        if v == 0:
            f.pop(t, None)
        else:
            f[t] = v


def _module_reduce(f: dict, basis, key, field_) -> dict:
    f = dict(f)
    rem = {}
    normalize = field_.normalize
    while f:
        t = max(f, key=key)
        c = f[t]
        pos, m = t
        for (bpos, bm), g in basis:
            if bpos == pos and mono_divides(bm, m):
                _sub_multiple(f, g, c, mono_div(m, bm), normalize)
                break
        else:
            rem[t] = c
            del f[t]
    return rem


def _monic(d: dict, key, field_):
    lt = max(d, key=key)
    lc = d[lt]
    if lc == 1:
        return lt, d
    inv = field_.inv(lc)
    return lt, {t: field_.normalize(c * inv) for t, c in d.items()}


def module_groebner(vectors: List[dict], order: MonomialOrder, field_) -> List[Tuple[Term, dict]]:
    """Gröbner basis (lt, monic dict) of the submodule spanned by ``vectors``."""
    key = _module_key(order)
    basis: List[Tuple[Term, dict]] = []
    pairs = set()

    def add(d):
        lt, d = _monic(d, key, field_)
        basis.append((lt, d))
        k = len(basis) - 1
        for i in range(k):
            if basis[i][0][0] == lt[0]:
                pairs.add((i, k))

    for v in sorted(vectors, key=lambda d: key(max(d, key=key)) if d else (0,)):
        if not v:
            continue
        r = _module_reduce(v, basis, key, field_)
        if r:
            add(r)

    def lcm_of(p):
        return mono_lcm(basis[p[0]][0][1], basis[p[1]][0][1])

    while pairs:
        i, j = min(pairs, key=lambda p: (sum(lcm_of(p)), p))
        pairs.discard((i, j))
        (pi, mi), gi = basis[i]
        (_, mj), gj = basis[j]
        lcm = mono_lcm(mi, mj)
        if any(
            k != i and k != j
            and basis[k][0][0] == pi
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            and mono_divides(basis[k][0][1], lcm)
            for k in range(len(basis))
        ):
            continue  # chain criterion
        shift = mono_div(lcm, mi)
        s = {(p, mono_mul(m, shift)): c for (p, m), c in gi.items()}
        _sub_multiple(s, gj, 1, mono_div(lcm, mj), field_.normalize)
        r = _module_reduce(s, basis, key, field_)
        if r:
            add(r)
    # drop elements whose leading term is divisible by another one's
    out = []
    for idx, ((p, m), d) in enumerate(basis):
        if any(
            o != idx and q == p and mono_divides(l, m) and (l != m or o < idx)
            for o, ((q, l), _) in enumerate(basis)
        ):
            continue
        out.append(((p, m), d))
    return out


class Submodule:
    """Submodule of ``R^rank`` with a cached module Gröbner basis."""

    def __init__(self, ring: PolyRing, rank: int, gens: Sequence[Sequence[Polynomial]]):
        self.ring = ring
        self.rank = rank
        self.gens = [list(g) for g in gens]
        for g in self.gens:
            if len(g) != rank:
                raise DimensionError("generator rank mismatch")
        self._gb = None

    def gb(self):
        if self._gb is None:
            raw = [_to_raw(g) for g in self.gens]
            self._gb = module_groebner([r for r in raw if r], self.ring.order, self.ring.field)
        return self._gb

    def contains(self, vec: Sequence[Polynomial]) -> bool:
        key = _module_key(self.ring.order)
        return not _module_reduce(_to_raw(vec), self.gb(), key, self.ring.field)


def module_syzygies(vectors: Sequence[Sequence[Polynomial]], rank: int, ring: PolyRing) -> List[List[Polynomial]]:
    """Generators of {a : sum a_j v_j = 0} for vectors in ``R^rank``."""
    m = len(vectors)
    raw = []
    for j, v in enumerate(vectors):
        d = _to_raw(v)
        d[(rank + j, (0,) * ring.nvars)] = ring.field.one
        raw.append(d)
    basis = module_groebner(raw, ring.order, ring.field)
    out = []
    for (pos, _), d in basis:
        if pos >= rank:
            out.append(_from_raw(d, ring, m, offset=rank))
    return out


def syzygies(fs: Sequence[Polynomial], ctx: RingContext) -> List[FreeModuleElement]:
    """Generators of {(a_1..a_k) : sum a_i f_i ∈ J}."""
    if not fs:
        raise DomainError("syzygies of an empty list")
    ring = ctx.ring
    k = len(fs)
    vectors = [[f] for f in fs] + [[g] for g in ctx.modulus]
    out = []
    for s in module_syzygies(vectors, 1, ring):
        head = tuple(s[:k])
        if any(not c.is_zero() for c in head):
            out.append(FreeModuleElement(head))
    return out


# -- Koszul complex

def _koszul_columns(fs: Sequence[Polynomial], i: int, ring: PolyRing) -> Tuple[List[List[Polynomial]], int]:
    """Columns of d_i: K_i -> K_{i-1} and the rank of K_{i-1}."""
    k = len(fs)
    src = list(combinations(range(k), i))
    tgt = {s: n for n, s in enumerate(combinations(range(k), i - 1))}
    cols = []
    for S in src:
        col = [ring.zero()] * len(tgt)
        for j, idx in enumerate(S):
            rest = S[:j] + S[j + 1:]
            term = fs[idx] if j % 2 == 0 else -fs[idx]
            col[tgt[rest]] = col[tgt[rest]] + term
        cols.append(col)
    return cols, len(tgt)


def _unit_multiples(gens: Sequence[Polynomial], rank: int, ring: PolyRing) -> List[List[Polynomial]]:
    out = []
    for g in gens:
        for l in range(rank):
            v = [ring.zero()] * rank
            v[l] = g
            out.append(v)
    return out


def koszul_homology_vanishes(i: int, fs: Sequence[Polynomial], ctx: RingContext) -> bool:
    """True iff H_i of the Koszul complex on ``fs`` with coefficients in R/J is zero."""
    k = len(fs)
    if not 0 <= i <= k:
        raise DimensionError(f"Koszul index {i} outside 0..{k}")
    ring = ctx.ring
    J = list(ctx.modulus)
    if i == 0:
        return Ideal(ctx, fs).is_unit()
    cols, tgt_rank = _koszul_columns(fs, i, ring)
    src_rank = len(cols)
    # cycles: a with d_i(a) ∈ J * K_{i-1}
    vectors = cols + _unit_multiples(J, tgt_rank, ring)
    cycles = [s[:src_rank] for s in module_syzygies(vectors, tgt_rank, ring)]
    cycles = [z for z in cycles if any(not c.is_zero() for c in z)]
    if not cycles:
        return True
    bounds = _unit_multiples(J, src_rank, ring)
    if i < k:
        bounds += _koszul_columns(fs, i + 1, ring)[0]
    B = Submodule(ring, src_rank, bounds)
    return all(B.contains(z) for z in cycles)


def grade(A: Ideal, ctx: Optional[RingContext] = None) -> int:
    """Grade of ``A`` on R/J: k - max{i : H_i(f_1..f_k) != 0}."""
    ctx = ctx or A.ctx
    if A.is_unit():
        raise DomainError("grade of the unit ideal is undefined")
    fs = A.sequence()
    k = len(fs)
    for i in range(k, 0, -1):
        if not koszul_homology_vanishes(i, fs, ctx):
            return k - i
    return k


@dataclass
class RegularSequenceWitness:
    elements: List[Polynomial]
    ctx: RingContext
    module_modulus: Tuple[Polynomial, ...] = ()
    checks: List[dict] = field(default_factory=list)

    def ideal(self) -> Ideal:
        return Ideal(self.ctx, self.elements)

    def __len__(self):
        return len(self.elements)


def is_regular_sequence(fs: Sequence[Polynomial], ctx: RingContext) -> Optional[RegularSequenceWitness]:
    """Witness with per-step colon certificates, or None if not regular on R/J."""
    from .parser import format_ideal

    checks = []
    prefix: List[Polynomial] = []
    for i, f in enumerate(fs):
        P = Ideal(ctx, prefix)
        C = ideal_colon(P, Ideal(ctx, [f]))
        ok = ideal_equal(C, P)
        checks.append({
            "step": i + 1,
            "claim": "(J + prefix) : f_i = J + prefix",
            "colon": format_ideal(C, "gb"),
            "prefix": format_ideal(P, "gb"),
            "holds": ok,
        })
        if not ok:
            return None
        prefix.append(f)
    final = Ideal(ctx, prefix)
    proper = final.is_proper()
    checks.append({"step": len(fs) + 1, "claim": "J + (f) proper", "holds": proper})
    if not proper:
        return None
    return RegularSequenceWitness(list(fs), ctx, ctx.modulus, checks)


def is_maximal_regular_sequence(fs: Sequence[Polynomial], A: Ideal, ctx: Optional[RingContext] = None) -> bool:
    ctx = ctx or A.ctx
    if is_regular_sequence(fs, ctx) is None:
        raise PreconditionError("sequence is not regular", code="E_NOT_MAXIMAL_INPUT")
    if not all(A.contains(f) for f in fs):
        raise PreconditionError("sequence is not contained in the ideal", code="E_NOT_MAXIMAL_INPUT")
    P = Ideal(ctx, fs)
    return not ideal_equal(ideal_colon(P, A), P)

"""Linear-algebra oracles that never touch the Gröbner engine.

* :func:`macaulay_member` decides membership of ``f`` in the span of all
  monomial multiples ``m*g`` of bounded degree (exact for homogeneous input
  once the bound reaches ``deg f``; a sound certificate of membership in
  general).
* :class:`ArtinianAlgebra` models ``k[x]/J`` when ``J`` contains every
  monomial of degree ``nilpotency``; ideals become subspaces of the truncated
  algebra and colons become kernels of linear maps.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Sequence

from .errors import DomainError
from .ring import Monomial, Polynomial, PolyRing, mono_mul


def monomials_up_to(nvars: int, degree: int, min_degree: int = 0) -> List[Monomial]:
    out = []
    for d in range(min_degree, degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            m = [0] * nvars
            for i in combo:
                m[i] += 1
            out.append(tuple(m))
    return out


class RowSpace:
    """Incremental row echelon form over a field; rows are dicts col -> coeff
    with pivot = smallest column index present."""

    def __init__(self, field):
        self.field = field
        self.pivots: Dict[object, dict] = {}

    def reduce(self, row: dict) -> dict:
        f = self.field
        row = {k: v for k, v in row.items() if v != 0}
        while row:
            col = min(row)
            p = self.pivots.get(col)
            if p is None:
                return row
            c = row[col]
            for k, v in p.items():
                nv = f.normalize(row.get(k, 0) - c * v)
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
        return row

    def normal_form(self, row: dict) -> dict:
        """Remainder with every pivot column eliminated; canonical modulo the
        span, so it is linear in ``row``."""
        f = self.field
        row = {k: v for k, v in row.items() if v != 0}
        todo = sorted(k for k in row if k in self.pivots)
        while todo:
            col = todo.pop(0)
            c = row.get(col)
            if not c:
                continue
            for k, v in self.pivots[col].items():
                nv = f.normalize(row.get(k, 0) - c * v)
                if nv == 0:
                    row.pop(k, None)
                else:
                    if k not in row and k in self.pivots:
                        todo.append(k)
                        todo.sort()
                    row[k] = nv
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; returns False if it was already in the span."""
        r = self.reduce(row)
        if not r:
            return False
        col = min(r)
        inv = self.field.inv(r[col])
        self.pivots[col] = {k: self.field.normalize(v * inv) for k, v in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _col_index(nvars: int, degree: int):
    mons = monomials_up_to(nvars, degree)
    # higher degree first so pivots sit on leading-ish terms; any fixed order works
    return {m: i for i, m in enumerate(reversed(mons))}


def macaulay_member(f: Polynomial, gens: Sequence[Polynomial], degree_bound: int) -> bool:
    """f ∈ span{m*g : deg(m*g) <= degree_bound}."""
    ring = f.ring
    if f.is_zero():
        return True
    if f.total_degree > degree_bound:
        return False
    cols = _col_index(ring.nvars, degree_bound)
    space = RowSpace(ring.field)
    for g in gens:
        if g.is_zero():
            continue
        dg = g.total_degree
        for m in monomials_up_to(ring.nvars, degree_bound - dg):
            space.add({cols[mono_mul(m, t)]: c for t, c in g.as_dict().items()})
    return space.contains({cols[t]: c for t, c in f.as_dict().items()})


def homogeneous_member(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Exact membership for homogeneous ``f`` and homogeneous generators:
    only the degree-``deg f`` slice of the Macaulay matrix matters."""
    ring = f.ring
    if f.is_zero():
        return True
    d = f.total_degree
    space = RowSpace(ring.field)
    for g in gens:
        if g.is_zero() or g.total_degree > d:
            continue
        for m in monomials_up_to(ring.nvars, d - g.total_degree, d - g.total_degree):
            space.add({mono_mul(m, t): c for t, c in g.as_dict().items()})
    return space.contains(f.as_dict())


class ArtinianAlgebra:
    """k[x]/J as a vector space, given that every monomial of degree
    ``nilpotency`` lies in J (the caller guarantees it, e.g. by including
    those monomials among the generators)."""

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial], nilpotency: int):
        self.ring = ring
        self.D = nilpotency
        self.monomials = monomials_up_to(ring.nvars, nilpotency - 1)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.J = self.ideal_space(gens)

    def truncate(self, f: Polynomial) -> dict:
        return {self.index[m]: c for m, c in f.as_dict().items() if sum(m) < self.D}

    def _multiply(self, f_row: dict, g: Polynomial) -> dict:
        """Product of a truncated element with polynomial g, truncated."""
        fld = self.ring.field
        out: Dict[int, object] = {}
        for i, c in f_row.items():
            m = self.monomials[i]
            for t, d in g.as_dict().items():
                p = mono_mul(m, t)
                if sum(p) < self.D:
                    j = self.index[p]
                    out[j] = fld.normalize(out.get(j, 0) + c * d)
        return {k: v for k, v in out.items() if v != 0}

    def ideal_space(self, gens: Iterable[Polynomial], base: RowSpace | None = None) -> RowSpace:
        """Subspace spanned by all monomial multiples of ``gens`` (plus ``base``)."""
        space = RowSpace(self.ring.field)
        if base is not None:
            space.pivots = {k: dict(v) for k, v in base.pivots.items()}
        for g in gens:
            row = self.truncate(g)
            for m in self.monomials:
                shifted = {}
                for i, c in row.items():
                    p = mono_mul(self.monomials[i], m)
                    if sum(p) < self.D:
                        shifted[self.index[p]] = c
                if shifted:
                    space.add(shifted)
        return space

    @property
    def dimension(self) -> int:
        return len(self.monomials) - self.J.rank

    def _complement_basis(self, space: RowSpace) -> List[int]:
        return [i for i in range(len(self.monomials)) if i not in space.pivots]

    def colon(self, A_gens: Sequence[Polynomial], B_gens: Sequence[Polynomial]) -> RowSpace:
        """Subspace of (A+J) : (B) inside k[x]/(x)^D, containing J."""
        A = self.ideal_space(A_gens, self.J)
        fld = self.ring.field
        # r ranges over a complement of A; r*b must lie in A for all b
        free = self._complement_basis(A)
        # columns: (b index, reduced coordinate); solve for kernel of the map
        images = []
        for i in free:
            img = {}
            for bi, b in enumerate(B_gens):
                red = A.normal_form(self._multiply({i: fld.one}, b))
                for k, v in red.items():
                    img[(bi, k)] = v
            images.append(img)
        kernel = _kernel(images, free, fld)
        result = RowSpace(fld)
        result.pivots = {k: dict(v) for k, v in A.pivots.items()}
        for vec in kernel:
            result.add(vec)
        return result

    def annihilator(self, gens: Sequence[Polynomial]) -> RowSpace:
        return self.colon([], gens)

    def same_space(self, s1: RowSpace, s2: RowSpace) -> bool:
        if s1.rank != s2.rank:
            return False
        return all(s2.contains(row) for row in s1.pivots.values())

    def space_of(self, gens: Sequence[Polynomial]) -> RowSpace:
        return self.ideal_space(gens, self.J)


def _kernel(images: List[dict], labels: List[int], fld) -> List[dict]:
    """Kernel of the linear map sending basis vector ``labels[j]`` to
    ``images[j]``; returned as dicts over ``labels``."""
    # Gaussian elimination on augmented rows [image | identity]
    rows = []
    for j, img in enumerate(images):
        row = {("img", k): v for k, v in img.items()}
        row[("id", labels[j])] = fld.one
        rows.append(row)
    space = RowSpace(fld)
    kernel = []

    def order_key(k):
        return (0, k[1]) if k[0] == "img" else (1, k[1])

    # RowSpace pivots on min(key); wrap keys so image columns come first
    wrapped = []
    for row in rows:
        wrapped.append({order_key(k): v for k, v in row.items()})
    for row in wrapped:
        r = space.reduce(row)
        if r and min(r)[0] == 1:
            kernel.append({k[1]: v for k, v in r.items()})
        space.add(row)
    return kernel


def artinian_nilpotency(ring: PolyRing, gens: Sequence[Polynomial], cap: int = 30) -> int:
    """Smallest D such that every degree-D monomial is a monomial multiple
    combination of ``gens`` within degree D (certified by Macaulay rows)."""
    for D in range(1, cap + 1):
        if all(macaulay_member(ring.monomial(m), gens, D) for m in monomials_up_to(ring.nvars, D, D)):
            return D
    raise DomainError("quotient does not look Artinian within the degree cap")


class MacaulayOracle:
    """Row space of all products m*g with deg(m*g) <= degree, built once and
    queried for many candidate members."""

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial], degree: int):
        self.ring = ring
        self.degree = degree
        self.space = RowSpace(ring.field)
        self._cols = _col_index(ring.nvars, degree)
        for g in gens:
            if g.is_zero() or g.total_degree > degree:
                continue
            for m in monomials_up_to(ring.nvars, degree - g.total_degree):
                self.space.add({self._cols[mono_mul(m, t)]: c for t, c in g.as_dict().items()})

    def member(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if f.total_degree > self.degree:
            return False
        return self.space.contains({self._cols[t]: c for t, c in f.as_dict().items()})

"""Primary decomposition and associated primes of monomial ideals.

Decomposition splits a mixed generator ``x^a * m`` into ``(I, x^a)`` and
``(I, m)`` until every generator is a pure power; the resulting components are
irreducible and therefore primary to the prime generated by their variables.
Non-minimal components are then pruned, which leaves the unique irredundant
irreducible decomposition.  Primes are represented as frozensets of variable
indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from .errors import DomainError
from .ring import Monomial, mono_divides, mono_lcm

Prime = FrozenSet[int]


def _minimalize(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    gens = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    out: List[Monomial] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out, key=lambda m: (sum(m), tuple(-e for e in m))))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators in canonical order."""

    nvars: int
    generators: Tuple[Monomial, ...]

    @classmethod
    def of(cls, nvars: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != nvars:
                raise DomainError("exponent vector length differs from variable count")
        return cls(nvars, _minimalize(gens))

    @classmethod
    def from_ideal(cls, ideal) -> "MonomialIdeal":
        """Convert an :class:`~linkage.ideals.Ideal` whose reduced basis is
        monomial."""
        basis = ideal.gb().generators
        if not all(g.is_monomial() for g in basis):
            raise DomainError("ideal is not monomial")
        return cls.of(ideal.ring.nvars, [g.leading_monomial() for g in basis])

    @classmethod
    def prime(cls, nvars: int, variables: Iterable[int]) -> "MonomialIdeal":
        gens = []
        for v in variables:
            m = [0] * nvars
            m[v] = 1
            gens.append(tuple(m))
        return cls.of(nvars, gens)

    def to_ideal(self, ctx):
        from .ideals import Ideal

        return Ideal(ctx, [ctx.ring.monomial(m) for m in self.generators])

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.generators)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(other.contains_monomial(g) for g in self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.of(self.nvars, self.generators + other.generators)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.of(self.nvars, [mono_lcm(a, b) for a in self.generators for b in other.generators])

    def support(self) -> FrozenSet[int]:
        return frozenset(i for g in self.generators for i, e in enumerate(g) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def is_prime(self) -> bool:
        return not self.is_unit() and all(sum(g) == 1 for g in self.generators)

    def as_prime(self) -> Prime:
        return frozenset(i for g in self.generators for i, e in enumerate(g) if e)


@dataclass(frozen=True)
class PrimaryDecomposition:
    components: Tuple[Tuple[MonomialIdeal, Prime], ...]
    irredundant: bool = True

    def primes(self) -> List[Prime]:
        return [p for _, p in self.components]

    def intersection(self) -> MonomialIdeal:
        it = iter(q for q, _ in self.components)
        acc = next(it)
        for q in it:
            acc = acc & q
        return acc


def _check_proper_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise DomainError("zero ideal has no primary decomposition here")
    if I.is_unit():
        raise DomainError("unit ideal")


def _split(gens: Tuple[Monomial, ...], n: int, out: Set[Tuple[Monomial, ...]]):
    for g in gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) > 1:
            v = support[0]
            power = tuple(g[i] if i == v else 0 for i in range(n))
            rest = tuple(0 if i == v else g[i] for i in range(n))
            others = tuple(h for h in gens if h != g)
            _split(_minimalize(others + (power,)), n, out)
            _split(_minimalize(others + (rest,)), n, out)
            return
    out.add(gens)


def monomial_primary_decomposition(I: MonomialIdeal) -> PrimaryDecomposition:
    """Irredundant decomposition into irreducible (hence primary) components."""
    _check_proper_nonzero(I)
    leaves: Set[Tuple[Monomial, ...]] = set()
    _split(I.generators, I.nvars, leaves)
    comps = [MonomialIdeal(I.nvars, g) for g in leaves]
    # keep only inclusion-minimal components
    minimal = [q for q in comps if not any(o != q and o <= q for o in comps)]
    # then drop any component containing the intersection of the rest
    changed = True
    while changed and len(minimal) > 1:
        changed = False
        for q in list(minimal):
            rest = [o for o in minimal if o != q]
            acc = rest[0]
            for o in rest[1:]:
                acc = acc & o
            if acc <= q:
                minimal.remove(q)
                changed = True
                break
    minimal.sort(key=lambda q: (len(q.support()), sorted(q.support()), q.generators))
    return PrimaryDecomposition(tuple((q, q.support()) for q in minimal), True)


def associated_primes(I: MonomialIdeal) -> List[Prime]:
    """Ass(R/I) as sorted list of variable sets."""
    primes = {p for _, p in monomial_primary_decomposition(I).components}
    return sorted(primes, key=lambda p: (len(p), sorted(p)))


def minimal_primes(I: MonomialIdeal) -> List[Prime]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q < p for q in ass)]


def monomial_radical(I: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero():
        raise DomainError("radical of the zero ideal is not represented")
    return MonomialIdeal.of(I.nvars, [tuple(min(e, 1) for e in g) for g in I.generators])


def dimension(I: MonomialIdeal, n: int | None = None) -> int:
    n = I.nvars if n is None else n
    if I.is_unit():
        raise DomainError("dimension of the unit ideal")
    if I.is_zero():
        return n
    return n - min(len(p) for p in minimal_primes(I))


def height(I: MonomialIdeal) -> int:
    if I.is_unit():
        raise DomainError("height of the unit ideal")
    if I.is_zero():
        return 0
    return min(len(p) for p in minimal_primes(I))


def is_unmixed(I: MonomialIdeal, n: int | None = None):
    """(flag, certificate): flag is True iff all associated primes have the
    same height; the certificate lists each prime with its height."""
    _check_proper_nonzero(I)
    ass = associated_primes(I)
    cert = [(sorted(p), len(p)) for p in ass]
    return len({len(p) for p in ass}) == 1, cert


def prime_ideal_of(p: Prime, nvars: int) -> MonomialIdeal:
    return MonomialIdeal.prime(nvars, sorted(p))


def intersect_primes(primes: Iterable[Prime], nvars: int) -> MonomialIdeal:
    primes = list(primes)
    acc = prime_ideal_of(primes[0], nvars)
    for p in primes[1:]:
        acc = acc & prime_ideal_of(p, nvars)
    return acc

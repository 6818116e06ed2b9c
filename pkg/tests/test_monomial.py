from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from linkage.errors import DomainError
from linkage.ideals import Ideal, ideal_colon, ideal_equal, ideal_intersect, polynomial_ring
from linkage.monomial import (
    MonomialIdeal,
    associated_primes,
    dimension,
    height,
    is_unmixed,
    minimal_primes,
    monomial_primary_decomposition,
    monomial_radical,
)


def M(*gens):
    return MonomialIdeal.of(len(gens[0]), gens)


def test_decomposition_with_embedded_component():
    d = monomial_primary_decomposition(M((2, 0), (1, 1)))
    assert [q.generators for q, _ in d.components] == [((1, 0),), ((0, 1), (2, 0))]
    assert d.primes() == [frozenset({0}), frozenset({0, 1})]
    assert d.intersection() == M((2, 0), (1, 1))


def test_associated_and_minimal_primes():
    a = M((1, 1, 0), (1, 0, 1))
    assert associated_primes(a) == [frozenset({0}), frozenset({1, 2})]
    assert minimal_primes(M((2, 0), (1, 1))) == [frozenset({0})]


def test_unmixedness():
    assert is_unmixed(M((1, 1, 0), (1, 0, 1))) == (False, [([0], 1), ([1, 2], 2)])
    assert is_unmixed(M((1, 1, 0), (0, 1, 1), (1, 0, 1)))[0]
    assert not is_unmixed(M((2, 0), (1, 1)))[0]


def test_height_dimension_radical():
    a = M((1, 1, 0), (1, 0, 1))
    assert height(a) == 1 and dimension(a) == 2
    assert monomial_radical(M((2, 0), (1, 3))) == M((1, 0))


def test_from_ideal_rejects_non_monomial():
    ctx = polynomial_ring(2)
    with pytest.raises(DomainError):
        MonomialIdeal.from_ideal(Ideal(ctx, [ctx.gens()[0] + ctx.gens()[1]]))


def test_zero_and_unit_rejected():
    with pytest.raises(DomainError):
        monomial_primary_decomposition(MonomialIdeal.of(2, []))
    with pytest.raises(DomainError):
        monomial_primary_decomposition(M((0, 0)))


gens_st = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)).filter(any),
                   min_size=1, max_size=4)


@settings(max_examples=60, deadline=None)
@given(gens_st)
def test_decomposition_recovers_ideal(gens):
    a = MonomialIdeal.of(3, gens)
    d = monomial_primary_decomposition(a)
    assert d.intersection() == a
    # irredundant: dropping any component changes the intersection
    comps = [q for q, _ in d.components]
    for i in range(len(comps)):
        rest = comps[:i] + comps[i + 1:]
        if rest:
            acc = rest[0]
            for q in rest[1:]:
                acc = acc & q
            assert acc != a


@settings(max_examples=30, deadline=None)
@given(gens_st)
def test_ass_matches_colon_witnesses(gens):
    """Each associated prime is I : (m) for some monomial m (brute force over
    small monomials), and nothing else of that form is prime."""
    a = MonomialIdeal.of(3, gens)
    ctx = polynomial_ring(3)
    I = a.to_ideal(ctx)
    found = set()
    for e in product(range(4), repeat=3):
        if a.contains_monomial(e):
            continue
        C = ideal_colon(I, Ideal(ctx, [ctx.ring.monomial(e)]))
        cm = MonomialIdeal.from_ideal(C)
        if cm.is_prime():
            found.add(cm.as_prime())
    assert found == set(associated_primes(a))


@settings(max_examples=40, deadline=None)
@given(gens_st, gens_st)
def test_monomial_intersection_matches_elimination(g1, g2):
    ctx = polynomial_ring(3)
    a, b = MonomialIdeal.of(3, g1), MonomialIdeal.of(3, g2)
    assert ideal_equal((a & b).to_ideal(ctx), ideal_intersect(a.to_ideal(ctx), b.to_ideal(ctx)))

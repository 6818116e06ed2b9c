import pytest
from hypothesis import given, settings, strategies as st

from linkage.groebner import buchberger, ideal_member, is_groebner_basis, normal_form, s_polynomial
from linkage.oracles import homogeneous_member, macaulay_member
from linkage.ring import GF, GREVLEX, LEX, QQ, PolyRing


def test_twisted_cubic_lex(ring):
    R = PolyRing(3, QQ, LEX)
    x, y, z = R.var(0), R.var(1), R.var(2)
    G = buchberger([x ** 2 - y, x ** 3 - z], LEX)
    assert list(G.generators) == sorted(
        [x ** 2 - y, x * y - z, x * z - y ** 2, y ** 3 - z ** 2],
        key=lambda g: LEX.key(g.leading_monomial()), reverse=True)
    assert is_groebner_basis(list(G.generators), LEX)


def test_unit_ideal():
    R = PolyRing(2, QQ, GREVLEX)
    x, y = R.var(0), R.var(1)
    G = buchberger([x * y - 1, x])
    assert G.is_unit() and [g for g in G.generators] == [R.one()]


def test_reduced_basis_is_canonical():
    R = PolyRing(2, QQ, GREVLEX)
    x, y = R.var(0), R.var(1)
    a = buchberger([x ** 2 + y, x * y])
    b = buchberger([x * y, x ** 2 + y, x ** 3 + x * y + x ** 2 + y])
    assert a.generators == b.generators


def test_s_polynomial_cancels_leading_terms():
    R = PolyRing(2, QQ, GREVLEX)
    x, y = R.var(0), R.var(1)
    s = s_polynomial(x ** 2 - y, x * y - 1, GREVLEX)
    assert s == x - y ** 2 or s == -(x - y ** 2)


def test_normal_form_remainder():
    R = PolyRing(2, QQ, GREVLEX)
    x, y = R.var(0), R.var(1)
    G = buchberger([x ** 2, y ** 2])
    assert normal_form(x ** 2 * y + x * y + 1, G) == x * y + 1


def test_prime_field_basis():
    R = PolyRing(2, GF(7), GREVLEX)
    x, y = R.var(0), R.var(1)
    G = buchberger([x.scale(3) + y, y ** 2])
    assert all(g.leading_term()[0] == 1 for g in G.generators)
    assert ideal_member(x ** 2, [x.scale(3) + y, y ** 2])


def _random_poly(draw, R, homogeneous):
    from linkage.oracles import monomials_up_to

    d = draw(st.integers(1, 3))
    mons = monomials_up_to(R.nvars, d, d if homogeneous else 0)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True))
    coeffs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return R.from_dict(dict(zip(chosen, coeffs)))


@st.composite
def ideal_case(draw, homogeneous=True):
    field = draw(st.sampled_from([QQ, GF(7)]))
    n = draw(st.integers(1, 3))
    R = PolyRing(n, field, GREVLEX)
    gens = [_random_poly(draw, R, homogeneous) for _ in range(draw(st.integers(1, 3)))]
    return R, [g for g in gens if not g.is_zero()] or [R.var(0)]


@settings(max_examples=40, deadline=None)
@given(ideal_case())
def test_member_matches_macaulay_on_homogeneous(case):
    from linkage.oracles import monomials_up_to

    R, gens = case
    for m in monomials_up_to(R.nvars, 4):
        assert ideal_member(R.monomial(m), gens) == homogeneous_member(R.monomial(m), gens)


@settings(max_examples=40, deadline=None)
@given(ideal_case(homogeneous=False))
def test_macaulay_certificate_is_sound(case):
    from linkage.oracles import monomials_up_to

    R, gens = case
    for m in monomials_up_to(R.nvars, 3):
        if macaulay_member(R.monomial(m), gens, 6):
            assert ideal_member(R.monomial(m), gens)


@settings(max_examples=30, deadline=None)
@given(ideal_case(homogeneous=False))
def test_generators_reduce_to_zero(case):
    R, gens = case
    G = buchberger(gens)
    assert is_groebner_basis(list(G.generators), GREVLEX)
    for g in gens:
        assert normal_form(g, G).is_zero()

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from linkage.errors import ParseError
from linkage.ideals import Ideal
from linkage.parser import (
    format_ideal,
    format_polynomial,
    format_ring,
    parse_ideal,
    parse_polynomial,
    parse_ring,
    parse_script,
    tokenize,
)
from linkage.ring import GF, GREVLEX, LEX, QQ, PolyRing


def test_script_with_binding_and_command():
    s = parse_script("ring QQ[x,y]; ideal a=(x*y); link find (x*y) (x);")
    assert list(s.bindings) == ["a"] and len(s.commands) == 1
    assert s.commands[0].name == "link-find"


def test_full_grammar():
    text = """
    ring QQ[x,y,z] grevlex mod (x^2 - y);  # comment
    ideal a = (x*y, x*z);
    ideal b = (y);
    gb a; colon a b; intersect a b; link check (x^2 - y) a b; link find (x^2-y) a;
    sset (x^2-y) a; ass a; decompose a; unmixed a; grade a; regseq (x, z);
    suite C3 seed=7 n=100;
    """
    s = parse_script(text)
    assert [c.name for c in s.commands] == [
        "gb", "colon", "intersect", "link-check", "link-find", "sset", "ass",
        "decompose", "unmixed", "grade", "regseq", "suite"]
    assert s.commands[-1].options == {"seed": 7, "n": 100}
    assert s.ctx.modulus


def test_no_ring_declared():
    with pytest.raises(ParseError) as e:
        parse_script("ideal a=(x);")
    assert e.value.code == "E_NO_RING"


def test_rational_literal_in_prime_field():
    with pytest.raises(ParseError) as e:
        parse_script("ring FF(7)[x]; ideal a=(3/2*x);")
    assert e.value.code == "E_FIELD_LITERAL"


def test_redeclaration_and_unbound():
    with pytest.raises(ParseError) as e:
        parse_script("ring QQ[x]; ring QQ[y];")
    assert e.value.code == "E_RING_REDECLARED"
    with pytest.raises(ParseError) as e:
        parse_script("ring QQ[x]; gb b;")
    assert e.value.code == "E_UNBOUND"


def test_error_position():
    with pytest.raises(ParseError) as e:
        parse_script("ring QQ[x];\ngb (x + );")
    assert (e.value.line, e.value.column) == (2, 9)


def test_precedence():
    ctx = parse_ring("ring QQ[x,y];")
    f = parse_polynomial("2*x^2*y - -3/2*y + 1", ctx)
    x, y = ctx.gens()
    assert f == (x ** 2 * y).scale(2) + y.scale(Fraction(3, 2)) + 1
    assert parse_polynomial("-x^2", ctx) == -(x ** 2)
    assert parse_polynomial("(x + y)^2", ctx) == x * x + x * y.scale(2) + y * y


def test_formatting():
    ctx = parse_ring("ring QQ[x,y];")
    assert format_polynomial(parse_polynomial("-3/2*x^2*y - y + 2", ctx), ctx.names) == "-3/2*x^2*y - y + 2"
    assert format_ideal(parse_ideal("(0)", ctx)) == "(0)"
    F = parse_ring("ring FF(7)[t];")
    assert format_polynomial(parse_polynomial("-t", F), F.names) == "6*t"


def test_ring_round_trip():
    for text in ("ring QQ[x,y] grevlex;", "ring FF(7)[a,b,c] lex;", "ring QQ[x,y] grevlex mod (x^2, x*y);"):
        assert format_ring(parse_ring(text)) == text


coeff_st = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(lambda c: c != 0)
mono_st = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=1000, deadline=None)
@given(st.dictionaries(mono_st, coeff_st, max_size=6), st.sampled_from(["QQ", "FF(7)", "FF(101)"]))
def test_polynomial_round_trip(terms, field):
    ctx = parse_ring(f"ring {field}[x,y,z];")
    if field != "QQ":
        terms = {m: int(c.numerator) for m, c in terms.items()}
    f = ctx.ring.from_dict(terms)
    assert parse_polynomial(format_polynomial(f, ctx.names), ctx) == f


@settings(max_examples=100, deadline=None)
@given(st.lists(st.dictionaries(mono_st, coeff_st, min_size=1, max_size=3), min_size=1, max_size=3))
def test_ideal_round_trip(gens):
    ctx = parse_ring("ring QQ[x,y,z];")
    I = Ideal(ctx, [ctx.ring.from_dict(g) for g in gens])
    assert parse_ideal(format_ideal(I), ctx) == I


def test_tokenizer_positions():
    toks = tokenize("ring\n  QQ")
    assert [(t.text, t.line, t.col) for t in toks[:2]] == [("ring", 1, 1), ("QQ", 2, 3)]

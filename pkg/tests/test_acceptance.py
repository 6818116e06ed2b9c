"""Acceptance gate: nine criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the summary lines appear at
the end of the session) or directly with ``python tests/test_acceptance.py``.
"""
import random
import time
from itertools import combinations

import pytest

from linkage import engine, ideals
from linkage.groebner import buchberger, normal_form
from linkage.harness import SUITES, SuiteConfig, run_suite, t12_case
from linkage.ideals import Ideal, ideal_colon, ideal_contains, ideal_equal, ideal_intersect, polynomial_ring
from linkage.monomial import MonomialIdeal, height
from linkage.oracles import ArtinianAlgebra, MacaulayOracle, homogeneous_member, monomials_up_to
from linkage.parser import parse_ideal, parse_ring
from linkage.ring import GF, GREVLEX, QQ, PolyRing
from linkage.syzygy import grade, is_maximal_regular_sequence

RESULTS = {}
MACAULAY_DEGREE = 10


def record(n, ok, elapsed, limit, detail):
    ok = ok and elapsed < limit
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail}; {elapsed:.1f}s of {limit}s)"
    print(RESULTS[n])
    return ok


def _random_poly(rng, R, max_deg, max_terms, homogeneous=False):
    while True:
        d = rng.randint(1, max_deg)
        mons = monomials_up_to(R.nvars, d, d if homogeneous else 0)
        chosen = rng.sample(mons, min(len(mons), rng.randint(1, max_terms)))
        f = R.from_dict({m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in chosen})
        if not f.is_zero():
            return f


def test_criterion_1_groebner_vs_macaulay():
    rng = random.Random(101)
    start = time.perf_counter()
    checked = mismatches = members = homogeneous = 0
    for k in range(200):
        R = PolyRing(rng.randint(1, 3), QQ if k % 2 == 0 else GF(7), GREVLEX)
        homog = k % 4 < 2
        gens = [_random_poly(rng, R, 3, 3, homog) for _ in range(rng.randint(1, 3))]
        G = buchberger(gens)
        oracle = MacaulayOracle(R, gens, MACAULAY_DEGREE)
        homogeneous += homog
        for m in monomials_up_to(R.nvars, 5):
            f = R.monomial(m)
            ours = normal_form(f, G).is_zero()
            theirs = oracle.member(f)
            if homog:
                # degree-sliced matrix is an exact decision procedure here
                theirs = theirs and homogeneous_member(f, gens)
            checked += 1
            members += ours
            mismatches += ours != theirs
    elapsed = time.perf_counter() - start
    assert record(1, mismatches == 0, elapsed, 60,
                  f"{checked} monomial queries on 200 ideals ({homogeneous} homogeneous), "
                  f"{members} members, {mismatches} disagreements")


def _mono_or_binomial(rng, ctx):
    def mono():
        return ctx.ring.monomial(tuple(rng.randint(0, 2) for _ in range(ctx.nvars)))

    f = mono()
    if rng.random() < 0.5:
        f = f + mono().scale(rng.choice([-1, 1, 2]))
    return f if not f.is_zero() else ctx.gens()[0]


def test_criterion_2_colon_identities():
    rng = random.Random(202)
    ctx = polynomial_ring(3)
    start = time.perf_counter()
    failures = 0
    for _ in range(500):
        A, B, C = (Ideal(ctx, [_mono_or_binomial(rng, ctx) for _ in range(rng.randint(1, 2))]) for _ in range(3))
        AB = ideal_colon(A, B)
        ok = ideal_contains(A, ideals.ideal_product(AB, B))
        ok &= ideal_colon(A, ideals.ideal_sum(B, C)) == ideal_intersect(AB, ideal_colon(A, C))
        ok &= ideal_colon(A, ideal_colon(A, AB)) == AB
        failures += not ok
    elapsed = time.perf_counter() - start
    assert record(2, failures == 0, elapsed, 120, f"500 triples, {failures} identity failures")


def _space_gens(alg, space):
    return [alg.ring.from_dict({alg.monomials[i]: c for i, c in row.items()}) for row in space.pivots.values()]


def test_criterion_3_artinian_oracle():
    rng = random.Random(303)
    start = time.perf_counter()
    compared = failures = 0
    dims = []
    for k in range(50):
        fld = QQ if k % 2 == 0 else GF(7)
        base = polynomial_ring(2, field=fld)
        R = base.ring
        x, y = base.gens()
        a, b = rng.randint(2, 8), rng.randint(2, 8)
        # extra generators without constant term keep J inside the maximal ideal
        extra = [_random_poly(rng, R, 4, 3) for _ in range(rng.randint(0, 2))]
        extra = [g - g.ring.constant(g.as_dict().get((0, 0), 0)) for g in extra]
        J = [x ** a, y ** b] + [g for g in extra if not g.is_zero()]
        ctx = polynomial_ring(2, field=fld, modulus=J)
        alg = ArtinianAlgebra(R, J, a + b - 1)
        assert alg.dimension <= 200
        dims.append(alg.dimension)
        for _ in range(3):
            A = [_random_poly(rng, R, 3, 2) for _ in range(rng.randint(0, 2))]
            B = [_random_poly(rng, R, 2, 2) for _ in range(rng.randint(1, 2))]
            pipeline = ideal_colon(Ideal(ctx, A), Ideal(ctx, B))
            oracle = alg.colon(A, B)
            compared += 1
            failures += not alg.same_space(oracle, alg.space_of(list(pipeline.gens)))
        # double annihilator through both routes
        a_gens = [_random_poly(rng, R, 2, 2)]
        zero = ideals.zero_ideal(ctx)
        p_back = ideal_colon(zero, ideal_colon(zero, Ideal(ctx, a_gens)))
        o_back = alg.annihilator(_space_gens(alg, alg.annihilator(a_gens)))
        compared += 1
        failures += not alg.same_space(o_back, alg.space_of(list(p_back.gens)))
    elapsed = time.perf_counter() - start
    assert record(3, failures == 0 and len(dims) == 50, elapsed, 120,
                  f"{len(dims)} quotients (dim {min(dims)}..{max(dims)}), {compared} colons, {failures} mismatches")


def test_criterion_4_l4_reproduction():
    start = time.perf_counter()
    r = run_suite(SuiteConfig("L4", seed=404, instance_count=100, size_bounds=(4, 3, 2)))
    elapsed = time.perf_counter() - start
    c = r.counts
    ok = r.ok and r.passed == 100 and c.get("splits", 0) > 0
    assert record(4, ok, elapsed, 180,
                  f"{r.passed}/100 instances, {c.get('splits', 0)} splits, "
                  f"{c.get('partners', 0)} partners checked radical, {len(r.failures)} failures")


def test_criterion_5_c3_reproduction():
    start = time.perf_counter()
    r = run_suite(SuiteConfig("C3", seed=505, instance_count=100, size_bounds=(3, 3, 1)))
    elapsed = time.perf_counter() - start
    unmixed, mixed = r.counts.get("unmixed", 0), r.counts.get("mixed", 0)
    rate = r.unknown / unmixed if unmixed else 1.0
    ok = r.ok and unmixed > 0 and mixed > 0 and rate < 0.2
    assert record(5, ok, elapsed, 300,
                  f"{unmixed} unmixed / {mixed} mixed, unknown rate {rate:.1%}, {len(r.failures)} failures")


def _double_annihilator(J_text, a_text):
    base = parse_ring("ring QQ[x,y];")
    J = list(parse_ideal(J_text, base).own_gens)
    ctx = polynomial_ring(2, names=["x", "y"], modulus=J)
    a = parse_ideal(a_text, ctx)
    zero = ideals.zero_ideal(ctx)
    pipeline = ideal_colon(zero, ideal_colon(zero, a))
    alg = ArtinianAlgebra(base.ring, J, 3)
    oracle = alg.annihilator(_space_gens(alg, alg.annihilator(list(a.own_gens))))
    return ctx, pipeline, alg, oracle


def test_criterion_6_gorenstein_contrast():
    start = time.perf_counter()
    ctx, p1, alg1, o1 = _double_annihilator("(x^2, y^2)", "(x)")
    ok1 = p1 == parse_ideal("(x)", ctx) and alg1.same_space(o1, alg1.space_of([ctx.var("x")]))
    ctx2, p2, alg2, o2 = _double_annihilator("(x^2, x*y, y^2)", "(x)")
    xy = [ctx2.var("x"), ctx2.var("y")]
    ok2 = (p2 == parse_ideal("(x, y)", ctx2) and p2 != parse_ideal("(x)", ctx2)
           and alg2.same_space(o2, alg2.space_of(xy)) and not alg2.same_space(o2, alg2.space_of(xy[:1])))
    elapsed = time.perf_counter() - start
    assert record(6, ok1 and ok2, elapsed, 5,
                  f"(x^2,y^2): 0:(0:(x)) = (x) {ok1}; (x^2,xy,y^2): 0:(0:(x)) = (x,y) {ok2}")


def test_criterion_7_t12_instances():
    start = time.perf_counter()
    kx = parse_ring("ring QQ[x];")
    regular = t12_case(kx, [kx.var("x")])
    kq = parse_ring("ring QQ[x] mod (x^2);")
    nonreg = t12_case(kq, [])
    ok = (regular["maximal"] and not regular["linked"] and regular["status"] == "not-linked"
          and nonreg["maximal"] and nonreg["linked"])
    elapsed = time.perf_counter() - start
    assert record(7, ok, elapsed, 5,
                  f"k[x]: [x] maximal, m {regular['status']}; k[x]/(x^2): [] maximal, m {nonreg['status']}")


def test_criterion_8_suite_determinism():
    start = time.perf_counter()
    differing = []
    for s in SUITES:
        cfg = SuiteConfig(s, seed=808, instance_count=5)
        if run_suite(cfg).to_dict(timing=False) != run_suite(cfg).to_dict(timing=False):
            differing.append(s)
    elapsed = time.perf_counter() - start
    assert record(8, not differing, elapsed, 120,
                  f"{len(SUITES)} suites run twice, differing: {differing or 'none'}")


def _regenerate(rng, ctx, gens):
    """Another generating set of the same ideal: a unitriangular change of
    generators plus a redundant combination."""
    gens = list(gens)
    out = []
    for i, g in enumerate(gens):
        h = g.scale(rng.choice([1, 2, -1]))
        for j in range(i + 1, len(gens)):
            mult = rng.choice([ctx.ring.one()] + ctx.gens()).scale(rng.choice([-1, 1, 2]))
            h = h + mult * gens[j]
        out.append(h)
    out.append(sum((g * rng.choice(ctx.gens()) for g in gens), ctx.ring.zero()))
    rng.shuffle(out)
    return [g for g in out if not g.is_zero()]


def test_criterion_9_grade_independence():
    rng = random.Random(909)
    ctx = polynomial_ring(3)
    start = time.perf_counter()
    failures = heights = 0
    for k in range(100):
        if k % 10 < 7:
            while True:
                gens = [tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(rng.randint(1, 3))]
                mono = MonomialIdeal.of(3, [g for g in gens if any(g)])
                if not mono.is_zero():
                    break
            gens1 = [ctx.ring.monomial(m) for m in mono.generators]
        else:
            mono = None
            gens1 = [_mono_or_binomial(rng, ctx) for _ in range(rng.randint(1, 3))]
        I1 = Ideal(ctx, gens1)
        if I1.is_unit():
            continue
        I2 = Ideal(ctx, _regenerate(rng, ctx, gens1))
        assert I1 == I2
        g1, g2 = grade(I1), grade(I2)
        failures += g1 != g2
        if mono is not None:
            heights += 1
            failures += g1 != height(mono)
    elapsed = time.perf_counter() - start
    assert record(9, failures == 0, elapsed, 180,
                  f"100 ideals, two generating sets each, {heights} height cross-checks, {failures} failures")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))

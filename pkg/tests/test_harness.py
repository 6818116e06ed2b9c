import pytest

from linkage import harness, ideals
from linkage.errors import ConfigError, DomainError
from linkage.harness import (
    SUITES,
    SuiteConfig,
    falsify,
    gen_complete_intersection,
    gen_random_monomial_ideal,
    run_suite,
)
from linkage.monomial import MonomialIdeal


def test_monomial_generator_is_deterministic():
    a = gen_random_monomial_ideal((2, 2, 2), 11)
    assert a == gen_random_monomial_ideal((2, 2, 2), 11)
    assert not a.is_zero() and not a.is_unit()
    assert gen_random_monomial_ideal((1, 1, 1), 5) == MonomialIdeal.of(1, [(1,)])


def test_complete_intersection_supports_are_disjoint():
    for seed in range(30):
        ci = gen_complete_intersection((4, 3, 3), seed, squarefree=seed % 2 == 0)
        supports = [{i for i, e in enumerate(m) if e} for m in ci]
        assert all(s for s in supports)
        assert sum(len(s) for s in supports) == len(set().union(*supports))
    assert gen_complete_intersection((2, 2, 2), 0, length=2, squarefree=True) in (
        [(1, 0), (0, 1)], [(0, 1), (1, 0)])
    with pytest.raises(DomainError):
        gen_complete_intersection((4, 3, 2), 0, length=5)


def test_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig("XX")
    with pytest.raises(ConfigError):
        SuiteConfig("C3", size_bounds=(5, 2, 2))
    with pytest.raises(ConfigError):
        SuiteConfig("C3", size_bounds=(3, 2, 4))


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_and_repeat(suite):
    cfg = SuiteConfig(suite, seed=3, instance_count=6)
    r1, r2 = run_suite(cfg), run_suite(cfg)
    assert r1.ok, r1.failures
    assert r1.to_dict(timing=False) == r2.to_dict(timing=False)
    assert r1.instances_run == 6
    assert r1.passed + r1.skipped + r1.unknown == 6


def test_t13_records_gorenstein_failure_witness():
    r = run_suite(SuiteConfig("T13", seed=0, instance_count=0))
    assert r.ok
    [w] = [w["witness"] for w in r.witnesses if w["index"] == "fixed"]
    assert w["double_annihilator"] == "(y, x)" or w["double_annihilator"] == "(x, y)"
    assert not w["pipeline_stable"] and not w["oracle_stable"]


def test_falsify_finds_nothing_on_correct_kernel():
    assert falsify("C3", "radical-monomial", 15) is None
    assert falsify("L4-radicality", "squarefree-ci", 15) is None


def test_falsify_unknown_id():
    with pytest.raises(ConfigError):
        falsify("T99")


def test_falsify_catches_corrupted_colon(monkeypatch):
    monkeypatch.setattr(ideals, "ideal_colon", lambda A, B: ideals.unit_ideal(A.ctx))
    w = falsify("L4", budget=5)
    assert w is not None and "linked" in w["clause"]

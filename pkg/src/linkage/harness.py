"""Property suites that instantiate the linkage theorems on generated ideals.

Each suite draws its instances from a per-instance generator seeded by
``(suite, seed, index)``, verifies the theorem's hypotheses first (instances
that fail them are counted as skipped), then checks the conclusion.  Every
instance ends as ``pass``, ``violation``, ``skipped`` or ``unknown``; the last
one is reserved for bounded searches that came back empty.

Local-ring statements are exercised on graded rings at the homogeneous
maximal ideal and on Artinian rings, where the graded and local notions agree.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import engine, ideals
from .errors import ConfigError, DomainError
from .ideals import Ideal, RingContext, polynomial_ring
from .monomial import (
    MonomialIdeal,
    associated_primes,
    is_unmixed,
    minimal_primes,
    monomial_primary_decomposition,
    monomial_radical,
    prime_ideal_of,
)
from .oracles import ArtinianAlgebra
from .parser import format_ideal, format_ring
from .syzygy import grade, is_maximal_regular_sequence, is_regular_sequence

SUITES = ("L13", "EXISTENCE", "T6", "L4", "C3", "T10", "T13", "T12")
MAX_VARS = 4
MAX_EXPONENT = 3
DEFAULT_BOUNDS = (3, 3, 2)
T13_SEQUENCES = 20


@dataclass(frozen=True)
class SuiteConfig:
    suite_id: str
    seed: int = 0
    instance_count: int = 20
    size_bounds: Tuple[int, int, int] = DEFAULT_BOUNDS
    max_search: int = engine.DEFAULT_MAX_SEARCH

    def __post_init__(self):
        if self.suite_id not in SUITES:
            raise ConfigError(f"unknown suite {self.suite_id!r}; expected one of {', '.join(SUITES)}")
        validate_bounds(self.size_bounds)
        if self.instance_count < 0:
            raise ConfigError("instance count must be non-negative")
        if self.max_search < 0:
            raise ConfigError("search budget must be non-negative")


def validate_bounds(bounds):
    if len(bounds) != 3:
        raise ConfigError("size bounds are (max vars, max generators, max exponent)")
    nv, ng, ne = bounds
    if not 1 <= nv <= MAX_VARS:
        raise ConfigError(f"variable count must lie in 1..{MAX_VARS}")
    if ng < 1:
        raise ConfigError("need at least one generator")
    if not 1 <= ne <= MAX_EXPONENT:
        raise ConfigError(f"exponent bound must lie in 1..{MAX_EXPONENT}")


@dataclass
class InstanceResult:
    outcome: str  # pass | violation | skipped | unknown
    instance: dict
    failures: List[dict] = field(default_factory=list)
    witnesses: List[dict] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite_id: str
    seed: int
    size_bounds: Tuple[int, int, int]
    instances_run: int = 0
    passed: int = 0
    skipped: int = 0
    unknown: int = 0
    failures: List[dict] = field(default_factory=list)
    witnesses: List[dict] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite_id": self.suite_id,
            "seed": self.seed,
            "size_bounds": list(self.size_bounds),
            "instances_run": self.instances_run,
            "passed": self.passed,
            "skipped": self.skipped,
            "unknown": self.unknown,
            "violations": len(self.failures),
            "failures": self.failures,
            "witnesses": self.witnesses,
            "counts": dict(sorted(self.counts.items())),
            "notes": self.notes,
            "status": "pass" if self.ok else "fail",
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


# -- generators

def _rng(*parts) -> random.Random:
    return random.Random(":".join(str(p) for p in parts))


def gen_random_monomial_ideal(bounds, seed) -> MonomialIdeal:
    """Proper nonzero monomial ideal in ``bounds[0]`` variables."""
    validate_bounds(bounds)
    nv, ng, ne = bounds
    rng = seed if isinstance(seed, random.Random) else _rng("monomial", seed)
    gens = []
    for _ in range(rng.randint(1, ng)):
        while True:
            m = tuple(rng.randint(0, ne) for _ in range(nv))
            if any(m):
                break
        gens.append(m)
    return MonomialIdeal.of(nv, gens)


def gen_complete_intersection(bounds, seed, length: Optional[int] = None, squarefree: bool = False):
    """Monomials with pairwise disjoint supports (a regular sequence)."""
    validate_bounds(bounds)
    nv, ng, ne = bounds
    rng = seed if isinstance(seed, random.Random) else _rng("ci", seed)
    if length is None:
        length = rng.randint(1, min(nv, ng))
    if length < 1:
        raise DomainError("need at least one element")
    if length > nv:
        raise DomainError(f"{length} disjoint supports do not fit in {nv} variables")
    variables = list(range(nv))
    rng.shuffle(variables)
    used = rng.randint(length, nv)
    cuts = sorted(rng.sample(range(1, used), length - 1))
    blocks = [variables[a:b] for a, b in zip([0] + cuts, cuts + [used])]
    out = []
    for block in blocks:
        m = [0] * nv
        for v in block:
            m[v] = 1 if squarefree else rng.randint(1, ne)
        out.append(tuple(m))
    return out


def _ideal(ctx: RingContext, mono: MonomialIdeal) -> Ideal:
    return mono.to_ideal(ctx)


def _mono_gens(ctx: RingContext, monos) -> List:
    return [ctx.ring.monomial(m) for m in monos]


def _describe(ctx: RingContext, **ideal_args) -> dict:
    d = {"ring": format_ring(ctx)}
    for k, v in ideal_args.items():
        if isinstance(v, Ideal):
            d[k] = format_ideal(v, "preimage" if ctx.is_quotient else "user")
        elif isinstance(v, MonomialIdeal):
            d[k] = format_ideal(v.to_ideal(ctx))
        else:
            d[k] = v
    return d


def _fail(failures: List[dict], clause: str, **certs):
    failures.append({"clause": clause, "certificates": {k: _text(v) for k, v in sorted(certs.items())}})


def _text(v):
    if isinstance(v, Ideal):
        return format_ideal(v, "gb")
    if isinstance(v, MonomialIdeal):
        return [list(g) for g in v.generators]
    if isinstance(v, (list, tuple)):
        return [_text(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    return v


def _is_radical_ideal(I: Ideal) -> bool:
    mono = MonomialIdeal.from_ideal(I)
    return monomial_radical(mono) == mono


def _components(mono: MonomialIdeal):
    return [q for q, _ in monomial_primary_decomposition(mono).components]


def _intersect_all(parts):
    acc = parts[0]
    for p in parts[1:]:
        acc = acc & p
    return acc


def _subsets(items, rng: random.Random, limit: int):
    """Nonempty proper subsets (as index tuples), all if few, else a sample."""
    n = len(items)
    every = [c for k in range(1, n) for c in combinations(range(n), k)]
    if len(every) <= limit:
        return every
    return sorted(rng.sample(every, limit))


def _classify_cached(cache: dict, ctx: RingContext, a: MonomialIdeal, max_search: int, seed):
    key = (ctx, a, max_search, seed)
    if key not in cache:
        cache[key] = engine.classify_linked_radical(ctx, a, max_search, seed)
    return cache[key]


# -- suites; each instance function returns an InstanceResult

def _inst_L4(cfg: SuiteConfig, idx: int, rng: random.Random, radicality_only: bool = False) -> InstanceResult:
    nv = cfg.size_bounds[0]
    for _ in range(20):
        ci = gen_complete_intersection(cfg.size_bounds, rng, squarefree=True)
        if sum(sum(m) for m in ci) > len(ci):
            break
    ctx = polynomial_ring(nv)
    I = Ideal(ctx, _mono_gens(ctx, ci))
    info = _describe(ctx, I=I)
    mono = MonomialIdeal.of(nv, ci)
    if is_regular_sequence(I.sequence(), ctx) is None:
        return InstanceResult("skipped", info, counts={"hypothesis: regular": 1})
    if associated_primes(mono) != minimal_primes(mono) or monomial_radical(mono) != mono:
        return InstanceResult("skipped", info, counts={"hypothesis: Ass=Min, radical": 1})
    comps = _components(mono)
    if len(comps) < 2:
        return InstanceResult("skipped", info, counts={"vacuous: one component": 1})
    failures: List[dict] = []
    counts = {"splits": 0, "partners": 0}
    n = len(comps)
    seen = set()
    candidates = []
    for lam in (c for k in range(1, n) for c in combinations(range(n), k)):
        rest = tuple(i for i in range(n) if i not in lam)
        if rest in seen:
            continue
        seen.add(lam)
        a = _ideal(ctx, _intersect_all([comps[i] for i in lam]))
        b = _ideal(ctx, _intersect_all([comps[i] for i in rest]))
        candidates.append(a)
        if radicality_only:
            candidates.append(b)
            continue
        counts["splits"] += 1
        geo = engine.check_geometric(ctx, I, a, b)
        lnk = engine.check_linked(ctx, I, a, b)
        if geo.status != "geometrically-linked":
            _fail(failures, "complementary split not geometrically linked", a=a, b=b, equalities=geo.equalities)
        if lnk.status not in ("linked", "self-linked"):
            _fail(failures, "complementary split not linked", a=a, b=b, equalities=lnk.equalities)
    # radical ideals containing I: splits plus random squarefree enlargements
    for _ in range(2):
        extra = gen_random_monomial_ideal((nv, 2, 1), rng)
        candidates.append(_ideal(ctx, MonomialIdeal.of(nv, mono.generators + extra.generators)))
    for a in candidates:
        if a.is_unit() or ideals.ideal_equal(a, I):
            continue
        v = engine.find_partner(ctx, I, a)
        if v.is_linked:
            counts["partners"] += 1
            if not _is_radical_ideal(v.partner):
                _fail(failures, "partner of a radical ideal by a radical I is not radical", a=a, partner=v.partner)
    return InstanceResult("violation" if failures else "pass", info, failures, counts=counts)


def _inst_L13(cfg: SuiteConfig, idx: int, rng: random.Random) -> InstanceResult:
    nv = cfg.size_bounds[0]
    ci = gen_complete_intersection(cfg.size_bounds, rng)
    ctx = polynomial_ring(nv)
    I = Ideal(ctx, _mono_gens(ctx, ci))
    mono = MonomialIdeal.of(nv, ci)
    info = _describe(ctx, I=I)
    if is_regular_sequence(I.sequence(), ctx) is None:
        return InstanceResult("skipped", info, counts={"hypothesis: regular": 1})
    failures: List[dict] = []
    ass_I = set(associated_primes(mono))
    comps = _components(mono)
    cands = [_intersect_all([comps[i] for i in lam]) for lam in _subsets(comps, rng, 5)]
    cands += [prime_ideal_of(p, nv) for p in sorted(ass_I, key=sorted)]
    # random primes containing I probe the converse of (ii)
    probes = []
    for _ in range(2):
        p = frozenset(v for v in range(nv) if rng.random() < 0.6)
        if p and mono <= prime_ideal_of(p, nv):
            probes.append(prime_ideal_of(p, nv))
    members: List[MonomialIdeal] = []
    seen = set()
    for a in cands + probes:
        if a in seen or a == mono:
            continue
        seen.add(a)
        v = engine.sset_member(ctx, I, _ideal(ctx, a))
        if a.is_prime():
            in_ass = a.as_prime() in ass_I
            if in_ass != (v.status == "member-of-S"):
                _fail(failures, "primes of S differ from Ass(R/I) - {I}", a=a, status=v.status)
        if v.status == "member-of-S":
            members.append(a)
    counts = {"members": len(members), "intersections": 0, "radicals": 0}
    for a in members:
        if not set(associated_primes(a)) <= ass_I:
            _fail(failures, "Ass(R/a) not inside Ass(R/I)", a=a)
        r = monomial_radical(a)
        counts["radicals"] += 1
        if engine.sset_member(ctx, I, _ideal(ctx, r)).status != "member-of-S":
            _fail(failures, "radical of a member is not a member", a=a, radical=r)
    for a1, a2 in combinations(members[:5], 2):
        c = a1 & a2
        if c == mono:
            continue
        counts["intersections"] += 1
        if engine.sset_member(ctx, I, _ideal(ctx, c)).status != "member-of-S":
            _fail(failures, "intersection of members is not a member", a1=a1, a2=a2)
    return InstanceResult("violation" if failures else "pass", info, failures, counts=counts)


def _inst_EXISTENCE(cfg: SuiteConfig, idx: int, rng: random.Random) -> InstanceResult:
    nv = cfg.size_bounds[0]
    if idx % 3 == 0:
        vs = rng.sample(range(nv), rng.randint(1, min(nv, cfg.size_bounds[1])))
        ci = [tuple(1 if i == v else 0 for i in range(nv)) for v in sorted(vs)]
    else:
        ci = gen_complete_intersection(cfg.size_bounds, rng)
    ctx = polynomial_ring(nv)
    I = Ideal(ctx, _mono_gens(ctx, ci))
    mono = MonomialIdeal.of(nv, ci)
    info = _describe(ctx, I=I)
    if is_regular_sequence(I.sequence(), ctx) is None:
        return InstanceResult("skipped", info, counts={"hypothesis: regular": 1})
    failures: List[dict] = []
    ass = associated_primes(mono)
    max_ass = [p for p in ass if not any(p < q for q in ass)]
    if mono.is_prime():
        # no ideal is linked by a prime I: probe a few ideals above it
        probes = [mono + prime_ideal_of({v}, nv) for v in range(nv)]
        probes += [mono + MonomialIdeal.of(nv, [tuple(2 if i == v else 0 for i in range(nv))]) for v in range(nv)]
        for a in probes:
            if a == mono:
                continue
            v = engine.find_partner(ctx, I, _ideal(ctx, a))
            if v.is_linked:
                _fail(failures, "ideal linked by a prime I", a=a, partner=v.partner)
        return InstanceResult("violation" if failures else "pass", info, failures, counts={"prime": 1})
    for p in max_ass:
        v = engine.find_partner(ctx, I, _ideal(ctx, prime_ideal_of(p, nv)))
        if not v.is_linked:
            _fail(failures, "maximal associated prime not linked", prime=sorted(p))
    for lam in _subsets(_components(mono), rng, 4):
        a = _intersect_all([_components(mono)[i] for i in lam])
        v = engine.find_partner(ctx, I, _ideal(ctx, a))
        if v.is_linked and not any(a <= prime_ideal_of(p, nv) for p in max_ass):
            _fail(failures, "linked ideal outside every maximal associated prime", a=a)
    return InstanceResult("violation" if failures else "pass", info, failures, counts={"prime": 0})


def _random_quotient(rng: random.Random, nv: int, ne: int) -> MonomialIdeal:
    """Non-reduced monomial modulus with every generator of degree >= 2."""
    while True:
        gens = []
        for _ in range(rng.randint(1, 2)):
            m = tuple(rng.randint(0, max(ne, 2)) for _ in range(nv))
            if sum(m) >= 2:
                gens.append(m)
        if gens:
            J = MonomialIdeal.of(nv, gens)
            if monomial_radical(J) != J:
                return J


def _inst_T6(cfg: SuiteConfig, idx: int, rng: random.Random) -> InstanceResult:
    nv, _, ne = cfg.size_bounds
    failures: List[dict] = []
    counts: Dict[str, int] = {}
    if idx % 2 == 0:
        # (i) and (ii): a = intersection of primes in Ass(R/x), linked by a variant of x
        ctx = polynomial_ring(nv)
        ci = gen_complete_intersection(cfg.size_bounds, rng)
        mono = MonomialIdeal.of(nv, ci)
        ass = associated_primes(mono)
        lam = [p for p in ass if rng.random() < 0.6] or [ass[-1]]
        a = _intersect_all([prime_ideal_of(p, nv) for p in lam])
        info = _describe(ctx, x=_ideal(ctx, mono), a=a)
        seq = _mono_gens(ctx, ci)
        A = _ideal(ctx, a)
        I = Ideal(ctx, seq)
        if ideals.ideal_equal(I, A) or any(not ideals.ideal_contains(A, Ideal(ctx, [s])) for s in seq):
            seq = seq[:-1] + [seq[-1] * seq[-1]]
            I = Ideal(ctx, seq)
        if is_regular_sequence(seq, ctx) is None:
            return InstanceResult("skipped", info, counts={"hypothesis: regular": 1})
        v = engine.find_partner(ctx, I, A)
        counts["radical-representation"] = 1
        if not v.is_linked:
            _fail(failures, "intersection of associated primes not linked", a=a, I=I, status=v.status)
        else:
            # converse: a linked radical ideal is an intersection of Ass(R/I) primes
            ass_I = set(associated_primes(MonomialIdeal.from_ideal(I)))
            if not set(associated_primes(a)) <= ass_I:
                _fail(failures, "linked radical ideal has primes outside Ass(R/I)", a=a, I=I)
        m = prime_ideal_of(range(nv), nv)
        vm = engine.classify_linked_radical(ctx, m, cfg.max_search, f"{cfg.seed}:{idx}")
        counts["maximal"] = 1
        if vm.status == "not-linked":
            _fail(failures, "maximal ideal not linked", status=vm.status)
        elif vm.status == "unknown":
            return InstanceResult("unknown", info, failures, counts=counts)
        return InstanceResult("violation" if failures else "pass", info, failures, counts=counts)
    # (ii) minimal primes and (iii) nilradical of a non-reduced quotient, linked by (0)
    J = _random_quotient(rng, nv, ne)
    base = polynomial_ring(nv)
    ctx = polynomial_ring(nv, modulus=_mono_gens(base, J.generators))
    zero = ideals.zero_ideal(ctx)
    nil = monomial_radical(J)
    info = _describe(ctx, nilradical=_ideal(ctx, nil))
    v = engine.find_partner(ctx, zero, _ideal(ctx, nil))
    counts["nilradical"] = 1
    if not v.is_linked:
        _fail(failures, "nilradical of a non-reduced ring not linked by (0)", nilradical=nil, status=v.status)
    for p in minimal_primes(J):
        P = prime_ideal_of(p, nv)
        if P == J:
            continue
        counts["minimal-primes"] = counts.get("minimal-primes", 0) + 1
        if not engine.find_partner(ctx, zero, _ideal(ctx, P)).is_linked:
            _fail(failures, "nonzero minimal prime not linked by (0)", prime=sorted(p))
    return InstanceResult("violation" if failures else "pass", info, failures, counts=counts)


def _random_radical(rng: random.Random, nv: int, ng: int) -> MonomialIdeal:
    return gen_random_monomial_ideal((nv, ng, 1), rng)


EX1_CASES = (
    # one-dimensional rings of depth zero: every prime is linked
    ("x^2, x*y", ["(x)", "(x, y)", "(x, y - 1)"]),
    ("x^2, x*y^2", ["(x)", "(x, y)", "(x, y + 1)"]),
)


def _inst_C3(cfg: SuiteConfig, idx: int, rng: random.Random, cache: dict) -> InstanceResult:
    nv, ng, _ = cfg.size_bounds
    ctx = polynomial_ring(nv)
    a = _random_radical(rng, nv, ng)
    info = _describe(ctx, a=a)
    unmixed, cert = is_unmixed(a)
    v = _classify_cached(cache, ctx, a, cfg.max_search, f"{cfg.seed}:{idx}")
    failures: List[dict] = []
    counts = {"unmixed": int(unmixed), "mixed": int(not unmixed)}
    if unmixed and v.status == "not-linked":
        _fail(failures, "unmixed radical ideal classified not linked", a=a, ass=cert)
    if not unmixed and v.status != "not-linked":
        _fail(failures, "mixed radical ideal classified linked", a=a, ass=cert, status=v.status)
    if v.is_linked:
        re = engine.check_linked(ctx, v.I, v.a, v.partner)
        if not re.is_linked:
            _fail(failures, "linked verdict does not replay", a=a, I=v.I, partner=v.partner)
    if not unmixed:
        # try to refute: a linking sequence for a mixed ideal would contradict the theorem
        A = _ideal(ctx, a)
        for seq, w in engine.search_linking_sequence(ctx, A, grade(A), 3, f"refute:{cfg.seed}:{idx}"):
            if w.is_linked:
                _fail(failures, "mixed radical ideal linked by a sampled sequence", a=a, sequence=[format_ideal(w.I)])
                break
    # Prop. t11 spot check: a random prime and an equal-height pair of primes
    if idx % 4 == 0:
        k = rng.randint(1, nv)
        p1 = frozenset(rng.sample(range(nv), k))
        p2 = frozenset(rng.sample(range(nv), k))
        for q in {prime_ideal_of(p1, nv), prime_ideal_of(p1, nv) & prime_ideal_of(p2, nv)}:
            w = _classify_cached(cache, ctx, q, cfg.max_search, f"t11:{cfg.seed}:{idx}")
            counts["t11"] = counts.get("t11", 0) + 1
            if w.status == "not-linked":
                _fail(failures, "prime or equal-height prime pair not linked", a=q)
    if failures:
        return InstanceResult("violation", info, failures, counts=counts)
    if v.status == "unknown":
        return InstanceResult("unknown", info, counts=counts)
    return InstanceResult("pass", info, counts=counts)


def _ex1_checks(cfg: SuiteConfig) -> Tuple[List[dict], List[dict]]:
    from .parser import parse_ideal

    failures, results = [], []
    for modulus, primes in EX1_CASES:
        base = polynomial_ring(2, names=["x", "y"])
        ctx = polynomial_ring(2, names=["x", "y"], modulus=list(parse_ideal(f"({modulus})", base).own_gens))
        for text in primes:
            P = parse_ideal(text, ctx)
            found = None
            h = grade(P)
            gens = P.sequence()
            for seq, v in engine.search_linking_sequence(ctx, P, h, cfg.max_search, f"ex1:{cfg.seed}", gens):
                if v.is_linked:
                    found = v
                    break
            status = found.status if found else "unknown"
            results.append({"ring": format_ring(ctx), "prime": text, "status": status,
                            "I": format_ideal(found.I) if found else None})
            if found is None:
                failures.append({"clause": "prime of a 1-dim depth-0 ring not shown linked within budget",
                                 "certificates": {"ring": format_ring(ctx), "prime": text}})
    return failures, results


def _monomial_cm_modulus(rng: random.Random, nv: int, ne: int, kind: int):
    """(modulus generators, free variables) for a Cohen-Macaulay R/J."""
    if kind == 0 or nv == 1:
        return [], list(range(nv))
    if kind == 1:
        v = rng.randrange(nv)
        return [tuple(rng.randint(2, max(2, ne)) if i == v else 0 for i in range(nv))], [i for i in range(nv) if i != v]
    # Artinian: pure powers plus a mixed monomial
    gens = [tuple(rng.randint(1, max(ne, 2)) if i == v else 0 for i in range(nv)) for v in range(nv)]
    mixed = tuple(rng.randint(0, 1) for _ in range(nv))
    if sum(mixed) >= 2:
        gens.append(mixed)
    return gens, []


def _inst_T10(cfg: SuiteConfig, idx: int, rng: random.Random) -> InstanceResult:
    nv, ng, ne = cfg.size_bounds
    nv = min(nv, 3)
    J, free = _monomial_cm_modulus(rng, nv, ne, idx % 3)
    base = polynomial_ring(nv)
    ctx = polynomial_ring(nv, modulus=_mono_gens(base, J)) if J else base
    Jm = MonomialIdeal.of(nv, J) if J else None
    # regular sequence on R/J: pure powers of free variables
    k = rng.randint(0, min(len(free), ng)) if free else 0
    chosen = sorted(rng.sample(free, k))
    seq_m = [tuple(rng.randint(1, ne) if i == v else 0 for i in range(nv)) for v in chosen]
    I = Ideal(ctx, _mono_gens(ctx, seq_m))
    info = _describe(ctx, I=I)
    if is_regular_sequence(I.sequence(), ctx) is None:
        return InstanceResult("skipped", info, counts={"hypothesis: regular": 1})
    IJ = MonomialIdeal.of(nv, seq_m + list(J))
    if IJ.is_zero():
        return InstanceResult("skipped", info, counts={"vacuous: I + J = 0": 1})
    if Jm is not None and associated_primes(Jm) != minimal_primes(Jm):
        return InstanceResult("skipped", info, counts={"hypothesis: Ass M = Min Ass M": 1})
    comps = _components(IJ)
    cands = [_intersect_all([comps[i] for i in lam]) for lam in _subsets(comps, rng, 4)]
    cands += [prime_ideal_of(p, nv) for p in associated_primes(IJ)]
    cands.append(gen_random_monomial_ideal((nv, 2, ne), rng) + IJ)
    failures: List[dict] = []
    counts = {"linked": 0}
    seen = set()
    for a in cands:
        if a in seen or a == IJ or a.is_unit():
            continue
        seen.add(a)
        v = engine.find_partner(ctx, I, _ideal(ctx, a))
        if not v.is_linked:
            continue
        counts["linked"] += 1
        for x in (a, MonomialIdeal.from_ideal(v.partner)):
            ok, cert = is_unmixed(x + Jm if Jm is not None else x)
            if not ok:
                _fail(failures, "M/aM is not unmixed for a linked ideal a", a=x, ass=cert)
    outcome = "violation" if failures else ("pass" if counts["linked"] else "skipped")
    if outcome == "skipped":
        counts = {"vacuous: no linked ideal found": 1}
    return InstanceResult(outcome, info, failures, counts=counts)


def _artinian_contrast(J_text: str, a_text: str, names=("x", "y")) -> dict:
    """0:(0:a) via the pipeline and via the Artinian oracle."""
    from .parser import parse_ideal

    base = polynomial_ring(len(names), names=list(names))
    Jg = list(parse_ideal(f"({J_text})", base).own_gens)
    ctx = polynomial_ring(len(names), names=list(names), modulus=Jg)
    a = parse_ideal(a_text, ctx)
    zero = ideals.zero_ideal(ctx)
    b = ideals.ideal_colon(zero, a)
    back = ideals.ideal_colon(zero, b)
    D = 1 + max(g.total_degree for g in Jg) * len(names)
    alg = ArtinianAlgebra(base.ring, Jg, D)
    o_b = alg.annihilator(list(a.own_gens))
    o_back_gens = _space_generators(alg, o_b)
    o_back = alg.annihilator(o_back_gens)
    pipeline_stable = ideals.ideal_equal(back, a)
    oracle_stable = alg.same_space(o_back, alg.space_of(list(a.own_gens)))
    agree = (alg.same_space(o_b, alg.space_of(list(b.gens)))
             and alg.same_space(o_back, alg.space_of(list(back.gens))))
    return {
        "ring": format_ring(ctx), "a": a_text,
        "annihilator": format_ideal(b, "gb"), "double_annihilator": format_ideal(back, "gb"),
        "pipeline_stable": pipeline_stable, "oracle_stable": oracle_stable, "oracle_agrees": agree,
    }


def _space_generators(alg: ArtinianAlgebra, space) -> list:
    """Polynomials spanning a subspace (they generate it as an ideal too,
    since the subspace is an ideal)."""
    ring = alg.ring
    out = []
    for row in space.pivots.values():
        out.append(ring.from_dict({alg.monomials[i]: c for i, c in row.items()}))
    return out


T13_FIXED = (
    ("x^2, y^2", "(x)", True),
    ("x^2, x*y, y^2", "(x)", False),
)


def _standard_monomials(J: MonomialIdeal, nv: int, bound: int):
    from .oracles import monomials_up_to

    return [m for m in monomials_up_to(nv, bound) if any(m) and not J.contains_monomial(m)]


def _inst_T13(cfg: SuiteConfig, idx: int, rng: random.Random) -> InstanceResult:
    nv, ng, ne = cfg.size_bounds
    failures: List[dict] = []
    if idx % 2 == 0:
        # Artinian k[x,y]/J: Gorenstein iff J is generated by pure powers
        a_pow, b_pow = rng.randint(1, max(ne, 2)), rng.randint(1, max(ne, 2))
        gens = [(a_pow, 0), (0, b_pow)]
        if rng.random() < 0.5 and a_pow > 1 and b_pow > 1:
            gens.append((rng.randint(1, a_pow - 1), rng.randint(1, b_pow - 1)))
        J = MonomialIdeal.of(2, gens)
        gorenstein = len(J.generators) == 2
        J_text = format_ideal(J.to_ideal(polynomial_ring(2, names=["x", "y"])))[1:-1]
        info = {"ring": f"QQ[x,y]/({J_text})", "gorenstein": gorenstein}
        names = ("x", "y")
        stds = _standard_monomials(J, 2, a_pow + b_pow)
        probes = [[m] for m in stds] + [list(p) for p in combinations(stds, 2)][:10]
        witness = None
        for p in probes:
            a_text = "(" + ", ".join(_mono_text(m, names) for m in p) + ")"
            r = _artinian_contrast(J_text, a_text)
            if not r["oracle_agrees"] or r["pipeline_stable"] != r["oracle_stable"]:
                _fail(failures, "pipeline and Artinian oracle disagree", **r)
            if not r["pipeline_stable"]:
                if gorenstein:
                    _fail(failures, "double annihilator unstable in a Gorenstein ring", **r)
                elif witness is None:
                    witness = r
        if failures:
            return InstanceResult("violation", info, failures)
        if not gorenstein:
            if witness is None:
                return InstanceResult("unknown", info, counts={"no witness among probes": 1})
            return InstanceResult("pass", info, witnesses=[witness], counts={"gorenstein-failure witness": 1})
        return InstanceResult("pass", info, counts={"stable ideals": len(probes)})
    # polynomial ring (Gorenstein): unmixed a is linked by every sampled regular
    # sequence of length grade(a) inside a
    nv = min(nv, 3)
    ctx = polynomial_ring(nv)
    a = gen_random_monomial_ideal((nv, ng, min(ne, 2)), rng)
    info = _describe(ctx, a=a)
    if not is_unmixed(a)[0]:
        return InstanceResult("skipped", info, counts={"hypothesis: unmixed": 1})
    A = _ideal(ctx, a)
    h = grade(A)
    gens = A.sequence()
    sampled = 0
    tried = set()
    seqs = [list(s) for s in combinations(gens, h)]
    multipliers = [ctx.ring.one()] + ctx.gens()
    for _ in range(T13_SEQUENCES):
        seqs.append([sum((g * rng.choice(multipliers) * rng.choice(engine.SEARCH_COEFFICIENTS) for g in gens),
                         ctx.ring.zero()) for _ in range(h)])
    for seq in seqs:
        if h and ideals.ideal_equal(Ideal(ctx, seq), A):
            seq = seq[:-1] + [seq[-1] * seq[-1]]
        if sampled >= T13_SEQUENCES:
            break
        key = tuple(seq)
        if key in tried:
            continue
        tried.add(key)
        if is_regular_sequence(seq, ctx) is None:
            continue
        I = Ideal(ctx, seq)
        sampled += 1
        v = engine.find_partner(ctx, I, A)
        if not v.is_linked:
            _fail(failures, "unmixed ideal not linked by a regular sequence of length grade", a=a, I=I)
    if not sampled:
        return InstanceResult("skipped", info, counts={"vacuous: no sequence": 1})
    return InstanceResult("violation" if failures else "pass", info, failures, counts={"sequences": sampled})


def _mono_text(m, names) -> str:
    parts = []
    for n, e in zip(names, m):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts) or "1"


def _greedy_maximal_sequence(ctx: RingContext, m: Ideal, rng: random.Random):
    cands = list(ctx.gens())
    rng.shuffle(cands)
    for _ in range(3):
        cands.append(sum((x.scale(rng.choice(engine.SEARCH_COEFFICIENTS)) for x in ctx.gens()), ctx.ring.zero()))
    seq = []
    for c in cands:
        if is_maximal_regular_sequence(seq, m, ctx):
            return seq
        if is_regular_sequence(seq + [c], ctx) is not None:
            seq.append(c)
    return seq if is_maximal_regular_sequence(seq, m, ctx) else None


def t12_case(ctx: RingContext, seq) -> dict:
    """Verdict on whether m is linked by the ideal of a maximal sequence."""
    m = ctx.maximal_ideal()
    maximal = is_maximal_regular_sequence(seq, m, ctx)
    I = Ideal(ctx, seq)
    v = engine.linked_by(ctx, I, m)
    return {"ring": format_ring(ctx), "sequence": format_ideal(I), "maximal": maximal, "status": v.status,
            "linked": v.is_linked}


def _inst_T12(cfg: SuiteConfig, idx: int, rng: random.Random) -> InstanceResult:
    nv, _, ne = cfg.size_bounds
    nv = rng.randint(1, min(nv, 3))
    base = polynomial_ring(nv)
    failures: List[dict] = []
    if idx % 2 == 0:
        r = t12_case(base, base.gens())
        info = {"ring": r["ring"], "regular": True, "sequence": r["sequence"]}
        if not r["maximal"] or r["linked"]:
            _fail(failures, "regular ring: m linked by the variables", **r)
        return InstanceResult("violation" if failures else "pass", info, failures)
    J = _random_quotient(rng, nv, ne)
    ctx = polynomial_ring(nv, modulus=_mono_gens(base, J.generators))
    m = ctx.maximal_ideal()
    info = {"ring": format_ring(ctx), "regular": False}
    seq = _greedy_maximal_sequence(ctx, m, rng)
    if seq is None:
        return InstanceResult("skipped", info, counts={"no maximal sequence found": 1})
    r = t12_case(ctx, seq)
    info["sequence"] = r["sequence"]
    if not r["linked"]:
        _fail(failures, "non-regular ring: m not linked by a maximal regular sequence", **r)
    return InstanceResult("violation" if failures else "pass", info, failures)


def _fixed_T12():
    from .parser import parse_ring

    out = []
    for text, seq_text, expect_linked in (("ring QQ[x];", ["x"], False), ("ring QQ[x] mod (x^2);", [], True)):
        ctx = parse_ring(text)
        seq = [ctx.var(s) for s in seq_text]
        r = t12_case(ctx, seq)
        r["expected_linked"] = expect_linked
        out.append(r)
    return out


INSTANCE_FUNCTIONS: Dict[str, Callable] = {
    "L4": _inst_L4,
    "L13": _inst_L13,
    "EXISTENCE": _inst_EXISTENCE,
    "T6": _inst_T6,
    "C3": _inst_C3,
    "T10": _inst_T10,
    "T13": _inst_T13,
    "T12": _inst_T12,
}


def _run_instance(cfg: SuiteConfig, idx: int, cache: dict, radicality_only: bool = False) -> InstanceResult:
    rng = _rng(cfg.suite_id, cfg.seed, idx)
    fn = INSTANCE_FUNCTIONS[cfg.suite_id]
    if cfg.suite_id == "C3":
        return fn(cfg, idx, rng, cache)
    if cfg.suite_id == "L4" and radicality_only:
        return fn(cfg, idx, rng, radicality_only=True)
    return fn(cfg, idx, rng)


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    start = time.perf_counter()
    report = SuiteReport(cfg.suite_id, cfg.seed, tuple(cfg.size_bounds))
    cache: dict = {}
    _fixed_cases(cfg, report)
    for idx in range(cfg.instance_count):
        res = _run_instance(cfg, idx, cache)
        report.instances_run += 1
        for k, v in res.counts.items():
            report.counts[k] = report.counts.get(k, 0) + v
        if res.outcome == "pass":
            report.passed += 1
        elif res.outcome == "skipped":
            report.skipped += 1
        elif res.outcome == "unknown":
            report.unknown += 1
        for f in res.failures:
            report.failures.append({"index": idx, "instance": res.instance, **f})
        for w in res.witnesses:
            report.witnesses.append({"index": idx, "instance": res.instance, "witness": w})
    if cfg.suite_id == "C3":
        unmixed = report.counts.get("unmixed", 0)
        rate = report.unknown / unmixed if unmixed else 0.0
        report.counts["unknown_per_mille_of_unmixed"] = round(1000 * rate)
    report.notes.append("local statements are checked on graded rings at the homogeneous maximal ideal "
                        "and on Artinian rings")
    if cfg.suite_id == "T10":
        report.notes.append("modules covered: M = R and M = R/J (cyclic)")
    report.elapsed = time.perf_counter() - start
    return report


def _fixed_cases(cfg: SuiteConfig, report: SuiteReport):
    """Named instances that every run of a suite includes."""
    if cfg.suite_id == "T13":
        for J_text, a_text, gorenstein in T13_FIXED:
            r = _artinian_contrast(J_text, a_text)
            ok = r["oracle_agrees"] and r["pipeline_stable"] == r["oracle_stable"] == gorenstein
            entry = {"index": "fixed", "instance": {"ring": r["ring"], "a": a_text}}
            if not ok:
                report.failures.append({**entry, "clause": "Gorenstein contrast", "certificates": r})
            elif not gorenstein:
                report.witnesses.append({**entry, "witness": r})
            report.counts["fixed"] = report.counts.get("fixed", 0) + 1
    elif cfg.suite_id == "T12":
        for r in _fixed_T12():
            entry = {"index": "fixed", "instance": {"ring": r["ring"], "sequence": r["sequence"]}}
            if not r["maximal"] or r["linked"] != r["expected_linked"]:
                report.failures.append({**entry, "clause": "maximal sequence verdict", "certificates": r})
            report.counts["fixed"] = report.counts.get("fixed", 0) + 1
    elif cfg.suite_id == "C3":
        failures, results = _ex1_checks(cfg)
        for f in failures:
            report.failures.append({"index": "fixed", "instance": f["certificates"], **f})
        report.counts["fixed"] = report.counts.get("fixed", 0) + len(results)


# -- counterexample search

FAMILIES = {
    "L13": ("monomial-ci",),
    "EXISTENCE": ("monomial-ci",),
    "T6": ("monomial-ci",),
    "L4": ("squarefree-ci",),
    "L4-radicality": ("squarefree-ci",),
    "C3": ("radical-monomial",),
    "T10": ("monomial-cm",),
    "T13": ("artinian-or-polynomial",),
    "T12": ("graded-local",),
}


def falsify(theorem_id: str, family: Optional[str] = None, budget: int = 200, seed: int = 0,
            size_bounds=DEFAULT_BOUNDS) -> Optional[dict]:
    """First instance (within ``budget``) violating the theorem, or None."""
    if theorem_id not in FAMILIES:
        raise ConfigError(f"unknown theorem id {theorem_id!r}")
    if family is not None and family not in FAMILIES[theorem_id]:
        raise ConfigError(f"family {family!r} not available for {theorem_id}")
    suite = theorem_id.split("-")[0]
    cfg = SuiteConfig(suite, seed, budget, tuple(size_bounds))
    cache: dict = {}
    for idx in range(budget):
        res = _run_instance(cfg, idx, cache, radicality_only=theorem_id == "L4-radicality")
        if res.failures:
            return {"theorem": theorem_id, "index": idx, "instance": res.instance, **res.failures[0]}
    return None

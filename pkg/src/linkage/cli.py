"""Command line interface.

    linkage run SCRIPT
    linkage eval -e "ring QQ[x,y]; link check (x*y) (x) (y);"
    linkage suite C3 --seed 7 --count 100 --out report.json

Exit status: 0 when everything ran (whatever the verdicts), 1 for usage,
parse and configuration errors, 2 for violated mathematical preconditions.
"""
from __future__ import annotations

import argparse
import contextlib
import signal
import sys
import time
from typing import List, Optional

from . import engine, ideals
from .errors import ConfigError, LinkageError, TimeoutExceeded
from .harness import SuiteConfig, run_suite, validate_bounds
from .ideals import Ideal, RingContext
from .monomial import MonomialIdeal, associated_primes, is_unmixed, monomial_primary_decomposition
from .parser import Command, format_ideal, format_polynomial, parse_script
from .report import apply_verdict, emit_report, ideal_views, new_report
from .syzygy import grade, is_maximal_regular_sequence, is_regular_sequence, syzygies


def _monomial(I: Ideal) -> MonomialIdeal:
    return MonomialIdeal.from_ideal(I)


def _prime_text(p, ctx: RingContext) -> str:
    return "(" + ", ".join(ctx.names[i] for i in sorted(p)) + ")"


def _binary(op):
    def run(cmd, ctx, report, **_):
        J = op(*cmd.args)
        report["status"] = "ok"
        report["views"] = ideal_views(J)
        report["value"] = report["views"]["user"]
    return run


def _gb(cmd, ctx, report, **_):
    report["status"] = "ok"
    report["views"] = ideal_views(cmd.args[0])
    report["value"] = [format_polynomial(g, ctx.names) for g in cmd.args[0].gb().generators]


def _equal(cmd, ctx, report, **_):
    report["status"] = "ok"
    report["value"] = ideals.ideal_equal(*cmd.args)


def _member(cmd, ctx, report, **_):
    f, I = cmd.args
    report["status"] = "ok"
    report["value"] = I.contains(f)


def _radical(cmd, ctx, report, **_):
    f, I = cmd.args
    report["status"] = "ok"
    report["value"] = ideals.radical_member(f, I)


def _link_check(cmd, ctx, report, **_):
    apply_verdict(report, engine.check_linked(ctx, *cmd.args))


def _link_geometric(cmd, ctx, report, **_):
    apply_verdict(report, engine.check_geometric(ctx, *cmd.args))


def _link_find(cmd, ctx, report, **_):
    apply_verdict(report, engine.find_partner(ctx, *cmd.args))


def _sset(cmd, ctx, report, **_):
    apply_verdict(report, engine.sset_member(ctx, *cmd.args))


def _classify(cmd, ctx, report, seed=0, max_search=engine.DEFAULT_MAX_SEARCH, **_):
    v = engine.classify_linked_radical(ctx, _monomial(cmd.args[0]), max_search, seed)
    apply_verdict(report, v)
    if v.diagnostic.get("ass"):
        report["diagnostic"]["ass"] = [
            {"prime": _prime_text(e["prime"], ctx), "height": e["height"]} for e in v.diagnostic["ass"]]


def _ass(cmd, ctx, report, **_):
    report["status"] = "ok"
    report["value"] = [_prime_text(p, ctx) for p in associated_primes(_monomial(cmd.args[0]))]


def _decompose(cmd, ctx, report, **_):
    dec = monomial_primary_decomposition(_monomial(cmd.args[0]))
    report["status"] = "ok"
    report["value"] = [
        {"component": format_ideal(q.to_ideal(ctx.polynomial_context())), "prime": _prime_text(p, ctx)}
        for q, p in dec.components]
    report["diagnostic"] = {"irredundant": dec.irredundant}


def _unmixed(cmd, ctx, report, **_):
    flag, cert = is_unmixed(_monomial(cmd.args[0]))
    report["status"] = "ok"
    report["value"] = flag
    report["diagnostic"] = {"ass": [{"prime": _prime_text(p, ctx), "height": h} for p, h in cert]}


def _grade(cmd, ctx, report, **_):
    report["status"] = "ok"
    report["value"] = grade(cmd.args[0])


def _regseq(cmd, ctx, report, **_):
    w = is_regular_sequence(cmd.args[0], ctx)
    report["status"] = "ok"
    report["value"] = w is not None
    if w is not None:
        report["regseq"] = {"elements": [format_polynomial(f, ctx.names) for f in w.elements], "checks": w.checks}


def _maxregseq(cmd, ctx, report, **_):
    report["status"] = "ok"
    report["value"] = is_maximal_regular_sequence(cmd.args[0], cmd.args[1], ctx)


def _syz(cmd, ctx, report, **_):
    report["status"] = "ok"
    report["value"] = [[format_polynomial(c, ctx.names) for c in s] for s in syzygies(cmd.args[0], ctx)]


SUITE_OPTIONS = {"seed", "n", "vars", "gens", "exp", "max_search"}


def _suite(cmd, ctx, report, seed=0, max_search=engine.DEFAULT_MAX_SEARCH, **_):
    opts = cmd.options
    unknown = set(opts) - SUITE_OPTIONS
    if unknown:
        raise ConfigError(f"unknown suite option(s): {', '.join(sorted(unknown))}")
    cfg = suite_config(cmd.args[0], opts.get("seed", seed), opts.get("n", 20),
                       (opts.get("vars", 3), opts.get("gens", 3), opts.get("exp", 2)),
                       opts.get("max_search", max_search))
    fill_suite_report(report, cfg)


def suite_config(suite_id, seed, count, bounds, max_search=engine.DEFAULT_MAX_SEARCH) -> SuiteConfig:
    validate_bounds(bounds)
    return SuiteConfig(suite_id, seed, count, tuple(bounds), max_search)


def fill_suite_report(report: dict, cfg: SuiteConfig) -> dict:
    rep = run_suite(cfg)
    d = rep.to_dict(timing=False)
    report["seed"] = cfg.seed
    report["params"] = {"count": cfg.instance_count, "max_search": cfg.max_search,
                        "size_bounds": list(cfg.size_bounds), "suite": cfg.suite_id}
    report["status"] = d["status"]
    report["value"] = d
    report["timing"] = {"elapsed_seconds": round(rep.elapsed, 3)}
    return report


HANDLERS = {
    "gb": _gb,
    "colon": _binary(ideals.ideal_colon),
    "intersect": _binary(ideals.ideal_intersect),
    "sum": _binary(ideals.ideal_sum),
    "product": _binary(ideals.ideal_product),
    "saturate": _binary(ideals.saturate),
    "equal": _equal,
    "member": _member,
    "radical": _radical,
    "link-check": _link_check,
    "link-geometric": _link_geometric,
    "link-find": _link_find,
    "sset": _sset,
    "classify": _classify,
    "ass": _ass,
    "decompose": _decompose,
    "unmixed": _unmixed,
    "grade": _grade,
    "regseq": _regseq,
    "maxregseq": _maxregseq,
    "syz": _syz,
    "suite": _suite,
}


@contextlib.contextmanager
def time_limit(seconds: Optional[float]):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def handler(signum, frame):
        raise TimeoutExceeded(f"computation exceeded {seconds} s")

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def run_command(cmd: Command, ctx: RingContext, seed: int = 0, max_search: int = engine.DEFAULT_MAX_SEARCH,
                timeout: Optional[float] = None) -> dict:
    """Execute one parsed command; errors end up in the report's ``error``."""
    params = {"max_search": max_search} if cmd.name in ("classify",) else {}
    report = new_report(cmd.echo(ctx), ctx, seed, params)
    start = time.perf_counter()
    try:
        with time_limit(timeout):
            HANDLERS[cmd.name](cmd, ctx, report, seed=seed, max_search=max_search)
    except LinkageError as exc:
        report["status"] = "error"
        report["error"] = {"code": exc.code, "message": str(exc), "exit_status": exc.exit_status}
    if report["timing"] is None:
        report["timing"] = {"elapsed_seconds": round(time.perf_counter() - start, 3)}
    return report


def run_script(text: str, seed: int = 0, max_search: int = engine.DEFAULT_MAX_SEARCH,
               timeout: Optional[float] = None) -> List[dict]:
    script = parse_script(text)
    return [run_command(c, script.ctx, seed, max_search, timeout) for c in script.commands]


def exit_status(reports: List[dict]) -> int:
    return max((r["error"]["exit_status"] for r in reports if r.get("error")), default=0)


def _error_report(exc: LinkageError, command: str) -> dict:
    r = new_report(command, None, None)
    r["status"] = "error"
    r["error"] = {"code": exc.code, "message": str(exc), "exit_status": exc.exit_status}
    return r


def _write(data: bytes, out: Optional[str]):
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-search", type=int, default=engine.DEFAULT_MAX_SEARCH,
                        help="regular-sequence search budget")
    common.add_argument("--timeout-seconds", type=float, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="linkage", description="Decide and certify linkage of ideals.")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", parents=[common], help="run a script file")
    r.add_argument("script")
    e = sub.add_parser("eval", parents=[common], help="run a one-line script")
    e.add_argument("-e", "--expr", required=True)
    s = sub.add_parser("suite", parents=[common], help="run a theorem suite")
    s.add_argument("suite_id")
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--vars", type=int, default=3)
    s.add_argument("--gens", type=int, default=3)
    s.add_argument("--exp", type=int, default=2)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if args.max_search < 0:
        print("error E_CONFIG: --max-search must be non-negative", file=sys.stderr)
        return 1

    if args.cmd == "suite":
        command = f"suite {args.suite_id} seed={args.seed} n={args.count}"
        try:
            cfg = suite_config(args.suite_id, args.seed, args.count, (args.vars, args.gens, args.exp),
                               args.max_search)
            report = new_report(command, None, args.seed)
            with time_limit(args.timeout_seconds):
                fill_suite_report(report, cfg)
        except LinkageError as exc:
            report = _error_report(exc, command)
        _write(emit_report(report, args.format), args.out)
        if args.out:
            print(f"{report['status']}: {command} -> {args.out}")
        return report["error"]["exit_status"] if report.get("error") else 0

    if args.cmd == "run":
        try:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error E_CONFIG: cannot read {args.script}: {exc.strerror}", file=sys.stderr)
            return 1
        source = args.script
    else:
        text = args.expr
        source = "<eval>"
    try:
        reports = run_script(text, args.seed, args.max_search, args.timeout_seconds)
    except LinkageError as exc:
        reports = [_error_report(exc, source)]
    payload = reports[0] if args.cmd == "eval" and len(reports) == 1 else reports
    _write(emit_report(payload, args.format), args.out)
    return exit_status(reports)


if __name__ == "__main__":
    sys.exit(main())

"""Machine-readable reports.

A report is a plain dict with a fixed key order; :func:`emit_report` turns it
into JSON (stable keys, identical bytes for identical reports) or a short text
summary.  Polynomials are always printed in the input grammar.
"""
from __future__ import annotations

import json
from typing import List, Optional

from .engine import LinkageVerdict
from .ideals import Ideal
from .parser import format_ideal, format_polynomial, format_ring

SCHEMA = 1
REPORT_KEYS = (
    "schema", "version", "command", "ring", "seed", "params", "status", "value",
    "partner", "regseq", "equalities", "certificate_kind", "diagnostic", "views",
    "error", "timing",
)


def _version() -> str:
    from . import __version__

    return __version__


def ideal_views(I: Ideal) -> dict:
    """User view (generators reduced modulo J, J dropped) and preimage view."""
    ctx = I.ctx
    gb = I.gb().generators
    if not ctx.is_quotient:
        return {"user": format_ideal(I, "gb")}
    J = ctx.modulus_ideal()
    user = []
    for g in gb:
        r = J.gb().reduce(g)
        if not r.is_zero() and r not in user:
            user.append(r)
    return {
        "user": "(" + (", ".join(format_polynomial(g, ctx.names) for g in user) or "0") + ")",
        "preimage": format_ideal(I, "gb"),
    }


def new_report(command: str, ctx, seed: int, params: Optional[dict] = None) -> dict:
    r = {k: None for k in REPORT_KEYS}
    r.update(schema=SCHEMA, version=_version(), command=command,
             ring=format_ring(ctx) if ctx is not None else None, seed=seed,
             params=dict(sorted((params or {}).items())), equalities=[], diagnostic={})
    return r


def apply_verdict(report: dict, v: LinkageVerdict) -> dict:
    report["status"] = v.status
    report["partner"] = ideal_views(v.partner) if v.partner is not None else None
    if v.regseq is not None:
        names = v.regseq.ctx.names
        report["regseq"] = {
            "elements": [format_polynomial(f, names) for f in v.regseq.elements],
            "checks": v.regseq.checks,
        }
    report["equalities"] = list(v.equalities)
    report["certificate_kind"] = v.certificate_kind
    diag = dict(v.diagnostic)
    if v.I is not None:
        diag.setdefault("I", format_ideal(v.I, "preimage" if v.I.ctx.is_quotient else "user"))
    report["diagnostic"] = _plain(diag)
    return report


def _plain(x):
    """Make nested values JSON friendly (frozensets become sorted lists)."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, Ideal):
        return format_ideal(x, "gb")
    return x


def emit_report(report, fmt: str = "json") -> bytes:
    """Serialize one report (dict) or a list of them."""
    if fmt == "json":
        return (json.dumps(_plain(report), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        reports: List[dict] = report if isinstance(report, list) else [report]
        return "\n".join(_text_summary(r) for r in reports).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def _text_summary(r: dict) -> str:
    lines = [f"> {r.get('command')}"]
    if r.get("error"):
        e = r["error"]
        lines.append(f"  error {e['code']}: {e['message']}")
        return "\n".join(lines) + "\n"
    lines.append(f"  status: {r.get('status')}")
    if r.get("value") is not None:
        lines.append(f"  value: {_one_line(r['value'])}")
    if r.get("views"):
        for k, v in r["views"].items():
            lines.append(f"  {k}: {v}")
    if r.get("partner"):
        lines.append(f"  partner: {r['partner'].get('user')}")
    if r.get("certificate_kind"):
        lines.append(f"  certificate: {r['certificate_kind']}")
    for e in r.get("equalities") or []:
        mark = "holds" if e["holds"] else "fails"
        lines.append(f"  {e['claim']}: {mark}")
    if r.get("diagnostic"):
        lines.append(f"  diagnostic: {_one_line(r['diagnostic'])}")
    return "\n".join(lines) + "\n"


def _one_line(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(_plain(v), ensure_ascii=False, sort_keys=True)

"""Input grammar: ring declarations, ideal bindings and commands.

Example script::

    ring QQ[x,y,z] grevlex mod (x^2 - y);
    ideal a = (x*y, x*z);
    colon a (x);
    link check (x*y) (x) (y);
    suite C3 seed=7 n=100;

Polynomials use ``+ - * ^`` with the usual precedence and rational
coefficients written ``p/q``.  The formatter below emits exactly this syntax,
so ``parse_polynomial(format_polynomial(f)) == f``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import ParseError
from .ideals import Ideal, RingContext
from .ring import Field, MonomialOrder, Polynomial, PolyRing

KEYWORDS = {
    "ring", "ideal", "mod", "lex", "grevlex", "QQ", "FF", "in",
    "gb", "colon", "intersect", "sum", "product", "saturate", "equal",
    "member", "radical", "link", "sset", "classify", "ass", "decompose",
    "unmixed", "grade", "regseq", "maxregseq", "syz", "suite",
}

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[;,()\[\]+\-*/^=])"
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class Command:
    name: str
    args: list
    options: Dict[str, int] = field(default_factory=dict)
    line: int = 0

    def echo(self, ctx: Optional[RingContext] = None) -> str:
        """Canonical, binding-free text of the command."""
        parts = [self.name.replace("-", " ")]
        for a in self.args:
            if isinstance(a, Ideal):
                parts.append(format_ideal(a))
            elif isinstance(a, Polynomial):
                parts.append(format_polynomial(a, ctx.names if ctx else None))
                if self.name in ("member", "radical"):
                    parts.append("in")
            elif isinstance(a, list):
                parts.append("(" + ", ".join(format_polynomial(p, ctx.names if ctx else None) for p in a) + ")")
            else:
                parts.append(str(a))
        parts.extend(f"{k}={v}" for k, v in sorted(self.options.items()))
        return " ".join(parts)


@dataclass
class SessionScript:
    ctx: Optional[RingContext]
    bindings: Dict[str, Ideal]
    commands: List[Command]


# command name -> argument kinds ("I" ideal, "P" polynomial, "L" polynomial list, "S" suite id)
COMMANDS = {
    "gb": "I",
    "colon": "II",
    "intersect": "II",
    "sum": "II",
    "product": "II",
    "saturate": "II",
    "equal": "II",
    "member": "P",
    "radical": "P",
    "link-check": "III",
    "link-geometric": "III",
    "link-find": "II",
    "sset": "II",
    "classify": "I",
    "ass": "I",
    "decompose": "I",
    "unmixed": "I",
    "grade": "I",
    "regseq": "L",
    "maxregseq": "LI",
    "syz": "L",
    "suite": "S",
}


class _Parser:
    def __init__(self, text: str, ctx: Optional[RingContext] = None):
        self.toks = tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.bindings: Dict[str, Ideal] = {}
        self.commands: List[Command] = []

    # -- token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg, tok=None, code=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col, code)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def accept(self, text) -> bool:
        if self.tok.text == text and self.tok.kind in ("sym", "ident"):
            self.i += 1
            return True
        return False

    def expect(self, text) -> Token:
        if self.tok.text != text:
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def expect_kind(self, kind, what) -> Token:
        if self.tok.kind != kind:
            self.error(f"expected {what}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    # -- script level
    def script(self) -> SessionScript:
        while self.tok.kind != "eof":
            self.statement()
        return SessionScript(self.ctx, self.bindings, self.commands)

    def statement(self):
        t = self.tok
        if t.text == "ring" and t.kind == "ident":
            if self.ctx is not None:
                self.error("ring already declared; one ring per script", code="E_RING_REDECLARED")
            self.advance()
            self.ctx = self.ring_decl()
        elif t.text == "ideal" and t.kind == "ident":
            self.require_ring()
            self.advance()
            name = self.expect_kind("ident", "ideal name")
            if name.text in KEYWORDS or name.text in self.ctx.names:
                self.error(f"{name.text!r} cannot name an ideal", name)
            self.expect("=")
            self.bindings[name.text] = self.ideal_arg()
        else:
            self.require_ring()
            self.commands.append(self.command())
        self.expect(";")

    def require_ring(self):
        if self.ctx is None:
            self.error("no ring declared", code="E_NO_RING")

    def ring_decl(self) -> RingContext:
        t = self.expect_kind("ident", "coefficient field")
        if t.text == "QQ":
            fld = Field(0)
        elif t.text == "FF":
            self.expect("(")
            p = int(self.expect_kind("int", "characteristic").text)
            self.expect(")")
            try:
                fld = Field(p)
            except Exception as exc:
                self.error(str(exc), t)
        else:
            self.error(f"unknown coefficient field {t.text!r}", t)
        self.expect("[")
        names = []
        while True:
            n = self.expect_kind("ident", "variable name")
            if n.text in KEYWORDS or n.text in names:
                self.error(f"invalid variable name {n.text!r}", n)
            names.append(n.text)
            if not self.accept(","):
                break
        self.expect("]")
        order = MonomialOrder("grevlex")
        if self.tok.text in ("lex", "grevlex"):
            order = MonomialOrder(self.advance().text)
        ctx = RingContext(PolyRing(len(names), fld, order), tuple(names))
        if self.accept("mod"):
            self.ctx = ctx
            mod_gens = self.ideal_literal()
            try:
                ctx = RingContext(ctx.ring, ctx.names, tuple(mod_gens))
            except Exception as exc:
                self.error(str(exc), t)
        return ctx

    def command(self) -> Command:
        t = self.expect_kind("ident", "command")
        name = t.text
        if name == "link":
            sub = self.expect_kind("ident", "link subcommand")
            if sub.text not in ("check", "find", "geometric"):
                self.error(f"unknown link subcommand {sub.text!r}", sub)
            name = f"link-{sub.text}"
        if name not in COMMANDS:
            self.error(f"unknown command {name!r}", t)
        args, options = [], {}
        for kind in COMMANDS[name]:
            if kind == "I":
                args.append(self.ideal_arg())
            elif kind == "P":
                args.append(self.poly())
                self.expect("in")
                args.append(self.ideal_arg())
            elif kind == "L":
                args.append(self.ideal_literal())
            elif kind == "S":
                args.append(self.expect_kind("ident", "suite id").text)
                while self.tok.kind == "ident":
                    k = self.advance().text
                    self.expect("=")
                    options[k] = int(self.expect_kind("int", "integer").text)
        return Command(name, args, options, t.line)

    # -- ideals and polynomials
    def ideal_arg(self) -> Ideal:
        if self.tok.kind == "ident":
            t = self.advance()
            if t.text not in self.bindings:
                self.error(f"unbound identifier {t.text!r}", t, code="E_UNBOUND")
            return self.bindings[t.text]
        return Ideal(self.ctx, self.ideal_literal())

    def ideal_literal(self) -> List[Polynomial]:
        self.expect("(")
        gens = []
        if not self.accept(")"):
            while True:
                gens.append(self.poly())
                if self.accept(")"):
                    break
                self.expect(",")
        return gens

    def poly(self) -> Polynomial:
        ring = self.ctx.ring
        if self.accept("-"):
            acc = -self.term()
        else:
            self.accept("+")
            acc = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "sym":
            op = self.advance().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        assert acc.ring == ring
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.accept("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        if self.accept("-"):
            return -self.factor()
        base = self.atom()
        if self.accept("^"):
            base = base ** int(self.expect_kind("int", "exponent").text)
        return base

    def atom(self) -> Polynomial:
        ring = self.ctx.ring
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.tok.text == "/":
                self.advance()
                den = self.expect_kind("int", "denominator")
                if ring.field.characteristic:
                    self.error("rational literal in prime-field context", t, code="E_FIELD_LITERAL")
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value = Fraction(int(t.text), int(den.text))
            return ring.constant(value)
        if t.kind == "ident":
            if t.text not in self.ctx.names:
                self.error(f"unknown variable {t.text!r}", t)
            self.advance()
            return ring.var(self.ctx.names.index(t.text))
        if self.accept("("):
            inner = self.poly()
            self.expect(")")
            return inner
        self.error(f"unexpected {t.text or 'end of input'!r} in polynomial")


def parse_script(text: str) -> SessionScript:
    return _Parser(text).script()


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    p = _Parser(text, ctx)
    f = p.poly()
    if p.tok.kind != "eof":
        p.error(f"trailing input {p.tok.text!r}")
    return f


def parse_ideal(text: str, ctx: RingContext) -> Ideal:
    p = _Parser(text, ctx)
    gens = p.ideal_literal()
    if p.tok.kind != "eof":
        p.error(f"trailing input {p.tok.text!r}")
    return Ideal(ctx, gens)


def parse_ring(text: str) -> RingContext:
    script = parse_script(text)
    if script.ctx is None:
        raise ParseError("no ring declared", code="E_NO_RING")
    return script.ctx


def _format_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m, names) -> str:
    parts = []
    for e, n in zip(m, names):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, names=None) -> str:
    from .ideals import default_names

    names = names or default_names(f.ring.nvars)
    if f.is_zero():
        return "0"
    out = []
    for c, m in f.terms:
        neg = f.ring.field.characteristic == 0 and c < 0
        mag = -c if neg else c
        mono = format_monomial(m, names)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def format_ideal(I: Ideal, view: str = "user") -> str:
    """``view`` is ``user`` (given generators), ``preimage`` (with modulus) or
    ``gb`` (reduced Gröbner basis)."""
    if view == "gb":
        gens = I.gb().generators
    elif view == "preimage":
        gens = I.gens
    else:
        gens = I.own_gens
    if not gens:
        return "(0)"
    return "(" + ", ".join(format_polynomial(g, I.ctx.names) for g in gens) + ")"


def format_ring(ctx: RingContext) -> str:
    text = f"ring {ctx.ring.field}[{','.join(ctx.names)}] {ctx.ring.order}"
    if ctx.modulus:
        text += " mod (" + ", ".join(format_polynomial(g, ctx.names) for g in ctx.modulus) + ")"
    return text + ";"

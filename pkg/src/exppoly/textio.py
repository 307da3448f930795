"""ASCII text format for scalars, polynomials, exponential polynomials.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('+'|'-') factor | atom ('^' uint)?
    atom   := uint | 'i' | 'z' | 'sqrt' '(' uint ')' | 'exp' '(' expr ')' | '(' expr ')'

Division is only allowed by nonzero constants, ``exp`` arguments must be
polynomials with zero constant term, and ``sqrt(R)`` needs ``R`` equal to
the radicand of the parsing context.  ``**`` is accepted as a synonym of
``^``.  The printer emits the same grammar, so parse/print round-trips.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError, RadicandMismatch
from .scalar import DEFAULT_CONTEXT, I, ONE, QScalar, ScalarContext
from .symcore import ExpPoly, Poly

__all__ = [
    "SourceSpan",
    "parse_expoly",
    "parse_poly",
    "parse_scalar",
    "print_expoly",
    "format_scalar",
    "format_poly",
    "format_equation",
]


class SourceSpan(NamedTuple):
    start: int
    end: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(\*\*|[-+*/^()]))")


class _Token(NamedTuple):
    kind: str  # "int", "name", "op", "end"
    text: str
    span: SourceSpan


def _tokenize(text: str) -> list[_Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character %r" % text[pos], SourceSpan(pos, pos + 1), text)
        start = m.start(m.lastindex)
        kind = ("int", "name", "op")[m.lastindex - 1]
        tok = m.group(m.lastindex)
        if tok == "**":
            tok = "^"
        out.append(_Token(kind, tok, SourceSpan(start, m.end())))
        pos = m.end()
    out.append(_Token("end", "", SourceSpan(n, n)))
    return out


class _Parser:
    def __init__(self, text: str, ctx: ScalarContext):
        self.text = text
        self.ctx = ctx
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.span, self.text)

    def accept(self, text) -> bool:
        if self.tok.kind in ("op", "name") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            raise self.error("expected %r, found %r" % (text, self.tok.text or "end of input"))

    def parse(self) -> ExpPoly:
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error("unexpected %r" % self.tok.text)
        return value

    def expr(self) -> ExpPoly:
        if self.accept("-"):
            value = -self.term()
        else:
            self.accept("+")
            value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> ExpPoly:
        value = self.factor()
        while True:
            if self.accept("*"):
                value = value * self.factor()
            elif self.tok.text == "/" and self.tok.kind == "op":
                tok = self.tok
                self.i += 1
                divisor = self.factor()
                if not divisor.is_constant() or divisor.is_zero():
                    raise self.error("division only by nonzero constants", tok)
                value = value * (ONE / divisor.as_poly().coeff(0))
            else:
                return value

    def factor(self) -> ExpPoly:
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        base = self.atom()
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "int":
                raise self.error("exponent after '^' must be a non-negative integer")
            self.i += 1
            base = base ** int(tok.text)
        return base

    def atom(self) -> ExpPoly:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return ExpPoly.constant(QScalar(int(tok.text), radicand=self.ctx.radicand))
        if tok.kind == "name":
            self.i += 1
            name = tok.text
            if name == "z":
                return ExpPoly.from_poly(Poly.monomial(1))
            if name == "i":
                return ExpPoly.constant(I)
            if name == "sqrt":
                self.expect("(")
                arg = self.tok
                if arg.kind != "int":
                    raise self.error("sqrt takes an integer literal")
                self.i += 1
                self.expect(")")
                if int(arg.text) != self.ctx.radicand:
                    raise RadicandMismatch(
                        "sqrt(%s) used but the context radicand is %d" % (arg.text, self.ctx.radicand)
                    )
                return ExpPoly.constant(self.ctx.sqrt())
            if name == "exp":
                self.expect("(")
                start = self.tok
                arg = self.expr()
                self.expect(")")
                if not arg.is_polynomial():
                    raise self.error("exp() argument must be a polynomial in z", start)
                p = arg.as_poly()
                if p.coeff(0):
                    raise self.error("exp() argument must have zero constant term", start)
                return ExpPoly.exp(p)
            raise self.error("unknown name %r" % name, tok)
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        raise self.error("unexpected %r" % (tok.text or "end of input"))


def parse_expoly(text: str, ctx: ScalarContext = DEFAULT_CONTEXT) -> ExpPoly:
    """Parse ``text`` into a canonical :class:`ExpPoly`.

    >>> print(parse_expoly("(exp(z)+1)*(exp(z)-1)"))
    -1 + exp(2*z)
    """
    return _Parser(text, ctx).parse()


def parse_poly(text: str, ctx: ScalarContext = DEFAULT_CONTEXT) -> Poly:
    f = parse_expoly(text, ctx)
    if not f.is_polynomial():
        raise ParseError("expected a polynomial, got %s" % f)
    return f.as_poly()


def parse_scalar(text: str, ctx: ScalarContext = DEFAULT_CONTEXT) -> QScalar:
    f = parse_expoly(text, ctx)
    if not f.is_constant():
        raise ParseError("expected a constant, got %s" % f)
    return f.as_poly().coeff(0)


# -- printing ----------------------------------------------------------------

def _frac_text(x) -> str:
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _scalar_parts(c: QScalar) -> list[str]:
    parts = []
    r = c.radicand
    for value, unit in ((c.a_re, ""), (c.a_im, "i"), (c.b_re, "sqrt(%d)" % r),
                        (c.b_im, "sqrt(%d)*i" % r)):
        if not value:
            continue
        if not unit:
            parts.append(_frac_text(value))
        elif value == 1:
            parts.append(unit)
        elif value == -1:
            parts.append("-" + unit)
        else:
            parts.append(_frac_text(value) + "*" + unit)
    return parts


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def format_scalar(c: QScalar) -> str:
    return _join(_scalar_parts(c))


def _coef_prefix(c: QScalar) -> str:
    """Text placed in front of ``*rest``; '' for 1 and '-' for -1."""
    if c == 1:
        return ""
    if c == -1:
        return "-"
    parts = _scalar_parts(c)
    if len(parts) == 1:
        return parts[0] + "*"
    return "(" + _join(parts) + ")*"


def _monomial(c: QScalar, k: int) -> str:
    if k == 0:
        parts = _scalar_parts(c)
        return parts[0] if len(parts) == 1 else "(" + _join(parts) + ")"
    zk = "z" if k == 1 else "z^%d" % k
    return _coef_prefix(c) + zk


def _poly_parts(p: Poly, descending=False) -> list[str]:
    ks = range(len(p.coeffs))
    if descending:
        ks = reversed(ks)
    return [_monomial(p.coeffs[k], k) for k in ks if p.coeffs[k]]


def format_poly(p: Poly, descending: bool = False) -> str:
    return _join(_poly_parts(p, descending))


def print_expoly(f: ExpPoly) -> str:
    """Canonical text for ``f``: polynomial part first, then bands in order.

    >>> print(print_expoly(parse_expoly("6*exp(2*z) + 1 + 4*exp(z)")))
    1 + 4*exp(z) + 6*exp(2*z)
    """
    parts: list[str] = []
    for m, e in f.terms:
        if e.is_zero():
            parts.extend(_poly_parts(m))
            continue
        ex = "exp(%s)" % format_poly(e, descending=True)
        if len(m.coeffs) == 1 or sum(1 for c in m.coeffs if c) == 1:
            k = len(m.coeffs) - 1
            c = m.coeffs[k]
            zk = "" if k == 0 else ("z*" if k == 1 else "z^%d*" % k)
            parts.append(_coef_prefix(c) + zk + ex)
        else:
            parts.append("(" + format_poly(m) + ")*" + ex)
    return _join(parts)


def format_equation(coefficients, var: str = "f") -> str:
    """Render ``a_n f^(n) + ... + a_0 f = 0`` from highest order down."""
    n = len(coefficients) - 1
    parts = []
    for idx, a in enumerate(coefficients):
        k = n - idx
        if a.is_zero():
            continue
        deriv = var + ("'" * k if k <= 3 else "^(%d)" % k)
        if a == 1:
            parts.append(deriv)
        elif a == -1:
            parts.append("-" + deriv)
        else:
            text = print_expoly(a)
            if len(a) == 1 and len(a.terms[0].multiplier.coeffs) <= 1 and " " not in text:
                parts.append(text + "*" + deriv)
            else:
                parts.append("(" + text + ")*" + deriv)
    return _join(parts) + " = 0"

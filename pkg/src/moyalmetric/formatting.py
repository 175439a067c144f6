"""Canonical text and LaTeX renderers for symbols, operators and series.

The text style is the inverse of the parser: rendering any symbol and parsing
the result reproduces the symbol exactly.  Terms are emitted in the canonical
order (g, x, p, hbar exponents, lexicographically; exponential parts sorted
by their coefficient triples, trivial part first).
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import GaussianRational, HbarScalar
from .symbols import ExpQuadratic, MonoKey, PhaseSymbol

_VAR_ORDER = (("g", 3), ("x", 0), ("p", 1), ("hbar", 2))


def _fraction_text(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _imag_text(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{_fraction_text(q)}*i"


def _coeff_pieces(c: GaussianRational) -> tuple[bool, str]:
    """(negated, text of |coeff|), with mixed complex values parenthesized."""
    if c.im == 0:
        neg = c.re < 0
        return neg, _fraction_text(-c.re if neg else c.re)
    if c.re == 0:
        neg = c.im < 0
        return neg, _imag_text(-c.im if neg else c.im)
    im = _imag_text(c.im)
    joiner = "" if im.startswith("-") else "+"
    return False, f"({_fraction_text(c.re)}{joiner}{im})"


def _monomial_text(key: MonoKey, coeff: GaussianRational) -> tuple[bool, str]:
    neg, ctext = _coeff_pieces(coeff)
    factors = []
    for name, idx in _VAR_ORDER:
        deg = key[idx]
        if deg == 0:
            continue
        factors.append(name if deg == 1 else f"{name}^{deg}")
    if not factors:
        return neg, ctext
    if ctext == "1":
        return neg, "*".join(factors)
    return neg, "*".join([ctext] + factors)


def _poly_text(poly: dict[MonoKey, GaussianRational]) -> str:
    pieces = []
    for key in sorted(poly, key=lambda k: (k[3], k[0], k[1], k[2])):
        pieces.append(_monomial_text(key, poly[key]))
    return _join_signed(pieces)


def _join_signed(pieces: list[tuple[bool, str]]) -> str:
    out = []
    for idx, (neg, body) in enumerate(pieces):
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _quadratic_poly(eq: ExpQuadratic) -> dict[MonoKey, GaussianRational]:
    poly: dict[MonoKey, GaussianRational] = {}
    for scalar, (xd, pd) in ((eq.r, (0, 2)), (eq.s, (1, 1)), (eq.t, (2, 0))):
        for h, c in scalar.terms:
            poly[(xd, pd, h, 0)] = c
    return poly


def _exp_text(eq: ExpQuadratic) -> str:
    return f"exp({_poly_text(_quadratic_poly(eq))})"


def format_text(sym: PhaseSymbol) -> str:
    parts = sym.parts
    if not parts:
        return "0"
    pieces: list[tuple[bool, str]] = []
    for eq in sorted(parts, key=ExpQuadratic.sort_key):
        poly = parts[eq]
        if eq.is_trivial:
            for key in sorted(poly, key=lambda k: (k[3], k[0], k[1], k[2])):
                pieces.append(_monomial_text(key, poly[key]))
            continue
        etext = _exp_text(eq)
        if len(poly) == 1:
            key, coeff = next(iter(poly.items()))
            neg, body = _monomial_text(key, coeff)
            pieces.append((neg, etext if body == "1" else f"{body}*{etext}"))
        else:
            pieces.append((False, f"({_poly_text(poly)})*{etext}"))
    return _join_signed(pieces)


# -- LaTeX ------------------------------------------------------------------

_LATEX_VARS = (("g", 3), ("x", 0), ("p", 1), ("\\hbar", 2))


def _latex_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_coeff(c: GaussianRational) -> tuple[bool, str]:
    if c.im == 0:
        neg = c.re < 0
        return neg, _latex_fraction(-c.re if neg else c.re)
    if c.re == 0:
        neg = c.im < 0
        mag = -c.im if neg else c.im
        return neg, "i" if mag == 1 else f"{_latex_fraction(mag)}\\,i"
    re = _latex_fraction(c.re)
    neg_im = c.im < 0
    mag = -c.im if neg_im else c.im
    im = "i" if mag == 1 else f"{_latex_fraction(mag)}\\,i"
    return False, f"\\left({re} {'-' if neg_im else '+'} {im}\\right)"


def _latex_monomial(key: MonoKey, coeff: GaussianRational) -> tuple[bool, str]:
    neg, ctext = _latex_coeff(coeff)
    factors = []
    for name, idx in _LATEX_VARS:
        deg = key[idx]
        if deg == 0:
            continue
        factors.append(name if deg == 1 else f"{name}^{{{deg}}}")
    if not factors:
        return neg, ctext
    body = "\\,".join(factors)
    if ctext == "1":
        return neg, body
    return neg, f"{ctext}\\,{body}"


def _latex_poly(poly: dict[MonoKey, GaussianRational]) -> str:
    pieces = [_latex_monomial(key, poly[key])
              for key in sorted(poly, key=lambda k: (k[3], k[0], k[1], k[2]))]
    return _join_signed(pieces)


def format_latex(sym: PhaseSymbol) -> str:
    parts = sym.parts
    if not parts:
        return "0"
    pieces: list[tuple[bool, str]] = []
    for eq in sorted(parts, key=ExpQuadratic.sort_key):
        poly = parts[eq]
        if eq.is_trivial:
            for key in sorted(poly, key=lambda k: (k[3], k[0], k[1], k[2])):
                pieces.append(_latex_monomial(key, poly[key]))
            continue
        etext = f"e^{{{_latex_poly(_quadratic_poly(eq))}}}"
        if len(poly) == 1:
            key, coeff = next(iter(poly.items()))
            neg, body = _latex_monomial(key, coeff)
            pieces.append((neg, etext if body == "1" else f"{body}\\,{etext}"))
        else:
            pieces.append((False, f"\\left({_latex_poly(poly)}\\right)\\,{etext}"))
    return _join_signed(pieces)


def format_expression(sym: PhaseSymbol, style: str = "text") -> str:
    """Render a symbol in the requested style: text, latex or json."""
    if style == "text":
        return format_text(sym)
    if style == "latex":
        return format_latex(sym)
    if style == "json":
        from .serialize import dumps, symbol_to_obj

        return dumps(symbol_to_obj(sym))
    raise ValueError(f"unknown style {style!r}")


def format_hbar_scalar(scalar: HbarScalar) -> str:
    poly = {(0, 0, h, 0): c for h, c in scalar.terms}
    return _poly_text(poly) if poly else "0"

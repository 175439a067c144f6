"""Phase-space symbols and the standard-ordered star calculus.

A symbol is a finite sum of Laurent monomials in (x, p, hbar, g), each part
optionally weighted by an exponential factor exp(r*p^2 + s*p*x + t*x^2) whose
coefficients are Laurent scalars in hbar.  Powers of x and g are kept
non-negative; powers of p and hbar may be any integer.

The star product realizes the ordering in which all momentum factors stand to
the left of all position factors, i.e. the one-sided series

    A * B = sum_k (i*hbar)^k / k! * (d/dx)^k A * (d/dp)^k B.

Hermitian conjugation on this level is complex conjugation followed by the
twist exp(+i*hbar*d_x*d_p); a symbol is hermitian exactly when its conjugate
equals its exp(-i*hbar*d_x*d_p) twist.  Both series are summed only when a
structural termination condition holds, otherwise the operation raises.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import NonTerminatingStar, NonTerminatingTwist
from .rationals import HS_ZERO, GaussianRational, HbarScalar, I, ONE as C_ONE

# Monomial exponents, in storage order: (xdeg, pdeg, hdeg, gdeg).
MonoKey = tuple[int, int, int, int]

_CANON = (3, 0, 1, 2)  # canonical ordering permutation: (gdeg, xdeg, pdeg, hdeg)


def _canon_key(key: MonoKey):
    return tuple(key[i] for i in _CANON)


class ExpQuadratic(NamedTuple):
    """Exponent data of a factor exp(r*p^2 + s*p*x + t*x^2)."""

    r: HbarScalar
    s: HbarScalar
    t: HbarScalar

    @property
    def is_trivial(self) -> bool:
        return self.r.is_zero and self.s.is_zero and self.t.is_zero

    def conjugate(self) -> ExpQuadratic:
        return ExpQuadratic(self.r.conjugate(), self.s.conjugate(), self.t.conjugate())

    def combined(self, other: ExpQuadratic) -> ExpQuadratic:
        return ExpQuadratic(self.r + other.r, self.s + other.s, self.t + other.t)

    def dx_poly(self) -> dict[MonoKey, GaussianRational]:
        """Chain-rule factor of d/dx: s*p + 2*t*x."""
        out: dict[MonoKey, GaussianRational] = {}
        for h, c in self.s.terms:
            out[(0, 1, h, 0)] = c
        for h, c in self.t.terms:
            out[(1, 0, h, 0)] = c * 2
        return out

    def dp_poly(self) -> dict[MonoKey, GaussianRational]:
        """Chain-rule factor of d/dp: 2*r*p + s*x."""
        out: dict[MonoKey, GaussianRational] = {}
        for h, c in self.r.terms:
            out[(0, 1, h, 0)] = c * 2
        for h, c in self.s.terms:
            out[(1, 0, h, 0)] = c
        return out

    def sort_key(self):
        return (self.r.sort_key(), self.s.sort_key(), self.t.sort_key())


TRIVIAL_EXP = ExpQuadratic(HS_ZERO, HS_ZERO, HS_ZERO)


class PhaseSymbol:
    """Canonical finite sum of exponential parts times Laurent monomials."""

    __slots__ = ("_parts",)

    def __init__(self, parts: dict[ExpQuadratic, dict[MonoKey, GaussianRational]]):
        canon: dict[ExpQuadratic, dict[MonoKey, GaussianRational]] = {}
        for eq, poly in parts.items():
            clean = {}
            for key, coeff in poly.items():
                if not coeff:
                    continue
                xdeg, pdeg, hdeg, gdeg = key
                if xdeg < 0:
                    raise ValueError("negative power of x is not representable")
                if gdeg < 0:
                    raise ValueError("negative power of g is not representable")
                clean[key] = coeff
            if clean:
                canon[eq] = clean
        self._parts = canon

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> PhaseSymbol:
        return cls({})

    @classmethod
    def monomial(cls, coeff=1, x: int = 0, p: int = 0, hbar: int = 0, g: int = 0) -> PhaseSymbol:
        return cls({TRIVIAL_EXP: {(x, p, hbar, g): GaussianRational.coerce(coeff)}})

    @classmethod
    def exponential(cls, quad: ExpQuadratic) -> PhaseSymbol:
        return cls({quad: {(0, 0, 0, 0): C_ONE}})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = {eq: dict(poly) for eq, poly in self._parts.items()}
        for eq, poly in o._parts.items():
            dst = acc.setdefault(eq, {})
            for key, coeff in poly.items():
                dst[key] = dst.get(key, GaussianRational()) + coeff
        return PhaseSymbol(acc)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return PhaseSymbol({eq: {k: -c for k, c in poly.items()}
                            for eq, poly in self._parts.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[ExpQuadratic, dict[MonoKey, GaussianRational]] = {}
        for eq1, poly1 in self._parts.items():
            for eq2, poly2 in o._parts.items():
                eq = eq1.combined(eq2)
                dst = acc.setdefault(eq, {})
                for k1, c1 in poly1.items():
                    for k2, c2 in poly2.items():
                        key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])
                        dst[key] = dst.get(key, GaussianRational()) + c1 * c2
        return PhaseSymbol(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            inv = self._invert_monomial()
            return inv ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _invert_monomial(self) -> PhaseSymbol:
        if len(self._parts) != 1:
            raise ValueError("only a single monomial can be inverted")
        eq, poly = next(iter(self._parts.items()))
        if not eq.is_trivial or len(poly) != 1:
            raise ValueError("only a single monomial can be inverted")
        (xdeg, pdeg, hdeg, gdeg), coeff = next(iter(poly.items()))
        return PhaseSymbol({TRIVIAL_EXP: {(-xdeg, -pdeg, -hdeg, -gdeg): C_ONE / coeff}})

    @staticmethod
    def _coerce(value) -> PhaseSymbol | None:
        if isinstance(value, PhaseSymbol):
            return value
        if isinstance(value, (int, Fraction, GaussianRational)):
            return PhaseSymbol.monomial(GaussianRational.coerce(value))
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._parts == o._parts

    def __hash__(self):
        return hash(frozenset((eq, frozenset(poly.items()))
                              for eq, poly in self._parts.items()))

    def __bool__(self):
        return bool(self._parts)

    # -- inspection ---------------------------------------------------------

    @property
    def parts(self) -> dict[ExpQuadratic, dict[MonoKey, GaussianRational]]:
        return {eq: dict(poly) for eq, poly in self._parts.items()}

    def iter_terms(self) -> Iterator[tuple[ExpQuadratic, MonoKey, GaussianRational]]:
        """Deterministic canonical iteration order."""
        for eq in sorted(self._parts, key=ExpQuadratic.sort_key):
            poly = self._parts[eq]
            for key in sorted(poly, key=_canon_key):
                yield eq, key, poly[key]

    def coefficient(self, x=0, p=0, hbar=0, g=0, quad: ExpQuadratic = TRIVIAL_EXP) -> GaussianRational:
        return self._parts.get(quad, {}).get((x, p, hbar, g), GaussianRational())

    @property
    def is_polynomial(self) -> bool:
        """True when no exponential factors occur (Laurent in p, hbar)."""
        return all(eq.is_trivial for eq in self._parts)

    def max_xdeg(self) -> int:
        return max((k[0] for poly in self._parts.values() for k in poly), default=0)

    def min_pdeg(self) -> int:
        return min((k[1] for poly in self._parts.values() for k in poly), default=0)

    def min_hdeg(self) -> int:
        return min((k[2] for poly in self._parts.values() for k in poly), default=0)

    def max_gdeg(self) -> int:
        return max((k[3] for poly in self._parts.values() for k in poly), default=0)

    def g_slices(self) -> dict[int, PhaseSymbol]:
        """Split by g-power, with the power of g stripped from each slice."""
        acc: dict[int, dict[ExpQuadratic, dict[MonoKey, GaussianRational]]] = {}
        for eq, poly in self._parts.items():
            for (xd, pd, hd, gd), coeff in poly.items():
                acc.setdefault(gd, {}).setdefault(eq, {})[(xd, pd, hd, 0)] = coeff
        return {g: PhaseSymbol(parts) for g, parts in acc.items()}

    # -- calculus -----------------------------------------------------------

    def diff(self, var: str, order: int = 1) -> PhaseSymbol:
        """Exact partial derivative in x or p, applied `order` times."""
        if var not in ("x", "p"):
            raise ValueError("var must be 'x' or 'p'")
        if order < 0:
            raise ValueError("order must be non-negative")
        cur = self
        for _ in range(order):
            cur = cur._diff_once(var)
        return cur

    def _diff_once(self, var: str) -> PhaseSymbol:
        idx = 0 if var == "x" else 1
        acc: dict[ExpQuadratic, dict[MonoKey, GaussianRational]] = {}
        for eq, poly in self._parts.items():
            dst = acc.setdefault(eq, {})
            for key, coeff in poly.items():
                deg = key[idx]
                if deg:
                    newkey = list(key)
                    newkey[idx] = deg - 1
                    nk = tuple(newkey)
                    dst[nk] = dst.get(nk, GaussianRational()) + coeff * deg
            factor = eq.dx_poly() if var == "x" else eq.dp_poly()
            for fk, fc in factor.items():
                for key, coeff in poly.items():
                    nk = (key[0] + fk[0], key[1] + fk[1], key[2] + fk[2], key[3] + fk[3])
                    dst[nk] = dst.get(nk, GaussianRational()) + coeff * fc
        return PhaseSymbol(acc)

    def conjugate(self) -> PhaseSymbol:
        """Complex conjugation; x, p, hbar and g are treated as real."""
        return PhaseSymbol({eq.conjugate(): {k: c.conjugate() for k, c in poly.items()}
                            for eq, poly in self._parts.items()})

    def _x_series_terminates(self) -> bool:
        # repeated d/dx dies on each part: nothing regenerates x
        return all(eq.s.is_zero and eq.t.is_zero for eq in self._parts)

    def _p_series_terminates(self) -> bool:
        # repeated d/dp dies: no p in exponents, no negative p powers
        return (all(eq.r.is_zero and eq.s.is_zero for eq in self._parts)
                and self.min_pdeg() >= 0)

    def star(self, other) -> PhaseSymbol:
        """Standard-ordered star product.

        Terminates when either every exponential factor on the left is free
        of x (s = t = 0), or the right factor has no p in exponents and no
        negative p powers; otherwise raises NonTerminatingStar.
        """
        o = self._coerce(other)
        if o is None:
            raise TypeError("star product needs a PhaseSymbol operand")
        if not (self._x_series_terminates() or o._p_series_terminates()):
            raise NonTerminatingStar(
                "star series does not terminate: left factor has x-dependent "
                "exponentials and right factor has p-dependent exponentials "
                "or negative p powers")
        total = PhaseSymbol.zero()
        left, right = self, o
        k = 0
        while left and right:
            coeff = PhaseSymbol.monomial(I ** k * Fraction(1, math.factorial(k)), hbar=k)
            total = total + left * right * coeff
            left = left.diff("x")
            right = right.diff("p")
            k += 1
        return total

    def exp_twist(self, sign: int) -> PhaseSymbol:
        """Apply exp(sign * i * hbar * d_x d_p) as an exact finite series."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not (self._x_series_terminates() or self._p_series_terminates()):
            raise NonTerminatingTwist(
                "twist series does not terminate for this symbol")
        total = PhaseSymbol.zero()
        cur = self
        k = 0
        while cur:
            coeff = PhaseSymbol.monomial((I * sign) ** k * Fraction(1, math.factorial(k)), hbar=k)
            total = total + cur * coeff
            cur = cur.diff("x").diff("p")
            k += 1
        return total

    def dagger(self) -> PhaseSymbol:
        """Symbol of the hermitian-conjugate operator."""
        return self.conjugate().exp_twist(+1)

    def is_hermitian(self) -> bool:
        """Whether the symbol's operator is hermitian."""
        return self.conjugate() == self.exp_twist(-1)

    # -- evaluation -----------------------------------------------------------

    def evaluate_exact(self, x, p, hbar, g) -> GaussianRational:
        """Evaluate at exact rational points; defined for polynomial symbols."""
        if not self.is_polynomial:
            raise ValueError("exact evaluation requires a polynomial symbol")
        xv, pv = GaussianRational.coerce(x), GaussianRational.coerce(p)
        hv, gv = GaussianRational.coerce(hbar), GaussianRational.coerce(g)
        total = GaussianRational()
        for poly in self._parts.values():
            for (xd, pd, hd, gd), coeff in poly.items():
                total = total + coeff * xv ** xd * pv ** pd * hv ** hd * gv ** gd
        return total

    def evaluate(self, x: complex, p: complex, hbar: complex, g: complex = 1.0) -> complex:
        """Floating-point evaluation, including exponential factors."""
        total = 0j
        for eq, poly in self._parts.items():
            weight = 1.0 + 0j
            if not eq.is_trivial:
                arg = (eq.r.evaluate(hbar) * p * p + eq.s.evaluate(hbar) * p * x
                       + eq.t.evaluate(hbar) * x * x)
                weight = cmath.exp(arg)
            for (xd, pd, hd, gd), coeff in poly.items():
                total += weight * coeff.to_complex() * x ** xd * p ** pd * hbar ** hd * g ** gd
        return total

    def __str__(self):
        from .formatting import format_expression

        return format_expression(self, "text")

    def __repr__(self):
        return f"PhaseSymbol({self})"


ZERO = PhaseSymbol.zero()
ONE = PhaseSymbol.monomial(1)
X = PhaseSymbol.monomial(1, x=1)
P = PhaseSymbol.monomial(1, p=1)
HBAR = PhaseSymbol.monomial(1, hbar=1)
G = PhaseSymbol.monomial(1, g=1)

# exp(2*i*x*p/hbar): the x-constant kernel of every p^2 + g*V(x) metric equation
KERNEL_EXP = ExpQuadratic(HS_ZERO, HbarScalar.hbar_power(I * 2, -1), HS_ZERO)


def star(a: PhaseSymbol, b: PhaseSymbol) -> PhaseSymbol:
    return a.star(b)


def dagger(a: PhaseSymbol) -> PhaseSymbol:
    return a.dagger()


def is_hermitian(a: PhaseSymbol) -> bool:
    return a.is_hermitian()

"""Exact coefficient arithmetic: Gaussian rationals and Laurent scalars in hbar.

Every coefficient in the symbol calculus lives in Q(i), represented by a pair
of arbitrary-precision `Fraction`s.  Exponents of Gaussian factors need one
more layer: scalars that are Laurent polynomials in hbar over Q(i), e.g. the
2i/hbar appearing in the kernel exponential.
"""

from __future__ import annotations

import math
from fractions import Fraction


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {type(value).__name__}")


def sqrt_fraction(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


class GaussianRational:
    """Complex number with exact rational real and imaginary parts.

    Values are immutable; both parts are `Fraction`s, so reduction to lowest
    terms with positive denominator is automatic and equality is structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @staticmethod
    def coerce(value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot interpret {type(value).__name__} as a Gaussian rational")

    @staticmethod
    def _try_coerce(value) -> GaussianRational | None:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = GaussianRational._try_coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def sqrt(self) -> GaussianRational | None:
        """A square root within Q(i), or None when no exact one exists."""
        a, b = self.re, self.im
        if b == 0:
            if a >= 0:
                s = sqrt_fraction(a)
                return None if s is None else GaussianRational(s)
            s = sqrt_fraction(-a)
            return None if s is None else GaussianRational(0, s)
        m = sqrt_fraction(a * a + b * b)
        if m is None:
            return None
        u = sqrt_fraction((a + m) / 2)
        if u is None or u == 0:
            return None
        cand = GaussianRational(u, b / (2 * u))
        return cand if cand * cand == self else None

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            if self.im == 1:
                imtxt = "i"
            elif self.im == -1:
                imtxt = "-i"
            else:
                imtxt = f"{self.im}*i"
            if parts and not imtxt.startswith("-"):
                imtxt = "+" + imtxt
            parts.append(imtxt)
        return "".join(parts)

    __repr__ = __str__


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


class HbarScalar:
    """Laurent polynomial in hbar with Gaussian-rational coefficients.

    Stored as a sorted tuple of (hbar_power, coefficient) pairs with no zero
    coefficients, so instances are hashable and compare structurally.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, GaussianRational] = {}
        for h, c in items:
            c = GaussianRational.coerce(c)
            if not c:
                continue
            if not isinstance(h, int):
                raise TypeError("hbar power must be an integer")
            prev = acc.get(h)
            acc[h] = c if prev is None else prev + c
        self._terms = tuple(sorted((h, c) for h, c in acc.items() if c))

    @staticmethod
    def constant(value) -> HbarScalar:
        return HbarScalar([(0, GaussianRational.coerce(value))])

    @staticmethod
    def hbar_power(coeff, power: int) -> HbarScalar:
        return HbarScalar([(power, GaussianRational.coerce(coeff))])

    @staticmethod
    def coerce(value) -> HbarScalar:
        if isinstance(value, HbarScalar):
            return value
        return HbarScalar.constant(GaussianRational.coerce(value))

    @property
    def terms(self) -> tuple:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        o = HbarScalar.coerce(other)
        return HbarScalar(list(self._terms) + list(o._terms))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-HbarScalar.coerce(other))

    def __rsub__(self, other):
        return HbarScalar.coerce(other) - self

    def __neg__(self):
        return HbarScalar([(h, -c) for h, c in self._terms])

    def __mul__(self, other):
        o = HbarScalar.coerce(other)
        out = []
        for h1, c1 in self._terms:
            for h2, c2 in o._terms:
                out.append((h1 + h2, c1 * c2))
        return HbarScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = HbarScalar.coerce(other)
        if len(o._terms) != 1:
            raise ValueError("can only divide by a single-term hbar scalar")
        h, c = o._terms[0]
        return HbarScalar([(hd - h, cd / c) for hd, cd in self._terms])

    def __eq__(self, other):
        if not isinstance(other, HbarScalar):
            try:
                other = HbarScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def shifted(self, k: int) -> HbarScalar:
        """Multiply by hbar**k."""
        return HbarScalar([(h + k, c) for h, c in self._terms])

    def conjugate(self) -> HbarScalar:
        return HbarScalar([(h, c.conjugate()) for h, c in self._terms])

    def sqrt(self) -> HbarScalar | None:
        """Exact square root in the Laurent ring, or None if not a square."""
        if not self._terms:
            return HbarScalar()
        lo, hi = self._terms[0][0], self._terms[-1][0]
        if lo % 2 or hi % 2:
            return None
        coeffs = dict(self._terms)
        half_lo, half_hi = lo // 2, hi // 2
        lead = coeffs[lo].sqrt()
        if lead is None:
            return None
        root: dict[int, GaussianRational] = {half_lo: lead}
        for m in range(half_lo + 1, half_hi + 1):
            acc = coeffs.get(m + half_lo, GaussianRational())
            for a in range(half_lo + 1, m):
                b = m + half_lo - a
                if a > b:
                    break
                prod = root.get(a, GaussianRational()) * root.get(b, GaussianRational())
                acc = acc - (prod if a == b else prod * 2)
            root[m] = acc / (lead * 2)
        cand = HbarScalar(root)
        return cand if cand * cand == self else None

    def sort_key(self):
        return tuple((h, c.re, c.im) for h, c in self._terms)

    def evaluate(self, hval: complex) -> complex:
        return sum((c.to_complex() * hval ** h for h, c in self._terms), 0j)

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for h, c in self._terms:
            piece = f"({c})"
            if h:
                piece += f"*hbar^{h}"
            chunks.append(piece)
        return " + ".join(chunks)

    __repr__ = __str__


HS_ZERO = HbarScalar()

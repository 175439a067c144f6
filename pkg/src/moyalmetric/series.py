"""Order-by-order metric series for Hamiltonians p^2 + g*V(x).

Writing Theta = sum_n g^n Theta_n with Theta_0 = 1, the metric equation
splits into one linear ODE in x per order:

    -2*i*hbar*p * Theta_n' + hbar^2 * Theta_n'' = -L_V[Theta_{n-1}],

where L_V is the metric operator of V alone.  The right-hand side is a
polynomial in x with Laurent coefficients in p and hbar, and the particular
solution is fixed by dropping both homogeneous branches (the x-constant
function of p and the exp(2*i*p*x/hbar) kernel) at every order n >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import UnsupportedKinetic
from .pde import derive_metric_operator
from .rationals import GaussianRational
from .symbols import PhaseSymbol


@dataclass(frozen=True, eq=True)
class MetricSeries:
    """Truncated power series in g with g-free PhaseSymbol coefficients."""

    orders: Mapping[int, PhaseSymbol] = field(default_factory=dict)
    max_order: int = 0

    def __post_init__(self):
        clean = {}
        for n, sym in self.orders.items():
            if not isinstance(n, int) or n < 0:
                raise ValueError("series orders must be non-negative integers")
            if n > self.max_order:
                raise ValueError(f"order {n} exceeds max_order {self.max_order}")
            if sym.max_gdeg() > 0:
                raise ValueError("series entries must not carry powers of g")
            if sym:
                clean[n] = sym
        object.__setattr__(self, "orders", clean)

    def order(self, n: int) -> PhaseSymbol:
        return self.orders.get(n, PhaseSymbol.zero())

    def assemble(self) -> PhaseSymbol:
        """Reattach g powers and sum into a single symbol."""
        total = PhaseSymbol.zero()
        for n, sym in self.orders.items():
            total = total + sym * PhaseSymbol.monomial(1, g=n)
        return total

    @classmethod
    def from_symbol(cls, sym: PhaseSymbol, max_order: int) -> MetricSeries:
        slices = sym.g_slices()
        if any(n > max_order for n in slices):
            raise ValueError("symbol carries g powers beyond max_order")
        return cls(slices, max_order)

    def __eq__(self, other):
        if not isinstance(other, MetricSeries):
            return NotImplemented
        return self.max_order == other.max_order and dict(self.orders) == dict(other.orders)


def solve_kinetic_ode(rhs: PhaseSymbol) -> PhaseSymbol:
    """Particular solution of -2*i*hbar*p*f' + hbar^2*f'' = rhs (' = d/dx).

    rhs must be polynomial in x with Laurent (p, hbar) coefficients.  The
    unique polynomial solution of x-degree deg(rhs)+1 with zero x-constant
    term is produced by the descending recursion

        c_{j+1} = (hbar^2*(j+2)*(j+1)*c_{j+2} - rhs_j) / (2*i*hbar*p*(j+1)).
    """
    if not rhs.is_polynomial:
        raise ValueError("kinetic solve needs a polynomial right-hand side")
    if not rhs:
        return PhaseSymbol.zero()

    by_xdeg: dict[int, PhaseSymbol] = {}
    for eq, (xd, pd, hd, gd), coeff in rhs.iter_terms():
        term = PhaseSymbol.monomial(coeff, p=pd, hbar=hd, g=gd)
        by_xdeg[xd] = by_xdeg.get(xd, PhaseSymbol.zero()) + term

    top = max(by_xdeg)
    coeffs: dict[int, PhaseSymbol] = {}
    for j in range(top, -1, -1):
        carry = coeffs.get(j + 2, PhaseSymbol.zero())
        numerator = (carry * PhaseSymbol.monomial((j + 2) * (j + 1), hbar=2)
                     - by_xdeg.get(j, PhaseSymbol.zero()))
        inverse = PhaseSymbol.monomial(
            GaussianRational(0, Fraction(-1, 2 * (j + 1))), p=-1, hbar=-1)
        coeffs[j + 1] = numerator * inverse

    solution = PhaseSymbol.zero()
    for j, cj in coeffs.items():
        solution = solution + cj * PhaseSymbol.monomial(1, x=j)
    return solution


def _check_potential(potential: PhaseSymbol) -> None:
    if not potential.is_polynomial:
        raise UnsupportedKinetic("potential must be a polynomial in x")
    for _, (xd, pd, hd, gd), _ in potential.iter_terms():
        if pd != 0:
            raise UnsupportedKinetic("potential must not depend on p")
        if gd != 0:
            raise UnsupportedKinetic("potential must not carry powers of g")


def solve_metric_series(potential: PhaseSymbol, max_order: int) -> MetricSeries:
    """Metric series of p^2 + g*V(x) through order g^max_order.

    Boundary conditions: the order-zero slice is 1 and every homogeneous
    contribution (constants in x and kernel exponentials) is dropped at
    higher orders, which fixes the series uniquely.
    """
    if max_order < 1:
        raise ValueError("max_order must be a positive integer")
    _check_potential(potential)

    operator = derive_metric_operator(potential)
    orders = {0: PhaseSymbol.monomial(1)}
    previous = orders[0]
    for n in range(1, max_order + 1):
        rhs = -operator.apply(previous)
        previous = solve_kinetic_ode(rhs)
        if previous:
            orders[n] = previous
    return MetricSeries(orders, max_order)


def assemble(series: MetricSeries) -> PhaseSymbol:
    return series.assemble()

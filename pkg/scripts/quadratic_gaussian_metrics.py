#!/usr/bin/env python3
"""Exact Gaussian metrics of the quadratic model a*p^2 + b*x^2 + i*c*p*x.

Usage: python3 scripts/quadratic_gaussian_metrics.py [OMEGA ALPHA BETA]
"""

import sys
from fractions import Fraction

from moyalmetric import (GaussianRational, PhaseSymbol,
                         derive_metric_operator, gaussian_metric_candidates,
                         residual, swanson_from_ladder)
from moyalmetric.rationals import HbarScalar, HS_ZERO

I = GaussianRational(0, 1)


def main() -> None:
    if len(sys.argv) == 4:
        omega, alpha, beta = (Fraction(arg) for arg in sys.argv[1:4])
    else:
        omega, alpha, beta = Fraction(2), Fraction(1), Fraction(0)

    params = swanson_from_ladder(omega, alpha, beta)
    print(f"ladder parameters (omega, alpha, beta) = ({omega}, {alpha}, {beta})")
    print(f"couplings: a = {params.a}, b = {params.b}, c = {params.c}")

    H = params.hamiltonian()
    print(f"H(x, p) = {H}")
    print(f"H^dag(x, p) = {H.dagger()}   (note the c*hbar reordering shift)")

    print("metric equation operator:")
    for (m, n), coeff in sorted(derive_metric_operator(H).terms.items()):
        print(f"  Dx^{m} Dp^{n}: {coeff}")

    shears = [("s = 0", HS_ZERO),
              ("s = 2i/hbar", HbarScalar.hbar_power(2 * I, -1))]
    for label, s in shears:
        print(f"Gaussian branches at {label}:")
        for eq in gaussian_metric_candidates(params, s):
            theta = PhaseSymbol.exponential(eq)
            ok = "exact solution" if not residual(H, theta) else "RESIDUAL NONZERO"
            print(f"  {theta}   [{ok}]")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print the metric series of p^2 + i*g*x^3 and its star-logarithm.

Usage: python3 scripts/cubic_metric_tables.py [ORDER]
"""

import sys

from moyalmetric import (GaussianRational, PhaseSymbol, X, positivity_evidence,
                         residual, solve_metric_series, star_log)

I = GaussianRational(0, 1)


def main() -> None:
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    series = solve_metric_series(I * X ** 3, order)

    print(f"metric series for p^2 + g*i*x^3 through g^{order}:")
    for n in range(order + 1):
        print(f"  g^{n}: {series.order(n)}")

    H = PhaseSymbol.monomial(1, p=2) + PhaseSymbol.monomial(I, x=3, g=1)
    r = residual(H, series.assemble())
    leftover = sorted(r.g_slices())
    print(f"residual orders (all > {order}): {leftover}")

    log = star_log(series)
    print("star-logarithm:")
    for n in range(1, order + 1):
        print(f"  g^{n}: {log.order(n)}")

    report = positivity_evidence(series)
    print(f"star-log hermitian per order: {report.per_order_hermitian}")
    print(f"positivity evidence verdict: {report.verdict}")


if __name__ == "__main__":
    main()

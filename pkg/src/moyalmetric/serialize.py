"""Lossless JSON documents for every value type the CLI emits.

Rational numbers are stored as arrays of four decimal strings
[reN, reD, imN, imD] so arbitrary precision survives the round trip; Laurent
scalars in hbar become arrays [[h, reN, reD, imN, imD], ...] with the power h
as a plain integer.  All lists are emitted in canonical order, making the
output byte-deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InvalidDocument
from .pde import DifferentialOperator, SwansonParams
from .rationals import GaussianRational, HbarScalar
from .series import MetricSeries
from .starlog import PositivityReport
from .symbols import ExpQuadratic, PhaseSymbol


def rational_to_obj(c: GaussianRational) -> list[str]:
    return [str(c.re.numerator), str(c.re.denominator),
            str(c.im.numerator), str(c.im.denominator)]


def rational_from_obj(obj) -> GaussianRational:
    try:
        ren, red, imn, imd = obj
        return GaussianRational(Fraction(int(ren), int(red)),
                                Fraction(int(imn), int(imd)))
    except (TypeError, ValueError) as exc:
        raise InvalidDocument(f"bad rational entry {obj!r}") from exc


def hbar_scalar_to_obj(scalar: HbarScalar) -> list:
    return [[h] + rational_to_obj(c) for h, c in scalar.terms]


def hbar_scalar_from_obj(obj) -> HbarScalar:
    if not isinstance(obj, list):
        raise InvalidDocument("hbar scalar must be a list")
    terms = []
    for entry in obj:
        if not isinstance(entry, list) or len(entry) != 5:
            raise InvalidDocument(f"bad hbar scalar entry {entry!r}")
        terms.append((int(entry[0]), rational_from_obj(entry[1:])))
    return HbarScalar(terms)


def symbol_to_obj(sym: PhaseSymbol) -> dict:
    parts = sym.parts
    terms = []
    for eq in sorted(parts, key=ExpQuadratic.sort_key):
        poly = parts[eq]
        poly_entries = []
        for key in sorted(poly, key=lambda k: (k[3], k[0], k[1], k[2])):
            xd, pd, hd, gd = key
            poly_entries.append({"coeff": rational_to_obj(poly[key]),
                                 "x": xd, "p": pd, "hbar": hd, "g": gd})
        terms.append({"exp": {"r": hbar_scalar_to_obj(eq.r),
                              "s": hbar_scalar_to_obj(eq.s),
                              "t": hbar_scalar_to_obj(eq.t)},
                      "poly": poly_entries})
    return {"terms": terms}


def symbol_from_obj(obj) -> PhaseSymbol:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise InvalidDocument("symbol document must have a 'terms' list")
    total = PhaseSymbol.zero()
    for term in obj["terms"]:
        try:
            eq = ExpQuadratic(hbar_scalar_from_obj(term["exp"]["r"]),
                              hbar_scalar_from_obj(term["exp"]["s"]),
                              hbar_scalar_from_obj(term["exp"]["t"]))
            poly = {}
            for entry in term["poly"]:
                key = (int(entry["x"]), int(entry["p"]),
                       int(entry["hbar"]), int(entry["g"]))
                poly[key] = poly.get(key, GaussianRational()) + rational_from_obj(entry["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDocument(f"malformed symbol term: {exc}") from exc
        try:
            total = total + PhaseSymbol({eq: poly})
        except ValueError as exc:
            raise InvalidDocument(str(exc)) from exc
    return total


def series_to_obj(series: MetricSeries) -> dict:
    return {"max_order": series.max_order,
            "orders": {str(n): symbol_to_obj(series.order(n))
                       for n in sorted(series.orders)}}


def series_from_obj(obj) -> MetricSeries:
    if not isinstance(obj, dict) or "orders" not in obj or "max_order" not in obj:
        raise InvalidDocument("series document must have 'max_order' and 'orders'")
    try:
        orders = {int(n): symbol_from_obj(sub) for n, sub in obj["orders"].items()}
        return MetricSeries(orders, int(obj["max_order"]))
    except (TypeError, ValueError) as exc:
        raise InvalidDocument(f"malformed series document: {exc}") from exc


def operator_to_obj(operator: DifferentialOperator) -> dict:
    return {"terms": [{"dx": m, "dp": n, "coeff": symbol_to_obj(coeff)}
                      for (m, n), coeff in sorted(operator.terms.items())]}


def operator_from_obj(obj) -> DifferentialOperator:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise InvalidDocument("operator document must have a 'terms' list")
    try:
        terms = {}
        for entry in obj["terms"]:
            key = (int(entry["dx"]), int(entry["dp"]))
            coeff = symbol_from_obj(entry["coeff"])
            terms[key] = terms.get(key, PhaseSymbol.zero()) + coeff
        return DifferentialOperator(terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDocument(f"malformed operator document: {exc}") from exc


def swanson_to_obj(params: SwansonParams) -> dict:
    return {"a": rational_to_obj(params.a),
            "b": rational_to_obj(params.b),
            "c": rational_to_obj(params.c)}


def swanson_from_obj(obj) -> SwansonParams:
    try:
        return SwansonParams(a=rational_from_obj(obj["a"]),
                             b=rational_from_obj(obj["b"]),
                             c=rational_from_obj(obj["c"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDocument(f"malformed parameter document: {exc}") from exc


def report_to_obj(report: PositivityReport) -> dict:
    return {"verdict": report.verdict,
            "per_order_hermitian": {str(n): flag for n, flag
                                    in sorted(report.per_order_hermitian.items())},
            "log_series": series_to_obj(report.log_series)}


def report_from_obj(obj) -> PositivityReport:
    try:
        flags = {int(n): bool(flag) for n, flag in obj["per_order_hermitian"].items()}
        return PositivityReport(per_order_hermitian=flags,
                                log_series=series_from_obj(obj["log_series"]),
                                verdict=bool(obj["verdict"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDocument(f"malformed report document: {exc}") from exc


def candidates_to_obj(candidates: list[ExpQuadratic]) -> dict:
    return {"candidates": [symbol_to_obj(PhaseSymbol.exponential(eq))
                           for eq in candidates]}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def load_document(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidDocument(f"cannot read JSON document {path}: {exc}") from exc

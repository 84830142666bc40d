"""Exact feasibility analysis of spherical 3-distance 5-designs.

Rational values are returned as :class:`fractions.Fraction`; arguments accept
ints, Fractions or ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _core
from ._core import DesignFormatError, fixture_names, fixture_text

__version__ = _core.__version__

__all__ = [
    "DesignFormatError",
    "analyze",
    "classify",
    "design_report",
    "fixture_names",
    "fixture_text",
    "gegenbauer_polynomial",
    "inner_product_cubic",
    "isolate_real_roots",
    "jacobi_polynomial",
    "levenshtein_bound",
    "levenshtein_polynomial",
    "p_adic_valuation",
    "rational_roots",
    "scan",
]


def _text(value: Any) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _exact(value: Any) -> Any:
    """"p/q" -> Fraction, ["lo", "hi"] -> (Fraction, Fraction)."""
    if isinstance(value, list):
        return tuple(Fraction(v) for v in value)
    return Fraction(value)


def _record(raw: dict) -> dict:
    out = dict(raw)
    out["M"] = int(raw["M"])
    out["T"] = None if raw["T"] is None else int(raw["T"])
    out["inner_products"] = [_exact(v) for v in raw["inner_products"]]
    out["distribution"] = [_exact(v) for v in raw["distribution"]]
    out["derived"] = [
        dict(d, products=[Fraction(p) for p in d["products"]], values=[Fraction(v) for v in d["values"]])
        for d in raw["derived"]
    ]
    return out


def classify(n: int, M: int, *, divisibility: bool = True) -> dict:
    """Run the full pipeline on (n, M) and return the candidate record."""
    return _record(json.loads(_core.classify_json(n, str(M), divisibility)))


def analyze(n: int, T: int) -> dict:
    """classify() with the cardinality given as T = 2M/n."""
    if T < 1 or (T * n) % 2:
        raise ValueError("T*n must be a positive even integer")
    return classify(n, T * n // 2)


def scan(n_min: int, n_max: int, *, jobs: int = 0, divisibility: bool = True) -> dict:
    """Scan every admissible M for n in [n_min, n_max]; returns metadata and records."""
    raw = json.loads(_core.scan_json(n_min, n_max, jobs, divisibility))
    raw["records"] = [_record(r) for r in raw["records"]]
    return raw


def levenshtein_bound(n: int, s: Any) -> Fraction:
    return Fraction(_core.levenshtein_bound(n, _text(s)))


def _poly(coeffs: list[str]) -> list[Fraction]:
    return [Fraction(c) for c in coeffs]


def levenshtein_polynomial(k: int, n: int, s: Any) -> list[Fraction]:
    """Coefficients, constant term first."""
    return _poly(_core.levenshtein_polynomial(k, n, _text(s)))


def jacobi_polynomial(i: int, n: int) -> list[Fraction]:
    return _poly(_core.jacobi_polynomial(i, n))


def gegenbauer_polynomial(k: int, n: int) -> list[Fraction]:
    return _poly(_core.gegenbauer_polynomial(k, n))


def inner_product_cubic(n: int, M: int) -> list[Fraction]:
    return _poly(_core.inner_product_cubic(n, str(M)))


def rational_roots(coefficients: list[Any]) -> list[Fraction]:
    return _poly(_core.rational_roots([_text(c) for c in coefficients]))


def isolate_real_roots(coefficients: list[Any], lo: Any = -1, hi: Any = 1) -> list[tuple[Fraction, Fraction]]:
    return [
        (Fraction(a), Fraction(b))
        for a, b in _core.isolate_real_roots([_text(c) for c in coefficients], _text(lo), _text(hi))
    ]


def p_adic_valuation(p: int, a: int) -> int:
    return _core.p_adic_valuation(str(p), str(a))


def design_report(source: str, *, tau_max: int = 7, exact: bool = False) -> dict:
    """Strength, spectrum and witness checks for a fixture name or a design file."""
    report = _core.design_report(str(source), tau_max, exact)
    for entry in report["spectrum"]:
        if isinstance(entry["value"], str):
            entry["value"] = Fraction(entry["value"])
    return report

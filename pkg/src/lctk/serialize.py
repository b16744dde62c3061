"""JSON forms shared by the modules and the CLI.

Rationals serialize as exact "p/q" strings ("p" when integral, "inf" for
the infinite sentinel); float mirrors live under "approx" keys.
"""

import json
from fractions import Fraction

from .groebner import MonomialOrder, parse_polynomial
from .lattice import normalize_generators


class SchemaError(ValueError):
    """Input JSON does not match the documented shape."""


def frac_str(value):
    if value == float("inf"):
        return "inf"
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def frac_approx(value):
    return float("inf") if value == float("inf") else float(value)


def parse_frac(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not a rational: {text!r}") from exc


def ideal_to_dict(ideal):
    return {"n": ideal.n, "generators": [list(g) for g in ideal.generators]}


def ideal_from_dict(data):
    if not isinstance(data, dict) or "n" not in data \
            or "generators" not in data:
        raise SchemaError('expected {"n": ..., "generators": [[...], ...]}')
    try:
        return normalize_generators(data["generators"], int(data["n"]))
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc


def load_ideal(path):
    with open(path) as fh:
        return ideal_from_dict(json.load(fh))


def certificate_to_dict(cert):
    return {
        "c": frac_str(cert.c),
        "x0": [frac_str(v) for v in cert.x0],
        "nu": frac_str(cert.nu),
        "isolated": cert.isolated,
        "approx": {
            "c": frac_approx(cert.c),
            "x0": [frac_approx(v) for v in cert.x0],
            "nu": frac_approx(cert.nu),
        },
    }


def mults_to_dict(seq):
    return {"e": list(seq.e)}


def bounds_report_to_dict(rep):
    return {
        "main_bound": frac_str(rep.main),
        "skoda_low": frac_str(rep.skoda_low),
        "skoda_high": frac_str(rep.skoda_high),
        "geometric_bound_cmp": rep.geometric_cmp,
        "mixed_bound_cmp": rep.mixed_cmp,
        "chain": {
            "main_vs_mixed": rep.chain.main_vs_mixed,
            "mixed_vs_geometric": rep.chain.mixed_vs_geometric,
            "ok": rep.chain.ok,
            "witnesses": [[frac_str(w) for w in ws]
                          for ws in rep.chain.witnesses],
        },
        "in_cone": rep.in_cone,
        "details": [[name, [frac_str(w) for w in ws]]
                    for name, ws in rep.details],
        "approx": {"main_bound": frac_approx(rep.main)},
    }


def order_to_dict(order):
    out = {"kind": order.kind}
    if order.precedence is not None:
        out["precedence"] = list(order.precedence)
    if order.kind == "weighted":
        out["weights"] = list(order.weights)
        out["tiebreak"] = order.tiebreak
    return out


def order_from_dict(data):
    if not isinstance(data, dict) or "kind" not in data:
        raise SchemaError('order must be {"kind": ..., ...}')
    try:
        return MonomialOrder(
            kind=data["kind"],
            precedence=tuple(data["precedence"])
            if "precedence" in data else None,
            weights=tuple(data["weights"]) if "weights" in data else None,
            tiebreak=data.get("tiebreak", "grevlex"),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def polynomial_ideal_from_dict(data):
    """Returns (polynomials, order-or-None, orders-list-or-None)."""
    if not isinstance(data, dict) or "n" not in data \
            or "polynomials" not in data:
        raise SchemaError('expected {"n": ..., "polynomials": [...]}')
    n = int(data["n"])
    polys = [parse_polynomial(text, n) for text in data["polynomials"]]
    order = order_from_dict(data["order"]) if "order" in data else None
    orders = [order_from_dict(o) for o in data["orders"]] \
        if "orders" in data else None
    return polys, order, orders


def load_polynomial_ideal(path):
    with open(path) as fh:
        return polynomial_ideal_from_dict(json.load(fh))


def lower_bound_certificate_to_dict(cert):
    out = {
        "order": order_to_dict(cert.order),
        "initial_ideal": ideal_to_dict(cert.initial),
        "c_initial": frac_str(cert.c_initial),
        "guarantee": f"lct of the input ideal >= {frac_str(cert.c_initial)}",
        "approx": {"c_initial": frac_approx(cert.c_initial)},
    }
    if cert.mult_bound is not None:
        out["mult_bound"] = frac_str(cert.mult_bound)
        out["mults"] = mults_to_dict(cert.mults)
    return out

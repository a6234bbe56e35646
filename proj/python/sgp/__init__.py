"""Exact strong-general-position checks for finite point sets.

Points are given as sequences of ints, ``fractions.Fraction`` values or
``"p/q"`` strings. Rational results come back as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    OracleBoundError,
    ParseError,
    clause_c_applicable,
    tverberg_number,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "OracleBoundError",
    "ParseError",
    "certify",
    "check",
    "clause_c_applicable",
    "count_conditions",
    "gen_hexagon_counterexample",
    "gen_moment_curve",
    "gen_random_rational",
    "general_position",
    "intersection_dim",
    "tverberg_number",
]


def _coord(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"coordinates must be exact (int, Fraction or 'p/q'), got {x!r}")
    if isinstance(x, int):
        return x
    return str(x)


def _document(points, dim=None):
    if isinstance(points, dict):
        return json.dumps(points)
    points = [list(p) for p in points]
    if dim is None:
        if not points:
            raise ValueError("cannot infer the dimension of an empty point list")
        dim = len(points[0])
    return json.dumps({"dim": dim, "points": [[_coord(c) for c in p] for p in points]})


def _points(doc):
    return [[Fraction(c) for c in p] for p in json.loads(doc)["points"]]


def check(points, dim=None, mode="reduced", max_naive=9, workers=1):
    """Verdict dict: ``status`` is "sgp", "not_general_position" or "violation"."""
    return json.loads(_core.check(_document(points, dim), mode, max_naive, workers))


def general_position(points, dim=None):
    out = json.loads(_core.general_position(_document(points, dim)))
    out["gp_polynomial"] = Fraction(out["gp_polynomial"])
    return out


def intersection_dim(points, family, dim=None):
    return json.loads(_core.intersection_dim(_document(points, dim), family))["intersection_dim"]


def certify(points, family, dim=None):
    out = json.loads(_core.certify(_document(points, dim), family))
    for key in ("det_A", "P"):
        if out.get(key) is not None:
            out[key] = Fraction(out[key])
    if out.get("point") is not None:
        out["point"] = [Fraction(c) for c in out["point"]]
    return out


def count_conditions(n, d, naive=False, max_naive=9):
    return json.loads(_core.count_conditions(n, d, naive, max_naive))


def gen_moment_curve(d, params):
    return _points(_core.gen_moment_curve(d, [str(Fraction(t)) for t in params]))


def gen_hexagon_counterexample():
    return _points(_core.gen_hexagon_counterexample())


def gen_random_rational(d, n, seed, denom_bound):
    return _points(_core.gen_random_rational(d, n, seed, denom_bound))

"""Python access to the nckit engine."""

import json

from . import _nckit

__all__ = [
    "run_scene",
    "elliptic_algebra_series",
    "tcr_series",
    "series_coefficients",
    "series_arith",
    "hilb_matrix",
    "cremona",
    "solve_sklyanin",
]


def _pt(p):
    return json.dumps({k: str(v) for k, v in (p or {}).items()})


def run_scene(text, command, source="<scene>", format=None, series_terms=None):
    """Run a scene given as TOML text; returns (exit_code, report_text)."""
    return _nckit.run_scene(text, command, source, format, series_terms)


def elliptic_algebra_series(d):
    return json.loads(_nckit.elliptic_algebra_series(d))


def tcr_series(d):
    return json.loads(_nckit.tcr_series(d))


def series_coefficients(series, n):
    return _nckit.series_coefficients(series, n)


def series_arith(a, b, op):
    return _nckit.series_arith(a, b, op)


def hilb_matrix(a, b, c, d, e, f, n_sum, t):
    return json.loads(_nckit.hilb_matrix([_pt(x) for x in (a, b, c, d, e, f)], _pt(n_sum), _pt(t)))


def cremona(sigma, p, q, r):
    return json.loads(_nckit.cremona(_pt(sigma), [_pt(p), _pt(q), _pt(r)]))


def solve_sklyanin(a, b, c, d, e, f, n_sum, t):
    return json.loads(_nckit.solve_sklyanin([_pt(x) for x in (a, b, c, d, e, f)], _pt(n_sum), _pt(t)))

"""Polarized metrized graph invariants, genus-3 theta constants and height
bookkeeping for the canonical Gross-Schoen cycle.

Exact quantities come back as fractions.Fraction; graphs and place tables
are accepted as dicts, JSON text or file paths.
"""

import json
import os
from fractions import Fraction

import numpy as np

from . import _core
from ._core import GshError, even_characteristics, is_symplectic

__all__ = [
    "GshError",
    "assemble",
    "autofill",
    "chi18",
    "conjecture_report",
    "effective_resistance",
    "even_characteristics",
    "genus3_report",
    "height_jump_twogon",
    "hyperelliptic_reference",
    "invariants",
    "is_symplectic",
    "kappa_sweep",
    "log_norm_chi18",
    "period_matrix",
    "resistance_profile",
    "siegel_reduce",
    "sp_transform",
    "tau",
    "theta_null",
    "twogon_contribution",
    "validate_graph",
    "wedge_decompose",
]

_RATIONAL_KEYS = {
    "tau", "theta", "lambda", "mu", "total", "by_type", "h", "ord_lower_bound",
    "local_bound", "phi_yamaki",
}


def _text(doc):
    """JSON text for a dict, a JSON string or a path to a JSON file."""
    if isinstance(doc, (dict, list)):
        return json.dumps(doc, default=_encode)
    if isinstance(doc, os.PathLike) or (isinstance(doc, str) and os.path.isfile(doc)):
        with open(doc, encoding="utf-8") as fh:
            return fh.read()
    return doc


def _encode(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    raise TypeError(f"cannot encode {type(x).__name__}")


def _q(x):
    return x if isinstance(x, str) else _encode(Fraction(x))


def _fractions(obj, key=None):
    if isinstance(obj, dict):
        return {k: _fractions(v, k) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v, key) for v in obj]
    if key in _RATIONAL_KEYS and isinstance(obj, str):
        return Fraction(obj)
    return obj


def _matrix(omega):
    return np.asarray(omega, dtype=np.complex128)


# graphs

def validate_graph(graph):
    """Validated graph as a dict; raises GshError on malformed input."""
    return json.loads(_core.validate_graph(_text(graph)))


def wedge_decompose(graph):
    return [json.loads(b) for b in _core.wedge_decompose(_text(graph))]


def invariants(graph):
    """tau, theta, lambda, mu and the delta vector, as Fractions."""
    return _fractions(json.loads(_core.invariants(_text(graph))))


def genus3_report(graph):
    return _fractions(json.loads(_core.genus3_report(_text(graph))))


def effective_resistance(graph, p, q):
    return Fraction(_core.effective_resistance(_text(graph), p, q))


def resistance_profile(graph, p, edge):
    """(a, b, c) with r(p, x) = a s^2 + b s + c along the edge."""
    return tuple(Fraction(x) for x in _core.resistance_profile(_text(graph), p, edge))


def tau(graph):
    return Fraction(_core.tau(_text(graph)))


def twogon_contribution(m1, m2):
    """(value, witness) of the two-gon contribution with edge lengths m1, m2."""
    value, witness = _core.twogon_contribution(_q(m1), _q(m2))
    return Fraction(value), Fraction(witness)


def height_jump_twogon(g, h, m1, m2):
    return Fraction(_core.height_jump_twogon(g, h, _q(m1), _q(m2)))


# theta constants

def theta_null(a, b, omega, tol=1e-12, max_radius=40.0, reduce=True):
    return _core.theta_null(a, b, _matrix(omega), tol=tol, max_radius=max_radius, reduce=reduce)


def chi18(omega, tol=1e-12, max_radius=40.0, reduce=True, zero_tol=1e-9):
    """Product of the 36 even theta constants with diagnostics and log ||chi'18||."""
    return _core.chi18(_matrix(omega), tol=tol, max_radius=max_radius, reduce=reduce, zero_tol=zero_tol)


def log_norm_chi18(omega, **kwargs):
    return chi18(omega, **kwargs)["log_norm"]


def siegel_reduce(omega):
    """(reduced omega, gamma, iteration_cap_hit)."""
    return _core.siegel_reduce(_matrix(omega))


def sp_transform(omega, gamma):
    return _core.sp_transform(_matrix(omega), np.asarray(gamma, dtype=np.int64))


# period matrices

def period_matrix(*, n=None, kappa=None, m=None, roots=None):
    """Small period matrix of D_{1/n}, of y^4 = x(x-1)(x-kappa), or of
    y^m = prod (x - root)."""
    given = sum(x is not None for x in (n, kappa, roots))
    if given != 1:
        raise ValueError("give exactly one of n, kappa, roots")
    if n is not None:
        return _core.period_matrix_n(complex(n))
    if kappa is not None:
        return _core.period_matrix_kappa(complex(kappa))
    if m is None:
        raise ValueError("roots need m")
    return _core.period_matrix(int(m), [complex(r) for r in roots])


def hyperelliptic_reference():
    """Period matrix of y^2 = x^8 - 1."""
    return _core.hyperelliptic_reference()


# heights

def assemble(table, tol=1e-12):
    """Autofill a place table and evaluate every identity it has data for."""
    return json.loads(_core.assemble(_text(table), tol))


def autofill(table):
    return json.loads(_core.autofill(_text(table)))


def conjecture_report(table):
    return json.loads(_core.conjecture_report(_text(table)))


def kappa_sweep(ns, tol=1e-12):
    return _core.kappa_sweep([float(n) for n in ns], tol)

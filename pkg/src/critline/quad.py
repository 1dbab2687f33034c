"""Gauss-Legendre quadrature on [0,1]^d and the standard triangle.

All integrands in this project are entire (polynomials times exponentials), so
fixed-order tensor rules with order doubling converge spectrally; there is no
adaptive subdivision.  Integrands must be vectorized: they receive one numpy
array per coordinate and return either an array of values or a batched
:class:`~critline.jet.Jet`.  Node evaluation is chunked so high orders in four
dimensions stay within memory, and reductions are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import fsum

import numpy as np

from .jet import Jet

DEFAULT_TOL = 1e-10
N_SEQUENCE_START = 16
N_MAX = 256
_CHUNK = 1 << 19


class QuadratureError(RuntimeError):
    """Raised when the doubling sequence fails to converge; carries the trace."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace or []


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray


@lru_cache(maxsize=32)
def gauss_rule(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule mapped affinely to [0, 1]."""
    if not 1 <= n <= N_MAX:
        raise ValueError(f"rule order {n} outside [1, {N_MAX}]")
    x, w = np.polynomial.legendre.leggauss(n)
    rule = QuadratureRule(nodes=(x + 1.0) / 2.0, weights=w / 2.0)
    rule.nodes.setflags(write=False)
    rule.weights.setflags(write=False)
    return rule


def _weighted_sum(values, weights: np.ndarray):
    if isinstance(values, Jet):
        coeffs = (values.coeffs * weights).sum(axis=-1)
        return Jet(values.mx, values.my, coeffs)
    return float(np.sum(np.asarray(values, dtype=float) * weights))


def _accumulate(parts):
    if parts and isinstance(parts[0], Jet):
        total = parts[0]
        for p in parts[1:]:
            total = total + p
        return total
    return fsum(parts)


def integrate_cube(f, d: int, rule: QuadratureRule, chunk: int = _CHUNK):
    """Tensor-product quadrature of ``f(x1, ..., xd)`` over [0, 1]^d."""
    if not 1 <= d <= 4:
        raise ValueError(f"dimension {d} outside [1, 4]")
    n = rule.nodes.size
    total_nodes = n**d
    parts = []
    # coordinates are materialized per chunk so high orders in 4-D stay in memory
    for start in range(0, total_nodes, chunk):
        stop = min(start + chunk, total_nodes)
        multi = np.unravel_index(np.arange(start, stop), (n,) * d)
        coords = [rule.nodes[m] for m in multi]
        weights = np.prod(np.stack([rule.weights[m] for m in multi]), axis=0)
        values = f(*coords)
        if not isinstance(values, Jet):
            values = np.broadcast_to(np.asarray(values, dtype=float), (stop - start,))
        parts.append(_weighted_sum(values, weights))
    return _accumulate(parts)


def integrate_simplex2(f, rule: QuadratureRule, chunk: int = _CHUNK):
    """Integrate f(a, b) over {a, b >= 0, a + b <= 1} via b = (1-a)t."""
    return integrate_cube(lambda a, t: f(a, (1.0 - a) * t) * (1.0 - a), 2, rule, chunk)


def _rel_diff(new, old) -> float:
    if isinstance(new, Jet):
        a, b = new.coeffs, old.coeffs
        scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), 1.0)
        return float(np.max(np.abs(a - b) / scale))
    scale = max(abs(new), abs(old), 1.0)
    return abs(new - old) / scale


def integrate_converged(
    f,
    domain,
    tol: float = DEFAULT_TOL,
    n_start: int = N_SEQUENCE_START,
    n_max: int = N_MAX,
    chunk: int = _CHUNK,
):
    """Evaluate with order doubling n = 16, 32, ... until the relative change
    drops below ``tol``.

    ``domain`` is ``("cube", d)`` or ``"simplex2"``.  Returns ``(value, trace)``
    where the trace lists ``(n, delta)`` pairs (delta is None for the first
    order).  Raises :class:`QuadratureError` with the trace on non-convergence.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")

    def run(n):
        rule = gauss_rule(n)
        if domain == "simplex2":
            return integrate_simplex2(f, rule, chunk)
        kind, d = domain
        if kind != "cube":
            raise ValueError(f"unknown domain {domain!r}")
        return integrate_cube(f, d, rule, chunk)

    trace = []
    prev = None
    n = n_start
    while n <= n_max:
        value = run(n)
        delta = None if prev is None else _rel_diff(value, prev)
        trace.append((n, delta))
        if delta is not None and delta < tol:
            return value, trace
        prev = value
        n *= 2
    raise QuadratureError(
        f"quadrature did not converge to {tol:g} by n = {n_max}: trace {trace}", trace
    )

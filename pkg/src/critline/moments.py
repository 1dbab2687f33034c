"""The mollified second-moment constants c1, c12, c2 and the kappa bound.

The total constant is c = c1 + 2*c12 + c2 and the zero-proportion bound is
kappa >= 1 - log(c)/R.  c1 is a plain double integral; c12 and c2 carry the
formal derivative operators d^2/dxdy and d^4/dx^2dy^2 at x = y = 0, realized
exactly with (1,1)- and (2,2)-jets so that quadrature is the only error source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from . import quad
from .jet import Jet, jet_eval_poly
from .poly import Polynomial

THETA1_MAX = 4.0 / 7.0
THETA2_MAX = 0.5
_THETA_SLACK = 1e-9

ALL_ZEROS = "all_zeros"
SIMPLE_ZEROS = "simple_zeros"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class MollifierConfig:
    """One full parameter point: exponents, offset scale, and polynomials."""

    theta1: float
    theta2: float
    R: float
    Q: Polynomial
    P1: Polynomial
    P2: Polynomial
    mode: str = ALL_ZEROS

    def __post_init__(self):
        if not self.R > 0:
            raise ConfigError("R must be positive")
        if not 0 < self.theta2:
            raise ConfigError("theta2 must be positive")
        if not self.theta2 < self.theta1 + _THETA_SLACK:
            raise ConfigError("theta2 must be < theta1")
        if not self.theta1 <= THETA1_MAX + _THETA_SLACK:
            raise ConfigError("theta1 must be <= 4/7")
        if not self.theta2 <= THETA2_MAX + _THETA_SLACK:
            raise ConfigError("theta2 must be < 1/2")
        if self.mode not in (ALL_ZEROS, SIMPLE_ZEROS):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.mode == SIMPLE_ZEROS and self.Q.degree > 1:
            raise ConfigError("simple_zeros mode requires a linear Q")


@dataclass(frozen=True)
class KappaReport:
    c1: float
    c12: float
    c2: float
    c: float
    kappa: float
    config: MollifierConfig
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        cfg = self.config
        return {
            "schema": 1,
            "theta1": cfg.theta1,
            "theta2": cfg.theta2,
            "R": cfg.R,
            "mode": cfg.mode,
            "Q": list(cfg.Q.coeffs),
            "P1": list(cfg.P1.coeffs),
            "P2": list(cfg.P2.coeffs),
            "c1": self.c1,
            "c12": self.c12,
            "c2": self.c2,
            "c": self.c,
            "kappa": self.kappa,
            "diagnostics": self.diagnostics,
        }


# -- c1: real double integral ---------------------------------------------


def c1_raw(Q: Polynomial, P1: Polynomial, R: float, theta1: float, tol=quad.DEFAULT_TOL, n_start=quad.N_SEQUENCE_START, n_max=quad.N_MAX):
    """1 + (1/theta1) * int int e^{2Rv} (Q(v)P1'(u) + th1 Q'(v)P1(u) + th1 R Q(v)P1(u))^2."""
    Qd = Q.derivative()
    P1d = P1.derivative()

    def integrand(u, v):
        lin = Q(v) * P1d(u) + theta1 * Qd(v) * P1(u) + theta1 * R * Q(v) * P1(u)
        return np.exp(2.0 * R * v) * lin * lin

    value, trace = quad.integrate_converged(integrand, ("cube", 2), tol=tol, n_start=n_start, n_max=n_max)
    return 1.0 + value / theta1, trace


# -- c12: (1,1)-jet over simplex(a,b) x [0,1] ------------------------------


def c12_raw(
    Q: Polynomial,
    P1: Polynomial,
    P2: Polynomial,
    R: float,
    theta1: float,
    theta2: float,
    tol=quad.DEFAULT_TOL,
    n_start=quad.N_SEQUENCE_START,
    n_max=quad.N_MAX,
):
    if P2.is_zero or P1.is_zero:
        return 0.0, []
    P2dd = P2.derivative().derivative()

    def integrand(s, t, u):
        # simplex substitution: a = s, b = (1-s)t with Jacobian (1-s)
        a = s
        b = (1.0 - s) * t
        jac = 1.0 - s
        expo = Jet.linear(R * u * theta2 * (a - b), -R * theta1, R * theta1, 1, 1).exp()
        qa = jet_eval_poly(Q, Jet.linear(a * u * theta2, -theta1, 0.0, 1, 1))
        qb = jet_eval_poly(Q, Jet.linear(1.0 - b * u * theta2, 0.0, theta1, 1, 1))
        p1 = jet_eval_poly(P1, Jet.linear(1.0 - (1.0 - u) * theta2 / theta1, 1.0, 1.0, 1, 1))
        scalar = u * u * (1.0 - u) * P2dd((1.0 - a - b) * u) * jac
        return expo * qa * qb * p1 * scalar

    jet_value, trace = quad.integrate_converged(integrand, ("cube", 3), tol=tol, n_start=n_start, n_max=n_max)
    prefac = 4.0 * (theta2**2 / theta1**2) * math.exp(R)
    return prefac * jet_value.mixed_partial(1, 1), trace


# -- c2: (2,2)-jet over [0,1]^4 --------------------------------------------


def c2_raw(
    Q: Polynomial,
    P2: Polynomial,
    P2_other: Polynomial | None = None,
    *,
    R: float,
    theta2: float,
    tol=quad.DEFAULT_TOL,
    n_start=quad.N_SEQUENCE_START,
    n_max=quad.N_MAX,
):
    """The diagonal-piece constant; ``P2_other`` (defaulting to ``P2``) is the
    second smoothing factor, which exposes the bilinear structure to the
    optimizer without re-deriving the integrand."""
    other = P2 if P2_other is None else P2_other
    if P2.is_zero or other.is_zero:
        return 0.0, []
    Add = P2.derivative().derivative()
    Bdd = other.derivative().derivative()

    def integrand(t, r, u, v):
        # E = x + y - v(y+r) - u(x+r); G = 1 + theta2*E, both linear in (x, y)
        e0, ex, ey = -r * (u + v), 1.0 - u, 1.0 - v
        g0, gx, gy = 1.0 + theta2 * e0, theta2 * ex, theta2 * ey
        E = Jet.linear(e0, ex, ey, 2, 2)
        exp_e = Jet.linear(-theta2 * R * e0, -theta2 * R * ex, -theta2 * R * ey, 2, 2).exp()
        exp_g = Jet.linear(2.0 * R * t * g0, 2.0 * R * t * gx, 2.0 * R * t * gy, 2, 2).exp()
        qa = jet_eval_poly(
            Q, Jet.linear(theta2 * u * r + t * g0, theta2 * u + t * gx, -theta2 + t * gy, 2, 2)
        )
        qb = jet_eval_poly(
            Q, Jet.linear(theta2 * v * r + t * g0, -theta2 + t * gx, theta2 * v + t * gy, 2, 2)
        )
        xr = Jet.linear(r, 1.0, 0.0, 2, 2)
        yr = Jet.linear(r, 0.0, 1.0, 2, 2)
        p2a = jet_eval_poly(Add, Jet.linear((1.0 - u) * r, 1.0 - u, 0.0, 2, 2))
        p2b = jet_eval_poly(Bdd, Jet.linear((1.0 - v) * r, 0.0, 1.0 - v, 2, 2))
        front = ((1.0 / theta2) + E) * ((1.0 - r) ** 4)
        return front * exp_e * exp_g * qa * qb * (xr * yr) * (p2a * p2b)

    jet_value, trace = quad.integrate_converged(integrand, ("cube", 4), tol=tol, n_start=n_start, n_max=n_max)
    return (2.0 / 3.0) * jet_value.mixed_partial(2, 2), trace


# -- public per-config operations ------------------------------------------


def compute_c1(cfg: MollifierConfig, tol=quad.DEFAULT_TOL, n_max=quad.N_MAX) -> float:
    return c1_raw(cfg.Q, cfg.P1, cfg.R, cfg.theta1, tol=tol, n_max=n_max)[0]


def compute_c12(cfg: MollifierConfig, tol=quad.DEFAULT_TOL, n_max=quad.N_MAX) -> float:
    return c12_raw(cfg.Q, cfg.P1, cfg.P2, cfg.R, cfg.theta1, cfg.theta2, tol=tol, n_max=n_max)[0]


def compute_c2(cfg: MollifierConfig, tol=quad.DEFAULT_TOL, n_max=quad.N_MAX) -> float:
    return c2_raw(cfg.Q, cfg.P2, R=cfg.R, theta2=cfg.theta2, tol=tol, n_max=n_max)[0]


def compute_kappa(c: float, R: float) -> float:
    if c <= 0:
        raise ValueError(f"total constant must be positive, got {c}")
    if R <= 0:
        raise ValueError("R must be positive")
    return 1.0 - math.log(c) / R


def evaluate(cfg: MollifierConfig, tol=quad.DEFAULT_TOL, n_max=quad.N_MAX) -> KappaReport:
    c1, t1 = c1_raw(cfg.Q, cfg.P1, cfg.R, cfg.theta1, tol=tol, n_max=n_max)
    c12, t12 = c12_raw(cfg.Q, cfg.P1, cfg.P2, cfg.R, cfg.theta1, cfg.theta2, tol=tol, n_max=n_max)
    c2, t2 = c2_raw(cfg.Q, cfg.P2, R=cfg.R, theta2=cfg.theta2, tol=tol, n_max=n_max)
    c = c1 + 2.0 * c12 + c2
    return KappaReport(
        c1=c1,
        c12=c12,
        c2=c2,
        c=c,
        kappa=compute_kappa(c, cfg.R),
        config=cfg,
        diagnostics={"quad_tol": tol, "c1_trace": t1, "c12_trace": t12, "c2_trace": t2},
    )


def renormalized_q(cfg: MollifierConfig) -> MollifierConfig:
    """Config with Q rescaled so Q(0) = 1 exactly (the verbatim preset has 1.002)."""
    q0 = cfg.Q(0.0)
    if q0 == 0.0:
        raise ConfigError("cannot renormalize: Q(0) = 0")
    return replace(cfg, Q=cfg.Q.scale(1.0 / q0))

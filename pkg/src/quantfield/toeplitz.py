"""Weighted Bergman-type scalars for the circle model and their derivative
identity.

The scalar of interest is

    Q_k(tau) = int e^{2 k zeta + tau zeta^2} d zeta / int e^{2 k zeta + t zeta^2} d zeta

for a fixed reference exponent t < 0; it is finite iff tau < 0 and its
tau-derivatives generate the zeta^2-moments of the normalized weight.  The
curvature of the circle quantization is recovered by differentiating
s |-> e^{b(s)} Q_k(a(s)) in the half-plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .logdomain import LogValue
from .quadrature import (DEFAULT_SPEC, QuadratureSpec, fd_derivative,
                         gaussian_weighted, kappa_from_log)
from .quantization import weight_params

__all__ = [
    "WeightedModel",
    "ToeplitzScalar",
    "q_scalar",
    "moment",
    "p_toeplitz",
    "verify_derivative_identity",
    "DerivativeCheck",
    "curvature_via_ratio",
]


@dataclass(frozen=True)
class WeightedModel:
    """Character index k and a fixed negative reference exponent t.

    The admissible perturbations tau are capped at t/2: beyond that the
    ratio Q_k degrades numerically long before it diverges, so the stricter
    bound is enforced up front.
    """

    k: int
    reference_exponent: float = -1.0

    def __post_init__(self):
        if self.reference_exponent >= 0:
            raise ValueError("reference exponent t must be negative")

    def check_tau(self, tau: float) -> None:
        if tau >= self.reference_exponent / 2.0:
            raise ValueError(
                f"tau = {tau} is outside the admissible range "
                f"tau < t/2 = {self.reference_exponent / 2.0}")


@dataclass(frozen=True)
class ToeplitzScalar:
    value: LogValue
    k: int
    tau: float
    provenance: str = "gauss-hermite"


def _base_integral(k: int, expo: float,
                   spec: QuadratureSpec = DEFAULT_SPEC) -> LogValue:
    # int e^{expo zeta^2 + 2 k zeta} d zeta, closed form via the Gaussian
    return LogValue.from_log(-k * k / expo + 0.5 * math.log(math.pi / (-expo)), 1)


def q_scalar(model: WeightedModel, tau: float,
             spec: QuadratureSpec = DEFAULT_SPEC) -> ToeplitzScalar:
    """Q_k(tau) as a ratio of two Gaussian integrals, both in log domain."""
    model.check_tau(tau)
    t = model.reference_exponent
    num = gaussian_weighted(lambda z: LogValue.from_value(1.0), tau,
                            float(model.k), spec)
    den = gaussian_weighted(lambda z: LogValue.from_value(1.0), t,
                            float(model.k), spec)
    return ToeplitzScalar(num / den, model.k, tau)


def moment(model: WeightedModel, tau: float, n: int,
           spec: QuadratureSpec = DEFAULT_SPEC) -> LogValue:
    """int zeta^{2n} e^{2 k zeta + tau zeta^2} d zeta, normalized by the
    reference integral.  Exact under Gauss-Hermite: the integrand is a
    polynomial against a Gaussian."""
    model.check_tau(tau)
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    num = gaussian_weighted(lambda z: LogValue.from_value(z ** (2 * n)), tau,
                            float(model.k), spec)
    den = gaussian_weighted(lambda z: LogValue.from_value(1.0),
                            model.reference_exponent, float(model.k), spec)
    return num / den


def p_toeplitz(model: WeightedModel, n: int, s,
               corrected: bool = False,
               spec: QuadratureSpec = DEFAULT_SPEC) -> ToeplitzScalar:
    """P_{k,n}(s) = e^{b(s)} * (2n-th moment at tau = a(s)); the n = 0 case
    is e^{b} Q_k(a)."""
    s = complex(s)
    wp = weight_params(s, 1, corrected)
    model.check_tau(wp.a)
    mom = moment(model, wp.a, n, spec)
    val = LogValue.from_log(mom.log_magnitude + wp.b, mom.sign)
    return ToeplitzScalar(val, model.k, wp.a, provenance="quadrature")


@dataclass(frozen=True)
class DerivativeCheck:
    n: int
    tau: float
    moment_value: float
    derivative_value: float
    residual: float
    passed: bool


def verify_derivative_identity(model: WeightedModel, tau: float, n: int,
                               tol: float = 1e-6,
                               spec: QuadratureSpec = DEFAULT_SPEC
                               ) -> DerivativeCheck:
    """Check that the n-th tau-derivative of Q_k equals the 2n-th moment.

    The derivative side is computed by Richardson-extrapolated central
    differences with step h = 1e-3 |t|; the moment side by exact quadrature.
    The comparison is relative to the moment's magnitude.
    """
    if n < 1 or n > 4:
        raise ValueError("derivative order must be 1..4")
    model.check_tau(tau)
    h = 1e-3 * abs(model.reference_exponent)
    model.check_tau(tau + 2 * h)   # the widest stencil point must be admissible

    def q_of(x: float) -> float:
        return q_scalar(model, x, spec).value.to_float()

    deriv = fd_derivative(q_of, tau, n, h, richardson=True)
    mom = moment(model, tau, n, spec).to_float()
    scale = max(abs(mom), 1e-300)
    residual = abs(deriv - mom) / scale
    return DerivativeCheck(n, tau, mom, deriv, residual, residual <= tol)


def curvature_via_ratio(model: WeightedModel, s, corrected: bool,
                        h_rel: float = 1e-3,
                        spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Curvature density of s |-> e^{b(s)} Q_k(a(s)), m = 1.

    Requires a(s) = -1/Im s to stay below t/2 on the whole stencil, i.e.
    Im s < -2/t (slightly shrunk by the stencil width).  For the corrected
    weight this is identically zero; for the bare weight it is 1/(8 (Im s)^2).
    """
    s = complex(s)
    if s.imag <= 0:
        raise ValueError("Im s must be positive")

    def log_p(z: complex) -> LogValue:
        wp = weight_params(z, 1, corrected)
        model.check_tau(wp.a)
        q = q_scalar(model, wp.a, spec).value
        return LogValue.from_log(q.log_magnitude + wp.b, q.sign)

    return kappa_from_log(log_p, s, h_rel=h_rel, im_only=True)

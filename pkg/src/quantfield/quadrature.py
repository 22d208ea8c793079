"""Numerical integration, finite differences and the curvature-density stencil.

The workhorses are:

* ``integrate_1d``        -- adaptive quadrature with an honest error estimate,
* ``gaussian_weighted``   -- Gauss-Hermite after centering the Gaussian factor,
                             carried out entirely in the log domain,
* ``integrate_log_panels``-- composite Gauss-Legendre of log-domain integrands
                             on caller-chosen panels (smooth in parameters, so
                             it can sit under finite differences),
* ``mc_integrate``        -- seeded Monte Carlo oracle for n <= 4,
* ``fd_laplacian`` / ``fd_derivative`` -- central stencils with optional
                             Richardson extrapolation,
* ``kappa_from_log``      -- the scalar curvature density
                             kappa(s) = (1/4) Laplacian_s log p(s).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss
from scipy import integrate as _sci_integrate

from .logdomain import LogValue, NEG_INF, logsumexp_positive, signed_logsumexp

__all__ = [
    "QuadratureSpec",
    "IntegrationResult",
    "integrate_1d",
    "gaussian_weighted",
    "integrate_log_panels",
    "MCResult",
    "mc_integrate",
    "fd_laplacian",
    "fd_derivative",
    "kappa_from_log",
    "DEFAULT_SPEC",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and scheme selection for the integration routines."""

    scheme: str = "adaptive-interval"
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_refinement: int = 200
    truncation_radius_sigma: float = 8.0
    hermite_order: int = 64
    panel_nodes: int = 24

    def __post_init__(self):
        if self.scheme not in ("adaptive-interval", "gauss-hermite-shifted",
                               "tanh-sinh"):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.truncation_radius_sigma < 6.0:
            raise ValueError("truncation_radius_sigma must be >= 6")


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class IntegrationResult:
    value: float
    error: float
    converged: bool
    message: str = ""


def integrate_1d(f: Callable[[float], float],
                 interval: tuple[float, float],
                 spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    """Adaptive quadrature of f on the (possibly infinite) interval.

    Non-convergence is reported through the ``converged`` flag, never as a
    silently wrong value.
    """
    lo, hi = interval
    if spec.scheme == "tanh-sinh" and hasattr(_sci_integrate, "tanhsinh"):
        res = _sci_integrate.tanhsinh(np.vectorize(f), lo, hi,
                                      atol=spec.abs_tol, rtol=spec.rel_tol)
        return IntegrationResult(float(res.integral), float(res.error),
                                 bool(res.success))
    out = _sci_integrate.quad(f, lo, hi, epsabs=spec.abs_tol,
                              epsrel=spec.rel_tol, limit=spec.max_refinement,
                              full_output=True)
    value, error = out[0], out[1]
    message = out[3] if len(out) > 3 else ""
    tol = max(spec.abs_tol, spec.rel_tol * abs(value))
    converged = (len(out) <= 3) and error <= tol
    return IntegrationResult(float(value), float(error), converged, str(message))


def gaussian_weighted(g: Callable[[float], LogValue],
                      a: float,
                      mu: float,
                      spec: QuadratureSpec = DEFAULT_SPEC) -> LogValue:
    """Integral of exp(a t^2 + 2 mu t) g(t) over the real line, a < 0.

    Computed after the centering substitution t = u/sqrt(-a) + mu/(-a), with
    Gauss-Hermite nodes, so the result is exact for polynomial g up to degree
    2*hermite_order - 1 and every term lives in the log domain.
    """
    if a >= 0:
        raise ValueError(f"Gaussian exponent coefficient must be negative, got a={a}")
    nodes, weights = hermgauss(spec.hermite_order)
    sqa = math.sqrt(-a)
    prefactor = -mu * mu / a - math.log(sqa)
    logs = np.empty(nodes.size)
    signs = np.empty(nodes.size, dtype=int)
    for i, u in enumerate(nodes):
        gv = g(u / sqa + mu / (-a))
        logs[i] = math.log(weights[i]) + gv.log_magnitude
        signs[i] = gv.sign
    out = signed_logsumexp(logs, signs)
    return LogValue.from_log(out.log_magnitude + prefactor, out.sign) \
        if out.sign != 0 else out


def integrate_log_panels(log_f: Callable[[np.ndarray], np.ndarray],
                         breakpoints: Sequence[float],
                         nodes_per_panel: int = 24,
                         signs_f: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                         ) -> LogValue:
    """Composite Gauss-Legendre quadrature of exp(log_f) over fixed panels.

    ``log_f`` maps an array of abscissae to log magnitudes; an optional
    ``signs_f`` supplies pointwise signs (default: all positive).  Because the
    node layout depends only on the breakpoints, the result is a smooth
    function of any parameter the integrand carries, which keeps it usable
    under finite differencing.
    """
    bp = np.asarray(breakpoints, dtype=float)
    if bp.ndim != 1 or bp.size < 2:
        raise ValueError("need at least two breakpoints")
    u, w = leggauss(nodes_per_panel)
    lo = bp[:-1]
    half = 0.5 * (bp[1:] - bp[:-1])
    mid = lo + half
    x = (mid[:, None] + half[:, None] * u[None, :]).ravel()
    logw = np.log(np.outer(half, w)).ravel()
    logs = log_f(x) + logw
    if signs_f is None:
        total = logsumexp_positive(logs)
        return LogValue.from_log(total, 1) if total != NEG_INF else LogValue.zero()
    return signed_logsumexp(logs, signs_f(x))


@dataclass(frozen=True)
class MCResult:
    value: float
    stderr: float
    samples: int


def _ball_volume(n: int, radius: float) -> float:
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1) * radius ** n


def mc_integrate(f: Callable[[np.ndarray], float],
                 domain,
                 samples: int,
                 seed: int) -> MCResult:
    """Monte Carlo integral over a box or ball domain, deterministic per seed.

    ``domain`` is either ``("box", lows, highs)`` or ``("ball", center, radius)``.
    Dimension is capped at 4: this is an oracle, not a cubature engine.
    """
    kind = domain[0]
    rng = np.random.default_rng(seed)
    if kind == "box":
        lows = np.asarray(domain[1], dtype=float)
        highs = np.asarray(domain[2], dtype=float)
        n = lows.size
        if n > 4:
            raise ValueError("mc_integrate supports dimension <= 4")
        pts = rng.uniform(lows, highs, size=(samples, n))
        volume = float(np.prod(highs - lows))
    elif kind == "ball":
        center = np.asarray(domain[1], dtype=float)
        radius = float(domain[2])
        n = center.size
        if n > 4:
            raise ValueError("mc_integrate supports dimension <= 4")
        direc = rng.normal(size=(samples, n))
        direc /= np.linalg.norm(direc, axis=1, keepdims=True)
        radii = radius * rng.uniform(size=samples) ** (1.0 / n)
        pts = center + direc * radii[:, None]
        volume = _ball_volume(n, radius)
    else:
        raise ValueError(f"unknown domain kind {kind!r}")
    vals = np.array([f(p) for p in pts])
    mean = float(vals.mean())
    std = float(vals.std(ddof=1)) if samples > 1 else 0.0
    return MCResult(volume * mean, volume * std / math.sqrt(samples), samples)


def fd_laplacian(f: Callable[[np.ndarray], float],
                 point: Sequence[float],
                 h: float,
                 richardson: bool = False) -> float:
    """Central second-order Laplacian of f at the point."""
    p = np.asarray(point, dtype=float)

    def lap(step: float) -> float:
        total = -2.0 * len(p) * f(p)
        for i in range(len(p)):
            e = np.zeros_like(p)
            e[i] = step
            total += f(p + e) + f(p - e)
        return total / step ** 2

    if not richardson:
        return lap(h)
    coarse, fine = lap(h), lap(h / 2)
    return (4.0 * fine - coarse) / 3.0


_CENTRAL_STENCILS = {
    1: ([-1, 1], [-0.5, 0.5]),
    2: ([-1, 0, 1], [1.0, -2.0, 1.0]),
    3: ([-2, -1, 1, 2], [-0.5, 1.0, -1.0, 0.5]),
    4: ([-2, -1, 0, 1, 2], [1.0, -4.0, 6.0, -4.0, 1.0]),
}


def fd_derivative(f: Callable[[float], float], x: float, n: int, h: float,
                  richardson: bool = True) -> float:
    """n-th derivative by second-order central differences (n = 0..4)."""
    if n == 0:
        return f(x)
    if n not in _CENTRAL_STENCILS:
        raise ValueError("derivative order must be 0..4")
    offsets, coeffs = _CENTRAL_STENCILS[n]

    def d(step: float) -> float:
        return sum(c * f(x + o * step) for o, c in zip(offsets, coeffs)) / step ** n

    if not richardson:
        return d(h)
    coarse, fine = d(h), d(h / 2)
    return (4.0 * fine - coarse) / 3.0


def kappa_from_log(p: Callable[[complex], LogValue],
                   s: complex,
                   h_rel: float = 1e-3,
                   im_only: bool = True,
                   richardson: bool = True) -> float:
    """Curvature density kappa(s) = (1/4)(d^2/dx^2 + d^2/dy^2) log p at s = x+iy.

    ``im_only`` is the fast path for models whose weight depends only on
    Im s; the full 2-D stencil adds the x-derivative term.  Non-positive
    samples of p are an error: log p must exist near s.
    """
    x, y = s.real, s.imag
    if y <= 0:
        raise ValueError("kappa_from_log requires Im s > 0")
    h = h_rel * y

    def logp(px: float, py: float) -> float:
        val = p(complex(px, py))
        if val.sign <= 0:
            raise ValueError(f"p is not positive at s={px}+{py}j")
        return val.log_magnitude

    d2y = fd_derivative(lambda t: logp(x, t), y, 2, h, richardson)
    if im_only:
        return 0.25 * d2y
    d2x = fd_derivative(lambda t: logp(t, y), x, 2, h, richardson)
    return 0.25 * (d2x + d2y)

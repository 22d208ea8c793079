"""Weighted-measure engines p_chi(s) and the flatness classifier.

Every engine returns log p up to an opaque positive constant (measure
normalizations are never pinned down); all downstream quantities -- the
curvature density kappa, ratio-constancy checks, flatness verdicts -- are
invariant under that constant.

Conventions:
  * s lives in the upper half plane, y = Im s is the semiclassical parameter;
  * a(s) = -1/Im s; b(s) = -m log Im s (bare) or -(m/2) log Im s (corrected);
  * kappa(s) = (1/4)(d^2/dx^2 + d^2/dy^2) log p(s), calibrated so the
    commutative bare case gives exactly m/(8 y^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.special import roots_jacobi

from .logdomain import LogValue, logsumexp_positive, signed_logsumexp
from . import liecore
from .liecore import RootSystem, ShiftedWeight
from .quadrature import (DEFAULT_SPEC, QuadratureSpec, gaussian_weighted,
                         integrate_log_panels, kappa_from_log, mc_integrate,
                         integrate_1d)

__all__ = [
    "PlanckPoint",
    "WeightParams",
    "ModelSpec",
    "CurvatureDensity",
    "CurvatureOptions",
    "FlatnessResult",
    "weight_params",
    "p_group_quadrature",
    "p_group_closed",
    "p_torus_closed",
    "p_su2_closed",
    "spherical_phi",
    "legendre_value",
    "p_sphere",
    "p_truncated_circle",
    "truncated_circle_kappa_limit",
    "curvature",
    "flatness_classify",
    "sphere_asymptote",
    "weyl_reduction_check",
    "model_log_p",
]

MAX_SPHERE_INDEX = 200


@dataclass(frozen=True)
class PlanckPoint:
    """A point of the parameter half-plane; Im s is the Planck parameter."""

    s: complex

    def __post_init__(self):
        if self.s.imag <= 0:
            raise ValueError(f"Im s must be positive, got s = {self.s}")

    @property
    def y(self) -> float:
        return self.s.imag


def _as_complex(s) -> complex:
    if isinstance(s, PlanckPoint):
        return s.s
    s = complex(s)
    if s.imag <= 0:
        raise ValueError(f"Im s must be positive, got s = {s}")
    return s


@dataclass(frozen=True)
class WeightParams:
    a: float
    b: float
    corrected: bool
    m: int


def weight_params(s, m: int, corrected: bool) -> WeightParams:
    """Gaussian weight coefficients a(s) = -1/Im s and the log-volume offset
    b(s) = -(m/2) log Im s (corrected) or -m log Im s (bare)."""
    y = _as_complex(s).imag
    a = -1.0 / y
    b = -(m / 2.0 if corrected else float(m)) * math.log(y)
    return WeightParams(a=a, b=b, corrected=corrected, m=m)


@dataclass(frozen=True)
class ModelSpec:
    """A quantization target: Group(root system), Torus(m), Sphere(m) or
    TruncatedCircle(r), plus the half-form correction flag and the character
    index."""

    variant: str                      # group | torus | sphere | truncated-circle
    corrected: bool
    weight_index: object              # int k or ShiftedWeight
    root_system: Optional[RootSystem] = None
    m: Optional[int] = None
    r: Optional[float] = None

    def __post_init__(self):
        if self.variant not in ("group", "torus", "sphere", "truncated-circle"):
            raise ValueError(f"unknown model variant {self.variant!r}")
        if self.variant == "group" and self.root_system is None:
            raise ValueError("group model needs a root system")
        if self.variant == "torus" and (self.m is None or self.m < 1):
            raise ValueError("torus model needs m >= 1")
        if self.variant == "sphere":
            if self.m is None or self.m < 2:
                raise ValueError("sphere model needs m >= 2")
            if not self.corrected:
                raise ValueError(
                    "bare sphere quantization is not supported: only the "
                    "half-form corrected weight is defined for spheres")
        if self.variant == "truncated-circle" and (self.r is None or self.r <= 0):
            raise ValueError("truncated-circle model needs r > 0")

    @classmethod
    def group(cls, rs: RootSystem, k, corrected: bool = True) -> "ModelSpec":
        return cls("group", corrected, k, root_system=rs)

    @classmethod
    def torus(cls, m: int, k, corrected: bool = False) -> "ModelSpec":
        return cls("torus", corrected, k, m=m)

    @classmethod
    def sphere(cls, m: int, k: int) -> "ModelSpec":
        return cls("sphere", True, k, m=m)

    @classmethod
    def truncated_circle(cls, r: float, k: int,
                         corrected: bool = False) -> "ModelSpec":
        return cls("truncated-circle", corrected, k, r=r)

    def label(self) -> str:
        if self.variant == "group":
            return f"group:{self.root_system.name or 'custom'}"
        if self.variant == "torus":
            return f"torus:{self.m}"
        if self.variant == "sphere":
            return f"sphere:{self.m}"
        return f"circle:{self.r:g}"

    def shifted_weight(self) -> ShiftedWeight:
        if isinstance(self.weight_index, ShiftedWeight):
            return self.weight_index
        if self.variant == "group":
            rs = self.root_system
            if rs.name == "su2":
                return liecore.su2_weight(int(self.weight_index))
            if not rs.positive_roots:
                return liecore.torus_weight(rs.rank, self.weight_index)
            raise ValueError(
                "pass a ShiftedWeight explicitly for this root system")
        if self.variant == "torus":
            return liecore.torus_weight(self.m, self.weight_index)
        raise ValueError("sphere / truncated-circle models use an integer index")


@dataclass(frozen=True)
class CurvatureDensity:
    kappa: float
    s: complex
    weight_index: object
    method: str                        # closed-form | quadrature+FD
    cross_check: Optional[float] = None   # kappa from the other path, if any

    def __post_init__(self):
        if self.method not in ("closed-form", "quadrature+FD"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class CurvatureOptions:
    h_rel: float = 1e-3
    quad_h_rel: float = 3e-3           # step for quadrature-backed log p
    method: str = "auto"               # auto | closed-form | quadrature+FD
    check_x_derivative: bool = False   # add the (identically zero) x-term
    closed_agreement_factor: float = 10.0
    spec: QuadratureSpec = DEFAULT_SPEC


# ---------------------------------------------------------------------------
# group engines
# ---------------------------------------------------------------------------

def _tensor_hermite_log(dim: int, a: float, mu: np.ndarray,
                        poly_log: Optional[Callable[[np.ndarray], tuple]],
                        order: int) -> LogValue:
    """log of int_{R^dim} e^{a|u|^2 + 2 mu.u} P(u) du by centered tensor
    Gauss-Hermite; poly_log maps a (N, dim) node array to (log|P|, sign P)."""
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    sqa = math.sqrt(-a)
    grids = np.meshgrid(*([nodes] * dim), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=-1)        # (N, dim)
    logw = np.zeros(pts.shape[0])
    for d in range(dim):
        logw += np.log(weights)[np.searchsorted(nodes, pts[:, d])]
    u = pts / sqa + mu[None, :] / (-a)
    prefactor = float(mu @ mu) / (-a) - dim * math.log(sqa)
    if poly_log is None:
        return LogValue.from_log(logsumexp_positive(logw) + prefactor, 1)
    plog, psign = poly_log(u)
    out = signed_logsumexp(logw + plog, psign)
    if out.sign == 0:
        return out
    return LogValue.from_log(out.log_magnitude + prefactor, out.sign)


def p_group_quadrature(s, rs: RootSystem, lam: ShiftedWeight,
                       corrected: bool,
                       spec: QuadratureSpec = DEFAULT_SPEC) -> LogValue:
    """The reduced torus integral for a compact group, up to constants.

    corrected:  int_t e^{a|tau|^2 + b + 2 lambda(tau)} prod_{R+} alpha(tau) dtau
    bare:       the same with prod alpha(tau)^2 / sinh alpha(tau) instead.

    The corrected integrand is polynomial-times-Gaussian and is evaluated
    exactly by centered tensor Gauss-Hermite in metric-orthonormal
    coordinates; the bare path (rank 1 only when roots are present) uses
    fixed log-domain Gauss-Legendre panels so it stays smooth in s.
    """
    sc = _as_complex(s)
    if rs.positive_roots and rs.rank > 2:
        raise ValueError("quadrature path with roots needs rank <= 2")
    if rs.rank > 4:
        raise ValueError("tensor quadrature capped at rank 4")
    wp = weight_params(sc, rs.manifold_dim, corrected)
    a = wp.a
    M = liecore.orthonormal_change_of_basis(rs)
    lam_u = M.T @ lam.as_array()          # lambda(M u) = (M^T c) . u
    roots_u = (rs.roots_array() @ M) if rs.positive_roots else np.zeros((0, rs.rank))
    log_det_M = math.log(abs(np.linalg.det(M)))

    if corrected or not rs.positive_roots:
        if roots_u.shape[0] == 0:
            poly = None
        else:
            def poly(u: np.ndarray):
                vals = u @ roots_u.T                       # (N, n_roots)
                logp = np.sum(np.log(np.abs(vals) + 1e-300), axis=1)
                sign = np.prod(np.sign(vals), axis=1).astype(int)
                return logp, sign
        order = max(spec.hermite_order, 2 * len(rs.positive_roots) + 8)
        out = _tensor_hermite_log(rs.rank, a, lam_u, poly, order)
        return LogValue.from_log(out.log_magnitude + wp.b + log_det_M, out.sign)

    if rs.rank != 1:
        raise ValueError("bare quadrature with roots present needs rank 1")
    lam1 = float(lam_u[0])
    alphas = roots_u[:, 0]
    y = sc.imag
    sigma = math.sqrt(y / 2.0)
    center = max(lam1 * y, 0.0)
    lo = -(spec.truncation_radius_sigma * sigma + 1.0)
    hi = center + spec.truncation_radius_sigma * sigma + 1.0
    width = max(sigma / 2.0, (hi - lo) / 400.0)
    n_panels = max(32, int(math.ceil((hi - lo) / width)))
    breakpoints = np.linspace(lo, hi, n_panels + 1)

    def log_f(u: np.ndarray) -> np.ndarray:
        out = a * u * u + 2.0 * lam1 * u
        for al in alphas:
            x = al * u
            ax = np.abs(x)
            # log |alpha^2 / sinh alpha|, stable for large |x|
            log_sinh = ax + np.log1p(-np.exp(-2 * ax)) - math.log(2.0)
            small = ax < 1e-8
            log_sinh = np.where(small, np.log(np.maximum(ax, 1e-300)), log_sinh)
            out += 2.0 * np.log(np.maximum(ax, 1e-300)) - log_sinh
        return out

    def signs_f(u: np.ndarray) -> np.ndarray:
        sgn = np.ones_like(u)
        for al in alphas:
            sgn *= np.sign(al * u)
        return sgn.astype(int)

    out = integrate_log_panels(log_f, breakpoints, spec.panel_nodes, signs_f)
    if out.sign == 0:
        return out
    return LogValue.from_log(out.log_magnitude + wp.b + log_det_M, out.sign)


def p_group_closed(s, rs: RootSystem, lam: ShiftedWeight) -> LogValue:
    """Corrected group manifolds: log p = |lambda*|^2 Im s + const.

    The Im s power vanishes because the manifold dimension satisfies
    m = rank + 2 |R+|, which the RootSystem invariant enforces.
    """
    y = _as_complex(s).imag
    return LogValue.from_log(liecore.dual_norm_sq(rs, lam) * y, 1)


def p_torus_closed(s, m: int, lam: ShiftedWeight, corrected: bool) -> LogValue:
    """Commutative closed form: the Gaussian integral evaluates exactly,
    log p = (m/2) log y + b(s) + |lambda*|^2 y + const."""
    y = _as_complex(s).imag
    wp = weight_params(s, m, corrected)
    lv = lam.as_array()
    if lv.size != m:
        raise ValueError("weight length != torus rank")
    return LogValue.from_log((m / 2.0) * math.log(y) + wp.b + float(lv @ lv) * y, 1)


def p_su2_closed(s, k: int) -> LogValue:
    """Bare SU(2): log of (Im s)^{-3/2} sum_j e^{(k-2j)^2 y} (1 + 2 (k-2j)^2 y)."""
    if k < 0 or int(k) != k:
        raise ValueError("k must be a nonnegative integer")
    y = _as_complex(s).imag
    logs = [(k - 2 * j) ** 2 * y + math.log1p(2.0 * (k - 2 * j) ** 2 * y)
            for j in range(k + 1)]
    return LogValue.from_log(logsumexp_positive(logs) - 1.5 * math.log(y), 1)


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------

def _log_cosh_arg(t, c):
    """log(cosh 2t + sinh 2t * c) for t >= 0, c in [-1, 1], overflow-safe."""
    t = np.asarray(t, dtype=float)
    c = np.asarray(c, dtype=float)
    return 2.0 * t - math.log(2.0) + np.log((1.0 + c) + np.exp(-4.0 * t) * (1.0 - c))


def _jacobi_nodes(k: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    n = max(48, k // 2 + 8)
    alpha = (m - 3) / 2.0
    return roots_jacobi(n, alpha, alpha)


def spherical_phi(k: int, m: int, t: float,
                  nodes: Optional[tuple] = None) -> LogValue:
    """log of int_0^pi (cosh 2t + sinh 2t cos u)^k sin^{m-2} u du.

    Substituting c = cos u turns this into a Gauss-Jacobi integral with
    weight (1-c^2)^{(m-3)/2}, exact for the degree-k polynomial integrand.
    """
    if k < 0 or m < 2 or t < 0:
        raise ValueError("need k >= 0, m >= 2, t >= 0")
    c, w = nodes if nodes is not None else _jacobi_nodes(k, m)
    logs = np.log(w) + k * _log_cosh_arg(t, c)
    return LogValue.from_log(logsumexp_positive(logs), 1)


def legendre_value(k: int, x: float) -> float:
    """Legendre polynomial by the three-term recurrence (oracle for m = 2)."""
    if k == 0:
        return 1.0
    prev, cur = 1.0, x
    for n in range(1, k):
        prev, cur = cur, ((2 * n + 1) * x * cur - n * prev) / (n + 1)
    return cur


def _log_sinh_pos(x: np.ndarray) -> np.ndarray:
    """log sinh x for x > 0, overflow-safe, -inf at 0."""
    with np.errstate(divide="ignore"):
        return x + np.log1p(-np.exp(-2.0 * x)) - math.log(2.0)


def p_sphere(s, k: int, m: int,
             spec: QuadratureSpec = DEFAULT_SPEC) -> LogValue:
    """Half-form corrected sphere engine:

    log p = b(s) + log int_0^inf e^{a t^2} (sinh 2t)^q t^q phi_k(t) dt,
    q = (m-1)/2, with both integrals in the log domain.  The outer panels
    follow the Gaussian peak at t = (k+q) Im s smoothly in s, keeping the
    result differentiable under the curvature stencil.
    """
    if m < 2:
        raise ValueError("sphere needs m >= 2")
    if k < 0 or k > MAX_SPHERE_INDEX:
        raise ValueError(f"k must be in [0, {MAX_SPHERE_INDEX}]")
    sc = _as_complex(s)
    y = sc.imag
    q = (m - 1) / 2.0
    wp = weight_params(sc, m, corrected=True)
    a = wp.a
    nodes = _jacobi_nodes(k, m)
    c, w = nodes
    logw = np.log(w)

    t_peak = (k + q) * y
    sigma = math.sqrt(y / 2.0)
    hi = t_peak + spec.truncation_radius_sigma * sigma + 1.0
    width = sigma / 2.0
    n_panels = min(800, max(48, int(math.ceil(hi / width))))
    breakpoints = np.linspace(0.0, hi, n_panels + 1)

    def log_f(t: np.ndarray) -> np.ndarray:
        # inner character integral, vectorized over the outer abscissae
        inner = logw[None, :] + k * _log_cosh_arg(t[:, None], c[None, :])
        shift = inner.max(axis=1)
        log_phi = shift + np.log(np.sum(np.exp(inner - shift[:, None]), axis=1))
        with np.errstate(divide="ignore"):
            log_t = np.log(t)
        return a * t * t + q * (_log_sinh_pos(2.0 * t) + log_t) + log_phi

    out = integrate_log_panels(log_f, breakpoints, spec.panel_nodes)
    return LogValue.from_log(out.log_magnitude + wp.b, 1)


# ---------------------------------------------------------------------------
# truncated circle
# ---------------------------------------------------------------------------

def _circle_breakpoints(r: float) -> np.ndarray:
    """Fixed panels on [-r, r], geometrically refined toward both endpoints
    (the integrand mass concentrates at an endpoint for large k)."""
    edges = [r - r * 2.0 ** (-j) for j in range(1, 46)]
    pts = sorted(set([-r, 0.0, r] + edges + [-e for e in edges]
                     + list(np.linspace(-r, r, 17))))
    return np.array(pts)


def p_truncated_circle(s, k: int, r: float, corrected: bool,
                       spec: QuadratureSpec = DEFAULT_SPEC) -> LogValue:
    """log of int_{-r}^{r} e^{a zeta^2 + b + 2 k zeta} d zeta (m = 1)."""
    if r <= 0:
        raise ValueError("r must be positive")
    sc = _as_complex(s)
    wp = weight_params(sc, 1, corrected)
    a = wp.a

    def log_f(z: np.ndarray) -> np.ndarray:
        return a * z * z + 2.0 * k * z

    out = integrate_log_panels(log_f, _circle_breakpoints(r), 16)
    return LogValue.from_log(out.log_magnitude + wp.b, 1)


def truncated_circle_kappa_limit(r: float, s, corrected: bool) -> float:
    """kappa_inf = (1/4) d^2/dy^2 (a(y) r^2 + b(y)): the k -> infinity limit."""
    y = _as_complex(s).imag
    c_b = 0.5 if corrected else 1.0
    return 0.25 * (-2.0 * r * r / y ** 3 + c_b / y ** 2)


# ---------------------------------------------------------------------------
# curvature dispatch and classification
# ---------------------------------------------------------------------------

def model_log_p(model: ModelSpec, spec: QuadratureSpec = DEFAULT_SPEC,
                closed: bool = False) -> Callable[[complex], LogValue]:
    """The log-p engine of a model as a function of s."""
    if model.variant == "group":
        lam = model.shifted_weight()
        if closed:
            if not model.corrected:
                if model.root_system.name == "su2":
                    return lambda s: p_su2_closed(s, int(model.weight_index))
                if not model.root_system.positive_roots:
                    return lambda s: p_torus_closed(
                        s, model.root_system.rank, lam, model.corrected)
                raise ValueError("no bare closed form for this root system")
            return lambda s: p_group_closed(s, model.root_system, lam)
        return lambda s: p_group_quadrature(s, model.root_system, lam,
                                            model.corrected, spec)
    if model.variant == "torus":
        lam = model.shifted_weight()
        if closed:
            return lambda s: p_torus_closed(s, model.m, lam, model.corrected)
        rs = liecore.torus(model.m)
        return lambda s: p_group_quadrature(s, rs, lam, model.corrected, spec)
    if model.variant == "sphere":
        if closed:
            raise ValueError("no closed form for spheres")
        return lambda s: p_sphere(s, int(model.weight_index), model.m, spec)
    if closed:
        raise ValueError("no closed form for the truncated circle")
    return lambda s: p_truncated_circle(s, int(model.weight_index), model.r,
                                        model.corrected, spec)


def _has_closed_form(model: ModelSpec) -> bool:
    try:
        model_log_p(model, closed=True)
    except ValueError:
        return False
    return True


def curvature(model: ModelSpec, s,
              options: CurvatureOptions = CurvatureOptions()) -> CurvatureDensity:
    """Curvature density of a model at s.

    Dispatches to the model's p engine and differentiates log p.  When a
    closed form exists both paths are computed and must agree within
    ``closed_agreement_factor`` times the finite-difference step tolerance.
    """
    sc = _as_complex(s)
    im_only = not options.check_x_derivative

    def kappa_of(path_closed: bool, h_rel: float) -> float:
        p = model_log_p(model, options.spec, closed=path_closed)
        return kappa_from_log(p, sc, h_rel=h_rel, im_only=im_only)

    closed_available = _has_closed_form(model)
    method = options.method
    if method == "auto":
        method = "quadrature+FD"
    if method == "closed-form" and not closed_available:
        raise ValueError(f"no closed form for model {model.label()}")

    if method == "closed-form":
        kap = kappa_of(True, options.h_rel)
        cross = kappa_of(False, options.quad_h_rel)
    else:
        kap = kappa_of(False, options.quad_h_rel)
        cross = kappa_of(True, options.h_rel) if closed_available else None

    if cross is not None:
        tol = options.closed_agreement_factor * max(options.quad_h_rel ** 2, 1e-6)
        if abs(kap - cross) > tol:
            raise ArithmeticError(
                f"curvature paths disagree for {model.label()} at s={sc}: "
                f"{kap} vs {cross}")
    return CurvatureDensity(kappa=kap, s=sc, weight_index=model.weight_index,
                            method=method, cross_check=cross)


@dataclass(frozen=True)
class FlatnessResult:
    verdict: str                      # Flat | ProjectivelyFlat | NotProjectivelyFlat
    max_abs_kappa: float
    max_gap: float
    witness: Optional[tuple] = None   # (k, k', s, gap)
    table: tuple = ()                 # ((k, s, kappa), ...)


def flatness_classify(base_model: ModelSpec, k_values: Sequence,
                      s_values: Sequence, tol: float = 1e-5,
                      options: CurvatureOptions = CurvatureOptions()
                      ) -> FlatnessResult:
    """Classify a family of isotypical curvatures.

    Flat: all |kappa| <= tol.  ProjectivelyFlat: kappa nonzero but the same
    for every character index at each s (within tol).  Otherwise the worst
    (k, k', s) witness and the kappa gap are reported.
    """
    k_values = list(k_values)
    s_values = [_as_complex(s) for s in s_values]
    if len(k_values) < 2 or len(s_values) < 2:
        raise ValueError("need at least two weight indices and two s values")
    table = []
    for s in s_values:
        for k in k_values:
            model = replace(base_model, weight_index=k)
            table.append((k, s, curvature(model, s, options).kappa))
    max_abs = max(abs(row[2]) for row in table)
    witness = None
    max_gap = 0.0
    for s in s_values:
        rows = [(k, kap) for (k, ss, kap) in table if ss == s]
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                gap = abs(rows[i][1] - rows[j][1])
                if gap > max_gap:
                    max_gap = gap
                    witness = (rows[i][0], rows[j][0], s, gap)
    if max_abs <= tol:
        verdict = "Flat"
    elif max_gap <= tol:
        verdict = "ProjectivelyFlat"
    else:
        verdict = "NotProjectivelyFlat"
    return FlatnessResult(verdict, max_abs, max_gap,
                          witness if verdict == "NotProjectivelyFlat" else None,
                          tuple(table))


def sphere_asymptote(k: int, m: int, s) -> float:
    """Large-k curvature coefficient (m-1)(m-3) / (8 (2k+m-1)^2 (Im s)^3)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    y = _as_complex(s).imag
    return (m - 1) * (m - 3) / (8.0 * (2 * k + m - 1) ** 2 * y ** 3)


@dataclass(frozen=True)
class ReductionCheck:
    ratio_3d: float
    ratio_3d_sigma: float
    ratio_1d: float
    agrees: bool


def weyl_reduction_check(f1: Callable[[float], float],
                         f2: Callable[[float], float],
                         seed: int,
                         samples: int = 200_000,
                         radius: float = 6.0,
                         rs: Optional[RootSystem] = None) -> ReductionCheck:
    """Cross-check of the adjoint-orbit reduction for su(2).

    Ratios of integrals of two radial profiles over the full 3-dimensional
    algebra (Monte Carlo) must match the ratios of the reduced 1-D torus
    integrals with density prod_{alpha in R} |alpha(tau)| = 4 t^2.
    Normalization constants cancel in the ratios.
    """
    rs = rs or liecore.su2()
    roots = rs.roots_array()[:, 0]

    def density(t: float) -> float:
        # prod over the full root set = prod over R+ of alpha(t)^2
        return float(np.prod([(al * t) ** 2 for al in roots]))

    i3 = []
    for idx, f in enumerate((f1, f2)):
        res = mc_integrate(lambda p: f(float(np.linalg.norm(p))),
                           ("ball", [0.0, 0.0, 0.0], radius),
                           samples, seed + idx)
        i3.append(res)
    i1 = []
    for f in (f1, f2):
        res = integrate_1d(lambda t: f(abs(t)) * density(t), (-radius, radius))
        i1.append(res.value)
    ratio3 = i3[0].value / i3[1].value
    sig = abs(ratio3) * math.sqrt((i3[0].stderr / i3[0].value) ** 2
                                  + (i3[1].stderr / i3[1].value) ** 2)
    ratio1 = i1[0] / i1[1]
    return ReductionCheck(ratio3, sig, ratio1, abs(ratio3 - ratio1) <= 3.0 * sig)

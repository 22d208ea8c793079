"""Finite-rank fields of Hilbert spaces over a parameter domain: connection
forms, curvature two-forms, flatness classification, parallel transport and
gauge trivialization.

A field is described by its connection coefficients A_i(x), one n x n complex
matrix per base direction; the curvature is

    R_ij(x) = d_i A_j - d_j A_i + [A_i, A_j].

``Flat`` means R vanishes identically (within tolerance on a sample grid);
``ProjectivelyFlat`` means R_ij(x) = r_ij(x) Id for a scalar two-form r, which
can then be removed by a line-bundle twist.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import RegularGridInterpolator

__all__ = [
    "ConnectionField",
    "BasePath",
    "CurvatureSample",
    "curvature_at",
    "FieldClass",
    "classify",
    "parallel_transport",
    "TrivializationResult",
    "trivialize",
    "twist_to_flat",
    "abelian_area_example",
    "connection_from_grid",
    "export_grid",
]


@dataclass(frozen=True)
class ConnectionField:
    """Connection coefficients of a rank-n field over an open box in R^d.

    ``coefficients(x)`` returns an array of shape (d, n, n): the matrix of the
    connection form against each coordinate direction.  ``derivatives``, when
    supplied, returns the exact partials dA[i, j] = d_i A_j with shape
    (d, d, n, n) and replaces the finite-difference fallback.
    """

    coefficients: Callable[[np.ndarray], np.ndarray]
    base_dim: int
    fiber_dim: int
    lows: tuple
    highs: tuple
    derivatives: Optional[Callable[[np.ndarray], np.ndarray]] = None
    label: str = ""

    def __post_init__(self):
        if len(self.lows) != self.base_dim or len(self.highs) != self.base_dim:
            raise ValueError("box bounds must match the base dimension")
        if any(h <= l for l, h in zip(self.lows, self.highs)):
            raise ValueError("box must have positive extent in every direction")

    def diameter(self) -> float:
        return math.sqrt(sum((h - l) ** 2 for l, h in zip(self.lows, self.highs)))

    def a_matrices(self, x) -> np.ndarray:
        out = np.asarray(self.coefficients(np.asarray(x, dtype=float)),
                         dtype=complex)
        expected = (self.base_dim, self.fiber_dim, self.fiber_dim)
        if out.shape != expected:
            raise ValueError(f"connection returned shape {out.shape}, "
                             f"expected {expected}")
        return out

    def grid(self, per_axis: int) -> np.ndarray:
        axes = [np.linspace(l, h, per_axis + 2)[1:-1]
                for l, h in zip(self.lows, self.highs)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


@dataclass(frozen=True)
class BasePath:
    """Piecewise-linear path through the base, given by its vertices."""

    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least two vertices")

    @classmethod
    def from_points(cls, points: Sequence) -> "BasePath":
        return cls(tuple(tuple(float(c) for c in p) for p in points))

    @classmethod
    def unit_square_loop(cls, origin=(0.0, 0.0), side: float = 1.0) -> "BasePath":
        x0, y0 = origin
        return cls.from_points([(x0, y0), (x0 + side, y0),
                                (x0 + side, y0 + side), (x0, y0 + side),
                                (x0, y0)])

    def is_loop(self, tol: float = 1e-12) -> bool:
        a = np.asarray(self.vertices[0])
        b = np.asarray(self.vertices[-1])
        return bool(np.linalg.norm(a - b) <= tol)

    def compose(self, other: "BasePath") -> "BasePath":
        if np.linalg.norm(np.asarray(self.vertices[-1])
                          - np.asarray(other.vertices[0])) > 1e-12:
            raise ValueError("paths do not concatenate: endpoint mismatch")
        return BasePath(self.vertices + other.vertices[1:])

    def reversed(self) -> "BasePath":
        return BasePath(tuple(reversed(self.vertices)))


@dataclass(frozen=True)
class CurvatureSample:
    point: tuple
    components: np.ndarray          # shape (d, d, n, n), antisymmetric in (i, j)

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.components)))

    def scalar_part(self) -> np.ndarray:
        """tr R_ij / n: the candidate abelian curvature r_ij."""
        n = self.components.shape[-1]
        return np.trace(self.components, axis1=2, axis2=3) / n

    def deviation_from_scalar(self) -> float:
        """How far R sits from r * Id (max norm of the traceless part)."""
        n = self.components.shape[-1]
        scalar = self.scalar_part()
        dev = self.components - scalar[..., None, None] * np.eye(n)
        return float(np.max(np.abs(dev)))


def curvature_at(fieldc: ConnectionField, point,
                 step: Optional[float] = None) -> CurvatureSample:
    """R_ij at a point; partials by central differences unless the field
    carries exact derivative callbacks.  Default step 1e-4 * box diameter."""
    x = np.asarray(point, dtype=float)
    d, n = fieldc.base_dim, fieldc.fiber_dim
    A = fieldc.a_matrices(x)
    if fieldc.derivatives is not None:
        dA = np.asarray(fieldc.derivatives(x), dtype=complex)
        if dA.shape != (d, d, n, n):
            raise ValueError("derivative callback returned a bad shape")
    else:
        h = step if step is not None else 1e-4 * fieldc.diameter()
        dA = np.empty((d, d, n, n), dtype=complex)
        for i in range(d):
            e = np.zeros(d)
            e[i] = h
            dA[i] = (fieldc.a_matrices(x + e) - fieldc.a_matrices(x - e)) / (2 * h)
    R = np.empty((d, d, n, n), dtype=complex)
    for i in range(d):
        for j in range(d):
            R[i, j] = dA[i, j] - dA[j, i] + A[i] @ A[j] - A[j] @ A[i]
    return CurvatureSample(tuple(x), R)


@dataclass(frozen=True)
class FieldClass:
    verdict: str                    # Flat | ProjectivelyFlat | NotProjectivelyFlat
    max_curvature: float
    max_scalar_deviation: float
    witness: Optional[CurvatureSample] = None
    scalar_field: Optional[Callable[[np.ndarray], np.ndarray]] = None


def classify(fieldc: ConnectionField, tol: float = 1e-8,
             samples_per_axis: int = 5) -> FieldClass:
    """Sample the curvature over an interior grid and classify the field."""
    worst_norm = 0.0
    worst_dev = 0.0
    witness = None
    for x in fieldc.grid(samples_per_axis):
        samp = curvature_at(fieldc, x)
        nrm = samp.max_norm()
        dev = samp.deviation_from_scalar()
        worst_norm = max(worst_norm, nrm)
        if dev > worst_dev:
            worst_dev = dev
            witness = samp
    if worst_norm <= tol:
        return FieldClass("Flat", worst_norm, worst_dev)
    if worst_dev <= tol:
        return FieldClass(
            "ProjectivelyFlat", worst_norm, worst_dev,
            scalar_field=lambda x: curvature_at(fieldc, x).scalar_part())
    return FieldClass("NotProjectivelyFlat", worst_norm, worst_dev, witness)


def parallel_transport(fieldc: ConnectionField, path: BasePath,
                       rtol: float = 1e-10, atol: float = 1e-12) -> np.ndarray:
    """Transport operator along the path: solves F' = -A(gamma') F segment by
    segment with a high-order explicit integrator on the real-flattened
    system.  Composition satisfies T(p1 * p2) = T(p2) T(p1)."""
    n = fiber = fieldc.fiber_dim
    T = np.eye(fiber, dtype=complex)
    for a, b in zip(path.vertices[:-1], path.vertices[1:]):
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        vel = b - a
        if not np.any(vel):
            continue

        def rhs(t, yflat):
            F = (yflat[:n * n] + 1j * yflat[n * n:]).reshape(n, n)
            A = fieldc.a_matrices(a + t * vel)
            dF = -np.tensordot(vel, A, axes=(0, 0)) @ F
            return np.concatenate([dF.real.ravel(), dF.imag.ravel()])

        y0 = np.concatenate([np.eye(n).ravel(), np.zeros(n * n)])
        sol = solve_ivp(rhs, (0.0, 1.0), y0, method="DOP853",
                        rtol=rtol, atol=atol)
        if not sol.success:
            raise ArithmeticError(f"transport integration failed: {sol.message}")
        seg = (sol.y[:n * n, -1] + 1j * sol.y[n * n:, -1]).reshape(n, n)
        T = seg @ T
    return T


@dataclass(frozen=True)
class TrivializationResult:
    gauge: Callable[[np.ndarray], np.ndarray]
    base_point: tuple
    path_independence: float        # worst loop defect found during the check
    gauge_residual: float           # worst |U^{-1}(dU + A U)| on the probe grid


def _staircase(base: np.ndarray, x: np.ndarray) -> BasePath:
    """Axis-aligned path from base to x, one coordinate at a time."""
    pts = [tuple(base)]
    cur = base.copy()
    for i in range(len(x)):
        cur = cur.copy()
        cur[i] = x[i]
        pts.append(tuple(cur))
    return BasePath.from_points(pts)


def trivialize(fieldc: ConnectionField, base_point=None,
               tol: float = 1e-6, probe_points: int = 3
               ) -> TrivializationResult:
    """Global gauge U with U^{-1} A U + U^{-1} dU = 0, built by transporting
    the identity frame along axis staircase paths from the base point.

    Refuses non-flat fields (the curvature witness rides on the exception).
    Path independence is verified by comparing the two extreme staircase
    orderings at each probe point, and the gauge residual dU + A U is checked
    by central differences.
    """
    cls = classify(fieldc, tol=tol)
    if cls.verdict != "Flat":
        raise ValueError(
            f"cannot trivialize a {cls.verdict} field: max curvature "
            f"{cls.max_curvature:.3e} at {cls.witness.point if cls.witness else '?'}")
    lows = np.asarray(fieldc.lows)
    highs = np.asarray(fieldc.highs)
    base = (np.asarray(base_point, dtype=float) if base_point is not None
            else 0.5 * (lows + highs))

    def gauge(x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return parallel_transport(fieldc, _staircase(base, x))

    worst_loop = 0.0
    worst_res = 0.0
    h = 1e-5 * fieldc.diameter()
    for x in fieldc.grid(probe_points):
        fwd = _staircase(base, x)
        rev_pts = [tuple(base)]
        cur = base.copy()
        for i in reversed(range(len(x))):
            cur = cur.copy()
            cur[i] = x[i]
            rev_pts.append(tuple(cur))
        alt = BasePath.from_points(rev_pts)
        U1 = parallel_transport(fieldc, fwd)
        U2 = parallel_transport(fieldc, alt)
        worst_loop = max(worst_loop, float(np.max(np.abs(U1 - U2))))
        A = fieldc.a_matrices(x)
        U = U1
        for i in range(fieldc.base_dim):
            e = np.zeros(fieldc.base_dim)
            e[i] = h
            dU = (gauge(x + e) - gauge(x - e)) / (2 * h)
            res = np.linalg.solve(U, dU + A[i] @ U)
            worst_res = max(worst_res, float(np.max(np.abs(res))))
    if worst_loop > tol:
        raise ArithmeticError(
            f"trivialization is path dependent: loop defect {worst_loop:.3e}")
    return TrivializationResult(gauge, tuple(base), worst_loop, worst_res)


def twist_to_flat(fieldc: ConnectionField,
                  abelian_potential: Callable[[np.ndarray], np.ndarray],
                  tol: float = 1e-6) -> ConnectionField:
    """Remove the scalar part of a projectively flat field.

    ``abelian_potential(x)`` supplies a one-form a = (a_1 .. a_d) with
    da = -r, r the scalar curvature of the field; the twisted connection
    A_i + a_i Id is then verified (by finite differences at the box center)
    to have curvature purely from its traceless part.
    """
    cls = classify(fieldc, tol=tol)
    if cls.verdict == "Flat":
        return fieldc
    if cls.verdict != "ProjectivelyFlat":
        raise ValueError("twist_to_flat needs a projectively flat field, got "
                         + cls.verdict)
    d, n = fieldc.base_dim, fieldc.fiber_dim
    eye = np.eye(n)

    def twisted(x: np.ndarray) -> np.ndarray:
        a = np.asarray(abelian_potential(x), dtype=complex)
        if a.shape != (d,):
            raise ValueError("abelian potential must return one value per axis")
        return fieldc.a_matrices(x) + a[:, None, None] * eye

    out = ConnectionField(twisted, d, n, fieldc.lows, fieldc.highs,
                          label=(fieldc.label + "+twist").lstrip("+"))
    center = 0.5 * (np.asarray(fieldc.lows) + np.asarray(fieldc.highs))
    # da must cancel r: check at the center before handing the field back
    h = 1e-4 * fieldc.diameter()
    r = curvature_at(fieldc, center).scalar_part()
    for i in range(d):
        for j in range(d):
            ei = np.zeros(d); ei[i] = h
            ej = np.zeros(d); ej[j] = h
            da_ij = ((abelian_potential(center + ei)[j]
                      - abelian_potential(center - ei)[j]) / (2 * h)
                     - (abelian_potential(center + ej)[i]
                        - abelian_potential(center - ej)[i]) / (2 * h))
            if abs(da_ij + r[i, j]) > 100 * tol:
                raise ArithmeticError(
                    f"potential does not cancel the scalar curvature at "
                    f"component ({i},{j}): da={da_ij:.6e}, r={r[i, j]:.6e}")
    residual = classify(out, tol=tol)
    if residual.verdict != "Flat":
        raise ArithmeticError(
            f"twisted field is still {residual.verdict} "
            f"(max curvature {residual.max_curvature:.3e})")
    return out


def abelian_area_example(scale: float = 1.0, fiber_dim: int = 2,
                         box=((-1.0, -1.0), (1.5, 1.5))) -> ConnectionField:
    """The standard projectively flat example A_x = i scale * y Id, A_y = 0.

    Its curvature is r_xy = -i scale, so holonomy around a loop is
    exp(i scale * area) Id and the twist a_x = -i scale * y flattens it.
    """
    n = fiber_dim
    eye = np.eye(n, dtype=complex)

    def coeffs(x: np.ndarray) -> np.ndarray:
        A = np.zeros((2, n, n), dtype=complex)
        A[0] = 1j * scale * x[1] * eye
        return A

    def derivs(x: np.ndarray) -> np.ndarray:
        dA = np.zeros((2, 2, n, n), dtype=complex)
        dA[1, 0] = 1j * scale * eye
        return dA

    return ConnectionField(coeffs, 2, n, box[0], box[1], derivatives=derivs,
                           label="abelian-area")


# ---------------------------------------------------------------------------
# grid serialization
# ---------------------------------------------------------------------------

def connection_from_grid(payload: dict | str) -> ConnectionField:
    """Rebuild a connection from a grid sample (dict or JSON text).

    Expected keys: ``axes`` (list of strictly increasing node lists),
    ``fiber_dim``, and ``values`` with shape
    (d, len(axes[0]), ..., len(axes[d-1]), n, n, 2) -- the trailing axis holds
    (real, imag).  Evaluation interpolates each matrix entry linearly.
    """
    if isinstance(payload, str):
        payload = json.loads(payload)
    axes = [np.asarray(a, dtype=float) for a in payload["axes"]]
    n = int(payload["fiber_dim"])
    d = len(axes)
    vals = np.asarray(payload["values"], dtype=float)
    expected = (d,) + tuple(a.size for a in axes) + (n, n, 2)
    if vals.shape != expected:
        raise ValueError(f"grid values have shape {vals.shape}, "
                         f"expected {expected}")
    cplx = vals[..., 0] + 1j * vals[..., 1]
    interps = [RegularGridInterpolator(axes, cplx[i], method="linear")
               for i in range(d)]

    def coeffs(x: np.ndarray) -> np.ndarray:
        return np.stack([it(x)[0] for it in interps])

    return ConnectionField(coeffs, d, n,
                           tuple(float(a[0]) for a in axes),
                           tuple(float(a[-1]) for a in axes),
                           label=str(payload.get("label", "grid")))


def export_grid(fieldc: ConnectionField, per_axis: int = 9) -> dict:
    """Sample a connection on a regular grid into the JSON-ready layout that
    ``connection_from_grid`` accepts."""
    axes = [np.linspace(l, h, per_axis)
            for l, h in zip(fieldc.lows, fieldc.highs)]
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=-1)
    d, n = fieldc.base_dim, fieldc.fiber_dim
    shape = (d,) + tuple(a.size for a in axes) + (n, n)
    vals = np.empty(shape, dtype=complex)
    flat = vals.reshape(d, -1, n, n)
    for idx, p in enumerate(pts):
        A = fieldc.a_matrices(p)
        for i in range(d):
            flat[i, idx] = A[i]
    stacked = np.stack([vals.real, vals.imag], axis=-1)
    return {"axes": [a.tolist() for a in axes], "fiber_dim": n,
            "label": fieldc.label, "values": stacked.tolist()}

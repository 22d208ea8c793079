"""Root-system data, Weyl characters, adjoint operators and half-form densities.

Shipped presets: tori of rank 1-3, su(2), su(3) and the symmetric pairs
so(m+1)/so(m) for m <= 6.  Higher-rank data can be loaded from JSON but is
outside the tested envelope.

Normalization: every preset fixes an explicit inner product on the Cartan
subalgebra; the su(2) preset uses |tau|^2 = t^2 with positive root
alpha(t) = 2t, so the shifted weight of the k-th irreducible character is
lambda(t) = (k+1)t and |lambda*|^2 = (k+1)^2.
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .logdomain import LogValue, signed_logsumexp

logger = logging.getLogger(__name__)

__all__ = [
    "WeylElement",
    "RootSystem",
    "ShiftedWeight",
    "AdjointData",
    "CharacterValue",
    "torus",
    "su2",
    "su3",
    "su2_adjoint",
    "su3_adjoint",
    "so_pair_adjoint",
    "su2_weight",
    "torus_weight",
    "root_system_from_json",
    "root_product",
    "weyl_denominator",
    "character_at",
    "ad_matrix",
    "half_form_density_group",
    "symmetric_A_operators",
    "half_form_density_sphere",
    "dual_norm_sq",
]


@dataclass(frozen=True)
class WeylElement:
    """An orthogonal map on the Cartan subalgebra together with its sign."""

    matrix: tuple
    det: int

    def as_array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=float)


@dataclass(frozen=True)
class RootSystem:
    rank: int
    positive_roots: tuple            # linear forms, coefficient tuples
    weyl_elements: tuple             # WeylElement instances
    inner_product: tuple             # SPD matrix on the Cartan subalgebra
    manifold_dim: int                # dim of the underlying group manifold
    name: str = ""

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        for alpha in self.positive_roots:
            if len(alpha) != self.rank:
                raise ValueError("root coefficient length != rank")
        if self.manifold_dim != self.rank + 2 * len(self.positive_roots):
            raise ValueError(
                "manifold_dim must equal rank + 2 * (number of positive roots)")
        G = self.gram()
        if G.shape != (self.rank, self.rank) or not np.allclose(G, G.T):
            raise ValueError("inner_product must be a symmetric rank x rank matrix")
        if np.any(np.linalg.eigvalsh(G) <= 0):
            raise ValueError("inner_product must be positive definite")
        for w in self.weyl_elements:
            if w.det not in (1, -1):
                raise ValueError("Weyl element determinant must be +-1")

    def gram(self) -> np.ndarray:
        return np.asarray(self.inner_product, dtype=float)

    def roots_array(self) -> np.ndarray:
        return np.asarray(self.positive_roots, dtype=float).reshape(
            len(self.positive_roots), self.rank)

    def rho(self) -> np.ndarray:
        """Half sum of the positive roots, as a linear form."""
        if not self.positive_roots:
            return np.zeros(self.rank)
        return 0.5 * self.roots_array().sum(axis=0)

    def norm_sq(self, tau: Sequence[float]) -> float:
        t = np.asarray(tau, dtype=float)
        return float(t @ self.gram() @ t)

    def check_weyl_closure(self, atol: float = 1e-10) -> bool:
        """Each Weyl element must permute the root set R+ cup -R+."""
        roots = self.roots_array()
        if roots.size == 0:
            return True
        full = np.vstack([roots, -roots])
        for w in self.weyl_elements:
            mapped = roots @ w.as_array()
            for row in mapped:
                if not np.any(np.all(np.abs(full - row) < atol, axis=1)):
                    return False
        return True


@dataclass(frozen=True)
class ShiftedWeight:
    """Highest weight plus the half-sum of positive roots, as a linear form."""

    coefficients: tuple
    source_label: object = None

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)


@dataclass(frozen=True)
class CharacterValue:
    value: float
    regularized: bool = False


@dataclass(frozen=True)
class AdjointData:
    """Structure constants of a compact Lie algebra in an orthonormal basis.

    ``orthogonal_split`` marks an isotropy/complement decomposition
    (index lists into the basis) for symmetric pairs; ``torus_embedding``
    maps Cartan coordinates into the algebra so the torus-restricted and
    matrix-function evaluation paths can be compared.
    """

    structure_constants: np.ndarray          # c[i, j, k]: [e_i, e_j] = c_ijk e_k
    rank: int
    orthogonal_split: Optional[tuple] = None  # (go_indices, p_indices)
    torus_embedding: Optional[np.ndarray] = None  # (dim, rank)
    name: str = ""

    @property
    def dim(self) -> int:
        return self.structure_constants.shape[0]

    @property
    def dim_p(self) -> int:
        if self.orthogonal_split is None:
            raise ValueError("no orthogonal split present")
        return len(self.orthogonal_split[1])

    def __post_init__(self):
        c = self.structure_constants
        if c.ndim != 3 or len(set(c.shape)) != 1:
            raise ValueError("structure constants must be a cubic array")
        if not np.allclose(c, -np.swapaxes(c, 0, 1), atol=1e-12):
            raise ValueError("structure constants must be antisymmetric in the "
                             "first two indices")

    def check_symmetric_pair(self, atol: float = 1e-10) -> bool:
        """[p, p] subset g_o, verified on the basis from the constants."""
        if self.orthogonal_split is None:
            return False
        go, p = self.orthogonal_split
        c = self.structure_constants
        for i in p:
            for j in p:
                for k in p:
                    if abs(c[i, j, k]) > atol:
                        return False
        return True


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def torus(rank: int) -> RootSystem:
    """Commutative preset: no roots, trivial Weyl group, identity metric."""
    ident = WeylElement(tuple(map(tuple, np.eye(rank))), 1)
    return RootSystem(rank=rank, positive_roots=(),
                      weyl_elements=(ident,),
                      inner_product=tuple(map(tuple, np.eye(rank))),
                      manifold_dim=rank, name=f"torus{rank}")


def su2() -> RootSystem:
    return RootSystem(
        rank=1,
        positive_roots=((2.0,),),
        weyl_elements=(WeylElement(((1.0,),), 1), WeylElement(((-1.0,),), -1)),
        inner_product=((1.0,),),
        manifold_dim=3,
        name="su2",
    )


def _perm_matrix_on_plane(perm: tuple) -> np.ndarray:
    """Action of a permutation of (theta1, theta2, theta3) on coordinates
    (u, v) of the trace-zero plane theta = (u, v, -u-v)."""
    basis = np.array([[1.0, 0.0, -1.0], [0.0, 1.0, -1.0]])  # d theta / d(u,v)
    out = np.empty((2, 2))
    for col, vec in enumerate(np.eye(2)):
        theta = vec @ basis
        permuted = theta[list(perm)]
        out[:, col] = permuted[:2]
    return out


def su3() -> RootSystem:
    """su(3) in coordinates (u, v) of the Cartan plane theta = (u, v, -u-v).

    Positive roots theta_i - theta_j, i < j; the metric is half the sum of
    squares of the theta's, matching the su(2) preset on embedded su(2)'s.
    """
    perms = {
        (0, 1, 2): 1, (1, 0, 2): -1, (2, 1, 0): -1,
        (0, 2, 1): -1, (2, 0, 1): 1, (1, 2, 0): 1,
    }
    weyl = []
    for perm, sign in perms.items():
        mat = _perm_matrix_on_plane(perm)
        det = int(round(np.linalg.det(mat)))
        assert det == sign
        weyl.append(WeylElement(tuple(map(tuple, mat)), det))
    return RootSystem(
        rank=2,
        positive_roots=((1.0, -1.0), (2.0, 1.0), (1.0, 2.0)),
        weyl_elements=tuple(weyl),
        inner_product=((1.0, 0.5), (0.5, 1.0)),
        manifold_dim=8,
        name="su3",
    )


def _structure_constants_from_matrices(basis: list[np.ndarray]) -> np.ndarray:
    """c[i,j,k] with [e_i, e_j] = sum_k c[i,j,k] e_k.

    Coefficients are extracted against the trace pairing <X, Y> = -tr(XY)/2,
    with the basis Gram matrix solved out, so non-orthonormal bases are fine.
    """
    n = len(basis)
    gram = np.array([[float(np.real(-0.5 * np.trace(a @ b))) for b in basis]
                     for a in basis])
    c = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            comm = basis[i] @ basis[j] - basis[j] @ basis[i]
            proj = np.array([float(np.real(-0.5 * np.trace(comm @ b)))
                             for b in basis])
            c[i, j, :] = np.linalg.solve(gram, proj)
    return c


def su2_adjoint() -> AdjointData:
    """su(2) with [e_a, e_b] = eps_abc e_c; Cartan coordinate t embeds as
    2t e_3 so that ad has eigenvalues +-2it on the root spaces."""
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    embed = np.array([[0.0], [0.0], [2.0]])
    return AdjointData(eps, rank=1, torus_embedding=embed, name="su2")


def _gell_mann() -> list[np.ndarray]:
    lam = [np.zeros((3, 3), dtype=complex) for _ in range(8)]
    lam[0][0, 1] = lam[0][1, 0] = 1
    lam[1][0, 1] = -1j; lam[1][1, 0] = 1j
    lam[2][0, 0] = 1; lam[2][1, 1] = -1
    lam[3][0, 2] = lam[3][2, 0] = 1
    lam[4][0, 2] = -1j; lam[4][2, 0] = 1j
    lam[5][1, 2] = lam[5][2, 1] = 1
    lam[6][1, 2] = -1j; lam[6][2, 1] = 1j
    lam[7] = np.diag([1, 1, -2]) / math.sqrt(3)
    return lam


def su3_adjoint() -> AdjointData:
    """su(3) in the basis X_a = -i lambda_a / 2 (Gell-Mann matrices).

    Cartan coordinates (u, v) embed as i diag(u, v, -u-v); roots of the
    preset ``su3()`` are recovered as eigenvalue imaginary parts of ad.
    """
    basis = [-0.5j * lam for lam in _gell_mann()]
    c = _structure_constants_from_matrices(basis)
    # i diag(u,v,-u-v) = -(u-v) X_3 - sqrt(3) (u+v) X_8
    embed = np.zeros((8, 2))
    embed[2] = [-1.0, 1.0]
    embed[7] = [-math.sqrt(3), -math.sqrt(3)]
    return AdjointData(c, rank=2, torus_embedding=embed, name="su3")


def so_pair_adjoint(m: int) -> AdjointData:
    """The symmetric pair so(m+1)/so(m), basis E_jk = e_j e_k^T - e_k e_j^T.

    The complement p (first row/column matrices E_0j) comes first in the
    basis; the ray generator Z = E_01 is basis index 0.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    pairs = [(0, j) for j in range(1, m + 1)]
    pairs += [(j, k) for j in range(1, m + 1) for k in range(j + 1, m + 1)]
    basis = []
    for (j, k) in pairs:
        E = np.zeros((m + 1, m + 1))
        E[j, k] = 1.0
        E[k, j] = -1.0
        basis.append(E)
    c = _structure_constants_from_matrices([b.astype(complex) for b in basis])
    p_idx = tuple(range(m))
    go_idx = tuple(range(m, len(pairs)))
    return AdjointData(c, rank=(m + 1) // 2,
                       orthogonal_split=(go_idx, p_idx),
                       name=f"so{m + 1}/so{m}")


def su2_weight(k: int) -> ShiftedWeight:
    """Shifted weight (k+1) t of the (k+1)-dimensional su(2) irreducible."""
    if k < 0:
        raise ValueError("character index k must be >= 0")
    return ShiftedWeight((float(k + 1),), source_label=k)


def torus_weight(rank: int, k) -> ShiftedWeight:
    """Torus character weight; an integer k sits in the first coordinate."""
    if np.isscalar(k):
        coeff = [0.0] * rank
        coeff[0] = float(k)
        return ShiftedWeight(tuple(coeff), source_label=k)
    kv = tuple(float(x) for x in k)
    if len(kv) != rank:
        raise ValueError("weight vector length != rank")
    return ShiftedWeight(kv, source_label=tuple(k))


def shifted_weight(rs: RootSystem, highest_weight: Sequence[float],
                   label=None) -> ShiftedWeight:
    """Builder that applies the rho-shift to a highest weight."""
    hw = np.asarray(highest_weight, dtype=float)
    return ShiftedWeight(tuple(hw + rs.rho()), source_label=label)


def root_system_from_json(path_or_obj) -> RootSystem:
    """Load {"rank":, "positive_roots":, "weyl":, "inner_product":, "m":}."""
    if isinstance(path_or_obj, (str, bytes)) or hasattr(path_or_obj, "read"):
        if hasattr(path_or_obj, "read"):
            data = json.load(path_or_obj)
        else:
            with open(path_or_obj) as fh:
                data = json.load(fh)
    else:
        data = path_or_obj
    weyl = tuple(WeylElement(tuple(map(tuple, w["matrix"])), int(w["det"]))
                 for w in data["weyl"])
    return RootSystem(
        rank=int(data["rank"]),
        positive_roots=tuple(tuple(map(float, a)) for a in data["positive_roots"]),
        weyl_elements=weyl,
        inner_product=tuple(map(tuple, data["inner_product"])),
        manifold_dim=int(data["m"]),
        name=data.get("name", ""),
    )


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _check_point(rs: RootSystem, tau) -> np.ndarray:
    t = np.asarray(tau, dtype=float).reshape(-1)
    if t.size != rs.rank:
        raise ValueError(f"point has {t.size} coordinates, rank is {rs.rank}")
    return t


def root_product(rs: RootSystem, tau) -> float:
    """Product of alpha(tau) over the positive roots."""
    t = _check_point(rs, tau)
    if not rs.positive_roots:
        return 1.0
    return float(np.prod(rs.roots_array() @ t))


def _log_sinh(x: float) -> LogValue:
    """sinh in log-magnitude + sign form, safe for large |x|."""
    if x == 0.0:
        return LogValue.zero()
    ax = abs(x)
    return LogValue.from_log(ax + math.log1p(-math.exp(-2 * ax)) - math.log(2.0),
                             1 if x > 0 else -1)


def weyl_denominator(rs: RootSystem, tau) -> tuple[LogValue, LogValue]:
    """Both closed forms of the denominator, which must agree:

    product side  prod_{alpha in R+} sinh alpha(tau)
    sum side      2^{-|R+|} sum_{w in W} det(w) exp(2 rho(w tau))
    """
    t = _check_point(rs, tau)
    nroots = len(rs.positive_roots)
    prod_side = LogValue.from_value(1.0)
    if nroots:
        for a in rs.roots_array() @ t:
            prod_side = prod_side * _log_sinh(float(a))
    rho = rs.rho()
    logs, signs = [], []
    for w in rs.weyl_elements:
        logs.append(2.0 * float(rho @ (w.as_array() @ t)))
        signs.append(w.det)
    sum_side = signed_logsumexp(logs, signs)
    sum_side = sum_side * LogValue.from_log(-nroots * math.log(2.0))
    return prod_side, sum_side


def character_at(rs: RootSystem, lam: ShiftedWeight, tau,
                 denominator_floor: float = 1e-9) -> CharacterValue:
    """Weyl-formula character of exp(-2 i tau).

    chi = sum_w det(w) e^{2 lambda(w tau)} / (2^{|R+|} prod sinh alpha(tau)),
    evaluated with log-domain numerator terms.  Near a denominator zero the
    value is recovered by offset averaging and flagged.
    """
    t = _check_point(rs, tau)
    lv = lam.as_array()
    nroots = len(rs.positive_roots)

    def raw(tt: np.ndarray) -> Optional[float]:
        logs, signs = [], []
        for w in rs.weyl_elements:
            logs.append(2.0 * float(lv @ (w.as_array() @ tt)))
            signs.append(w.det)
        num = signed_logsumexp(logs, signs)
        denom = LogValue.from_value(1.0)
        if nroots:
            for a in rs.roots_array() @ tt:
                denom = denom * _log_sinh(float(a))
            denom = denom * LogValue.from_log(nroots * math.log(2.0))
        if denom.sign == 0:
            return None
        # the alternating numerator cancels with the denominator near its
        # zero set; judge smallness relative to the numerator term scale
        if nroots and denom.log_magnitude - max(logs) < math.log(denominator_floor):
            return None
        return (num / denom).to_float()

    val = raw(t)
    if val is not None:
        return CharacterValue(val, regularized=False)
    # removable singularity: average symmetric offsets in a generic direction
    direction = np.cos(np.arange(1, rs.rank + 1))
    direction /= np.linalg.norm(direction)
    scale = max(float(np.linalg.norm(t)), 1.0)
    for delta in (1e-4 * scale, 1e-3 * scale, 1e-2 * scale):
        plus = raw(t + delta * direction)
        minus = raw(t - delta * direction)
        if plus is not None and minus is not None:
            return CharacterValue(0.5 * (plus + minus), regularized=True)
    raise ValueError("character evaluation failed: denominator vanishes on the "
                     "whole offset stencil")


def ad_matrix(adj: AdjointData, zeta) -> np.ndarray:
    """Matrix of ad(zeta) in the chosen basis."""
    z = np.asarray(zeta, dtype=float).reshape(-1)
    if z.size != adj.dim:
        raise ValueError(f"element has {z.size} coordinates, algebra dim is {adj.dim}")
    # (ad z) e_j = sum_i z_i [e_i, e_j] = sum_k (sum_i z_i c[i,j,k]) e_k
    return np.einsum("i,ijk->kj", z, adj.structure_constants)


def _entire_det(A: np.ndarray, f, series=None, series_order: int = 30) -> float:
    """det f(A) for an entire f, via the eigenvalues of A.

    The determinant of an analytic matrix function depends only on the
    spectrum, so defectiveness is harmless; if the eigensolver fails, fall
    back to a truncated power series of f applied to A.
    """
    try:
        eig = np.linalg.eigvals(A)
    except np.linalg.LinAlgError:
        if series is None:
            raise
        logger.warning("eigendecomposition failed; using power series of "
                       "order %d", series_order)
        F = series(A, series_order)
        return float(np.real(np.linalg.det(F)))
    return float(np.real(np.prod([f(mu) for mu in eig])))


def _two_sinc(mu: complex) -> complex:
    """2 sin(mu)/mu, entire, value 2 at 0."""
    if abs(mu) < 1e-6:
        return 2.0 * (1.0 - mu * mu / 6.0 + mu ** 4 / 120.0)
    return 2.0 * np.sin(mu) / mu


def _two_sinc_series(A: np.ndarray, order: int) -> np.ndarray:
    F = np.zeros_like(A, dtype=complex)
    term = np.eye(A.shape[0], dtype=complex)
    A2 = (A @ A).astype(complex)
    for n in range(order):
        F += term * ((-1) ** n * 2.0 / math.factorial(2 * n + 1))
        term = term @ A2
    return F


def half_form_density_group(data, point) -> float:
    """Half-form fiber density of a group manifold.

    With a RootSystem and a torus point: prod_{alpha in R+} 2 sinh(alpha)/alpha.
    With AdjointData and a general algebra element: the same quantity through
    det(2 sin(ad zeta)/ad zeta), normalized by 2^rank for the kernel
    directions so the two paths agree on the Cartan subalgebra.
    """
    if isinstance(data, RootSystem):
        t = _check_point(data, point)
        out = 1.0
        for a in (data.roots_array() @ t if data.positive_roots else []):
            out *= 2.0 * math.sinh(a) / a if a != 0.0 else 2.0
        return out
    adj: AdjointData = data
    A = ad_matrix(adj, point)
    det = _entire_det(A, _two_sinc, _two_sinc_series)
    det /= 2.0 ** adj.rank
    if det <= 0:
        raise ValueError("half-form density must be positive")
    return math.sqrt(det)


def _p_projected_ad_sq(adj: AdjointData, zeta_p) -> np.ndarray:
    """(ad zeta)^2 restricted to the complement p (an endomorphism of p,
    even though ad zeta itself maps p into g_o)."""
    if adj.orthogonal_split is None:
        raise ValueError("adjoint data carries no orthogonal split")
    if not adj.check_symmetric_pair():
        raise ValueError("[p, p] is not contained in g_o; not a symmetric pair")
    go, p = adj.orthogonal_split
    z = np.zeros(adj.dim)
    zp = np.asarray(zeta_p, dtype=float).reshape(-1)
    if zp.size != len(p):
        raise ValueError("element must live in the complement p")
    for idx, val in zip(p, zp):
        z[idx] = val
    A = ad_matrix(adj, z)
    M = A @ A
    return M[np.ix_(p, p)]


def _even_function_on_p(M: np.ndarray, g) -> np.ndarray:
    """g(M) for symmetric M via eigendecomposition (g entire in the
    eigenvalue nu = mu^2 of the squared adjoint)."""
    Ms = 0.5 * (M + M.T)
    vals, vecs = np.linalg.eigh(Ms)
    return (vecs * np.array([g(v) for v in vals])) @ vecs.T


def _cos_sqrt(nu: float) -> float:
    # cos(sqrt(nu)) continued through nu <= 0, where it is cosh(sqrt(-nu))
    if nu >= 0:
        return math.cos(math.sqrt(nu))
    return math.cosh(math.sqrt(-nu))


def _sinc_sqrt(nu: float) -> float:
    # sin(sqrt(nu))/sqrt(nu); equals sinh(sqrt(-nu))/sqrt(-nu) for nu < 0
    if abs(nu) < 1e-12:
        return 1.0 - nu / 6.0
    if nu > 0:
        r = math.sqrt(nu)
        return math.sin(r) / r
    r = math.sqrt(-nu)
    return math.sinh(r) / r


def _double_sinc_sqrt(nu: float) -> float:
    # sin(2 sqrt(nu))/sqrt(nu), value 2 at 0; sinh-type for nu < 0
    if abs(nu) < 1e-12:
        return 2.0 - 4.0 * nu / 3.0
    if nu > 0:
        r = math.sqrt(nu)
        return math.sin(2.0 * r) / r
    r = math.sqrt(-nu)
    return math.sinh(2.0 * r) / r


def symmetric_A_operators(adj: AdjointData, zeta_p) -> tuple[np.ndarray, np.ndarray]:
    """The pair (cos ad zeta |p, (sin ad zeta)/ad zeta |p) for a symmetric pair.

    Both are even functions of ad zeta, hence genuine endomorphisms of p; the
    second is returned as its real factor.
    """
    M = _p_projected_ad_sq(adj, zeta_p)
    a1 = _even_function_on_p(M, _cos_sqrt)
    a2 = _even_function_on_p(M, _sinc_sqrt)
    return a1, a2


def half_form_density_sphere(adj: AdjointData, t: float, m: int) -> float:
    """det((sin 2 ad tZ)/ad tZ | p) for the pair so(m+1)/so(m).

    Equals 2 (sinh 2t / t)^(m-1): the factor 2 is the eigenvalue on the ray
    spanned by Z and is deliberately kept, not absorbed into a constant.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    if m < 2:
        raise ValueError("m must be >= 2")
    if adj.orthogonal_split is None or adj.dim_p != m:
        raise ValueError("adjoint data does not describe so(m+1)/so(m)")
    zeta = np.zeros(m)
    zeta[0] = t  # the ray generator Z is the first basis vector of p
    M = _p_projected_ad_sq(adj, zeta)
    vals = np.linalg.eigvalsh(0.5 * (M + M.T))
    out = 1.0
    for nu in vals:
        out *= _double_sinc_sqrt(float(nu))
    return out


def orthonormal_change_of_basis(rs: RootSystem) -> np.ndarray:
    """Matrix M with M^T G M = I: tau = M u maps Euclidean coordinates u to
    Cartan coordinates, so |tau|^2 = |u|^2 and the metric Laplacian becomes
    the Euclidean one."""
    L = np.linalg.cholesky(rs.gram())
    return np.linalg.inv(L.T)


def dual_norm_sq(rs: RootSystem, lam: ShiftedWeight) -> float:
    """|lambda*|^2 for the metric dual of the linear form lambda."""
    c = lam.as_array()
    if c.size != rs.rank:
        raise ValueError("weight length != rank")
    G = rs.gram()
    return float(c @ np.linalg.solve(G, c))

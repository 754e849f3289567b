"""Numerical q1 on planar domains and the exact flat-cylinder spectrum.

q1 is the infimum of boundary/interior L2 ratios over harmonic functions.
On planar domains we minimize the ratio over harmonic polynomials about an
interior center (method of particular solutions): two Gram matrices from
the domain's quadrature rules give a symmetric-definite pencil whose
smallest eigenvalue, after whitening the ill-conditioned interior Gram, is
the q1 estimate.  Products N x [0, 2R] reduce per circle mode to 2x2
pencils solved in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import main_lower_bound
from .errors import InvalidDomainError, NumericalRankError, PreconditionError
from .geometry2d import (
    ConvexPolygon,
    Disk,
    Ellipse,
    PlanarDomain,
    Shape,
    build_quadrature,
    centroid,
    domain_metrics,
)
from .spaceform import ThetaProfile


@dataclass(frozen=True)
class Cylinder:
    """Flat product of a circle of the given circumference with [0, 2R]."""

    circumference: float
    half_height: float

    def __post_init__(self):
        if self.circumference <= 0 or self.half_height <= 0:
            raise InvalidDomainError("cylinder needs positive circumference and half-height")


@dataclass
class HarmonicModel:
    """Harmonic-polynomial trial space of degree N on a planar domain.

    The basis is {1} + {Re((z-c)/s)^k, Im((z-c)/s)^k : k = 1..N} about the
    interior center c with scale s, every element harmonic.  boundary_gram
    and interior_gram hold its boundary/interior L2 products; solve_q1
    fills q1 and the minimizing coefficients.
    """

    domain: PlanarDomain
    degree: int
    center: np.ndarray
    scale: float
    boundary_gram: np.ndarray
    interior_gram: np.ndarray
    cutoff: float = 1e-12
    q1: float | None = None
    coefficients: np.ndarray | None = None
    retained: int | None = None


@dataclass
class CylinderSpectrum:
    """Per-circle-mode eigenvalues of the flat cylinder."""

    circumference: float
    half_height: float
    mode_count: int
    q1: float
    per_mode_minima: list[float] = field(default_factory=list)
    per_mode_pairs: list[tuple[float, float]] = field(default_factory=list)


def _strictly_inside(shape: Shape, point: np.ndarray) -> bool:
    x, y = float(point[0]), float(point[1])
    if isinstance(shape, Disk):
        return x * x + y * y < shape.radius ** 2 * (1.0 - 1e-12)
    if isinstance(shape, Ellipse):
        return (x / shape.a) ** 2 + (y / shape.b) ** 2 < 1.0 - 1e-12
    V = shape.vertices
    E = np.roll(V, -1, axis=0) - V
    d = np.array([x, y])[None, :] - V
    return bool(np.all(E[:, 0] * d[:, 1] - E[:, 1] * d[:, 0] > 1e-12))


def _basis_matrix(points: np.ndarray, center: np.ndarray, scale: float,
                  degree: int) -> np.ndarray:
    z = (points[:, 0] - center[0] + 1j * (points[:, 1] - center[1])) / scale
    cols = [np.ones(len(points))]
    zk = np.ones(len(points), dtype=complex)
    for _ in range(degree):
        zk = zk * z
        cols.append(zk.real.copy())
        cols.append(zk.imag.copy())
    return np.column_stack(cols)


def assemble(domain: PlanarDomain, degree: int, center=None, scale: float | None = None,
             cutoff: float = 1e-12) -> HarmonicModel:
    """Build the boundary and interior Gram matrices of the trial space.

    The center defaults to the centroid and must be strictly interior; the
    scale defaults to the largest center-to-boundary-node distance, which
    keeps the basis entries O(1).  Both Grams are symmetrized after
    assembly so they are exactly symmetric.
    """
    if not isinstance(domain, PlanarDomain) or not domain.has_quadrature:
        raise PreconditionError("assemble needs a PlanarDomain with quadrature rules built")
    if int(degree) != degree or degree < 0:
        raise PreconditionError(f"degree must be a nonnegative integer, got {degree!r}")
    center = centroid(domain.shape) if center is None else np.asarray(center, dtype=float)
    if not _strictly_inside(domain.shape, center):
        raise PreconditionError(f"basis center {center.tolist()} is not strictly interior")
    if scale is None:
        offsets = domain.boundary_points - center[None, :]
        scale = float(np.max(np.hypot(offsets[:, 0], offsets[:, 1])))
    b_basis = _basis_matrix(domain.boundary_points, center, scale, int(degree))
    i_basis = _basis_matrix(domain.interior_points, center, scale, int(degree))
    m_bnd = b_basis.T @ (domain.boundary_weights[:, None] * b_basis)
    m_int = i_basis.T @ (domain.interior_weights[:, None] * i_basis)
    return HarmonicModel(
        domain=domain,
        degree=int(degree),
        center=center,
        scale=scale,
        boundary_gram=0.5 * (m_bnd + m_bnd.T),
        interior_gram=0.5 * (m_int + m_int.T),
        cutoff=cutoff,
    )


def solve_q1(model: HarmonicModel, cutoff: float | None = None) -> HarmonicModel:
    """Minimize the boundary/interior ratio over the trial space.

    The interior Gram is whitened through its eigendecomposition, keeping
    eigenvalues above cutoff times the largest (harmonic-polynomial Grams
    are exponentially ill-conditioned in the degree); q1 is the smallest
    eigenvalue of the whitened boundary Gram.  The minimizer is mapped back
    to basis coefficients with unit interior norm.
    """
    if cutoff is not None:
        model.cutoff = cutoff
    lam, vecs = np.linalg.eigh(model.interior_gram)
    if lam[-1] <= 0:
        raise NumericalRankError("interior Gram has no positive eigenvalues")
    keep = lam >= model.cutoff * lam[-1]
    if not np.any(keep):
        raise NumericalRankError("every mode fell below the conditioning cutoff")
    white = vecs[:, keep] / np.sqrt(lam[keep])[None, :]
    pencil = white.T @ model.boundary_gram @ white
    pencil = 0.5 * (pencil + pencil.T)
    mu, u = np.linalg.eigh(pencil)
    coeff = white @ u[:, 0]
    coeff /= math.sqrt(float(coeff @ model.interior_gram @ coeff))
    model.q1 = float(mu[0])
    model.coefficients = coeff
    model.retained = int(np.count_nonzero(keep))
    return model


def solve_domain(shape: PlanarDomain | Shape, degree: int, order: int | None = None,
                 center=None, cutoff: float = 1e-12) -> HarmonicModel:
    """Convenience driver: build quadrature, assemble and solve."""
    if order is None:
        order = max(4, int(degree) + 2)
    if not (isinstance(shape, PlanarDomain) and shape.has_quadrature and shape.order == order):
        shape = build_quadrature(shape, order)
    return solve_q1(assemble(shape, degree, center=center, cutoff=cutoff))


def cylinder_q1(circumference: float, half_height: float, mode_max: int = 16) -> CylinderSpectrum:
    """Exact q1 of the flat cylinder N x [0, 2R] by separation of modes.

    Mode 0 restricts to affine functions of the axial coordinate; circle
    mode m >= 1 to spans of cosh/sinh of k y with k = 2 pi m / L.  Each mode
    is a 2x2 symmetric-definite pencil solved in closed form; centering the
    axial coordinate makes every pencil diagonal and overflow-free.  The
    overall minimum is 1/R, from the constant function.
    """
    if circumference <= 0 or half_height <= 0:
        raise PreconditionError("cylinder needs positive circumference and half-height")
    if int(mode_max) != mode_max or mode_max < 1:
        raise PreconditionError(f"mode_max must be a positive integer, got {mode_max!r}")
    L, R = float(circumference), float(half_height)

    # mode 0, centered basis {1, y - R}: both Grams diagonal
    pairs = [(2.0 / (2.0 * R), (2.0 * R * R) / (2.0 * R ** 3 / 3.0))]
    for m in range(1, int(mode_max) + 1):
        k = 2.0 * math.pi * m / L
        x = k * R
        q = math.exp(-2.0 * x)
        tanh_x = (1.0 - q) / (1.0 + q)
        coth_x = (1.0 + q) / (1.0 - q)
        sech2 = 4.0 * q / (1.0 + q) ** 2
        csch2 = 4.0 * q / (1.0 - q) ** 2
        even = 2.0 / (R * sech2 + tanh_x / k)
        odd = 2.0 / (coth_x / k - R * csch2)
        pairs.append((even, odd))
    minima = [min(p) for p in pairs]
    return CylinderSpectrum(
        circumference=L,
        half_height=R,
        mode_count=int(mode_max) + 1,
        q1=min(minima),
        per_mode_minima=minima,
        per_mode_pairs=pairs,
    )


def subharmonic_ratio(domain: PlanarDomain | Shape, g_coefficients, degree: int,
                      center=None, scale: float | None = None) -> tuple[float, float]:
    """Boundary/interior L2 ratio of a harmonic g against the lower bound.

    g is given by coefficients in the degree-N trial basis; since g^2 is
    subharmonic and nonnegative, the ratio can never fall below the
    comparison-density bound built from the domain's least boundary
    curvature and inner radius.  Returns (ratio, bound).
    """
    coeffs = np.asarray(g_coefficients, dtype=float)
    if int(degree) != degree or degree < 0:
        raise PreconditionError(f"degree must be a nonnegative integer, got {degree!r}")
    if coeffs.shape != (2 * int(degree) + 1,):
        raise PreconditionError(
            f"coefficient vector must have length {2 * int(degree) + 1}, got {coeffs.shape}")
    if not np.any(coeffs):
        raise PreconditionError("coefficient vector is zero")
    # the ratio is invariant under rescaling g; normalizing keeps the
    # quadratic forms away from underflow for extreme inputs
    coeffs = coeffs / np.max(np.abs(coeffs))
    if not (isinstance(domain, PlanarDomain) and domain.has_quadrature):
        domain = build_quadrature(domain, max(4, int(degree) + 2))
    model = assemble(domain, degree, center=center, scale=scale)
    ratio = float(coeffs @ model.boundary_gram @ coeffs) / float(coeffs @ model.interior_gram @ coeffs)
    metrics = domain_metrics(domain)
    bound = main_lower_bound(ThetaProfile(2, 0.0, metrics.min_curvature), metrics.inner_radius)
    return ratio, bound

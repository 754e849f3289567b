"""Curvature-based bounds and a planar solver for the first biharmonic
Steklov eigenvalue.

The eigenvalue q1 of a compact domain is squeezed between the reciprocal
of the comparison-density integral built from curvature data (n, K, H, R)
and the isoperimetric ratio; geodesic balls in the space forms attain both.
This package evaluates the space-form geometry exactly, assembles every
bound with provenance, computes q1 numerically on planar convex domains
with a harmonic-polynomial trial space, and reduces flat cylinders to
closed-form 2x2 pencils.
"""

from .bounds import (
    BoundReport,
    ClassicalBounds,
    ball_comparison_bound,
    bound_report,
    cheng_upper_bound,
    classical_bounds,
    explicit_bound_k0,
    explicit_bound_kneg1,
    main_lower_bound,
    mckean_bound,
)
from .eigensolver import (
    Cylinder,
    CylinderSpectrum,
    HarmonicModel,
    assemble,
    cylinder_q1,
    solve_domain,
    solve_q1,
    subharmonic_ratio,
)
from .errors import (
    InvalidDomainError,
    NumericalRankError,
    PreconditionError,
    UnsupportedRegimeError,
)
from .geometry2d import (
    ConvexPolygon,
    Disk,
    DomainMetrics,
    Ellipse,
    PlanarDomain,
    build_quadrature,
    chebyshev_center,
    domain_metrics,
    min_width,
)
from .spaceform import (
    SpaceFormBall,
    ThetaProfile,
    ball_geometry,
    sk_eval,
    theta_eval,
    theta_first_zero,
    theta_integral,
    unit_sphere_area,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ClassicalBounds",
    "ConvexPolygon",
    "Cylinder",
    "CylinderSpectrum",
    "Disk",
    "DomainMetrics",
    "Ellipse",
    "HarmonicModel",
    "InvalidDomainError",
    "NumericalRankError",
    "PlanarDomain",
    "PreconditionError",
    "SpaceFormBall",
    "ThetaProfile",
    "UnsupportedRegimeError",
    "assemble",
    "ball_comparison_bound",
    "ball_geometry",
    "bound_report",
    "build_quadrature",
    "chebyshev_center",
    "cheng_upper_bound",
    "classical_bounds",
    "cylinder_q1",
    "domain_metrics",
    "explicit_bound_k0",
    "explicit_bound_kneg1",
    "main_lower_bound",
    "mckean_bound",
    "min_width",
    "sk_eval",
    "solve_domain",
    "solve_q1",
    "subharmonic_ratio",
    "theta_eval",
    "theta_first_zero",
    "theta_integral",
    "unit_sphere_area",
]

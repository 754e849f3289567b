"""Planar convex domains: exact metrics and quadrature rules.

Shapes are centered at the origin and axis-aligned (disk, ellipse) or given
by an explicit counterclockwise vertex list (convex polygon).  The metrics
feed the curvature-data bounds (minimum boundary curvature plays the role
of H, the inner radius plays R) and the quadrature rules feed the
eigensolver's Gram matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import linprog

from .errors import InvalidDomainError
from .quadrature import adaptive_quad, leggauss

# strict-convexity threshold for consecutive-edge cross products, relative
# to the product of the edge lengths
_CONVEXITY_TOL = 1e-12


@dataclass(frozen=True)
class Disk:
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise InvalidDomainError(f"disk radius must be positive, got {self.radius!r}")


@dataclass(frozen=True)
class Ellipse:
    """Axis-aligned ellipse with semi-axes a >= b > 0."""

    a: float
    b: float

    def __post_init__(self):
        if not self.b > 0 or self.a < self.b:
            raise InvalidDomainError(
                f"ellipse needs semi-axes a >= b > 0, got a={self.a!r}, b={self.b!r}")


class ConvexPolygon:
    """Strictly convex polygon with counterclockwise vertices."""

    def __init__(self, vertices):
        V = np.asarray(vertices, dtype=float)
        if V.ndim != 2 or V.shape[1] != 2 or len(V) < 3:
            raise InvalidDomainError("polygon needs at least three 2-d vertices")
        if _signed_area(V) <= 0:
            raise InvalidDomainError("polygon vertices must be counterclockwise")
        edges = np.roll(V, -1, axis=0) - V
        lens = np.hypot(edges[:, 0], edges[:, 1])
        turn = edges[:, 0] * np.roll(edges[:, 1], -1) - edges[:, 1] * np.roll(edges[:, 0], -1)
        if np.any(turn <= _CONVEXITY_TOL * lens * np.roll(lens, -1)):
            raise InvalidDomainError("polygon must be strictly convex (counterclockwise)")
        self.vertices = V

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"ConvexPolygon({self.vertices.tolist()})"


Shape = Disk | Ellipse | ConvexPolygon


@dataclass
class PlanarDomain:
    """A shape plus (once built) boundary and interior quadrature rules.

    Boundary nodes carry weights summing to the perimeter and unit outward
    normals; interior weights sum to the area.
    """

    shape: Shape
    order: int | None = None
    boundary_points: np.ndarray | None = None
    boundary_weights: np.ndarray | None = None
    boundary_normals: np.ndarray | None = None
    interior_points: np.ndarray | None = None
    interior_weights: np.ndarray | None = None

    @property
    def has_quadrature(self) -> bool:
        return self.boundary_points is not None


@dataclass(frozen=True)
class DomainMetrics:
    """Geometric quantities consumed by the bounds."""

    area: float
    perimeter: float
    inner_radius: float
    min_width: float | None
    min_curvature: float


def _signed_area(V: np.ndarray) -> float:
    x, y = V[:, 0], V[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polygon_centroid(V: np.ndarray) -> np.ndarray:
    x, y = V[:, 0], V[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    w = x * yn - xn * y
    a = 0.5 * np.sum(w)
    return np.array([np.sum((x + xn) * w), np.sum((y + yn) * w)]) / (6.0 * a)


def centroid(shape: Shape) -> np.ndarray:
    if isinstance(shape, (Disk, Ellipse)):
        return np.zeros(2)
    return polygon_centroid(shape.vertices)


def _edge_normals(V: np.ndarray):
    """Unit outward normals and offsets of the polygon's edge lines."""
    edges = np.roll(V, -1, axis=0) - V
    lens = np.hypot(edges[:, 0], edges[:, 1])
    normals = np.column_stack([edges[:, 1], -edges[:, 0]]) / lens[:, None]
    offsets = np.sum(normals * V, axis=1)
    return normals, offsets


def chebyshev_center(polygon: ConvexPolygon) -> tuple[np.ndarray, float]:
    """Center and radius of the largest inscribed disk.

    Maximizes r subject to n_i . c + r <= n_i . v_i over all edge lines, a
    linear program in (c_x, c_y, r).
    """
    normals, offsets = _edge_normals(polygon.vertices)
    m = len(offsets)
    cost = np.array([0.0, 0.0, -1.0])
    a_ub = np.column_stack([normals, np.ones(m)])
    res = linprog(cost, A_ub=a_ub, b_ub=offsets,
                  bounds=[(None, None), (None, None), (0, None)], method="highs")
    if not res.success:
        raise InvalidDomainError(f"inscribed-disk LP failed: {res.message}")
    return res.x[:2].copy(), float(res.x[2])


def min_width(polygon: ConvexPolygon) -> float:
    """Minimal distance between parallel supporting lines (rotating calipers).

    The width of a convex polygon is attained flush with an edge, so the
    caliper rotates over edges while the antipodal vertex pointer advances
    monotonically.
    """
    V = polygon.vertices
    m = len(V)

    def height(i, j):
        e = V[(i + 1) % m] - V[i]
        d = V[j % m] - V[i]
        return (e[0] * d[1] - e[1] * d[0]) / math.hypot(e[0], e[1])

    j = 1
    best = math.inf
    for i in range(m):
        while j < i + m and height(i, j + 1) >= height(i, j):
            j += 1
        best = min(best, height(i, j))
    return float(best)


def _ellipse_perimeter(a: float, b: float) -> float:
    speed = lambda t: np.hypot(a * np.sin(t), b * np.cos(t))
    return adaptive_quad(speed, 0.0, 2.0 * math.pi, tol=1e-12)


def domain_metrics(domain: PlanarDomain | Shape) -> DomainMetrics:
    """Area, perimeter, inner radius, minimal width and least boundary
    curvature of the domain.

    The least boundary curvature is the planar mean-curvature lower bound H;
    polygons get H = 0 (straight edges, treated as the mean-convex limit of
    smoothed corners).  The inner radius of a polygon comes from the
    inscribed-disk LP, its width from rotating calipers.
    """
    shape = domain.shape if isinstance(domain, PlanarDomain) else domain
    if isinstance(shape, Disk):
        r = shape.radius
        return DomainMetrics(math.pi * r * r, 2.0 * math.pi * r, r, 2.0 * r, 1.0 / r)
    if isinstance(shape, Ellipse):
        a, b = shape.a, shape.b
        return DomainMetrics(math.pi * a * b, _ellipse_perimeter(a, b), b, 2.0 * b, b / a ** 2)
    V = shape.vertices
    edges = np.roll(V, -1, axis=0) - V
    _, inradius = chebyshev_center(shape)
    return DomainMetrics(
        area=_signed_area(V),
        perimeter=float(np.sum(np.hypot(edges[:, 0], edges[:, 1]))),
        inner_radius=inradius,
        min_width=min_width(shape),
        min_curvature=0.0,
    )


def _unit_interval_rule(npts: int):
    x, w = leggauss(npts)
    return 0.5 * (x + 1.0), 0.5 * w


def _smooth_rules(a: float, b: float, order: int):
    # periodic trapezoid boundary rule (spectrally accurate on the smooth
    # closed curve) and a Gauss x trapezoid tensor rule in polar coordinates,
    # pushed through the affine map of the ellipse (Jacobian a*b*u)
    m = max(64, 8 * order)
    t = 2.0 * math.pi * np.arange(m) / m
    ct, st = np.cos(t), np.sin(t)
    pts = np.column_stack([a * ct, b * st])
    speed = np.hypot(a * st, b * ct)
    bw = speed * (2.0 * math.pi / m)
    normals = np.column_stack([b * ct, a * st])
    normals /= np.hypot(normals[:, 0], normals[:, 1])[:, None]

    u, wu = _unit_interval_rule(order)
    px = (a * np.outer(u, ct)).ravel()
    py = (b * np.outer(u, st)).ravel()
    iw = (a * b * 2.0 * math.pi / m) * np.repeat(wu * u, m)
    return pts, bw, normals, np.column_stack([px, py]), iw


def _polygon_rules(V: np.ndarray, order: int):
    normals, _ = _edge_normals(V)
    xg, wg = leggauss(order)
    bpts, bw, bnrm = [], [], []
    for i in range(len(V)):
        p, q = V[i], V[(i + 1) % len(V)]
        mid, half = 0.5 * (p + q), 0.5 * (q - p)
        nodes = mid[None, :] + xg[:, None] * half[None, :]
        length = math.hypot(*(q - p))
        bpts.append(nodes)
        bw.append(0.5 * length * wg)
        bnrm.append(np.repeat(normals[i][None, :], order, axis=0))

    # centroid fan, one Duffy-transformed tensor rule per triangle; exact
    # for total degree 2*order
    c = polygon_centroid(V)
    ng = order + 1
    u, wu = _unit_interval_rule(ng)
    U, W = np.meshgrid(u, u, indexing="ij")
    WU = np.outer(wu, wu) * U
    xi = (U * (1.0 - W)).ravel()
    eta = (U * W).ravel()
    wref = WU.ravel()
    ipts, iw = [], []
    for i in range(len(V)):
        p, q = V[i], V[(i + 1) % len(V)]
        tri_area = 0.5 * abs((p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]))
        nodes = c[None, :] + np.outer(xi, p - c) + np.outer(eta, q - c)
        ipts.append(nodes)
        iw.append(2.0 * tri_area * wref)
    return (np.vstack(bpts), np.concatenate(bw), np.vstack(bnrm),
            np.vstack(ipts), np.concatenate(iw))


def build_quadrature(domain: PlanarDomain | Shape, order: int) -> PlanarDomain:
    """Populate boundary and interior quadrature rules of the given order.

    Smooth shapes use the periodic trapezoid rule on the boundary and a
    polar Gauss-Legendre tensor rule inside; polygons use Gauss-Legendre
    per edge and a centroid-fan triangulation with Duffy-transformed tensor
    rules.  Interior weights sum to the area and boundary weights to the
    perimeter (to relative 1e-10 or better).
    """
    if int(order) != order or order < 4:
        raise InvalidDomainError(f"quadrature order must be an integer >= 4, got {order!r}")
    if not isinstance(domain, PlanarDomain):
        domain = PlanarDomain(domain)
    shape = domain.shape
    if isinstance(shape, Disk):
        rules = _smooth_rules(shape.radius, shape.radius, order)
    elif isinstance(shape, Ellipse):
        rules = _smooth_rules(shape.a, shape.b, order)
    else:
        rules = _polygon_rules(shape.vertices, order)
    bp, bw, bn, ip, iw = rules
    return replace(domain, order=int(order), boundary_points=bp, boundary_weights=bw,
                   boundary_normals=bn, interior_points=ip, interior_weights=iw)

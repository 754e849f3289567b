"""Comparison geometry of the simply connected space forms.

The density (s_K'(r) - H s_K(r))^(n-1) built from curvature data (n, K, H)
controls volume growth in normal coordinates from the boundary.  Its
integral over the inner radius reciprocates to the main eigenvalue lower
bound, and its first positive zero is the radius of the comparison ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .quadrature import adaptive_quad

# Slack when comparing a radius against the first zero; absorbs the
# round trip through the closed-form zero finders.
_ZERO_SLACK = 1e-12


@dataclass(frozen=True)
class ThetaProfile:
    """Curvature data: dimension n, Ricci lower bound (n-1)*K, and a
    lower bound H for the mean curvature of the boundary."""

    n: int
    K: float
    H: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise PreconditionError(f"dimension must be an integer >= 2, got {self.n!r}")


@dataclass(frozen=True)
class SpaceFormBall:
    """Geodesic ball of radius R in the space form of curvature K."""

    n: int
    K: float
    R: float
    volume: float
    boundary_area: float
    mean_curvature: float

    @property
    def isoperimetric_ratio(self) -> float:
        return self.boundary_area / self.volume


def sk_eval(K: float, r):
    """Evaluate (s_K(r), s_K'(r)).

    s_K solves s'' + K s = 0 with s(0) = 0, s'(0) = 1, i.e. sin, identity or
    sinh depending on the sign of K.  Accepts a scalar or an ndarray r; the
    formulas are stable uniformly in K, including K -> 0.
    """
    r_arr = np.asarray(r, dtype=float)
    if K > 0:
        root = math.sqrt(K)
        s = np.sin(root * r_arr) / root
        sp = np.cos(root * r_arr)
    elif K < 0:
        root = math.sqrt(-K)
        s = np.sinh(root * r_arr) / root
        sp = np.cosh(root * r_arr)
    else:
        s = 1.0 * r_arr
        sp = np.ones_like(r_arr)
    if r_arr.ndim == 0:
        return float(s), float(sp)
    return s, sp


def theta_eval(profile: ThetaProfile, r):
    """Comparison density (s_K'(r) - H s_K(r))^(n-1).

    Positive up to the first zero of the base; it may go negative past it,
    so bound computations must stay within [0, theta_first_zero(profile)].
    In negative curvature the base is evaluated as
    e^-x + (1 - H/root) sinh(x) with x = r * root: the naive cosh - H sinh
    combination cancels catastrophically once the decaying branch falls
    below the rounding noise of the growing one.
    """
    K, H = profile.K, profile.H
    r_arr = np.asarray(r, dtype=float)
    if K < 0:
        root = math.sqrt(-K)
        x = root * r_arr
        base = np.exp(-x) + (1.0 - H / root) * np.sinh(x)
    else:
        s, sp = sk_eval(K, r_arr)
        base = sp - H * s
    out = base ** (profile.n - 1)
    return float(out) if r_arr.ndim == 0 else out


def theta_first_zero(profile: ThetaProfile) -> float:
    """First r > 0 with s_K'(r) = H s_K(r), or +inf when there is none.

    Closed forms: 1/H in the flat case (H > 0); arccot(H/sqrt(K))/sqrt(K)
    on the sphere; artanh(sqrt(|K|)/H)/sqrt(|K|) in negative curvature when
    H > sqrt(|K|).  The spherical value gets a Newton polish so the zero is
    accurate to full double precision.
    """
    K, H = profile.K, profile.H
    if K == 0:
        return 1.0 / H if H > 0 else math.inf
    if K > 0:
        root = math.sqrt(K)
        return _polish_zero(K, H, math.atan2(root, H) / root)
    root = math.sqrt(-K)
    if H > root:
        return math.atanh(root / H) / root
    return math.inf


def _polish_zero(K, H, r, iterations=3):
    # Newton steps on g = s' - H s; g' = -K s - H s'.
    for _ in range(iterations):
        s, sp = sk_eval(K, r)
        slope = -K * s - H * sp
        if slope == 0.0:
            break
        step = (sp - H * s) / slope
        r -= step
        if abs(step) <= 1e-16 * abs(r):
            break
    return r


def theta_integral(profile: ThetaProfile, R: float, tol: float = 1e-12) -> float:
    """Integral of the comparison density over [0, R].

    Closed form in the flat case; adaptive Gauss-Legendre otherwise.  R may
    not exceed the first zero: curvature data with an inner radius past the
    first zero is geometrically impossible.
    """
    if R <= 0:
        raise PreconditionError(f"radius must be positive, got {R!r}")
    rbar = theta_first_zero(profile)
    if R > rbar * (1.0 + _ZERO_SLACK):
        raise PreconditionError(
            f"inner radius {R} exceeds the first zero {rbar} of the comparison "
            f"density for (n={profile.n}, K={profile.K}, H={profile.H})")
    n, K, H = profile.n, profile.K, profile.H
    if K == 0:
        if H == 0:
            return float(R)
        return (1.0 - (1.0 - H * R) ** n) / (n * H)
    return adaptive_quad(lambda t: theta_eval(profile, t), 0.0, min(R, rbar), tol=tol)


def unit_sphere_area(n: int) -> float:
    """Area of the unit (n-1)-sphere bounding the unit ball of R^n."""
    return 2.0 * math.pi ** (0.5 * n) / math.gamma(0.5 * n)


def _sk_power_integral(n: int, K: float, R: float) -> float:
    # integral of s_K(t)**(n-1) over [0, R]; closed forms where cheap
    if K == 0:
        return R ** n / n
    if n == 2:
        if K > 0:
            return (1.0 - math.cos(math.sqrt(K) * R)) / K
        return (math.cosh(math.sqrt(-K) * R) - 1.0) / (-K)
    if n == 3:
        if K > 0:
            root = math.sqrt(K)
            return (0.5 * R - 0.25 * math.sin(2.0 * root * R) / root) / K
        root = math.sqrt(-K)
        return (0.25 * math.sinh(2.0 * root * R) / root - 0.5 * R) / (-K)
    if K > 0:
        r_peak = min(R, 0.5 * math.pi / math.sqrt(K))
    else:
        r_peak = R
    peak = sk_eval(K, r_peak)[0] ** (n - 1)
    tol = max(1e-14, 1e-13 * peak * R)
    return adaptive_quad(lambda t: sk_eval(K, t)[0] ** (n - 1), 0.0, R, tol=tol)


def ball_geometry(n: int, K: float, R: float) -> SpaceFormBall:
    """Exact geometry of the geodesic ball of radius R in the space form.

    boundary_area = omega_{n-1} s_K(R)^(n-1) and volume is the integral of
    the same power, where omega_{n-1} is the unit-sphere area; the boundary
    mean curvature is s_K'(R)/s_K(R).
    """
    if int(n) != n or n < 2:
        raise PreconditionError(f"dimension must be an integer >= 2, got {n!r}")
    if R <= 0:
        raise PreconditionError(f"ball radius must be positive, got {R!r}")
    if K > 0 and R >= math.pi / math.sqrt(K):
        raise PreconditionError(
            f"ball radius {R} reaches the diameter pi/sqrt(K) of the sphere")
    omega = unit_sphere_area(int(n))
    s, sp = sk_eval(K, R)
    return SpaceFormBall(
        n=int(n),
        K=float(K),
        R=float(R),
        volume=omega * _sk_power_integral(int(n), K, R),
        boundary_area=omega * s ** (n - 1),
        mean_curvature=sp / s,
    )

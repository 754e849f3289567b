"""Eigenvalue bounds assembled from curvature data (n, K, H, R).

Every bound is on the first eigenvalue q1 of the biharmonic Steklov
problem, equivalently on the infimum of boundary/interior L2 ratios of
harmonic functions.  The reciprocal of the comparison-density integral is
the sharp lower bound; the remaining operations evaluate its closed-form
relaxations, the matching-ball comparison, and the classical bounds it
dominates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import PreconditionError, UnsupportedRegimeError
from .spaceform import (
    ThetaProfile,
    ball_geometry,
    theta_first_zero,
    theta_integral,
)

_TAGS = {
    "q1Lower": "comparison-density integral, reciprocal",
    "q1LowerClosedFormK0": "flat closed form (nonnegative Ricci)",
    "q1LowerClosedFormKneg1": "hyperbolic-normalization closed form",
    "ballComparison": "matching-mean-curvature ball in the space form",
    "chengUpper": "geodesic-ball comparison upper bound",
    "isoperimetricUpper": "isoperimetric ratio |boundary| / |volume|",
    "payne": "slab-width bound 2/w for convex Euclidean domains",
    "wangXia": "Wang-Xia bound n*H",
    "innerRadiusBound": "inner-radius bound 1/R for nonnegative curvature data",
}


@dataclass
class ClassicalBounds:
    """The classical lower bounds a report compares against."""

    payne: float | None = None
    wang_xia: float | None = None
    inner_radius_bound: float | None = None

    def is_empty(self) -> bool:
        return self.payne is None and self.wang_xia is None and self.inner_radius_bound is None


@dataclass
class BoundReport:
    """All bounds applicable to one set of curvature data, with provenance."""

    q1_lower: float
    q1_lower_closed_form: float | None = None
    ball_comparison: float | None = None
    cheng_upper: float | None = None
    isoperimetric_upper: float | None = None
    classical: ClassicalBounds | None = None
    provenance: list[tuple[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        """Wire form: camelCase keys, inapplicable bounds omitted."""
        out: dict = {"q1Lower": self.q1_lower}
        if self.q1_lower_closed_form is not None:
            out["q1LowerClosedForm"] = self.q1_lower_closed_form
        if self.ball_comparison is not None:
            out["ballComparison"] = self.ball_comparison
        if self.cheng_upper is not None:
            out["chengUpper"] = self.cheng_upper
        if self.isoperimetric_upper is not None:
            out["isoperimetricUpper"] = self.isoperimetric_upper
        if self.classical is not None and not self.classical.is_empty():
            sub = {}
            if self.classical.payne is not None:
                sub["payne"] = self.classical.payne
            if self.classical.wang_xia is not None:
                sub["wangXia"] = self.classical.wang_xia
            if self.classical.inner_radius_bound is not None:
                sub["innerRadiusBound"] = self.classical.inner_radius_bound
            out["classical"] = sub
        out["provenance"] = [list(pair) for pair in self.provenance]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def main_lower_bound(profile: ThetaProfile, R: float) -> float:
    """Sharp lower bound 1 / integral of the comparison density over [0, R].

    Equality holds exactly when the domain is the geodesic ball of radius R
    in the space form (then the value is the ball's isoperimetric ratio).
    """
    return 1.0 / theta_integral(profile, R)


def explicit_bound_k0(n: int, H: float, R: float) -> float:
    """Closed form of the main bound under nonnegative Ricci curvature.

    H > 0: n H / (1 - (1 - R H)^n), valid for R <= 1/H;
    H = 0: 1/R;  H < 0: n |H| / ((1 + R |H|)^n - 1).
    """
    if int(n) != n or n < 2:
        raise PreconditionError(f"dimension must be an integer >= 2, got {n!r}")
    if R <= 0:
        raise PreconditionError(f"inner radius must be positive, got {R!r}")
    if H > 0:
        if R * H > 1.0 + 1e-12:
            raise PreconditionError(
                f"inner radius {R} exceeds 1/H = {1.0 / H}; no such mean-convex domain exists")
        return n * H / (1.0 - (1.0 - min(R * H, 1.0)) ** n)
    if H == 0:
        return 1.0 / R
    return n * (-H) / ((1.0 + R * (-H)) ** n - 1.0)


def explicit_bound_kneg1(n: int, H: float, R: float) -> float:
    """Closed-form relaxations of the main bound when Ricci >= -(n-1).

    H >= 1: (n-1)/(1 - e^{-(n-1)R}), which always exceeds n-1;
    0 <= H < 1: (n-1)/(e^{(n-1)R} - 1);
    H < 0: the same divided by (1 + |H|)^(n-1).
    These integrate exponential over-estimates of the density, so each is at
    most the main bound, with equality when H = 1 (the density is exactly
    e^{-(n-1)r} there).
    """
    if int(n) != n or n < 2:
        raise PreconditionError(f"dimension must be an integer >= 2, got {n!r}")
    if R <= 0:
        raise PreconditionError(f"inner radius must be positive, got {R!r}")
    x = (n - 1) * R
    if H >= 1:
        return (n - 1) / (-math.expm1(-x))
    if H >= 0:
        return (n - 1) / math.expm1(x)
    return (n - 1) / ((1.0 - H) ** (n - 1) * math.expm1(x))


def ball_comparison_bound(n: int, K: float, H: float) -> tuple[float, float]:
    """(q1 of the comparison ball, its radius) for curvature data (K, H).

    The comparison ball is the unique geodesic ball in the space form whose
    boundary has constant mean curvature H; its radius is the first zero of
    the comparison density.  It exists for every H when K > 0, for H > 0
    when K = 0 and for H > sqrt(|K|) when K < 0.  Its q1 equals its
    isoperimetric ratio, and equals n*H exactly in the flat case.
    """
    if int(n) != n or n < 2:
        raise PreconditionError(f"dimension must be an integer >= 2, got {n!r}")
    if K == 0:
        if H <= 0:
            raise UnsupportedRegimeError(
                f"no flat comparison ball for H = {H}; the flat regime needs H > 0")
        return n * H, 1.0 / H
    if K < 0 and H <= math.sqrt(-K):
        raise UnsupportedRegimeError(
            f"no hyperbolic comparison ball for H = {H}; need H > sqrt(|K|) = {math.sqrt(-K)}")
    rbar = theta_first_zero(ThetaProfile(n, K, H))
    return ball_geometry(n, K, rbar).isoperimetric_ratio, rbar


def mckean_bound(n: int) -> float:
    """The dimensional constant n - 1.

    Under (K = -1, H >= 1) it bounds q1 strictly from below, and hyperbolic
    balls approach it as the radius grows.
    """
    if int(n) != n or n < 2:
        raise PreconditionError(f"dimension must be an integer >= 2, got {n!r}")
    return float(n - 1)


def cheng_upper_bound(n: int, K: float, r: float) -> float:
    """q1 of the radius-r ball in the space form of curvature K.

    Contract: for any manifold with Ricci >= (n-1)K this value bounds from
    above the q1 of every geodesic ball of radius r (r below the injectivity
    radius, so the ball has smooth boundary).  The manifold itself is not an
    input; only the comparison value is computed.
    """
    return ball_geometry(n, K, r).isoperimetric_ratio


def classical_bounds(n: int, H: float, R: float, width: float | None = None) -> ClassicalBounds:
    """Classical lower bounds: Payne's 2/width, Wang-Xia's n*H, and 1/R.

    Payne applies to convex Euclidean domains (width = least distance
    between parallel supporting hyperplanes), Wang-Xia to nonnegative Ricci
    with H > 0, and 1/R to nonnegative curvature data.  Both 2/width and
    n*H are dominated by the main bound: w >= 2R forces 1/R >= 2/w, and the
    flat closed form exceeds n*H because 1 - R*H >= 0.
    """
    if R <= 0:
        raise PreconditionError(f"inner radius must be positive, got {R!r}")
    if width is not None and width <= 0:
        raise PreconditionError(f"width must be positive, got {width!r}")
    return ClassicalBounds(
        payne=None if width is None else 2.0 / width,
        wang_xia=n * H if H > 0 else None,
        inner_radius_bound=1.0 / R,
    )


def bound_report(profile: ThetaProfile, R: float, area: float | None = None,
                 perimeter: float | None = None, width: float | None = None,
                 caveats: tuple[str, ...] = ()) -> BoundReport:
    """Assemble every bound applicable to the given curvature data.

    Optional extras refine the report: area and perimeter together give the
    isoperimetric upper bound, width gives Payne's bound.  Inapplicable
    bounds are omitted, not errors; each included bound carries a
    provenance tag.
    """
    n, K, H = profile.n, profile.K, profile.H
    report = BoundReport(q1_lower=main_lower_bound(profile, R))
    report.provenance.append(("q1Lower", _TAGS["q1Lower"]))
    report.notes.extend(caveats)

    if K == 0:
        report.q1_lower_closed_form = explicit_bound_k0(n, H, R)
        report.provenance.append(("q1LowerClosedForm", _TAGS["q1LowerClosedFormK0"]))
    elif K == -1:
        report.q1_lower_closed_form = explicit_bound_kneg1(n, H, R)
        report.provenance.append(("q1LowerClosedForm", _TAGS["q1LowerClosedFormKneg1"]))

    try:
        report.ball_comparison, _ = ball_comparison_bound(n, K, H)
        report.provenance.append(("ballComparison", _TAGS["ballComparison"]))
    except UnsupportedRegimeError:
        pass

    # When the inner radius attains the first zero, rigidity forces the
    # domain to be the comparison ball itself, so the ball value is also an
    # upper bound and the sandwich pinches.
    rbar = theta_first_zero(profile)
    if math.isfinite(rbar) and abs(R - rbar) <= 1e-12 * max(1.0, rbar):
        report.cheng_upper = cheng_upper_bound(n, K, R)
        report.provenance.append(("chengUpper", _TAGS["chengUpper"]))
        report.notes.append("inner radius attains the density's first zero: "
                            "the domain is the comparison ball and the bounds coincide")

    if area is not None and perimeter is not None:
        if area <= 0 or perimeter <= 0:
            raise PreconditionError("area and perimeter must be positive")
        report.isoperimetric_upper = perimeter / area
        report.provenance.append(("isoperimetricUpper", _TAGS["isoperimetricUpper"]))
        if report.q1_lower > report.isoperimetric_upper + 1e-9:
            raise PreconditionError(
                f"lower bound {report.q1_lower} exceeds the isoperimetric ratio "
                f"{report.isoperimetric_upper}; area/perimeter are inconsistent "
                "with the curvature data")

    classical = ClassicalBounds()
    if width is not None and K == 0:
        if width <= 0:
            raise PreconditionError(f"width must be positive, got {width!r}")
        classical.payne = 2.0 / width
        report.provenance.append(("payne", _TAGS["payne"]))
        report.notes.append("1/R >= 2/width for convex domains: any enclosing "
                            "slab contains the largest inscribed ball")
    if K >= 0 and H > 0:
        classical.wang_xia = n * H
        report.provenance.append(("wangXia", _TAGS["wangXia"]))
        if K == 0:
            report.notes.append("the lower bound dominates n*H because "
                                "1 - R*H >= 0, with equality exactly at R*H = 1")
    if K >= 0 and H >= 0:
        classical.inner_radius_bound = 1.0 / R
        report.provenance.append(("innerRadiusBound", _TAGS["innerRadiusBound"]))
    if not classical.is_empty():
        report.classical = classical
    return report

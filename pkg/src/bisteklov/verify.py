"""Verification registry: module invariants and the acceptance gate.

Every check returns (passed, detail) and is tagged with the suite it
belongs to; checks that form the acceptance gate also carry a criterion
number.  The CLI's `verify` subcommand and the acceptance test module both
run through this registry, so there is a single source of truth for what
"verified" means.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable

import numpy as np

from .bounds import (
    ball_comparison_bound,
    explicit_bound_k0,
    explicit_bound_kneg1,
    main_lower_bound,
)
from .eigensolver import assemble, cylinder_q1, solve_domain, solve_q1
from .geometry2d import (
    ConvexPolygon,
    Disk,
    Ellipse,
    build_quadrature,
    chebyshev_center,
    domain_metrics,
    min_width,
)
from .spaceform import (
    ThetaProfile,
    ball_geometry,
    sk_eval,
    theta_eval,
    theta_first_zero,
    theta_integral,
)

SUITES = ("spaceform", "bounds", "solver")

_SEED = 721804


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str
    seconds: float
    acceptance: int | None = None


_REGISTRY: list[tuple[str, str, int | None, Callable[[], tuple[bool, str]]]] = []


def _check(suite: str, name: str, acceptance: int | None = None):
    def deco(fn):
        _REGISTRY.append((suite, name, acceptance, fn))
        return fn
    return deco


def run_suite(suite: str) -> list[CheckResult]:
    """Run one module suite ('spaceform', 'bounds', 'solver') or 'all'."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose one of {SUITES + ('all',)}")
    results = []
    for entry_suite, name, acceptance, fn in _REGISTRY:
        if suite != "all" and entry_suite != suite:
            continue
        start = time.perf_counter()
        passed, detail = fn()
        results.append(CheckResult(entry_suite, name, passed, detail,
                                   time.perf_counter() - start, acceptance))
    return results


def acceptance_checks():
    """The acceptance-gate entries, ordered by criterion number."""
    entries = [e for e in _REGISTRY if e[2] is not None]
    return sorted(entries, key=lambda e: e[2])


# ---------------------------------------------------------------------------
# shared corpus

def _unit_square() -> ConvexPolygon:
    return ConvexPolygon([(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)])


def _hexagon(circumradius: float = 1.0) -> ConvexPolygon:
    return ConvexPolygon([(circumradius * math.cos(math.pi * k / 3),
                           circumradius * math.sin(math.pi * k / 3)) for k in range(6)])


def _circumscribed_triangle() -> ConvexPolygon:
    # equilateral triangle whose incircle is the unit disk
    return ConvexPolygon([(2 * math.cos(math.pi / 2 + 2 * math.pi * k / 3),
                           2 * math.sin(math.pi / 2 + 2 * math.pi * k / 3)) for k in range(3)])


@lru_cache(maxsize=None)
def _corpus():
    shapes = [
        ("disk", Disk(1.0), False),
        ("ellipse-2x1", Ellipse(2.0, 1.0), False),
        ("ellipse-1.5x1", Ellipse(1.5, 1.0), False),
        ("square", _unit_square(), True),
        ("hexagon", _hexagon(), True),
    ]
    return tuple((name, build_quadrature(shape, 20), polygonal)
                 for name, shape, polygonal in shapes)


@lru_cache(maxsize=None)
def _corpus_models(degree: int):
    return tuple((name, solve_q1(assemble(domain, degree)), polygonal)
                 for name, domain, polygonal in _corpus())


def _ball_profile(n: int, K: float, R: float) -> ThetaProfile:
    ball = ball_geometry(n, K, R)
    return ThetaProfile(n, K, ball.mean_curvature)


# ---------------------------------------------------------------------------
# spaceform suite

@_check("spaceform", "branch continuity of s_K across K = 0")
def _branch_continuity():
    # the K -> 0 limit is regular; compare both signed branches against the
    # flat one in relative terms (the true gap is |K| r^3 / 6)
    eps = 1e-10
    r = np.linspace(0.0, 10.0, 101)
    s0, sp0 = sk_eval(0.0, r)
    worst = 0.0
    for K in (eps, -eps):
        s, sp = sk_eval(K, r)
        worst = max(worst,
                    float(np.max(np.abs(s - s0) / np.maximum(1.0, np.abs(s0)))),
                    float(np.max(np.abs(sp - sp0))))
    return worst <= 1e-8, f"max deviation {worst:.3e} (tol 1e-8)"


@_check("spaceform", "density positive below a vanishing first zero", acceptance=9)
def _first_zero_contract():
    rng = np.random.default_rng(_SEED)
    worst_zero = 0.0
    worst_min = math.inf
    for _ in range(20):
        n = int(rng.integers(2, 6))
        K = float(rng.uniform(-4.0, 4.0))
        if K > 0:
            H = float(rng.uniform(-3.0, 3.0))
        else:
            H = math.sqrt(-K) + float(rng.uniform(0.05, 3.0))
        profile = ThetaProfile(n, K, H)
        rbar = theta_first_zero(profile)
        if not math.isfinite(rbar):
            return False, f"first zero unexpectedly infinite for (n={n}, K={K}, H={H})"
        worst_zero = max(worst_zero, abs(theta_eval(profile, rbar)))
        samples = theta_eval(profile, np.linspace(0.0, rbar * (1.0 - 1e-6), 1000))
        worst_min = min(worst_min, float(np.min(samples)))
    ok = worst_zero <= 1e-10 and worst_min > 0.0
    return ok, f"|theta(first zero)| <= {worst_zero:.3e}, min interior value {worst_min:.3e}"


@_check("spaceform", "ball identity: reciprocal density integral equals the isoperimetric ratio")
def _ball_identity():
    worst = 0.0
    for n, K, R in product((2, 3, 4, 5), (-1.0, 0.0, 1.0), (0.25, 0.5, 0.75, 1.0)):
        ball = ball_geometry(n, K, R)
        value = 1.0 / theta_integral(ThetaProfile(n, K, ball.mean_curvature), R)
        worst = max(worst, abs(value - ball.isoperimetric_ratio))
    return worst <= 1e-8, f"max |1/integral - ratio| = {worst:.3e} over 48 balls (tol 1e-8)"


@_check("spaceform", "density integral strictly increasing below the first zero")
def _integral_monotone():
    profiles = [ThetaProfile(2, 0.0, 1.0), ThetaProfile(3, 1.0, 0.5),
                ThetaProfile(4, -1.0, 2.0), ThetaProfile(2, -1.0, 0.3)]
    for profile in profiles:
        rbar = min(theta_first_zero(profile), 3.0)
        grid = np.linspace(rbar / 12.0, rbar * (1.0 - 1e-9), 12)
        values = [theta_integral(profile, float(R)) for R in grid]
        if not all(b > a for a, b in zip(values, values[1:])):
            return False, f"integral not strictly increasing for {profile}"
    return True, "strict increase on 12-point grids for 4 profiles"


# ---------------------------------------------------------------------------
# bounds suite

@_check("bounds", "ball sharpness across the space forms", acceptance=1)
def _ball_sharpness():
    start = time.perf_counter()
    worst = 0.0
    for n, K, R in product((2, 3, 4, 5), (-1.0, 0.0, 1.0), (0.3, 0.6, 0.9)):
        ball = ball_geometry(n, K, R)
        value = main_lower_bound(ThetaProfile(n, K, ball.mean_curvature), R)
        worst = max(worst, abs(value - ball.isoperimetric_ratio))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 1.0
    return ok, f"max error {worst:.3e} over the 36-point grid (tol 1e-8), {elapsed:.3f}s"


@_check("bounds", "closed forms match the density integral", acceptance=11)
def _closed_form_agreement():
    worst_flat = 0.0
    points = 0
    for n, H in product((2, 3, 4, 5), (-2.0, -0.5, 0.0, 0.5, 1.0, 2.0)):
        radii = [0.25 / H, 0.5 / H, 0.75 / H, 1.0 / H] if H > 0 else [0.25, 0.75, 1.5, 3.0]
        for R in radii:
            worst_flat = max(worst_flat, abs(explicit_bound_k0(n, H, R)
                                             - main_lower_bound(ThetaProfile(n, 0.0, H), R)))
            points += 1
    worst_hyp = 0.0
    for n, R in product((2, 3, 4, 5), (0.3, 0.5, 1.0, 2.0)):
        worst_hyp = max(worst_hyp, abs(explicit_bound_kneg1(n, 1.0, R)
                                       - main_lower_bound(ThetaProfile(n, -1.0, 1.0), R)))
    ok = worst_flat <= 1e-12 and worst_hyp <= 1e-8
    return ok, (f"flat: {worst_flat:.3e} over {points} points (tol 1e-12); "
                f"hyperbolic H=1: {worst_hyp:.3e} (tol 1e-8)")


@_check("bounds", "hyperbolic closed forms never exceed the main bound")
def _hyperbolic_relaxations():
    worst = -math.inf
    eq_worst = 0.0
    for n in (2, 3, 4):
        cases = []
        for H in (1.0, 1.5, 2.0):
            rbar = theta_first_zero(ThetaProfile(n, -1.0, H))
            radii = (0.5, 1.0, 2.0) if math.isinf(rbar) else (0.3 * rbar, 0.7 * rbar, 0.95 * rbar)
            cases += [(H, R) for R in radii]
        cases += [(H, R) for H in (0.0, 0.5, -0.5, -2.0) for R in (0.5, 1.0, 2.0)]
        for H, R in cases:
            closed = explicit_bound_kneg1(n, H, R)
            main = main_lower_bound(ThetaProfile(n, -1.0, H), R)
            worst = max(worst, closed - main)
            if H == 1.0:
                eq_worst = max(eq_worst, abs(closed - main))
    ok = worst <= 1e-9 and eq_worst <= 1e-8
    return ok, f"max(closed - main) = {worst:.3e} (tol 1e-9); H=1 equality gap {eq_worst:.3e}"


@_check("bounds", "Wang-Xia dominance with equality only at R*H = 1", acceptance=4)
def _wang_xia_dominance():
    worst_eq = 0.0
    for n, H, t in product((2, 3, 4, 5), (0.5, 1.0, 2.0, 4.0, 8.0),
                           (0.2, 0.4, 0.6, 0.8, 1.0)):
        R = t / H
        value = main_lower_bound(ThetaProfile(n, 0.0, H), R)
        if t == 1.0:
            worst_eq = max(worst_eq, abs(value - n * H))
        elif not value > n * H:
            return False, f"no strict dominance at (n={n}, H={H}, R*H={t})"
    ok = worst_eq <= 1e-10
    return ok, f"strict above n*H at 80 interior points; equality gap {worst_eq:.3e} at R*H=1"


@_check("bounds", "slab-width dominance 1/R >= 2/width")
def _slab_dominance():
    for R, factor in product((0.25, 0.5, 1.0, 2.0), (2.0, 2.5, 4.0, 10.0)):
        width = factor * R
        if 1.0 / R < 2.0 / width:
            return False, f"1/R < 2/w at R={R}, w={width}"
    return True, "holds on the 16-point (R, w >= 2R) grid"


@_check("bounds", "McKean-type decrease to the dimensional constant", acceptance=8)
def _mckean_limit():
    worst_gap = 0.0
    for n in (2, 3, 4, 5):
        radii = [0.5, 1.0, 2.0, 4.0, 20.0 / (n - 1)]
        values = [explicit_bound_kneg1(n, 1.0, R) for R in radii]
        if not all(v > n - 1 for v in values):
            return False, f"bound not strictly above n-1 for n={n}"
        if not all(a > b for a, b in zip(values, values[1:])):
            return False, f"bound not strictly decreasing in R for n={n}"
        worst_gap = max(worst_gap, values[-1] - (n - 1))
    ok = worst_gap <= 1e-8
    return ok, f"strictly above n-1, decreasing; gap at R=20/(n-1) is {worst_gap:.3e} (tol 1e-8)"


@_check("bounds", "hemisphere comparison values", acceptance=7)
def _hemisphere_values():
    q2, r2 = ball_comparison_bound(2, 1.0, 0.0)
    q3, r3 = ball_comparison_bound(3, 1.0, 0.0)
    err2 = abs(q2 - 1.0)
    err3 = abs(q3 - 4.0 / math.pi)
    err_r = max(abs(r2 - math.pi / 2), abs(r3 - math.pi / 2))
    ok = err2 <= 1e-10 and err3 <= 1e-10 and err_r <= 1e-12
    return ok, f"n=2 error {err2:.3e}, n=3 error {err3:.3e} vs 4/pi (tol 1e-10)"


# ---------------------------------------------------------------------------
# solver suite

@_check("solver", "interior rule integrates x^2 + y^2 on the disk")
def _disk_moment():
    domain = build_quadrature(Disk(1.0), 8)
    value = float(np.sum(domain.interior_weights
                         * np.sum(domain.interior_points ** 2, axis=1)))
    err = abs(value - math.pi / 2)
    return err <= 1e-10, f"error {err:.3e} against the polar closed form (tol 1e-10)"


@_check("solver", "triangle inscribed center matches the incenter")
def _incenter_agreement():
    triangles = [
        [(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)],
        [(-1.0, -0.5), (2.0, 0.0), (0.5, 1.5)],
        [(0.0, 0.0), (5.0, 1.0), (2.0, 6.0)],
    ]
    worst = 0.0
    for tri in triangles:
        A, B, C = (np.asarray(v) for v in tri)
        a, b, c = (np.linalg.norm(B - C), np.linalg.norm(C - A), np.linalg.norm(A - B))
        incenter = (a * A + b * B + c * C) / (a + b + c)
        s = 0.5 * (a + b + c)
        inradius = math.sqrt((s - a) * (s - b) * (s - c) / s)
        center, radius = chebyshev_center(ConvexPolygon(tri))
        worst = max(worst, float(np.max(np.abs(center - incenter))), abs(radius - inradius))
    return worst <= 1e-10, f"max deviation {worst:.3e} from the incenter formula (tol 1e-10)"


@_check("solver", "polygon inner radius matches a dense grid scan")
def _inner_radius_grid():
    polygons = [("square", _unit_square()), ("hexagon", _hexagon()),
                ("triangle", _circumscribed_triangle())]
    worst = 0.0
    for name, poly in polygons:
        V = poly.vertices
        lo, hi = V.min(axis=0), V.max(axis=0)
        cell = float(np.max(hi - lo)) / 400.0
        xs = np.linspace(lo[0], hi[0], 400)
        ys = np.linspace(lo[1], hi[1], 400)
        X, Y = np.meshgrid(xs, ys)
        dist = np.full(X.shape, np.inf)
        for i in range(len(V)):
            p, q = V[i], V[(i + 1) % len(V)]
            e = q - p
            length = math.hypot(*e)
            signed = ((e[0] * (Y - p[1]) - e[1] * (X - p[0])) / length)
            dist = np.minimum(dist, signed)
        grid_radius = float(np.max(dist))
        _, lp_radius = chebyshev_center(poly)
        err = abs(lp_radius - grid_radius)
        if err > 2.0 * cell:
            return False, f"{name}: LP radius off the 400x400 scan by {err:.3e} > 2 cells"
        worst = max(worst, err)
    return True, f"max LP-vs-scan deviation {worst:.3e} (allowed 2 grid cells)"


@_check("solver", "hexagon minimal width equals twice the apothem")
def _hexagon_width():
    err = abs(min_width(_hexagon()) - math.sqrt(3.0))
    return err <= 1e-12, f"error {err:.3e} against sqrt(3) (tol 1e-12)"


@_check("solver", "unit-disk eigenvalue at low degree", acceptance=2)
def _disk_eigenvalue():
    start = time.perf_counter()
    model = solve_domain(Disk(1.0), 10)
    elapsed = time.perf_counter() - start
    err = abs(model.q1 - 2.0)
    ok = err <= 1e-8 and elapsed < 1.0
    return ok, f"|q1 - 2| = {err:.3e} at degree 10 (tol 1e-8), {elapsed:.3f}s"


@_check("solver", "ball equality across disk radii")
def _disk_scaling():
    worst = 0.0
    for r in (0.25, 0.5, 1.0, 2.0, 4.0):
        worst = max(worst, abs(solve_domain(Disk(r), 8).q1 - 2.0 / r))
    return worst <= 1e-8, f"max |q1 - 2/r| = {worst:.3e} over five radii (tol 1e-8)"


@_check("solver", "sandwich on the convex corpus", acceptance=3)
def _corpus_sandwich():
    details = []
    for name, model, polygonal in _corpus_models(16):
        metrics = domain_metrics(model.domain)
        lower = main_lower_bound(ThetaProfile(2, 0.0, metrics.min_curvature),
                                 metrics.inner_radius)
        upper = metrics.perimeter / metrics.area
        tol = 1e-4 if polygonal else 1e-8
        if not (lower - tol <= model.q1 <= upper + tol):
            return False, f"{name}: q1={model.q1} outside [{lower}, {upper}] (tol {tol})"
        details.append(f"{name} {lower:.6f} <= {model.q1:.6f} <= {upper:.6f}")
    return True, "; ".join(details)


@_check("solver", "circumscribed triangle: inscribed radius and width", acceptance=5)
def _triangle_payne():
    triangle = _circumscribed_triangle()
    _, radius = chebyshev_center(triangle)
    width = min_width(triangle)
    err_r = abs(radius - 1.0)
    err_w = abs(width - 3.0)
    ok = err_r <= 1e-9 and err_w <= 1e-9 and 1.0 / radius > 2.0 / width
    return ok, (f"inner radius error {err_r:.3e}, width error {err_w:.3e} (tol 1e-9); "
                f"1/R = {1.0 / radius:.6f} > 2/w = {2.0 / width:.6f}")


def _pencil_2x2(A, B):
    # roots of det(A - t B) = 0 for symmetric 2x2 A, B with B positive definite
    a = B[0][0] * B[1][1] - B[0][1] ** 2
    b = -(A[0][0] * B[1][1] + A[1][1] * B[0][0] - 2.0 * A[0][1] * B[0][1])
    c = A[0][0] * A[1][1] - A[0][1] ** 2
    disc = math.sqrt(max(b * b - 4.0 * a * c, 0.0))
    return sorted(((-b - disc) / (2.0 * a), (-b + disc) / (2.0 * a)))


@_check("solver", "flat-cylinder equality on the (L, R) grid", acceptance=6)
def _cylinder_equality():
    worst_q1 = 0.0
    worst_mode = math.inf
    for L, R in product((0.5, 1.0, 2.0 * math.pi, 10.0, 100.0),
                        (0.25, 0.5, 1.0, 2.0, 5.0)):
        spectrum = cylinder_q1(L, R, 8)
        worst_q1 = max(worst_q1, abs(spectrum.q1 - 1.0 / R))
        worst_mode = min(worst_mode,
                         min(m - 1.0 / R for m in spectrum.per_mode_minima[1:]))
    oracle = _pencil_2x2([[2.0, 2.0], [2.0, 4.0]], [[2.0, 2.0], [2.0, 8.0 / 3.0]])
    pair = sorted(cylinder_q1(2.0 * math.pi, 1.0, 8).per_mode_pairs[0])
    mode0_err = max(abs(pair[0] - oracle[0]), abs(pair[1] - oracle[1]),
                    abs(oracle[0] - 1.0), abs(oracle[1] - 3.0))
    ok = worst_q1 <= 1e-10 and worst_mode >= -1e-12 and mode0_err <= 1e-12
    return ok, (f"max |q1 - 1/R| = {worst_q1:.3e} on the 5x5 grid (tol 1e-10); "
                f"higher modes clear 1/R by >= {worst_mode:.3e}; "
                f"mode-0 pencil vs oracle {{1, 3}}: {mode0_err:.3e}")


@_check("solver", "subharmonic ratios dominate the lower bound", acceptance=10)
def _subharmonic_dominance():
    rng = np.random.default_rng(_SEED + 1)
    degree = 10
    worst = math.inf
    for name, domain, _ in _corpus():
        model = assemble(domain, degree)
        metrics = domain_metrics(domain)
        bound = main_lower_bound(ThetaProfile(2, 0.0, metrics.min_curvature),
                                 metrics.inner_radius)
        for _ in range(100):
            coeffs = rng.uniform(-1.0, 1.0, 2 * degree + 1)
            ratio = (float(coeffs @ model.boundary_gram @ coeffs)
                     / float(coeffs @ model.interior_gram @ coeffs))
            worst = min(worst, ratio - bound)
            if ratio < bound - 1e-9:
                return False, f"{name}: ratio {ratio} fell below bound {bound}"
    return True, f"500 random harmonic ratios clear their bounds by >= {worst:.3e}"


@_check("solver", "trial space monotone in degree")
def _degree_monotonicity():
    domain = build_quadrature(Ellipse(2.0, 1.0), 18)
    values = [solve_q1(assemble(domain, n)).q1 for n in range(1, 15)]
    worst = max(b - a for a, b in zip(values, values[1:]))
    return worst <= 1e-12, f"max increase between degrees {worst:.3e} (tol 1e-12)"


@_check("solver", "eigenvalue scales like an inverse length")
def _scale_covariance():
    q_small = solve_domain(Ellipse(2.0, 1.0), 20).q1
    q_big = solve_domain(Ellipse(4.0, 2.0), 20).q1
    rel = abs(q_big - q_small / 2.0) / (q_small / 2.0)
    return rel <= 1e-8, f"relative covariance defect {rel:.3e} at t = 2 (tol 1e-8)"

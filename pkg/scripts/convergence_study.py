#!/usr/bin/env python3
"""Degree sweep of the harmonic-basis eigenvalue on one planar domain.

Prints CSV rows (degree, q1, drop-from-previous) together with the
curvature-data lower bound and the isoperimetric upper bound, so the
spectral convergence and the sandwich are visible side by side.

Usage: python scripts/convergence_study.py --domain ellipse:2,1 --max-degree 40
"""

import argparse

from bisteklov import ThetaProfile, domain_metrics, main_lower_bound, solve_domain
from bisteklov.cli import format_number, parse_domain_spec


def run(spec: str, max_degree: int, step: int) -> None:
    shape = parse_domain_spec(spec)
    metrics = domain_metrics(shape)
    lower = main_lower_bound(ThetaProfile(2, 0.0, metrics.min_curvature),
                             metrics.inner_radius)
    upper = metrics.perimeter / metrics.area
    print(f"# domain={spec} lower={format_number(lower)} upper={format_number(upper)}")
    print("degree,q1,drop")
    previous = None
    for degree in range(step, max_degree + 1, step):
        q1 = solve_domain(shape, degree).q1
        drop = "" if previous is None else format_number(previous - q1)
        print(f"{degree},{format_number(q1)},{drop}")
        previous = q1


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--domain", default="ellipse:2,1")
    parser.add_argument("--max-degree", type=int, default=40)
    parser.add_argument("--step", type=int, default=4)
    args = parser.parse_args()
    run(args.domain, args.max_degree, args.step)

#!/usr/bin/env python3
"""Tabulate the curvature-data lower bound against the classical n*H value.

The flat closed form n H / (1 - (1 - R H)^n) meets n*H only when R*H = 1,
i.e. when the domain is forced to be the ball; everywhere else it is
strictly better.  Writes CSV to stdout.

Usage: python scripts/wang_xia_table.py [n ...]
"""

import sys

from bisteklov.cli import main

dims = ",".join(sys.argv[1:]) if len(sys.argv) > 1 else "2,3"
raise SystemExit(main([
    "table",
    "--grid", f"n={dims}",
    "--grid", "K=0",
    "--grid", "H=0.5,1,2",
    "--grid", "R=0.05:0.5:0.05",
    "--columns", "mainBound,wangXia,oneOverR",
]))

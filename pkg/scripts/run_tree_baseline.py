#!/usr/bin/env python3
"""Degree and diameter of uniform labeled trees, the reference the block statistics are compared to."""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(run("tree_baseline.json"))

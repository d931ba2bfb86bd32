#!/usr/bin/env python3
"""Blocks met by a path and block-forest diameter against their tail bounds.

Use --config scripts/configs/path_length_exact.json for the exact small instance.
"""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(run("path_length.json"))

#!/usr/bin/env python3
"""Maximum block degree of uniform neighbourhood samples against its tail bounds."""

import sys

from _common import run

if __name__ == "__main__":
    sys.exit(run("block_degree.json"))

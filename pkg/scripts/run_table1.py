#!/usr/bin/env python3
"""Regenerate the staged-integrand comparison table.

Thin wrapper over ``melroot table1``; run with no arguments to print the
default table (R = 0.1 circle about 0.57 + 1.57i, 9 angles) as CSV.
"""

import sys

from melroot.cli import main

if __name__ == "__main__":
    sys.exit(main(["table1", *sys.argv[1:]]))

#!/usr/bin/env python3
"""Produce the data grids behind the survey figures.

Writes three CSV files into the output directory (default ``figures/``):

* ``expsum_error_wide.csv``   -- reciprocal-approximation error over a wide
  region of the right half plane
* ``expsum_error_near0.csv``  -- the same error zoomed into the breakdown
  region near the imaginary axis
* ``zeta_sign_map.csv``       -- csgn of the zeta oracle on a rectangle of
  the critical strip (0 marks the pole)
"""

import argparse
import pathlib
import sys

from melroot.cli import main


def run(out_dir: pathlib.Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = [
        (
            out_dir / "expsum_error_wide.csv",
            ["expsum-error", "--re-min", "0.5", "--re-max", "20", "--im-min", "-10",
             "--im-max", "10", "--grid-nx", "80", "--grid-ny", "80"],
        ),
        (
            out_dir / "expsum_error_near0.csv",
            ["expsum-error", "--re-min", "0.005", "--re-max", "1", "--im-min", "-1",
             "--im-max", "1", "--grid-nx", "80", "--grid-ny", "80"],
        ),
        (
            out_dir / "zeta_sign_map.csv",
            ["sign-map", "--re-min", "-0.5", "--re-max", "2", "--im-min", "0",
             "--im-max", "30", "--grid-nx", "50", "--grid-ny", "120"],
        ),
    ]
    for path, args in jobs:
        rc = main([*args, "--out", str(path)])
        if rc != 0:
            print(f"failed ({rc}): {' '.join(args)}", file=sys.stderr)
            return rc
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("figures"))
    sys.exit(run(parser.parse_args().out_dir))

"""Exponential-sum approximation of the reciprocal.

1/x is approximated by sum_j alpha_j * exp(-c_j * x), valid for Re(x) > 0;
a csgn guard folds arguments into that half-plane, making the approximation
odd. A truncated-Taylor variant replaces each exponential by its power
series up to a chosen order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError
from .numerics import csgn

__all__ = [
    "ExpSumTable",
    "PRESETS",
    "inv_approx",
    "inv_approx_truncated",
    "error_grid",
]


@dataclass(frozen=True)
class ExpSumTable:
    """Weights alpha_j and rates c_j of the reciprocal approximation."""

    alpha: tuple[float, ...]
    c: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        object.__setattr__(self, "c", tuple(float(x) for x in self.c))
        if len(self.alpha) != len(self.c):
            raise ValueError(
                f"alpha and c must have equal length, got {len(self.alpha)} vs {len(self.c)}"
            )
        if len(self.alpha) < 1:
            raise ValueError("coefficient table must contain at least one term")
        if any(a <= 0.0 for a in self.alpha) or any(x <= 0.0 for x in self.c):
            raise ValueError("all coefficients must be strictly positive")
        if any(b <= a for a, b in zip(self.c, self.c[1:])):
            raise ValueError("rates c must be strictly increasing")

    def __len__(self) -> int:
        return len(self.alpha)

    @classmethod
    def from_file(cls, path: str | Path) -> "ExpSumTable":
        """Load a table from plain text: one "alpha c" pair per line.

        Blank lines and lines starting with '#' are ignored; values are
        parsed at full double precision.
        """
        alphas: list[float] = []
        cs: list[float] = []
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'alpha c', got {raw!r}")
            alphas.append(float(parts[0]))
            cs.append(float(parts[1]))
        return cls(tuple(alphas), tuple(cs))


# Two published 4-term presets differing in two entries (0.852 vs 0.8523,
# 0.017 vs 0.0169); the reference tables in this package were generated with
# the "appendixC" set.
PRESETS: dict[str, ExpSumTable] = {
    "table2": ExpSumTable((0.048, 0.235, 0.852, 2.737), (0.017, 0.139, 0.627, 2.241)),
    "appendixC": ExpSumTable((0.048, 0.235, 0.8523, 2.737), (0.0169, 0.139, 0.627, 2.241)),
}


def inv_approx(x: complex, table: ExpSumTable) -> complex:
    """Exponential-sum approximation of 1/x with the csgn fold.

    Returns sum_j alpha_j * csgn(x) * exp(-c_j * x * csgn(x)). The fold
    guarantees Re(c_j * x * csgn(x)) >= 0, the convergence condition of the
    underlying approximation, and makes the result an odd function of x.
    """
    x = complex(x)
    sgn = csgn(x)
    folded = x * sgn
    assert folded.real >= 0.0
    total = 0j
    for a, cj in zip(table.alpha, table.c):
        total += a * sgn * cmath.exp(-cj * folded)
    return total


def inv_approx_truncated(x: complex, table: ExpSumTable, n: int) -> complex:
    """As :func:`inv_approx`, with exp(w) replaced by its Taylor polynomial
    of degree ``n``."""
    if n < 0:
        raise ValueError(f"series order must be non-negative, got {n}")
    x = complex(x)
    sgn = csgn(x)
    folded = x * sgn
    assert folded.real >= 0.0
    total = 0j
    for a, cj in zip(table.alpha, table.c):
        w = -cj * folded
        poly = 0j
        term = 1.0 + 0j
        for k in range(n + 1):
            poly += term
            term = term * w / (k + 1)
        total += a * sgn * poly
    return total


def error_grid(
    table: ExpSumTable,
    re_range: tuple[float, float],
    im_range: tuple[float, float],
    samples: tuple[int, int],
    flag_origin: bool = False,
):
    """Sample inv_approx(z) - 1/z on a rectangular grid.

    Returns ``(re_axis, im_axis, grid)`` with ``grid[iy, ix]`` the error at
    ``re_axis[ix] + 1j * im_axis[iy]``. The exact origin is outside the
    domain; with ``flag_origin`` that cell becomes NaN instead of raising.
    """
    nx, ny = samples
    if nx < 1 or ny < 1:
        raise ValueError("grid dimensions must be positive")
    re_axis = np.linspace(re_range[0], re_range[1], nx)
    im_axis = np.linspace(im_range[0], im_range[1], ny)
    grid = np.empty((ny, nx), dtype=np.complex128)
    for iy, y in enumerate(im_axis):
        for ix, xr in enumerate(re_axis):
            z = complex(xr, y)
            if z == 0:
                if flag_origin:
                    grid[iy, ix] = complex(math.nan, math.nan)
                    continue
                raise DomainError("grid contains the origin, where 1/z is undefined")
            grid[iy, ix] = inv_approx(z, table) - 1.0 / z
    return re_axis, im_axis, grid

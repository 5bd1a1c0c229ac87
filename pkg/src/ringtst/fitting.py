"""Least-squares power-law fits on log-log axes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PowerLawFit:
    """Fit of |y| = 10^intercept * x^exponent."""

    exponent: float
    intercept: float
    max_residual: float

    @property
    def prefactor(self) -> float:
        return float(10.0**self.intercept)


def fit_power_law(x, y) -> PowerLawFit:
    """Fit log10|y| against log10(x) by least squares.

    Zero values of y are rejected; the magnitude is fitted so series of
    either sign can be handled.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size or x.size < 2:
        raise ValueError("need at least two matching points")
    if np.any(x <= 0.0):
        raise ValueError("x must be positive")
    if np.any(y == 0.0):
        raise ValueError("y contains exact zeros; cannot fit a power law")
    lx = np.log10(x)
    ly = np.log10(np.abs(y))
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return PowerLawFit(
        exponent=float(slope),
        intercept=float(intercept),
        max_residual=float(np.max(np.abs(resid))),
    )

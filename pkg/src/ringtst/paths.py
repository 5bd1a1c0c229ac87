"""Cyclic bead paths: generators, shifts, and exact free-polymer sampling.

A path is a plain 1-D numpy array of length P; index k is bead k with
cyclic wrap-around (index P is bead 0 again).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ThermoParams


def as_path(beads) -> np.ndarray:
    q = np.asarray(beads, dtype=float)
    if q.ndim != 1 or q.size < 2:
        raise ValueError("a path is a 1-D array with at least 2 beads")
    return q


def cyclic_shift(path: np.ndarray, shift: int) -> np.ndarray:
    """Relabel beads cyclically; the physical ring is unchanged."""
    return np.roll(path, shift)


@dataclass(frozen=True)
class SinusoidalPathSpec:
    """Single-mode path q_k = q0 + sqrt(2) A sin(2 pi n k / P + alpha)."""

    q0: float = 0.0
    amplitude: float = 1.0
    mode: int = 1
    phase: float = 0.0

    def __post_init__(self):
        if self.mode < 0:
            raise ValueError("mode must be nonnegative")


def sinusoidal_path(spec: SinusoidalPathSpec, bead_count: int) -> np.ndarray:
    if spec.mode > bead_count:
        raise ValueError("mode must not exceed the bead count")
    k = np.arange(bead_count)
    return spec.q0 + np.sqrt(2.0) * spec.amplitude * np.sin(
        2.0 * np.pi * spec.mode * k / bead_count + spec.phase
    )


def ring_mode_eigenvalues(bead_count: int) -> np.ndarray:
    """Eigenvalues 4 sin^2(pi l / P) of the cyclic second-difference matrix."""
    l = np.arange(bead_count)
    return 4.0 * np.sin(np.pi * l / bead_count) ** 2


def fourier_mode_basis(bead_count: int) -> np.ndarray:
    """Real orthonormal basis of the non-centroid cyclic Fourier modes.

    Returns a (P, P-1) matrix whose columns are unit vectors; column j has
    second-difference eigenvalue ``ring_mode_eigenvalues(P)[mode_index[j]]``
    paired as (cos, sin) per mode, with a single Nyquist column for even P.
    """
    P = bead_count
    k = np.arange(P)
    cols = []
    for l in range(1, P // 2 + 1):
        if 2 * l == P:
            cols.append(np.cos(np.pi * k) / np.sqrt(P))
        else:
            cols.append(np.sqrt(2.0 / P) * np.cos(2.0 * np.pi * l * k / P))
            cols.append(np.sqrt(2.0 / P) * np.sin(2.0 * np.pi * l * k / P))
    return np.stack(cols, axis=1)


def fourier_basis_eigenvalues(bead_count: int) -> np.ndarray:
    """Eigenvalues matching the columns of fourier_mode_basis."""
    P = bead_count
    vals = []
    for l in range(1, P // 2 + 1):
        lam = 4.0 * np.sin(np.pi * l / P) ** 2
        if 2 * l == P:
            vals.append(lam)
        else:
            vals.extend((lam, lam))
    return np.asarray(vals)


def free_ring_paths(
    params: ThermoParams,
    n_samples: int,
    rng: np.random.Generator,
    centroid: float | np.ndarray = 0.0,
) -> np.ndarray:
    """Draw exact samples of the free-particle ring-polymer fluctuations.

    The spring weight exp(-(mP / 2 beta hbar^2) sum (q_k - q_{k+1})^2) is
    Gaussian in the Fourier modes; each non-centroid mode amplitude has
    variance beta hbar^2 / (m P lambda_l). The centroid is set explicitly
    (scalar or per-sample array) since the free weight does not constrain it.

    Returns an (n_samples, P) array.
    """
    P = params.bead_count
    basis = fourier_mode_basis(P)
    lam = fourier_basis_eigenvalues(P)
    sigma = np.sqrt(params.beta * params.hbar**2 / (params.mass * P * lam))
    amps = rng.standard_normal((n_samples, P - 1)) * sigma
    q = amps @ basis.T
    centroid = np.asarray(centroid, dtype=float)
    if centroid.ndim == 0:
        return q + float(centroid)
    return q + centroid.reshape(-1, 1)

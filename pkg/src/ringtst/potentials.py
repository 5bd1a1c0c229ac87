"""One-dimensional model potentials with analytic derivatives.

Each potential exposes ``value`` and ``derivative`` (both vectorized over
numpy arrays) plus a small integer/parameter encoding consumed by the
compiled sampling kernel.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# kernel codes shared with ringtst.kernels backends
CODE_FREE = 0
CODE_HARMONIC = 1
CODE_ECKART = 2
CODE_DOUBLE_WELL = 3


@dataclass(frozen=True)
class Potential:
    """Base class; subclasses fill in value/derivative and kernel encoding."""

    def value(self, x):
        raise NotImplementedError

    def derivative(self, x):
        raise NotImplementedError

    def kernel_params(self) -> tuple[int, float, float]:
        """(code, a, b) triple used by the Metropolis kernels."""
        raise NotImplementedError


@dataclass(frozen=True)
class FreeParticle(Potential):
    def value(self, x):
        return np.zeros_like(np.asarray(x, dtype=float))

    def derivative(self, x):
        return np.zeros_like(np.asarray(x, dtype=float))

    def kernel_params(self):
        return (CODE_FREE, 0.0, 0.0)


@dataclass(frozen=True)
class Harmonic(Potential):
    """V(x) = m omega^2 x^2 / 2 with unit mass folded in by the caller."""

    omega: float = 1.0
    mass: float = 1.0

    def value(self, x):
        return 0.5 * self.mass * self.omega**2 * np.asarray(x, dtype=float) ** 2

    def derivative(self, x):
        return self.mass * self.omega**2 * np.asarray(x, dtype=float)

    def kernel_params(self):
        return (CODE_HARMONIC, 0.5 * self.mass * self.omega**2, 0.0)


@dataclass(frozen=True)
class Eckart(Potential):
    """Symmetric barrier V(x) = V0 / cosh^2(x / a)."""

    v0: float = 1.0
    a: float = 1.0

    def value(self, x):
        return self.v0 / np.cosh(np.asarray(x, dtype=float) / self.a) ** 2

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        s = 1.0 / np.cosh(x / self.a)
        return -2.0 * self.v0 * s**2 * np.tanh(x / self.a) / self.a

    def kernel_params(self):
        return (CODE_ECKART, self.v0, self.a)


@dataclass(frozen=True)
class DoubleWell(Potential):
    """V(x) = V0 ((x/q0)^2 - 1)^2 with minima at +-q0."""

    v0: float = 1.0
    q0: float = 1.0

    def value(self, x):
        u = (np.asarray(x, dtype=float) / self.q0) ** 2 - 1.0
        return self.v0 * u**2

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        u = (x / self.q0) ** 2 - 1.0
        return 4.0 * self.v0 * u * x / self.q0**2

    def kernel_params(self):
        return (CODE_DOUBLE_WELL, self.v0, self.q0)


def from_config(cfg: dict) -> Potential:
    """Build a potential from a {'kind': ..., ...} mapping."""
    kind = cfg.get("kind", "free")
    if kind == "free":
        return FreeParticle()
    if kind == "harmonic":
        return Harmonic(omega=cfg.get("omega", 1.0), mass=cfg.get("mass", 1.0))
    if kind == "eckart":
        return Eckart(v0=cfg.get("v0", 1.0), a=cfg.get("a", 1.0))
    if kind == "double_well":
        return DoubleWell(v0=cfg.get("v0", 1.0), q0=cfg.get("q0", 1.0))
    raise ValueError(f"unknown potential kind: {kind!r}")

"""Thermodynamic parameters of the discretized imaginary-time path."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ThermoParams:
    """Inverse temperature, mass, hbar and bead count for a ring polymer.

    Natural units (mass = hbar = 1) are the default; everything is
    configurable because all the interesting statements are scaling laws.
    """

    beta: float = 1.0
    mass: float = 1.0
    hbar: float = 1.0
    bead_count: int = 16

    def __post_init__(self):
        if self.beta <= 0.0:
            raise ValueError("beta must be positive")
        if self.mass <= 0.0:
            raise ValueError("mass must be positive")
        if self.hbar <= 0.0:
            raise ValueError("hbar must be positive")
        if int(self.bead_count) != self.bead_count or self.bead_count < 2:
            raise ValueError("bead_count must be an integer >= 2")

    @property
    def epsilon(self) -> float:
        """Imaginary-time step beta / P."""
        return self.beta / self.bead_count

    @property
    def spring_coefficient(self) -> float:
        """Coefficient m / (2 epsilon hbar^2) of the squared link terms."""
        return self.mass / (2.0 * self.epsilon * self.hbar**2)

    def with_beads(self, bead_count: int) -> "ThermoParams":
        return ThermoParams(self.beta, self.mass, self.hbar, bead_count)

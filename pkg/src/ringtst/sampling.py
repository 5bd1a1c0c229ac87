"""Metropolis sampling of thermal ring-polymer paths.

Single-bead moves plus whole-ring translations, with step sizes tuned
during burn-in.  All random variates are pre-drawn with numpy so a given
seed yields the same chain on either kernel backend.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .params import ThermoParams
from .potentials import Potential


class SamplerConvergenceError(RuntimeError):
    """Acceptance rate left the usable range after burn-in."""


@dataclass
class MoveConfig:
    """Move parameters; step sizes of None are tuned automatically."""

    bead_step: float | None = None
    translation_step: float | None = None
    burn_in: int = 600
    tune_interval: int = 50
    thin: int = 2
    backend: str | None = None


@dataclass
class SamplerStats:
    bead_acceptance: float
    translation_acceptance: float
    bead_step: float
    translation_step: float
    backend: str


def _default_steps(params: ThermoParams) -> tuple[float, float]:
    link = params.hbar * np.sqrt(params.epsilon / params.mass)
    thermal = params.hbar * np.sqrt(params.beta / params.mass)
    return 2.0 * link, 0.7 * thermal


def sample_paths(
    params: ThermoParams,
    potential: Potential,
    n_samples: int,
    seed: int = 0,
    move: MoveConfig | None = None,
    start=None,
):
    """Return (samples, stats) with samples of shape (n_samples, P)."""
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    move = move or MoveConfig()
    run, backend = kernels.get_backend(move.backend)
    P = params.bead_count
    eps = params.epsilon
    spring = params.spring_coefficient
    code, pa, pb = potential.kernel_params()

    rng = np.random.default_rng(seed)
    if start is None:
        q = np.zeros(P)
    else:
        q = np.array(start, dtype=float)
        if q.shape != (P,):
            raise ValueError("start path has wrong shape")

    step_bead, step_trans = _default_steps(params)
    if move.bead_step is not None:
        step_bead = float(move.bead_step)
    if move.translation_step is not None:
        step_trans = float(move.translation_step)

    def draw(n_sweeps):
        return (
            rng.uniform(-1.0, 1.0, (n_sweeps, P)),
            np.log(rng.random((n_sweeps, P))),
            rng.uniform(-1.0, 1.0, n_sweeps),
            np.log(rng.random(n_sweeps)),
        )

    # burn in, nudging steps toward the 0.3-0.55 acceptance band
    n_windows = max(1, move.burn_in // move.tune_interval)
    for _ in range(n_windows):
        bp, bl, tp, tl = draw(move.tune_interval)
        bead_acc, trans_acc = run(
            q, eps, spring, code, pa, pb, step_bead, step_trans, bp, bl, tp, tl
        )
        rate = bead_acc / (move.tune_interval * P)
        if move.bead_step is None:
            if rate > 0.55:
                step_bead *= 1.2
            elif rate < 0.3:
                step_bead /= 1.2
        if move.translation_step is None and code != 0:
            rate_t = trans_acc / move.tune_interval
            if rate_t > 0.55:
                step_trans *= 1.2
            elif rate_t < 0.3:
                step_trans /= 1.2

    samples = np.empty((n_samples, P))
    bead_total = 0
    trans_total = 0
    for i in range(n_samples):
        bp, bl, tp, tl = draw(move.thin)
        ba, ta = run(q, eps, spring, code, pa, pb, step_bead, step_trans, bp, bl, tp, tl)
        bead_total += ba
        trans_total += ta
        samples[i] = q

    n_moves = n_samples * move.thin
    bead_rate = bead_total / (n_moves * P)
    trans_rate = trans_total / n_moves
    if not 0.05 <= bead_rate <= 0.95:
        raise SamplerConvergenceError(
            f"bead acceptance {bead_rate:.3f} outside [0.05, 0.95]"
        )
    stats = SamplerStats(
        bead_acceptance=bead_rate,
        translation_acceptance=trans_rate,
        bead_step=step_bead,
        translation_step=step_trans,
        backend=backend,
    )
    return samples, stats

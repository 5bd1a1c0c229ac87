"""Cyclically invariant dividing surfaces and derived geometric quantities.

Three surface families over a P-bead cyclic path q:

* Centroid            f(q) = mean(q)
* FourierNorm         f(q) = (cos phi / P) sum q_j
                             + (sqrt(2) sin phi / P) L_n(q)
  with L_n the norm of the n-th Fourier mode of the path,
  L_n^2 = (sum_j cos(2 pi n j / P) q_j)^2 + (sum_j sin(...) q_j)^2.
* QuadDiff            f(q) = (cos phi / P) sum q_j
                             + (sin phi / R(n)) D_n(q)
  with D_n = (sum_j (q_j - q_{j+n})^2)^{1/2} and R(n) a normalization
  keeping D_n / R(n) of order unity for thermal paths.

All evaluators operate on the last axis, so a batch of paths with shape
(n_paths, P) is handled in one call.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ThermoParams


class SingularSurfaceError(ValueError):
    """Gradient requested where the surface norm term vanishes."""


@dataclass(frozen=True)
class CentroidSurface:
    """Bead-average dividing coordinate."""

    d: float = 0.0


@dataclass(frozen=True)
class FourierNormSurface:
    """Centroid mixed with the norm of one Fourier mode of the path.

    cos(phi) must stay away from zero, otherwise the surface loses all
    information about the average position; the floor is configurable
    because "close to zero" is a modeling choice.
    """

    mode: int
    phi: float
    d: float = 0.0
    phi_floor: float = 1e-3

    def __post_init__(self):
        if self.mode < 0:
            raise ValueError("mode must be nonnegative")
        if abs(np.cos(self.phi)) < self.phi_floor:
            raise ValueError(
                f"|cos(phi)| = {abs(np.cos(self.phi)):.3e} below floor {self.phi_floor:.1e}"
            )


@dataclass(frozen=True)
class QuadDiffSurface:
    """Centroid mixed with the norm of offset-n bead differences."""

    offset: int
    phi: float
    norm_scale: float = 1.0
    d: float = 0.0
    phi_floor: float = 1e-3

    def __post_init__(self):
        if self.offset < 1:
            raise ValueError("offset must be >= 1")
        if self.norm_scale <= 0.0:
            raise ValueError("norm_scale must be positive")
        if abs(np.cos(self.phi)) < self.phi_floor:
            raise ValueError(
                f"|cos(phi)| = {abs(np.cos(self.phi)):.3e} below floor {self.phi_floor:.1e}"
            )

    def norm_factor(self, bead_count: int) -> float:
        """R(n): order 1 for n = O(1), order sqrt(P) for n near P/2."""
        return self.norm_scale * max(
            1.0, np.sqrt(2.0 * bead_count) * np.sin(np.pi * self.offset / bead_count)
        )


Surface = CentroidSurface | FourierNormSurface | QuadDiffSurface

# Relative floor below which the norm term counts as singular.
_NORM_FLOOR = 1e-12


def _check(spec: Surface, q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    P = q.shape[-1]
    if isinstance(spec, FourierNormSurface) and spec.mode > P:
        raise ValueError("surface mode exceeds bead count")
    if isinstance(spec, QuadDiffSurface) and spec.offset > P - 1:
        raise ValueError("surface offset exceeds P - 1")
    return q


def fourier_mode_norm(q, n: int):
    """L_n(q), computed from the real cosine/sine sums."""
    q = np.asarray(q, dtype=float)
    P = q.shape[-1]
    ang = 2.0 * np.pi * n * np.arange(P) / P
    c = np.sum(np.cos(ang) * q, axis=-1)
    s = np.sum(np.sin(ang) * q, axis=-1)
    return np.hypot(c, s)


def quad_diff_norm(q, n: int):
    """D_n(q) = sqrt(sum_j (q_j - q_{j+n})^2)."""
    q = np.asarray(q, dtype=float)
    return np.sqrt(np.sum((q - np.roll(q, -n, axis=-1)) ** 2, axis=-1))


def _norm_scale_of(q) -> np.ndarray:
    return np.maximum(1.0, np.sqrt(np.sum(np.asarray(q, float) ** 2, axis=-1)))


def is_singular(spec: Surface, q) -> np.ndarray | bool:
    """True where the gradient of f is undefined (norm term vanishes)."""
    q = _check(spec, q)
    if isinstance(spec, CentroidSurface):
        return np.zeros(q.shape[:-1], dtype=bool) if q.ndim > 1 else False
    if isinstance(spec, FourierNormSurface):
        if spec.mode == 0 or spec.mode == q.shape[-1]:
            # degenerate mode: L_n = |sum q_j|, gradient still defined unless zero
            norm = fourier_mode_norm(q, spec.mode)
        else:
            norm = fourier_mode_norm(q, spec.mode)
    else:
        norm = quad_diff_norm(q, spec.offset)
    return norm <= _NORM_FLOOR * _norm_scale_of(q)


def f_eval(spec: Surface, q):
    """Value of the dividing-surface function (not offset by d)."""
    q = _check(spec, q)
    P = q.shape[-1]
    mean = np.mean(q, axis=-1)
    if isinstance(spec, CentroidSurface):
        return mean
    if isinstance(spec, FourierNormSurface):
        L = fourier_mode_norm(q, spec.mode)
        return np.cos(spec.phi) * mean + np.sqrt(2.0) * np.sin(spec.phi) * L / P
    D = quad_diff_norm(q, spec.offset)
    return np.cos(spec.phi) * mean + np.sin(spec.phi) * D / spec.norm_factor(P)


def grad_f(spec: Surface, q):
    """Gradient of f with respect to each bead (last axis)."""
    q = _check(spec, q)
    P = q.shape[-1]
    if isinstance(spec, CentroidSurface):
        return np.broadcast_to(1.0 / P, q.shape).copy()
    if np.any(is_singular(spec, q)):
        raise SingularSurfaceError("surface norm term vanishes on this path")
    if isinstance(spec, FourierNormSurface):
        n = spec.mode
        ang = 2.0 * np.pi * n * np.arange(P) / P
        c = np.sum(np.cos(ang) * q, axis=-1, keepdims=True)
        s = np.sum(np.sin(ang) * q, axis=-1, keepdims=True)
        L = np.hypot(c, s)
        # sum_j cos(2 pi n (k - j)/P) q_j = cos(ang_k) C + sin(ang_k) S
        conv = np.cos(ang) * c + np.sin(ang) * s
        return np.cos(spec.phi) / P + np.sqrt(2.0) * np.sin(spec.phi) * conv / (P * L)
    n = spec.offset
    D = quad_diff_norm(q, n)[..., None]
    curv = 2.0 * q - np.roll(q, -n, axis=-1) - np.roll(q, n, axis=-1)
    R = spec.norm_factor(P)
    return np.cos(spec.phi) / P + np.sin(spec.phi) * curv / (R * D)


def b_p(spec: Surface, q):
    """Squared gradient norm B_P = sum_k (df/dq_k)^2."""
    g = grad_f(spec, q)
    return np.sum(g**2, axis=-1)


def t_vec(spec: Surface, q):
    """Unit-normalized gradient T_k = (df/dq_k) / sqrt(B_P)."""
    g = grad_f(spec, q)
    norm = np.sqrt(np.sum(g**2, axis=-1, keepdims=True))
    if np.any(norm == 0.0):
        raise SingularSurfaceError("gradient vanishes; T undefined")
    return g / norm


def g_p(spec: Surface, q, params: ThermoParams, form: str = "link"):
    """Path-dependent coupling g_P(q).

    form='link':   (m P / 2 beta hbar) sum_k (q_{k+1} - q_k) T_k
    form='cyclic': (m P / 2 beta hbar) sum_k q_k (T_{k-1} - T_k)

    The two are identical by cyclic re-summation; both are provided as a
    consistency cross-check.
    """
    q = _check(spec, q)
    P = q.shape[-1]
    T = t_vec(spec, q)
    coef = params.mass * P / (2.0 * params.beta * params.hbar)
    if form == "link":
        return coef * np.sum((np.roll(q, -1, axis=-1) - q) * T, axis=-1)
    if form == "cyclic":
        return coef * np.sum(q * (np.roll(T, 1, axis=-1) - T), axis=-1)
    raise ValueError("form must be 'link' or 'cyclic'")


def t_diff(spec: Surface, q, k: int):
    """Backward unit-gradient difference T_{k-1} - T_k (cyclic in k)."""
    T = t_vec(spec, q)
    P = T.shape[-1]
    return T[..., (k - 1) % P] - T[..., k % P]


def sum_difference(spec: Surface, q):
    """(1/4) sum_k (df/dq_k) [(T_{k-1} - T_k) + (T_{k+1} - T_k)].

    This is exactly the amount by which the smoothed flux sum exceeds
    sqrt(B_P); it vanishes for the centroid surface.
    """
    g = grad_f(spec, q)
    T = t_vec(spec, q)
    lap = np.roll(T, 1, axis=-1) + np.roll(T, -1, axis=-1) - 2.0 * T
    return 0.25 * np.sum(g * lap, axis=-1)


def flux_sum(spec: Surface, q):
    """sum_k (df/dq_k) (T_{k-1} + 2 T_k + T_{k+1}) / 4 = sqrt(B_P) + sum_difference."""
    g = grad_f(spec, q)
    T = t_vec(spec, q)
    sm = 0.25 * (np.roll(T, 1, axis=-1) + 2.0 * T + np.roll(T, -1, axis=-1))
    return np.sum(g * sm, axis=-1)


@dataclass(frozen=True)
class SurfaceEval:
    """Bundle of surface quantities for one path."""

    f_value: float
    gradient: np.ndarray
    b_p: float
    t_vec: np.ndarray
    g_p: float


def evaluate(spec: Surface, q, params: ThermoParams) -> SurfaceEval:
    q = _check(spec, np.asarray(q, dtype=float))
    if q.ndim != 1:
        raise ValueError("evaluate() takes a single path")
    g = grad_f(spec, q)
    bp = float(np.sum(g**2))
    T = g / np.sqrt(bp)
    return SurfaceEval(
        f_value=float(f_eval(spec, q)),
        gradient=g,
        b_p=bp,
        t_vec=T,
        g_p=float(g_p(spec, q, params, form="link")),
    )


@dataclass(frozen=True)
class DiagnosticsRow:
    bead_count: int
    t_gap_scaled: float
    g_scaled: float


@dataclass(frozen=True)
class DiagnosticsTable:
    """Equivalence-condition table: the two theories coincide in the large-P
    limit only if both scaled columns vanish."""

    rows: list[DiagnosticsRow]
    t_gap_verdict: str
    g_verdict: str

    @property
    def overall_verdict(self) -> str:
        order = {"vanishing": 0, "finite": 1, "diverging": 2}
        worst = max((self.t_gap_verdict, self.g_verdict), key=order.__getitem__)
        return worst


def _trend_verdict(P_list, values) -> str:
    from .fitting import fit_power_law

    vals = np.asarray(values, dtype=float)
    if np.all(np.abs(vals) < 1e-14):
        return "vanishing"
    fit = fit_power_law(P_list, np.abs(vals))
    if fit.exponent < -0.1:
        return "vanishing"
    if fit.exponent <= 0.1:
        return "finite"
    return "diverging"


def equivalence_diagnostics(family, P_list, params: ThermoParams) -> DiagnosticsTable:
    """Evaluate max_k |T_{k+1} - T_k| sqrt(P) and |g_P| / sqrt(P) over a
    family of (surface, path) pairs indexed by bead count.

    family(P) must return a (surface, path) pair with a length-P path.
    Both columns must tend to zero for the harmonic-analysis rate to reduce
    to the ring-polymer one; the fitted trend of each column is classified
    as vanishing, finite, or diverging.
    """
    rows = []
    for P in P_list:
        spec, q = family(P)
        q = np.asarray(q, dtype=float)
        if q.shape != (P,):
            raise ValueError("family returned a path of wrong length")
        T = t_vec(spec, q)
        gap = float(np.max(np.abs(np.roll(T, -1) - T)))
        gp = float(g_p(spec, q, params.with_beads(P)))
        rows.append(
            DiagnosticsRow(
                bead_count=P,
                t_gap_scaled=gap * np.sqrt(P),
                g_scaled=abs(gp) / np.sqrt(P),
            )
        )
    Ps = [r.bead_count for r in rows]
    return DiagnosticsTable(
        rows=rows,
        t_gap_verdict=_trend_verdict(Ps, [r.t_gap_scaled for r in rows]),
        g_verdict=_trend_verdict(Ps, [r.g_scaled for r in rows]),
    )


def surface_from_config(cfg: dict) -> Surface:
    kind = cfg.get("kind", "centroid")
    d = cfg.get("d", 0.0)
    if kind == "centroid":
        return CentroidSurface(d=d)
    if kind == "fourier_norm":
        return FourierNormSurface(
            mode=cfg["mode"],
            phi=cfg.get("phi", np.pi / 4),
            d=d,
            phi_floor=cfg.get("phi_floor", 1e-3),
        )
    if kind == "quad_diff":
        return QuadDiffSurface(
            offset=cfg["offset"],
            phi=cfg.get("phi", np.pi / 4),
            norm_scale=cfg.get("norm_scale", 1.0),
            d=d,
            phi_floor=cfg.get("phi_floor", 1e-3),
        )
    raise ValueError(f"unknown surface kind: {kind!r}")

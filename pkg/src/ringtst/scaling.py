"""Bead-count sweeps: power-law behavior of surface quantities.

Deterministic series evaluate single-mode sinusoidal paths against a
Fourier-norm surface with a matching mode; stochastic series average over
thermal free-particle paths against the quadratic-difference surface.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .closed_forms import tdiff_figure, tdiff_figure_amplitude
from .fitting import fit_power_law
from .params import ThermoParams
from .paths import SinusoidalPathSpec, free_ring_paths, sinusoidal_path
from .surfaces import FourierNormSurface, QuadDiffSurface, b_p, g_p, t_diff

DEFAULT_P_SWEEP = tuple(2**k for k in range(4, 13))  # 16 .. 4096
STOCHASTIC_P_SWEEP = tuple(2**k for k in range(4, 10))  # 16 .. 512


@dataclass(frozen=True)
class ModeSchedule:
    """Surface mode as a function of bead count: n(P)."""

    rule: str
    value: float = 1.0

    @classmethod
    def constant(cls, n0: int) -> "ModeSchedule":
        return cls("constant", float(n0))

    @classmethod
    def sqrt_p(cls) -> "ModeSchedule":
        return cls("sqrtP")

    @classmethod
    def frac_p(cls, c: float) -> "ModeSchedule":
        return cls("fracP", float(c))

    def mode(self, P: int) -> int:
        if self.rule == "constant":
            n = int(round(self.value))
        elif self.rule == "sqrtP":
            n = int(round(np.sqrt(P)))
        elif self.rule == "fracP":
            n = int(round(self.value * P))
        else:
            raise ValueError(f"unknown schedule rule: {self.rule!r}")
        if not 1 <= n <= P:
            raise ValueError(f"schedule gives mode {n} outside [1, {P}]")
        return n

    @property
    def label(self) -> str:
        if self.rule == "constant":
            return f"constant({int(self.value)})"
        if self.rule == "sqrtP":
            return "sqrtP"
        return f"fracP({self.value:g})"


def schedule_from_config(cfg) -> ModeSchedule:
    """Accepts 'constant(2)', 'sqrtP', 'fracP(0.25)' or a dict."""
    if isinstance(cfg, dict):
        return ModeSchedule(cfg["rule"], float(cfg.get("value", 1.0)))
    text = str(cfg).strip()
    if text == "sqrtP":
        return ModeSchedule.sqrt_p()
    for prefix, ctor in (("constant", ModeSchedule.constant), ("fracP", ModeSchedule.frac_p)):
        if text.startswith(prefix + "(") and text.endswith(")"):
            return ctor(float(text[len(prefix) + 1 : -1]))
    raise ValueError(f"cannot parse schedule: {cfg!r}")


@dataclass(frozen=True)
class ScalingSeries:
    quantity_name: str
    points: list = field(default_factory=list)  # (P, value) pairs
    fitted_exponent: float = float("nan")
    fit_residual: float = float("nan")

    @classmethod
    def from_points(cls, name: str, P_list, values) -> "ScalingSeries":
        P_list = [int(P) for P in P_list]
        if any(b <= a for a, b in zip(P_list, P_list[1:])):
            raise ValueError("P values must be strictly increasing")
        values = [float(v) for v in values]
        nz = [(P, v) for P, v in zip(P_list, values) if v != 0.0]
        fit = fit_power_law([p for p, _ in nz], [v for _, v in nz])
        return cls(
            quantity_name=name,
            points=list(zip(P_list, values)),
            fitted_exponent=fit.exponent,
            fit_residual=fit.max_residual,
        )


def _matching_pair(schedule: ModeSchedule, P: int, amplitude: float, alpha: float, phi: float):
    n = schedule.mode(P)
    spec = FourierNormSurface(mode=n, phi=phi, phi_floor=0.0)
    q = sinusoidal_path(SinusoidalPathSpec(q0=0.0, amplitude=amplitude, mode=n, phase=alpha), P)
    return spec, q


def tdiff_series(
    schedule: ModeSchedule,
    k: int = 2,
    alpha: float = 0.0,
    P_list=DEFAULT_P_SWEEP,
    variant: str = "figure",
) -> ScalingSeries:
    """|T_{k-1} - T_k| on matching sinusoidal paths over a P sweep.

    variant='figure':    the k-resolved trigonometric series of the log-log
                         figure (oscillates through phase zeros as P varies,
                         so finite-range slope fits are biased);
    variant='amplitude': its smooth oscillation envelope, whose fitted slope
                         recovers the asymptotic exponent;
    variant='generic':   the gradient-based evaluation at phi = pi/2.
    """
    values = []
    for P in P_list:
        n = schedule.mode(P)
        if variant == "figure":
            v = abs(float(tdiff_figure(P, n, k=k, alpha=alpha)))
        elif variant == "amplitude":
            v = float(tdiff_figure_amplitude(P, n))
        elif variant == "generic":
            spec, q = _matching_pair(schedule, P, 1.0, alpha, np.pi / 2)
            v = abs(float(t_diff(spec, q, k)))
        else:
            raise ValueError(f"unknown variant: {variant!r}")
        values.append(v)
    return ScalingSeries.from_points(f"tdiff[{schedule.label},{variant}]", P_list, values)


def gp_series(
    schedule: ModeSchedule,
    amplitude: float,
    P_list,
    params: ThermoParams,
    alpha: float = 0.0,
    phi: float = np.pi / 2,
) -> ScalingSeries:
    """|g_P| on matching sinusoidal paths, generic evaluation."""
    values = []
    for P in P_list:
        spec, q = _matching_pair(schedule, P, amplitude, alpha, phi)
        values.append(abs(float(g_p(spec, q, params.with_beads(P)))))
    return ScalingSeries.from_points(f"gp[{schedule.label}]", P_list, values)


def sumdiff_series(
    schedule: ModeSchedule,
    P_list=DEFAULT_P_SWEEP,
    phi: float = np.pi / 2,
) -> ScalingSeries:
    """|sum-difference| on matching sinusoidal paths, generic evaluation."""
    from .surfaces import sum_difference

    values = []
    for P in P_list:
        spec, q = _matching_pair(schedule, P, 1.0, 0.0, phi)
        values.append(abs(float(sum_difference(spec, q))))
    return ScalingSeries.from_points(f"sumdiff[{schedule.label}]", P_list, values)


FIGURE_SCHEDULES = (
    ModeSchedule.constant(1),
    ModeSchedule.sqrt_p(),
    ModeSchedule.frac_p(0.25),
)


def figure1_emit(P_list=DEFAULT_P_SWEEP, k: int = 2, alpha: float = 0.0):
    """Plot-ready log-log dataset for the three mode schedules.

    Returns (rows, fits): rows have keys (P, schedule, value, log10P,
    log10value) for the k-resolved series; fits maps schedule label to the
    pair of fitted slopes (literal k-resolved series, amplitude envelope).
    """
    rows = []
    fits = {}
    for sched in FIGURE_SCHEDULES:
        literal = tdiff_series(sched, k=k, alpha=alpha, P_list=P_list, variant="figure")
        envelope = tdiff_series(sched, k=k, alpha=alpha, P_list=P_list, variant="amplitude")
        fits[sched.label] = {
            "literal_slope": literal.fitted_exponent,
            "amplitude_slope": envelope.fitted_exponent,
            "literal_residual": literal.fit_residual,
            "amplitude_residual": envelope.fit_residual,
        }
        for P, v in literal.points:
            rows.append(
                {
                    "P": P,
                    "schedule": sched.label,
                    "value": v,
                    "log10P": float(np.log10(P)),
                    "log10value": float(np.log10(v)) if v > 0 else float("-inf"),
                }
            )
    return rows, fits


@dataclass(frozen=True)
class StochasticOrdersReport:
    """Fitted thermal-path orders of B_P, |T-difference|, and |g_P|."""

    series: dict
    residual_ok: bool
    max_residual: float


def quaddiff_orders(
    n_rule: str,
    P_list=STOCHASTIC_P_SWEEP,
    n_paths: int = 10_000,
    params: ThermoParams | None = None,
    phi: float = np.pi / 4,
    seed: int = 0,
    k: int = 2,
    residual_threshold: float = 0.25,
) -> StochasticOrdersReport:
    """Average |B_P|, |T_{k-1}-T_k|, |g_P| of the quadratic-difference
    surface over thermal free-particle paths at each P, then fit exponents.

    n_rule is 'one' (offset 1) or 'half' (offset P/2).
    """
    if n_rule not in ("one", "half"):
        raise ValueError("n_rule must be 'one' or 'half'")
    params = params or ThermoParams()
    rng = np.random.default_rng(seed)
    mean_b, mean_t, mean_g = [], [], []
    for P in P_list:
        n = 1 if n_rule == "one" else P // 2
        spec = QuadDiffSurface(offset=n, phi=phi)
        pp = params.with_beads(P)
        q = free_ring_paths(pp, n_paths, rng)
        mean_b.append(float(np.mean(b_p(spec, q))))
        mean_t.append(float(np.mean(np.abs(t_diff(spec, q, k)))))
        mean_g.append(float(np.mean(np.abs(g_p(spec, q, pp)))))
    series = {
        "b_p": ScalingSeries.from_points(f"b_p[{n_rule}]", P_list, mean_b),
        "t_diff": ScalingSeries.from_points(f"t_diff[{n_rule}]", P_list, mean_t),
        "g_p": ScalingSeries.from_points(f"g_p[{n_rule}]", P_list, mean_g),
    }
    max_resid = max(s.fit_residual for s in series.values())
    return StochasticOrdersReport(
        series=series,
        residual_ok=max_resid <= residual_threshold,
        max_residual=max_resid,
    )

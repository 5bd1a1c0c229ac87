"""Discretized imaginary-time ring-polymer paths, cyclically invariant
dividing surfaces, and the two transition-state-style rate expressions
built on them, plus scaling sweeps comparing their large-P behavior."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("ringtst")
except PackageNotFoundError:
    __version__ = "0.0.0"

from .density import (
    log_rho_ring,
    momentum_avg_exact_free,
    momentum_avg_leading,
    rho_ring,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .params import ThermoParams
from .paths import SinusoidalPathSpec, cyclic_shift, free_ring_paths, sinusoidal_path
from .potentials import DoubleWell, Eckart, FreeParticle, Harmonic, Potential
from .rates import (
    DeltaWindow,
    RateReport,
    divergence_probe,
    grid_oracle_rate,
    rate_estimates,
    ratio_sweep,
)
from .sampling import MoveConfig, SamplerConvergenceError, sample_paths
from .scaling import (
    ModeSchedule,
    ScalingSeries,
    figure1_emit,
    gp_series,
    quaddiff_orders,
    sumdiff_series,
    tdiff_series,
)
from .surfaces import (
    CentroidSurface,
    FourierNormSurface,
    QuadDiffSurface,
    SingularSurfaceError,
    SurfaceEval,
    b_p,
    equivalence_diagnostics,
    evaluate,
    f_eval,
    flux_sum,
    g_p,
    grad_f,
    sum_difference,
    t_diff,
    t_vec,
)

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "ThermoParams",
    "Potential",
    "FreeParticle",
    "Harmonic",
    "Eckart",
    "DoubleWell",
    "SinusoidalPathSpec",
    "sinusoidal_path",
    "cyclic_shift",
    "free_ring_paths",
    "log_rho_ring",
    "rho_ring",
    "momentum_avg_leading",
    "momentum_avg_exact_free",
    "sample_paths",
    "MoveConfig",
    "SamplerConvergenceError",
    "CentroidSurface",
    "FourierNormSurface",
    "QuadDiffSurface",
    "SingularSurfaceError",
    "SurfaceEval",
    "f_eval",
    "grad_f",
    "b_p",
    "t_vec",
    "g_p",
    "t_diff",
    "sum_difference",
    "flux_sum",
    "evaluate",
    "equivalence_diagnostics",
    "ModeSchedule",
    "ScalingSeries",
    "tdiff_series",
    "gp_series",
    "sumdiff_series",
    "figure1_emit",
    "quaddiff_orders",
    "DeltaWindow",
    "RateReport",
    "rate_estimates",
    "grid_oracle_rate",
    "ratio_sweep",
    "divergence_probe",
]

"""Command-line front end: validate a config, dispatch, write artifacts.

Exit codes: 0 success, 2 configuration/validation error, 3 run completed
but produced only divergence diagnostics (artifacts still written).
"""
from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

import jsonschema
import numpy as np
import yaml

from .params import ThermoParams
from .potentials import from_config as potential_from_config
from .report import config_sha256, write_csv, write_json
from .surfaces import surface_from_config

COMMANDS = ("surface-check", "scaling", "figure1", "rate", "ratio-sweep", "momenta-check")

_SCHEDULE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["rule"],
    "properties": {
        "rule": {"enum": ["constant", "sqrtP", "fracP"]},
        "value": {"type": "number"},
    },
}

CONFIG_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "seed": {"type": "integer", "minimum": 0},
        "out": {"type": "string"},
        "thermo": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "beta": {"type": "number", "exclusiveMinimum": 0},
                "mass": {"type": "number", "exclusiveMinimum": 0},
                "hbar": {"type": "number", "exclusiveMinimum": 0},
                "bead_count": {"type": "integer", "minimum": 2},
            },
        },
        "potential": {
            "type": "object",
            "additionalProperties": False,
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["free", "harmonic", "eckart", "double_well"]},
                "omega": {"type": "number", "exclusiveMinimum": 0},
                "v0": {"type": "number", "exclusiveMinimum": 0},
                "a": {"type": "number", "exclusiveMinimum": 0},
                "q0": {"type": "number", "exclusiveMinimum": 0},
                "mass": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "surface": {
            "type": "object",
            "additionalProperties": False,
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["centroid", "fourier_norm", "quad_diff"]},
                "mode": {"type": "integer", "minimum": 0},
                "offset": {"type": "integer", "minimum": 1},
                "phi": {"type": "number"},
                "phi_floor": {"type": "number", "minimum": 0},
                "norm_scale": {"type": "number", "exclusiveMinimum": 0},
                "d": {"type": "number"},
            },
        },
        "schedule": _SCHEDULE_SCHEMA,
        "p_list": {
            "type": "array",
            "items": {"type": "integer", "minimum": 2},
            "minItems": 2,
        },
        "n_samples": {"type": "integer", "minimum": 100},
        "n_paths": {"type": "integer", "minimum": 100},
        "d": {"type": "number"},
        "k_index": {"type": "integer", "minimum": 0},
        "alpha": {"type": "number"},
        "grid_oracle": {"type": "boolean"},
    },
}

DEFAULTS = {
    "command": "figure1",
    "seed": 0,
    "out": ".",
    "thermo": {},
    "potential": {"kind": "free"},
    "surface": {"kind": "centroid"},
    "n_samples": 100_000,
    "n_paths": 10_000,
    "k_index": 2,
    "alpha": 0.0,
    "grid_oracle": False,
}


class ConfigError(Exception):
    pass


def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config file not found: {path}")
    try:
        data = yaml.safe_load(p.read_text())
    except yaml.YAMLError as e:
        raise ConfigError(f"config is not valid YAML: {e}")
    if data is None:
        raise ConfigError("config file is empty")
    if not isinstance(data, dict):
        raise ConfigError("config root must be a mapping")
    return data


def validate_config(cfg: dict) -> dict:
    try:
        jsonschema.validate(cfg, CONFIG_SCHEMA)
    except jsonschema.ValidationError as e:
        key = "/".join(str(p) for p in e.absolute_path) or "(root)"
        raise ConfigError(f"invalid config at {key}: {e.message}")
    merged = dict(DEFAULTS)
    merged.update(cfg)
    return merged


def _thermo(cfg: dict) -> ThermoParams:
    return ThermoParams(**cfg.get("thermo", {}))


def _schedule(cfg: dict):
    from .scaling import ModeSchedule

    sc = cfg.get("schedule")
    if sc is None:
        return ModeSchedule.constant(1)
    return ModeSchedule(sc["rule"], float(sc.get("value", 1.0)))


def cmd_figure1(cfg, out: Path, cfg_hash: str) -> int:
    from .scaling import DEFAULT_P_SWEEP, figure1_emit

    P_list = cfg.get("p_list", list(DEFAULT_P_SWEEP))
    rows, fits = figure1_emit(P_list, k=cfg["k_index"], alpha=cfg["alpha"])
    write_csv(out / "figure1.csv", ["P", "schedule", "value", "log10P", "log10value"], rows, cfg_hash)
    write_json(out / "figure1_slopes.json", {"fits": fits}, cfg_hash)
    return 0


def cmd_scaling(cfg, out: Path, cfg_hash: str) -> int:
    from .scaling import DEFAULT_P_SWEEP, gp_series, sumdiff_series, tdiff_series

    P_list = cfg.get("p_list", list(DEFAULT_P_SWEEP))
    sched = _schedule(cfg)
    params = _thermo(cfg)
    alpha = cfg["alpha"]
    if sched.rule == "fracP" and abs(sched.value - 0.5) < 1e-12 and alpha == 0.0:
        alpha = np.pi / 4  # the half-mode path vanishes identically at alpha = 0
    series = [
        tdiff_series(sched, k=cfg["k_index"], alpha=alpha, P_list=P_list, variant="figure"),
        tdiff_series(sched, k=cfg["k_index"], alpha=alpha, P_list=P_list, variant="amplitude"),
        gp_series(sched, 1.0, P_list, params, alpha=alpha),
        sumdiff_series(sched, P_list),
    ]
    rows = [
        {"quantity": s.quantity_name, "P": P, "value": v}
        for s in series
        for P, v in s.points
    ]
    write_csv(out / "scaling.csv", ["quantity", "P", "value"], rows, cfg_hash)
    write_json(
        out / "scaling_summary.json",
        {
            "series": [
                {
                    "quantity": s.quantity_name,
                    "schedule": sched.label,
                    "exponent": s.fitted_exponent,
                    "residual": s.fit_residual,
                }
                for s in series
            ]
        },
        cfg_hash,
    )
    return 0


def cmd_rate(cfg, out: Path, cfg_hash: str) -> int:
    from .rates import grid_oracle_rate, rate_estimates

    params = _thermo(cfg)
    pot = potential_from_config(cfg["potential"])
    spec = surface_from_config(cfg["surface"])
    d = float(cfg.get("d", getattr(spec, "d", 0.0)))
    rep = rate_estimates(
        pot, spec, d, params, n_samples=cfg["n_samples"], seed=cfg["seed"]
    )
    payload = {"rate_report": dataclasses.asdict(rep)}
    if cfg["grid_oracle"] and params.bead_count <= 4:
        payload["grid_oracle"] = {
            "kza_rpmd": grid_oracle_rate("rpmd", pot, spec, d, params),
            "kza_ha": grid_oracle_rate("ha", pot, spec, d, params),
        }
    write_json(out / "rate.json", payload, cfg_hash)
    return 3 if rep.divergence_flag else 0


def cmd_ratio_sweep(cfg, out: Path, cfg_hash: str) -> int:
    from .rates import ratio_sweep

    params = _thermo(cfg)
    pot = potential_from_config(cfg["potential"])
    P_list = cfg.get("p_list", [16, 32, 64, 128])
    rows = ratio_sweep(
        pot, _schedule(cfg), P_list, params, n_samples=cfg["n_samples"], seed=cfg["seed"]
    )
    write_csv(out / "ratio_sweep.csv", ["P", "ratio", "error", "divergence_flag"], rows, cfg_hash)
    all_flagged = all(r["divergence_flag"] for r in rows)
    return 3 if all_flagged else 0


def cmd_surface_check(cfg, out: Path, cfg_hash: str) -> int:
    from .surfaces import b_p, f_eval, g_p, t_vec

    params = _thermo(cfg)
    spec = surface_from_config(cfg["surface"])
    rng = np.random.default_rng(cfg["seed"])
    q = rng.standard_normal((1000, params.bead_count))
    g_link = g_p(spec, q, params, form="link")
    g_cyc = g_p(spec, q, params, form="cyclic")
    denom = np.maximum(np.abs(g_link), 1e-300)
    T = t_vec(spec, q)
    payload = {
        "bead_count": params.bead_count,
        "n_paths": 1000,
        "max_rel_gp_form_mismatch": float(np.max(np.abs(g_link - g_cyc) / denom)),
        "max_unit_norm_deviation": float(np.max(np.abs(np.sum(T**2, axis=-1) - 1.0))),
        "b_p_mean": float(np.mean(b_p(spec, q))),
        "b_p_std": float(np.std(b_p(spec, q))),
        "f_mean": float(np.mean(f_eval(spec, q))),
    }
    write_json(out / "surface_check.json", payload, cfg_hash)
    return 0


def cmd_momenta_check(cfg, out: Path, cfg_hash: str) -> int:
    from .density import momentum_avg_exact_free, momentum_avg_leading

    params = _thermo(cfg)
    rng = np.random.default_rng(cfg["seed"])
    P = params.bead_count
    worst = 0.0
    for _ in range(200):
        q = rng.standard_normal(P)
        eta = np.zeros(P)
        for k in range(P):
            lead = momentum_avg_leading("plus", k, q, eta, params)
            exact = momentum_avg_exact_free(q[(k - 1) % P], q[k], params.epsilon, params)
            worst = max(worst, abs(lead - exact))
    payload = {"max_abs_deviation": worst, "n_configs": 200, "bead_count": P}
    write_json(out / "momenta_check.json", payload, cfg_hash)
    return 0


_DISPATCH = {
    "figure1": cmd_figure1,
    "scaling": cmd_scaling,
    "rate": cmd_rate,
    "ratio-sweep": cmd_ratio_sweep,
    "surface-check": cmd_surface_check,
    "momenta-check": cmd_momenta_check,
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="ringtst",
        description="Ring-polymer dividing-surface scaling sweeps and rate estimators.",
    )
    ap.add_argument("--config", help="YAML configuration file")
    ap.add_argument("--command", choices=COMMANDS, help="override the config command")
    ap.add_argument("--seed", type=int, help="override the config seed")
    ap.add_argument("--out", help="output directory")
    args = ap.parse_args(argv)

    try:
        cfg = load_config(args.config)
        if args.command is not None:
            cfg["command"] = args.command
        if args.seed is not None:
            cfg["seed"] = args.seed
        if args.out is not None:
            cfg["out"] = args.out
        cfg = validate_config(cfg)
    except (ConfigError, TypeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    out = Path(cfg["out"])
    out.mkdir(parents=True, exist_ok=True)
    hash_input = {k: v for k, v in cfg.items() if k != "out"}
    cfg_hash = config_sha256(hash_input)
    try:
        return _DISPATCH[cfg["command"]](cfg, out, cfg_hash)
    except (ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

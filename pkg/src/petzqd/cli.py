"""Command-line surface: run sweeps, verify identities, emit figure datasets.

Exit codes: 0 ok, 1 verification failure, 2 usage or config error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import ConfigError, SizeCapError
from .experiments import (
    FIGURE_GROUPS,
    NAMED_CONFIGS,
    ExperimentConfig,
    default_verify_config,
    run_sweep,
    verify_suite,
)
from .model import SystemObservable, evolve_branches, prc_defect, prc_times
from .petz import prc_fidelity_closed_form


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="petzqd",
        description="Fragment encoding and Petz recovery sweeps for one-to-all premeasurement models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a sweep described by a JSON config")
    run_p.add_argument("--config", required=True, help="path to the JSON config")
    run_p.add_argument("--out", required=True, help="CSV output path (metadata sidecar alongside)")
    run_p.add_argument("--seed", type=int, default=None, help="override the config seed")
    run_p.add_argument("--log-base", choices=("2", "e"), default=None, help="override the display log base")

    check_p = sub.add_parser("check", help="run the identity verification suite")
    check_p.add_argument("--config", default=None, help="optional JSON config for the suite model")
    check_p.add_argument("--seed", type=int, default=None, help="override the config seed")
    check_p.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)

    fig_p = sub.add_parser("figure", help="write a bundled figure dataset")
    fig_p.add_argument("name", choices=sorted(FIGURE_GROUPS), help="figure to reproduce")
    fig_p.add_argument("--out", required=True, help="output directory")
    fig_p.add_argument("--seed", type=int, default=None, help="override the bundled seed")
    fig_p.add_argument("--log-base", choices=("2", "e"), default=None, help="override the display log base")

    prc_p = sub.add_parser("prc", help="print PRC times and the closed-form recovery fidelity")
    prc_p.add_argument("--config", required=True, help="path to the JSON config")
    prc_p.add_argument("--count", type=int, default=4, help="how many PRC times to print")
    return parser


def _with_overrides(
    cfg: ExperimentConfig, seed: int | None, log_base: str | None
) -> ExperimentConfig:
    updates = {}
    if seed is not None:
        updates["seed"] = seed
    if log_base is not None:
        updates["log_base"] = log_base
    if not updates:
        return cfg
    data = cfg.to_dict()
    data.update(updates)
    return ExperimentConfig.from_dict(data)


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = _with_overrides(ExperimentConfig.from_json_file(args.config), args.seed, args.log_base)
    result = run_sweep(cfg)
    csv_path, meta_path = result.write(args.out)
    print(f"wrote {csv_path} and {meta_path} ({len(result.rows)} rows)")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.config is not None:
        cfgs = [_with_overrides(ExperimentConfig.from_json_file(args.config), args.seed, None)]
    else:
        cfgs = [
            _with_overrides(default_verify_config("ZZ"), args.seed, None),
            _with_overrides(default_verify_config("ZH_GUE"), args.seed, None),
        ]
    ok = True
    for cfg in cfgs:
        report = verify_suite(cfg, inject_non_tp=args.inject_failure)
        print(report.format_table())
        ok = ok and report.passed
    return 0 if ok else 1


def _cmd_figure(args: argparse.Namespace) -> int:
    for name in FIGURE_GROUPS[args.name]:
        cfg = _with_overrides(NAMED_CONFIGS[name], args.seed, args.log_base)
        result = run_sweep(cfg)
        csv_path, meta_path = result.write(f"{args.out.rstrip('/')}/{name}.csv")
        print(f"wrote {csv_path} and {meta_path}")
    return 0


def _cmd_prc(args: argparse.Namespace) -> int:
    cfg = ExperimentConfig.from_json_file(args.config)
    rng = np.random.default_rng(cfg.seed)
    env = cfg.build_environment(rng)
    times = prc_times(env, count=args.count)
    if times is not None:
        printable = ", ".join(f"{t:.12g}" for t in times)
        print(f"closed-form PRC times: {printable}")
    else:
        sys_obs = SystemObservable.pauli_z()
        best_t, best_d = None, float("inf")
        for t in cfg.times():
            d = prc_defect(evolve_branches(sys_obs, env, float(t)), cfg.k_max)
            if d < best_d:
                best_t, best_d = float(t), d
        print("no closed-form PRC grid for this model")
        print(f"smallest PRC defect on the config grid: {best_d:.3e} at t = {best_t:.12g}")
    f = prc_fidelity_closed_form(cfg.initial.density_matrix())
    print(f"closed-form recovery fidelity at PRC for the configured initial state: {f:.12g}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": _cmd_run, "check": _cmd_check, "figure": _cmd_figure, "prc": _cmd_prc}
    try:
        return handlers[args.command](args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

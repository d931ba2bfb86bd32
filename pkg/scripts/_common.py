"""Shared runner: load a JSON config, apply overrides, run, print a short summary."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from blockstable.experiments import ExperimentConfig, run_experiment

CONFIGS = Path(__file__).resolve().parent / "configs"


def run(default_config: str) -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--config", default=str(CONFIGS / default_config))
    p.add_argument("--seed", type=int)
    p.add_argument("--replicates", type=int)
    p.add_argument("--base")
    p.add_argument("--jobs", type=int)
    p.add_argument("--output")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr)

    cfg = ExperimentConfig.load(args.config)
    for key in ("seed", "replicates", "base", "jobs", "output"):
        value = getattr(args, key)
        if value is not None:
            setattr(cfg, key, value)
    t0 = time.perf_counter()
    report = run_experiment(cfg)
    elapsed = time.perf_counter() - t0

    for row in report.rows:
        mark = {True: "ok  ", False: "FAIL", None: "    "}[row.passed]
        bound = "" if row.bound is None else f"  bound {row.bound}"
        print(f"{mark} {row.statistic}[{row.parameter}] = {row.empirical:.6g}{bound}")
    where = f", wrote {cfg.output}" if cfg.output else ""
    print(f"{len(report.rows)} rows in {elapsed:.1f}s{where}", file=sys.stderr)
    return 0 if report.passed else 1

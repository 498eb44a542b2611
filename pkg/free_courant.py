"""Free Courant pseudoalgebra engine entrypoint (YAML-driven).

Usage:
    python free_courant.py <command> <path-to-config.yaml> [flags]

Commands: expand, check, dims, quotient, courant, universal. The report goes to
stdout and ends with a digest line; logs go to stderr (and to a per-run file
when run.log_dir or --log-dir is set).

Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 configuration or
syntax error, 3 truncation overflow or saturation failure.
"""

import argparse
import logging
import os
import sys
import time

from log_setup import configure_run_logging
from cli.commands import run_check, run_courant, run_dims, run_expand, run_quotient, run_universal
from cli.config import SUITES, EngineConfig, load_config
from cli.reporting import RunReport, write_report
from linquot import SaturationFailure, TruncationOverflow
from pseudoalgebra_core import MissingCapability

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_TRUNCATION = 3


def _configure_logging(file_debug: bool, *, run_tag: str, log_dir, verbose: bool):
    """Console at WARNING (INFO with --verbose); file at DEBUG if file_debug, else INFO."""
    return configure_run_logging(
        run_tag,
        log_dir=log_dir,
        console_level=logging.INFO if verbose else logging.WARNING,
        file_level=logging.DEBUG if file_debug else logging.INFO,
        force=True,
    )


def _resolve_yaml_arg(arg: str) -> str:
    """Resolve the config argument into an existing .yaml/.yml/.json path."""
    if not isinstance(arg, str) or not arg:
        raise ValueError("config argument must be a non-empty string")
    if not arg.lower().endswith((".yaml", ".yml", ".json")):
        raise ValueError("Config argument must be a YAML or JSON file path")
    candidate = os.path.abspath(arg)
    if not os.path.exists(candidate):
        raise FileNotFoundError(f"configuration file not found: {candidate}")
    return candidate


def parse_args(argv):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", help="Path to YAML configuration file")
    common.add_argument("--wmax", type=int, help="Override bounds.wmax")
    common.add_argument("--pmax", type=int, help="Override bounds.pmax")
    common.add_argument("--seed", type=int, help="Override the sampling seed")
    common.add_argument("--report", help="Write the JSON mirror of the report to this path")
    common.add_argument("--log-dir", help="Write a per-run log file into this directory")
    common.add_argument("--verbose", action="store_true", help="Log INFO to stderr")

    p = argparse.ArgumentParser(description="Free Courant pseudoalgebra engine (YAML-driven)")
    sub = p.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", parents=[common], help="Normal form of a bracket expression in F(M)")
    expand.add_argument("expression", help="e.g. \"[ (e1) , (x*e1) ]\"")
    expand.add_argument("--ascii", action="store_true", help="Print ' ox ' instead of the tensor sign")
    expand.add_argument("--quotient", action="store_true", help="Also print the class in FS(M)")

    check = sub.add_parser("check", parents=[common], help="Run identity suites on an instance")
    check.add_argument("--suite", choices=list(SUITES) + ["all"], help="Override checks.suites")
    check.add_argument("--instance", choices=["free", "symmetric", "dorfman", "sc"], help="Override instance.type")

    sub.add_parser("dims", parents=[common], help="Per-weight dimensions of FS(M)")
    sub.add_parser("quotient", parents=[common], help="Relation ranks, saturation history and checks of FS(M)")

    courant = sub.add_parser("courant", parents=[common], help="Build C(E) and check it")
    courant.add_argument("--instance", choices=["free", "symmetric", "dorfman", "sc"], help="Override instance.type")

    universal = sub.add_parser("universal", parents=[common], help="Factor an anchored map through C(FS(M))")
    universal.add_argument("--target", required=True, help="dorfman | self | sc:<file>")
    universal.add_argument("--map", required=True, dest="map_path", help="YAML file with generator images")
    return p.parse_args(argv)


def run(args, cfg: EngineConfig, config_name: str) -> RunReport:
    if args.command == "expand":
        return run_expand(cfg, args.expression, config_name=config_name, ascii=args.ascii, in_quotient=args.quotient)
    if args.command == "check":
        return run_check(cfg, config_name=config_name)
    if args.command == "dims":
        return run_dims(cfg, config_name=config_name)
    if args.command == "quotient":
        return run_quotient(cfg, config_name=config_name)
    if args.command == "courant":
        return run_courant(cfg, config_name=config_name)
    return run_universal(cfg, args.target, args.map_path, config_name=config_name)


def main(argv) -> int:
    args = parse_args(argv)
    try:
        yaml_path = _resolve_yaml_arg(args.config)
        cfg = load_config(yaml_path).with_overrides(
            wmax=args.wmax,
            pmax=args.pmax,
            seed=args.seed,
            suite=getattr(args, "suite", None),
            instance=getattr(args, "instance", None),
            log_dir=args.log_dir,
        )
    except (ValueError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    logfile_path = _configure_logging(
        cfg.run.file_debug,
        run_tag=f"{args.command}.{cfg.instance.type}",
        log_dir=cfg.run.log_dir,
        verbose=args.verbose,
    )
    if logfile_path:
        logging.info("Logging to file: %s", logfile_path)
    logging.info(f"Loaded configuration from: {yaml_path}")

    start = time.perf_counter()
    try:
        report = run(args, cfg, yaml_path)
    except (TruncationOverflow, SaturationFailure) as exc:
        logging.error(f"{args.command} aborted: {exc}")
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (ValueError, OSError, MissingCapability) as exc:
        logging.error(f"{args.command} rejected its input: {exc}")
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    elapsed = time.perf_counter() - start
    logging.info("%s run time: %.3f seconds", args.command, elapsed)

    sys.stdout.write(report.render())
    if args.report:
        write_report(report, args.report)
        logging.info(f"report mirror written to {args.report}")
    return EXIT_PASS if report.verdict else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))

"""
Command line entry point ``qws``.

Usage::

    qws <subcommand> [--config PATH | --scenario edge|vertex] [--out DIR] [--seed U64]
        [--window L] [--boundary periodic|truncate|padded] [--verbose]

On success a JSON line naming the written files is printed to stdout and the exit status is 0.
On a library error the error is printed to stderr as JSON
``{"error": ..., "message": ..., "path": ...}``; the exit status is 2 for configuration errors
and 1 for every other error. Logging goes to stderr.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from ..base.errors import QuantumWalkError, RangeError, SchemaError
from ..lattice.boundary import Boundary
from ..version import __version__
from .commands import Subcommand, run_subcommand
from .config import ExperimentConfig, apply_overrides, parse_config
from .scenarios import Scenario, scenario_config

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    """Argument parser of the ``qws`` tool."""
    parser = argparse.ArgumentParser(
        prog="qws",
        description="Position-dependent quantum walk simulator and edge-defect detector.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "subcommand", choices=[s.value for s in Subcommand], help="Experiment to run."
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--config", type=Path, help="JSON configuration file.")
    source.add_argument(
        "--scenario", choices=[s.value for s in Scenario], help="Built-in reference scenario."
    )
    parser.add_argument("--out", type=str, help="Output directory (overrides output.dir).")
    parser.add_argument("--seed", type=int, help="Perturbation seed (overrides perturbation.seed).")
    parser.add_argument("--window", type=int, help="Half width L of the window [-L, L].")
    parser.add_argument(
        "--boundary", choices=[b.value for b in Boundary], help="Boundary mode."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    """
    Configuration selected by the command line, with overrides applied.

    Raises:
        SchemaError: If the configuration file cannot be read or is invalid.
        RangeError: If a value is out of range.
    """
    if args.config is not None:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise SchemaError(
                f"cannot read configuration: {exc.strerror}", path="--config"
            ) from exc
        config = parse_config(text)
    elif args.scenario is not None:
        config = scenario_config(args.scenario)
    else:
        config = parse_config("{}")
    return apply_overrides(
        config, seed=args.seed, window=args.window, boundary=args.boundary, out=args.out
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the ``qws`` tool.

    Args:
        argv (Optional[Sequence[str]], optional): Arguments without the program name; defaults
            to ``sys.argv[1:]``.

    Returns:
        int: Exit status.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logger = logging.getLogger("scietex.qwalk.cli")
    try:
        config = load_config(args)
        result = run_subcommand(args.subcommand, config, logger=logger)
    except (SchemaError, RangeError) as err:
        logger.error("Configuration error: %s", err)
        print(json.dumps(err.to_dict()), file=sys.stderr)
        return EXIT_CONFIG
    except QuantumWalkError as err:
        logger.error("%s: %s", type(err).__name__, err)
        print(json.dumps(err.to_dict()), file=sys.stderr)
        return EXIT_ERROR
    except ValueError as err:
        logger.error("%s: %s", type(err).__name__, err)
        payload = {"error": type(err).__name__, "message": str(err), "path": None}
        print(json.dumps(payload), file=sys.stderr)
        return EXIT_ERROR
    except OSError as err:
        logger.error("I/O error: %s", err)
        payload = {"error": type(err).__name__, "message": str(err), "path": err.filename}
        print(json.dumps(payload, default=str), file=sys.stderr)
        return EXIT_ERROR
    print(json.dumps({"subcommand": args.subcommand, "files": [str(f) for f in result.files]}))
    return result.status


if __name__ == "__main__":
    sys.exit(main())

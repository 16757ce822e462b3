"""
Argument parsing and dispatch for the ``fivec`` command line.
"""

import argparse
import logging
from typing import List, Optional

from src.cli.commands import COMMANDS, EXIT_IO
from src.cli.config import RunConfig
from src.core.errors import ConfigError
from src.core.logging import setup_logging

logger = logging.getLogger("fivec")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fivec",
        description="5c-structures and 5c-barycentric drawings of pentagon triangulations.",
    )
    parser.add_argument("--log-level", default=None, help="Override FIVEC_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Test a rotation-system file for being a 5c-triangulation")
    p.add_argument("inputs", nargs=1, metavar="INPUT")
    p.add_argument("--structure", default=None, help="Orientation, labeling or wood JSON to validate against the input")

    p = sub.add_parser("construct", help="Compute a 5c-structure")
    p.add_argument("inputs", nargs=1, metavar="INPUT")
    p.add_argument("--minimize", action="store_true", help="Use the minimal 5c-orientation")
    p.add_argument("--emit", choices=["orientation", "labeling", "wood"], default="orientation")
    p.add_argument("--out", default=None, help="Output path (stdout when omitted)")

    p = sub.add_parser("draw", help="Compute the 5c-barycentric drawing")
    p.add_argument("inputs", nargs=1, metavar="INPUT")
    p.add_argument("--mode", choices=["faces", "vertices", "weighted"], default="faces")
    p.add_argument("--weights", default=None, help="Face weight JSON for --mode weighted")
    p.add_argument("--minimize", action="store_true", help="Draw from the minimal 5c-wood")
    p.add_argument("--svg", default=None, help="SVG output path")
    p.add_argument("--json", dest="json_out", default=None, help="Drawing JSON output path")
    p.add_argument("--check", action="store_true", help="Run the drawing certificates and print a verdict")
    p.add_argument("--scale", type=float, default=None, help="SVG pixels per unit (FIVEC_SVG_SCALE)")
    p.add_argument("--wood-overlay", action="store_true", help="Color the wood arcs in the SVG")

    p = sub.add_parser("gen", help="Generate random 5c-triangulations")
    p.add_argument("--n", dest="n_target", type=int, required=True, help="Number of vertices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--flips", type=int, default=0, help="Random flip attempts after growth")
    p.add_argument("--out-dir", default=".")

    p = sub.add_parser("stats", help="Resolution and timing over a batch")
    p.add_argument("inputs", nargs="+", metavar="INPUT")
    p.add_argument("--mode", choices=["faces", "vertices"], default="faces")
    p.add_argument("--csv", default=None, help="CSV output path")
    p.add_argument("--jobs", type=int, default=1, help="Worker processes")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one command.

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 on --help
        return int(e.code or 0)
    values = vars(args)
    setup_logging(values.pop("log_level", None))
    try:
        config = RunConfig.from_args(values)
    except ConfigError as e:
        logger.error(f"Invalid arguments: {e.message}")
        return EXIT_IO
    logger.debug(f"Running {config.command}")
    return COMMANDS[config.command](config)

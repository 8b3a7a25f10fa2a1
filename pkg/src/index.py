""" Degenerate Sequences Entry Point """

import argparse
import logging
import sys

import config
from controller.exceptions import ControllerError, ExactError
from handlers.base import CliConfig
from handlers.commands import COMMANDS

logger = logging.getLogger("degenerate")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="degenerate",
        description="Exact tables and identity checks for degenerate Bernoulli and dimorphic Mersenne numbers.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log every index")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log errors only")
    subparsers = parser.add_subparsers(title="commands", dest="subcommand", required=True)
    for command in COMMANDS:
        command().register(subparsers)
    return parser


def _log_level(args, conf):
    if args.verbose:
        return logging.DEBUG
    if args.quiet:
        return logging.ERROR
    return conf.log_level


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:  # argparse usage errors and --help
        return err.code

    try:
        conf = CliConfig.load()
    except (OSError, TypeError, ValueError) as err:
        logging.basicConfig(level="ERROR")
        logger.error("Invalid %s file: %s", config.CONFIG_ENV, err)
        return config.EXIT_USAGE

    logging.basicConfig(level=_log_level(args, conf))
    logging.getLogger().setLevel(_log_level(args, conf))

    try:
        return args.command.run(args, conf)
    except (ControllerError, ExactError, ValueError, TypeError) as err:
        logger.error("%s: %s", type(err).__name__, err)
        return config.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

import argparse
import logging

import config
from controller import tables
from controller.base import Family, Method
from controller.identities import IdentityId, context_for, default_checks, run_all
from model import parse_rational
from utils import decoder, export
from utils.primes import lucas_lehmer, mersenne_prime_exponents

from .base import BaseCommand

logger = logging.getLogger(__name__)

_OUTPUT_KWARGS = {
    "--format": {"dest": "output_format", "choices": ("json", "csv"), "help": "output format"},
    "--out": {"dest": "output_path", "metavar": "PATH", "help": "write here instead of standard output"},
}


def _natural(value):
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"{value} is not a natural number")
    return number


# a range guard, every construction truncates at the index it needs
_ORDER_KWARGS = {
    "--order": {
        "type": _natural,
        "dest": "truncation_order",
        "help": "truncation order, every requested index must stay below it",
    },
}


class TableCommand(BaseCommand):
    """
    Print the members 0..n_max of one sequence family.
    Triangles print one row per n.
    """

    name = "table"
    help = "tabulate a sequence family"
    kwargs = {
        "family": {"choices": [family.value for family in Family]},
        "--n-max": {"type": _natural, "help": "last index, per-family default from config"},
        **_ORDER_KWARGS,
        "--method": {
            "choices": [method.value for method in (Method.SERIES, Method.CLASSIC, Method.THEOREM1)],
            "help": "beta construction",
        },
        **_OUTPUT_KWARGS,
    }

    def run(self, args, conf):
        conf = conf.override(
            truncation_order=args.truncation_order,
            output_format=args.output_format,
            output_path=args.output_path,
        )
        n_max = conf.family_n_max(args.family) if args.n_max is None else args.n_max
        conf.check_order(n_max)

        table = tables.build_table(args.family, n_max, args.method)
        if conf.output_format == "csv":
            text = decoder.table_to_csv(table)
        else:
            text = decoder.dumps(decoder.table_to_dict(table))
        export.write(text, conf.output_path)
        return config.EXIT_OK


class VerifyCommand(BaseCommand):
    """
    Check identities as exact polynomial equalities.
    Exit 0 when every residual is zero, 1 otherwise.
    """

    name = "verify"
    help = "verify identities"
    kwargs = {
        "identities": {"nargs": "*", "metavar": "IDENTITY", "help": "identity ids, see --all"},
        "--all": {"action": "store_true", "help": "every known identity"},
        "--n-max": {"type": _natural, "help": "last index for every identity"},
        **_ORDER_KWARGS,
        "--workers": {"type": int, "help": "verification threads"},
        "--inject-fault": {"action": "store_true", "help": argparse.SUPPRESS},
        **_OUTPUT_KWARGS,
    }

    def run(self, args, conf):
        if not args.identities and not args.all:
            raise ValueError("Name identities to verify, or pass --all.")
        conf = conf.override(
            truncation_order=args.truncation_order,
            workers=args.workers,
            output_format=args.output_format,
            output_path=args.output_path,
        )

        checks = default_checks(n_max=args.n_max, order=args.truncation_order)
        if not args.all:
            wanted = {IdentityId.parse(identity) for identity in args.identities}
            checks = [check for check in checks if check.identity in wanted]
        # ranges from identities.ini carry their own orders
        if args.n_max is not None or args.truncation_order is not None:
            for check in checks:
                conf.check_order(check.n_max)

        context = context_for(checks, minimum=1 if args.inject_fault else 0)
        if args.inject_fault:
            logger.warning("Injecting a fault into the verification context.")
            context = context.corrupted()

        reports = run_all(checks, workers=conf.workers, context=context)
        if conf.output_format == "csv":
            text = decoder.reports_to_csv(reports)
        else:
            text = decoder.dumps(decoder.batch_to_dict(reports))
        export.write(text, conf.output_path)

        failed = [report.identity.name for report in reports if not report.all_pass]
        if failed:
            logger.error("Failed: %s", ", ".join(failed))
            return config.EXIT_FAILURE
        return config.EXIT_OK


class EvalCommand(BaseCommand):
    """
    Evaluate one family member at lambda and, optionally, x.
    Prints p/q, or the polynomial still left in x.
    """

    name = "eval"
    help = "evaluate a family member at a rational point"
    kwargs = {
        "family": {},
        "index": {"type": _natural},
        "--lambda": {"dest": "lam", "required": True, "metavar": "L", "help": "rational, a/b or integer"},
        "--x": {"dest": "x", "metavar": "X", "help": "rational, a/b or integer"},
        **_ORDER_KWARGS,
    }

    def run(self, args, conf):
        conf.override(truncation_order=args.truncation_order).check_order(args.index)
        lam = parse_rational(args.lam)
        x = None if args.x is None else parse_rational(args.x)
        value = tables.evaluate(args.family, args.index, lam, x)
        export.write(f"{value}\n")
        return config.EXIT_OK


class MersennePrimeCommand(BaseCommand):
    """
    Lucas-Lehmer test of M_p = 2^p - 1 for each exponent given,
    or list every exponent up to --n-max with M_p prime.
    """

    name = "mersenne-prime"
    help = "Lucas-Lehmer test"
    kwargs = {
        "exponents": {"nargs": "*", "type": int, "metavar": "P"},
        "--n-max": {"type": _natural, "help": "list prime exponents up to this bound"},
    }

    def run(self, args, conf):
        if args.n_max is not None:
            lines = [str(p) for p in mersenne_prime_exponents(args.n_max)]
        elif args.exponents:
            lines = [f"{p}: {str(lucas_lehmer(p)).lower()}" for p in args.exponents]
        else:
            raise ValueError("Give exponents, or --n-max.")
        export.write("".join(line + "\n" for line in lines))
        return config.EXIT_OK


COMMANDS = (TableCommand, VerifyCommand, EvalCommand, MersennePrimeCommand)

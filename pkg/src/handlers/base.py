import logging
import os
from dataclasses import dataclass, field, fields, replace
from typing import Dict, Optional

import config
from controller.exceptions import TruncationError
from utils import decoder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliConfig:
    """
    Command defaults: config.py, then the file named by the
    DEGENERATE_CONF environment variable, then command flags.
    """

    truncation_order: int = config.TRUNCATION_ORDER
    n_max: Dict[str, int] = field(default_factory=lambda: dict(config.N_MAX))
    output_format: str = config.OUTPUT_FORMAT
    output_path: Optional[str] = config.OUTPUT_PATH
    workers: int = config.VERIFY_WORKERS
    log_level: str = config.LOG_LEVEL

    @classmethod
    def load(cls, environ=None):
        environ = os.environ if environ is None else environ
        path = environ.get(config.CONFIG_ENV)
        if not path:
            return cls()

        logger.debug("Reading CLI defaults from %s", path)
        with open(path, "rb") as file:
            doc = decoder.to_dict(file.read(), os.path.splitext(path)[1])
        decoder.validate(doc, "config")

        n_max = dict(config.N_MAX)
        n_max.update(doc.pop("n_max", {}))
        return cls(n_max=n_max, **doc)

    def override(self, **changes):
        """A copy with every change that is not None applied."""
        names = {item.name for item in fields(self)}
        return replace(self, **{key: val for key, val in changes.items() if key in names and val is not None})

    def family_n_max(self, family):
        return self.n_max.get(family, config.DEFAULT_N_MAX)

    def check_order(self, n_max):
        if self.truncation_order < n_max + 1:
            raise TruncationError(
                f"Truncation order {self.truncation_order} cannot serve n_max {n_max}, "
                f"raise --order to at least {n_max + 1}."
            )
        return self.truncation_order


class BaseCommand:
    """
    One subcommand. kwargs declares its arguments the way
    argparse.add_argument takes them, keyed by flag or name.
    """

    name = None
    help = None
    kwargs = {}

    def register(self, subparsers):
        parser = subparsers.add_parser(self.name, help=self.help, description=self.__doc__)
        for flag, options in self.kwargs.items():
            flags = flag if isinstance(flag, tuple) else (flag,)
            parser.add_argument(*flags, **options)
        parser.set_defaults(command=self)
        return parser

    def run(self, args, conf):
        raise NotImplementedError

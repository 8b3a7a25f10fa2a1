""" Output Sink """

import logging
import sys

from filelock import FileLock

logger = logging.getLogger(__name__)


def write(text, path=None, timeout=10):
    """
    Write text to a file, or to stdout when no path is given.
    File writes hold <path>.lock so concurrent runs never interleave.
    """
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = str(path)
    with FileLock(path + ".lock", timeout=timeout):
        with open(path, "w", encoding="utf-8", newline="\n") as file:
            file.write(text)
    logger.info("Wrote %s", path)

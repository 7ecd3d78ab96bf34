"""A line-oriented read-eval-print loop over an effectful handler."""

from __future__ import annotations

import sys
from typing import Callable, TextIO

from ..effects import IO
from ..persistence import StoreError

__all__ = ["repl", "QUIT"]

QUIT = "quit"


def repl(handle: Callable[[str], IO], stdin: TextIO = None, stdout: TextIO = None) -> IO:
    """Read lines, answer each through ``handle``, stop at ``quit`` or EOF.

    Every line gets exactly one response; store failures are printed as
    ``error: <detail>`` and the loop goes on.  The loop itself is deferred
    until the returned action is run.
    """

    def loop():
        src = sys.stdin if stdin is None else stdin
        out = sys.stdout if stdout is None else stdout
        while True:
            try:
                line = src.readline()
            except (OSError, ValueError):
                return
            if not line:
                return
            line = line.rstrip("\r\n")
            if line == QUIT:
                return
            try:
                answer = handle(line).run()
            except StoreError as exc:
                answer = f"error: {exc}"
            out.write(answer + "\n")
            out.flush()

    return IO(loop)

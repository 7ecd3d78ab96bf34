"""The to-do application, assembled from combinators.

A command line is parsed into an optional :class:`TodoCommand`, translated
into a store command or query, executed, and the answer is printed back.
Each step is a morphism; the whole app is a costate on ``Lift IO CLI``::

    app = lift_map(IO, parser) ; distrib_maybe ; maybe_map(lift_map(IO, to_db) ; exec_db) ; maybe_u
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Union

from ..combinators import NOTHING, Inl, Inr, Just, coproduct_map, diagonal, maybe_all, maybe_map, maybe_u
from ..core import ONE, Container, Morphism, compose_all, costate, execute
from ..effects import IO, IO_EFFECT, counit, distrib_maybe, distrib_plus, lift_map
from ..persistence import (
    DB,
    SQL_CMD,
    SQL_QUERY,
    InsertTodo,
    MarkDone,
    PureTodoStore,
    SelectAllTodos,
    Table,
    TodoStore,
    exec_cmd,
    exec_query,
)

__all__ = [
    "Create",
    "MarkComplete",
    "RetrieveAll",
    "CLI",
    "APP",
    "parse",
    "render",
    "render_table",
    "parser",
    "to_db",
    "exec_db",
    "pure_exec_db",
    "app",
    "handler",
    "UNRECOGNIZED",
]


@dataclass(frozen=True)
class Create:
    text: str


@dataclass(frozen=True)
class MarkComplete:
    id: int


@dataclass(frozen=True)
class RetrieveAll:
    pass


TodoCommand = Union[Create, MarkComplete, RetrieveAll]

UNRECOGNIZED = "error: unrecognized command"


def _app_response(cmd):
    return Table if isinstance(cmd, RetrieveAll) else tuple


CLI = Container("CLI", response_type=lambda _: str)
APP = Container("App", response_type=_app_response)

_DONE = re.compile(r"[0-9]+")


def parse(line: str) -> Any:
    """``Just(command)`` for a well-formed line, ``NOTHING`` otherwise."""
    if line == "list":
        return Just(RetrieveAll())
    if line.startswith("create "):
        text = line[len("create "):].strip()
        return Just(Create(text)) if text else NOTHING
    if line.startswith("done "):
        arg = line[len("done "):]
        if _DONE.fullmatch(arg) and int(arg) > 0:
            return Just(MarkComplete(int(arg)))
    return NOTHING


def render_table(table: Table) -> str:
    if not table.rows:
        return "(empty)"
    return "\n".join(f"[{'x' if row.done else ' '}] {row.id} {row.text}" for row in table.rows)


def render(request: Any, response: Any) -> str:
    """Print the answer to a parsed request."""
    if request is NOTHING:
        return UNRECOGNIZED
    if isinstance(request.value, RetrieveAll):
        return render_table(response)
    return "ok"


def parser() -> Morphism:
    """``CLI => MaybeAll App``: parse forward, print backward."""

    def lens(line):
        parsed = parse(line)
        return parsed, lambda r: render(parsed, r)

    return Morphism(lens, CLI, maybe_all(APP), name="parser")


def _to_db_request(cmd: TodoCommand) -> Any:
    if isinstance(cmd, Create):
        return Inl(InsertTodo(cmd.text))
    if isinstance(cmd, MarkComplete):
        return Inl(MarkDone(cmd.id))
    return Inr(SelectAllTodos())


def to_db() -> Morphism:
    """``App => SQLCmd + SQLQuery``; answers lose their tag on the way back."""

    def lens(cmd):
        return _to_db_request(cmd), _untag

    return Morphism(lens, APP, DB, name="toDB")


def _untag(r):
    return r.value


def exec_db(store: TodoStore) -> Morphism:
    """``Lift IO (SQLCmd + SQLQuery) => 1`` backed by ``store``."""
    return compose_all(
        distrib_plus(IO_EFFECT, SQL_CMD, SQL_QUERY),
        coproduct_map(exec_cmd(store), exec_query(store)),
        diagonal(ONE),
    )


def pure_exec_db(store: PureTodoStore) -> Morphism:
    """The same interface served by a pure store through ``counit``."""
    return compose_all(counit(IO_EFFECT, DB), costate(store.answer, DB))


def app(db: Morphism) -> Morphism:
    """The whole pipeline as a costate on ``Lift IO CLI``."""
    return compose_all(
        lift_map(IO_EFFECT, parser()),
        distrib_maybe(IO_EFFECT, APP),
        maybe_map(compose_all(lift_map(IO_EFFECT, to_db()), db)),
        maybe_u(),
    )


def handler(db: Morphism):
    """A line handler ``str -> IO str`` for :func:`apilens.apps.repl.repl`."""
    pipeline = app(db)

    def handle(line: str) -> IO:
        return execute(pipeline, line)

    return handle

"""The to-do store: write-only commands and schema-typed queries.

Commands answer with ``UNIT``; a query answers with a :class:`Table` whose
rows follow the query's schema.  :class:`TodoStore` keeps the rows in
SQLite (a file, or memory).  :class:`PureTodoStore` keeps them in a dict
and is meant to be plugged into effectful pipelines through ``counit``.
"""

from __future__ import annotations

import sqlite3
from dataclasses import dataclass
from typing import Any, ClassVar, Optional, Union

from .combinators import Inl, Inr, coproduct
from .core import UNIT, Container, Morphism, costate
from .effects import IO, IO_EFFECT, lift

__all__ = [
    "CreateTable",
    "InsertTodo",
    "MarkDone",
    "SelectAllTodos",
    "TodoItem",
    "Table",
    "StoreError",
    "UnknownId",
    "StoreClosed",
    "OpenError",
    "TodoStore",
    "PureTodoStore",
    "open_store",
    "close_store",
    "SQL_CMD",
    "SQL_QUERY",
    "DB",
    "exec_cmd",
    "exec_query",
]


@dataclass(frozen=True)
class CreateTable:
    pass


@dataclass(frozen=True)
class InsertTodo:
    text: str


@dataclass(frozen=True)
class MarkDone:
    id: int


Cmd = Union[CreateTable, InsertTodo, MarkDone]


@dataclass(frozen=True)
class TodoItem:
    id: int
    text: str
    done: bool


@dataclass(frozen=True)
class Table:
    """Rows of one schema, in ascending id order."""

    schema: type
    rows: tuple = ()

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class SelectAllTodos:
    schema: ClassVar[type] = TodoItem


Query = SelectAllTodos


class StoreError(Exception):
    """Raised by store actions; the REPL renders it as ``error: <detail>``."""


class UnknownId(StoreError):
    def __init__(self, id: int):
        super().__init__(f"no todo with id {id}")
        self.id = id


class StoreClosed(StoreError):
    def __init__(self):
        super().__init__("store is closed")


class OpenError(StoreError):
    pass


_SCHEMA = (
    "CREATE TABLE IF NOT EXISTS todo ("
    "id INTEGER PRIMARY KEY AUTOINCREMENT, "
    "text TEXT NOT NULL, "
    "done INTEGER NOT NULL DEFAULT 0)"
)


class TodoStore:
    """SQLite-backed store.  ``path=None`` keeps everything in memory."""

    def __init__(self, path: Optional[str] = None):
        self.path = path
        try:
            self._conn = sqlite3.connect(":memory:" if path is None else path)
            self.execute_cmd(CreateTable())
        except sqlite3.Error as exc:
            raise OpenError(f"cannot open store {path!r}: {exc}") from exc

    @property
    def closed(self) -> bool:
        return self._conn is None

    def close(self) -> None:
        if self._conn is not None:
            self._conn.close()
            self._conn = None

    def _db(self) -> sqlite3.Connection:
        if self._conn is None:
            raise StoreClosed()
        return self._conn

    def execute_cmd(self, cmd: Cmd) -> tuple:
        db = self._db()
        try:
            with db:
                if isinstance(cmd, CreateTable):
                    db.execute(_SCHEMA)
                elif isinstance(cmd, InsertTodo):
                    db.execute("INSERT INTO todo (text, done) VALUES (?, 0)", (cmd.text,))
                elif isinstance(cmd, MarkDone):
                    cur = db.execute("UPDATE todo SET done = 1 WHERE id = ?", (cmd.id,))
                    if cur.rowcount == 0:
                        raise UnknownId(cmd.id)
                else:
                    raise StoreError(f"unknown command {cmd!r}")
        except sqlite3.Error as exc:
            raise StoreError(str(exc)) from exc
        return UNIT

    def execute_query(self, query: Query) -> Table:
        if not isinstance(query, SelectAllTodos):
            raise StoreError(f"unknown query {query!r}")
        try:
            rows = self._db().execute("SELECT id, text, done FROM todo ORDER BY id").fetchall()
        except sqlite3.Error as exc:
            raise StoreError(str(exc)) from exc
        return Table(TodoItem, tuple(TodoItem(i, t, bool(d)) for i, t, d in rows))

    def run_cmd(self, cmd: Cmd) -> IO:
        return IO(lambda: self.execute_cmd(cmd))

    def run_query(self, query: Query) -> IO:
        return IO(lambda: self.execute_query(query))

    def __enter__(self) -> "TodoStore":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def open_store(path: Optional[str] = None) -> TodoStore:
    return TodoStore(path)


def close_store(store: TodoStore) -> None:
    store.close()


class PureTodoStore:
    """The same behaviour kept in a dict; answers directly, without IO."""

    def __init__(self):
        self.rows: dict[int, TodoItem] = {}
        self.next_id = 1

    def execute_cmd(self, cmd: Cmd) -> tuple:
        if isinstance(cmd, InsertTodo):
            self.rows[self.next_id] = TodoItem(self.next_id, cmd.text, False)
            self.next_id += 1
        elif isinstance(cmd, MarkDone):
            if cmd.id not in self.rows:
                raise UnknownId(cmd.id)
            self.rows[cmd.id] = TodoItem(cmd.id, self.rows[cmd.id].text, True)
        elif not isinstance(cmd, CreateTable):
            raise StoreError(f"unknown command {cmd!r}")
        return UNIT

    def execute_query(self, query: Query) -> Table:
        return Table(TodoItem, tuple(self.rows[k] for k in sorted(self.rows)))

    def answer(self, request: Any) -> Any:
        """Handler for the plain ``DB`` container: tagged request, tagged answer."""
        if isinstance(request, Inl):
            return Inl(self.execute_cmd(request.value))
        return Inr(self.execute_query(request.value))


def _is_cmd(_):
    return tuple


def _is_query(_):
    return Table


SQL_CMD = Container("SQLCmd", response_type=_is_cmd)
SQL_QUERY = Container("SQLQuery", response_type=_is_query)
DB = coproduct(SQL_CMD, SQL_QUERY)


def exec_cmd(store: TodoStore) -> Morphism:
    """Costate on ``Lift IO SQLCmd`` running commands against ``store``."""
    return costate(store.run_cmd, lift(IO_EFFECT, SQL_CMD))


def exec_query(store: TodoStore) -> Morphism:
    """Costate on ``Lift IO SQLQuery`` running queries against ``store``."""
    return costate(store.run_query, lift(IO_EFFECT, SQL_QUERY))

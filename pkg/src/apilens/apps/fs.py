"""The file session demo: open, any number of writes, close.

The session container is ``(OpenC >> WriteC*) >> CloseC``.  Its requests
are built by :func:`mk_session`, whose continuations can only mention the
handle produced by the open, so writes and close cannot precede it.  The
servers answer in ``IO`` over ``FsError + _``; a failed open stops the
session before any write or close is sent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Optional

from ..combinators import DONE, Inl, Inr, More, SeqRequest, seq, single, star
from ..core import UNIT, Container, Morphism, costate, identity, run, state
from ..effects import IO, IO_EITHER, lift, seq_m

__all__ = [
    "MkOpen",
    "MkWrite",
    "MkClose",
    "FsError",
    "FileSystem",
    "OsFileSystem",
    "OPEN_C",
    "WRITE_C",
    "CLOSE_C",
    "SESSION",
    "open_file",
    "write_many",
    "close_file",
    "combined",
    "mk_session",
    "write_none",
    "write_once",
    "write_twice",
    "SESSIONS",
    "run_session",
]


@dataclass(frozen=True)
class MkOpen:
    path: str
    mode: str = "append"


@dataclass(frozen=True)
class MkWrite:
    text: str
    handle: Any


@dataclass(frozen=True)
class MkClose:
    handle: Any


class FsError(Exception):
    """``kind`` is ``"not-found"``, ``"permission"`` or ``"other"``."""

    def __init__(self, kind: str, message: str = ""):
        super().__init__(kind, message)
        self.kind = kind
        self.message = message

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FsError) and (self.kind, self.message) == (other.kind, other.message)

    def __hash__(self) -> int:
        return hash((self.kind, self.message))

    def __repr__(self) -> str:
        return f"FsError({self.kind!r}, {self.message!r})"

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}" if self.message else self.kind

    @classmethod
    def from_os(cls, exc: OSError) -> "FsError":
        if isinstance(exc, FileNotFoundError):
            return cls("not-found", str(exc))
        if isinstance(exc, PermissionError):
            return cls("permission", str(exc))
        return cls("other", str(exc))


class FileSystem:
    """What the servers need; each method raises :class:`FsError` on failure."""

    def open(self, path: str, mode: str) -> Any:
        raise NotImplementedError

    def write_line(self, handle: Any, text: str) -> None:
        raise NotImplementedError

    def close(self, handle: Any) -> None:
        raise NotImplementedError


_MODES = {"append": "a", "write": "w"}


class OsFileSystem(FileSystem):
    """The real file system.  Handles are small integers."""

    def __init__(self):
        self._files: dict[int, Any] = {}
        self._ids = itertools.count(1)

    def open(self, path, mode):
        if mode not in _MODES:
            raise FsError("other", f"unsupported mode {mode!r}")
        try:
            fh = open(path, _MODES[mode], encoding="utf-8", newline="\n")
        except OSError as exc:
            raise FsError.from_os(exc) from exc
        handle = next(self._ids)
        self._files[handle] = fh
        return handle

    def _file(self, handle):
        try:
            return self._files[handle]
        except KeyError:
            raise FsError("other", f"unknown handle {handle!r}") from None

    def write_line(self, handle, text):
        try:
            self._file(handle).write(text + "\n")
        except OSError as exc:
            raise FsError.from_os(exc) from exc

    def close(self, handle):
        fh = self._files.pop(handle, None)
        if fh is None:
            raise FsError("other", f"unknown handle {handle!r}")
        try:
            fh.close()
        except OSError as exc:
            raise FsError.from_os(exc) from exc


def _attempt(action: Callable[[], Any]) -> IO:
    def go():
        try:
            return Inr(action())
        except FsError as exc:
            return Inl(exc)

    return IO(go)


OPEN_C = Container("OpenC")
WRITE_C = Container("WriteC")
CLOSE_C = Container("CloseC")
SESSION = seq(seq(OPEN_C, star(WRITE_C)), CLOSE_C)


def open_file(fs: FileSystem) -> Morphism:
    return costate(lambda req: _attempt(lambda: fs.open(req.path, req.mode)), lift(IO_EITHER, OPEN_C))


def _write(fs, req):
    def action():
        fs.write_line(req.handle, req.text)
        return UNIT

    return _attempt(action)


def write_many(fs: FileSystem) -> Morphism:
    """Perform every write of a session tree, following the answers."""

    def handle(shape):
        if shape is DONE:
            return IO_EITHER.pure(UNIT)
        return IO_EITHER.bind(
            _write(fs, shape.request),
            lambda r: IO_EITHER.fmap(lambda rest: (r, rest), handle(shape.cont(r))),
        )

    return costate(handle, lift(IO_EITHER, star(WRITE_C)))


def _close(fs, req):
    def action():
        fs.close(req.handle)
        return UNIT

    return _attempt(action)


def close_file(fs: FileSystem) -> Morphism:
    return costate(lambda req: _close(fs, req), lift(IO_EITHER, CLOSE_C))


def combined(fs: FileSystem) -> Morphism:
    return seq_m(IO_EITHER, seq_m(IO_EITHER, open_file(fs), write_many(fs)), close_file(fs))


def _close_with(answer):
    handle, _ = answer
    return MkClose(handle)


def mk_session(writes: Callable[[Any], Any], path: str = "file.txt") -> Morphism:
    """The session state: open ``path`` for appending, then ``writes(handle)``,
    then close that handle."""
    return state(SeqRequest(SeqRequest(MkOpen(path, "append"), writes), _close_with), SESSION)


def write_none(handle):
    return DONE


def write_once(handle):
    return single(MkWrite("hello", handle))


def write_twice(handle):
    return More(MkWrite("hello", handle), lambda _: single(MkWrite("world", handle)))


SESSIONS = {"none": write_none, "once": write_once, "twice": write_twice}


def run_session(writes, path: str = "file.txt", fs: Optional[FileSystem] = None) -> Any:
    """Run a session to completion; ``Inr(answers)`` or ``Inl(FsError)``."""
    fs = OsFileSystem() if fs is None else fs
    result = run(mk_session(writes, path), combined(fs), identity(lift(IO_EITHER, SESSION)))
    return result.run()

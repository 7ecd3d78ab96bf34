import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from apilens.apps.fs import FileSystem  # noqa: E402

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


class FakeFileSystem(FileSystem):
    """Records every call; files are lists of lines.  ``fail`` maps an
    operation name to the FsError it should raise."""

    def __init__(self, fail=None):
        self.fail = dict(fail or {})
        self.calls = []
        self.files = {}
        self.open_handles = {}
        self._next = 0

    def _maybe_fail(self, op):
        if op in self.fail:
            raise self.fail[op]

    def open(self, path, mode):
        self.calls.append(("open", path, mode))
        self._maybe_fail("open")
        self._next += 1
        self.open_handles[self._next] = path
        self.files.setdefault(path, [])
        return self._next

    def write_line(self, handle, text):
        self.calls.append(("write", handle, text))
        self._maybe_fail("write")
        self.files[self.open_handles[handle]].append(text)

    def close(self, handle):
        self.calls.append(("close", handle))
        self._maybe_fail("close")
        del self.open_handles[handle]


@pytest.fixture
def fake_fs():
    return FakeFileSystem()


@pytest.fixture
def golden():
    def read(name):
        with open(os.path.join(GOLDEN, name), encoding="utf-8", newline="") as fh:
            return fh.read()

    return read


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    RESULTS = module.RESULTS
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")

"""Independent reference computations used to cross-check the library.

Nothing here imports the law checker: containers are plain dicts
``request -> list of responses`` and morphisms are pairs of dicts.
"""

from __future__ import annotations

import itertools
from math import prod

ONE_T = {(): [()]}
C2_T = {"q0": ["r0"], "q1": ["r0", "r1"]}
C3_T = {"p0": ["s0", "s1"], "p1": ["s0", "s1"]}
TABLES = {"1": ONE_T, "C2": C2_T, "C3": C3_T}


def morphism_count(a: dict, b: dict) -> int:
    """Product over domain requests of the sum over targets of |a x| ** |b y|."""
    return prod(sum(len(a[x]) ** len(b[y]) for y in b) for x in a)


def brute_morphisms(a: dict, b: dict) -> list[tuple[dict, dict]]:
    """All (forward, backward) table pairs, by brute force over every function."""
    out = []
    xs = list(a)
    for targets in itertools.product(list(b), repeat=len(xs)):
        slots = [(x, r) for x, y in zip(xs, targets) for r in b[y]]
        choices = [a[x] for x, _ in slots]
        for picks in itertools.product(*choices):
            out.append((dict(zip(xs, targets)), dict(zip(slots, picks))))
    return out


def compose_tables(f, g):
    (ff, fb), (gf, gb) = f, g
    forward = {x: gf[y] for x, y in ff.items()}
    backward = {}
    for (y, r), a in gb.items():
        for x, y2 in ff.items():
            if y2 == y:
                backward[(x, r)] = fb[(x, a)]
    return forward, backward


def shape_count(c: dict, depth: int) -> int:
    if depth == 0:
        return 1
    below = shape_count(c, depth - 1)
    return 1 + sum(below ** len(rs) for rs in c.values())


def seq_request_count(a: dict, b: dict) -> int:
    return sum(len(b) ** len(a[x]) for x in a)


class ReferenceTodos:
    """The to-do store as a list of [id, text, done] rows."""

    def __init__(self):
        self.rows = []
        self.last = 0

    def insert(self, text):
        self.last += 1
        self.rows.append([self.last, text, False])

    def mark(self, i):
        for row in self.rows:
            if row[0] == i:
                row[2] = True
                return True
        return False

    def select(self):
        return [tuple(row) for row in self.rows]

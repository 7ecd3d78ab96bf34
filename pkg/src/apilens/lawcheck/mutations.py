"""Deliberately broken variants of core operations.

Each mutant is installed with :func:`mutated`, which swaps every module-level
reference to the original function inside ``apilens`` and restores them on
exit.  The law suites are expected to catch every mutant.
"""

from __future__ import annotations

import contextlib
import sys
from dataclasses import dataclass
from typing import Callable, Iterator

from .. import combinators as cb
from .. import core
from .. import effects as fx
from ..combinators import DONE, NOTHING, Inl, More, Just
from ..core import Morphism

__all__ = ["Mutation", "MUTATIONS", "mutated"]


def _compose_swapped(m1: Morphism, m2: Morphism) -> Morphism:
    lens1, lens2 = m1.lens, m2.lens

    def lens(x):
        y, back1 = lens1(x)
        z, back2 = lens2(y)
        # wrong order: the inner translation runs first
        return z, lambda r: back2(back1(r))

    return Morphism(lens, m1.dom, m2.cod, name=f"{m1.name} ;! {m2.name}")


def _diagonal_left(c=None) -> Morphism:
    dom = cb.coproduct(c, c) if c is not None else None
    return Morphism(lambda x: (x.value, Inl), dom, c, name=f"dia![{c}]")


def _join_swapped(x):
    if x is NOTHING:
        return NOTHING
    # Just(Just x) collapses to Nothing instead of Just x
    return NOTHING if isinstance(x.value, Just) else x.value


def _maybe_join_swapped(c=None) -> Morphism:
    return Morphism(
        lambda x: (_join_swapped(x), lambda r: r),
        cb.maybe_all(cb.maybe_all(c)) if c else None,
        cb.maybe_all(c) if c else None,
        name=f"join![{c}]",
    )


def _map_shape_truncated(lens, shape):
    if shape is DONE:
        return DONE
    y, _ = lens(shape.request)
    return More(y, lambda r: DONE)


def _seq_m_reordered(m, co1, co2):
    fx._require_monad(m)

    def handle(req):
        first = core.execute(co1, req.first)
        second = m.bind(first, lambda z: core.execute(co2, req.cont(z)))
        # the second effect is sequenced before the first
        return m.bind(second, lambda w: m.fmap(lambda z: (z, w), first))

    dom = None
    if isinstance(co1.dom, fx.Lifted) and isinstance(co2.dom, fx.Lifted):
        dom = fx.lift(m, cb.seq(co1.dom.inner, co2.dom.inner))
    return core.costate(handle, dom)


@dataclass(frozen=True)
class Mutation:
    name: str
    description: str
    module: object
    attribute: str
    replacement: Callable


MUTATIONS = [
    Mutation("compose-backward-order", "backward parts composed in the wrong order", core, "compose", _compose_swapped),
    Mutation("diagonal-left-only", "diagonal always tags answers as left", cb, "diagonal", _diagonal_left),
    Mutation("join-swap", "join sends Just(Just x) to Nothing", cb, "maybe_join", _maybe_join_swapped),
    Mutation("mapshape-truncated", "star map drops every continuation after the first request", cb, "map_shape", _map_shape_truncated),
    Mutation("seqm-reordered", "seqM runs the second effect before the first", fx, "seq_m", _seq_m_reordered),
]


@contextlib.contextmanager
def mutated(mutation: Mutation) -> Iterator[Mutation]:
    original = getattr(mutation.module, mutation.attribute)
    patched = []
    for name, module in list(sys.modules.items()):
        if module is None or not (name == "apilens" or name.startswith("apilens.")):
            continue
        for attr, val in list(vars(module).items()):
            if val is original:
                setattr(module, attr, mutation.replacement)
                patched.append((module, attr))
    try:
        yield mutation
    finally:
        for module, attr in patched:
            setattr(module, attr, original)

"""Lifting effects onto containers.

An :class:`Effect` is a functor on response values, optionally with the
``pure``/``join`` of a monad.  ``lift(f, c)`` keeps the requests of ``c`` and
wraps every response type in ``f``.  For monadic effects the lifted
container carries a comonad (``counit``, ``comult``), and :func:`seq_m`
sequences two effectful servers into one over the sequential product.

Effects used by the exhaustive law checks provide ``values``, a finite
sample of effectful values built from a finite set of plain ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

from .combinators import NOTHING, Inr, Just, choice, coproduct, maybe_all, seq
from .core import (
    ONE,
    UNIT,
    Container,
    Morphism,
    NotEnumerable,
    costate,
    execute,
)

__all__ = [
    "Effect",
    "IDENTITY",
    "MAYBE",
    "WRITER",
    "writer",
    "tell",
    "IO",
    "IO_EFFECT",
    "IO_EITHER",
    "Lifted",
    "lift",
    "lift_map",
    "counit",
    "comult",
    "distrib_plus",
    "distrib_plus_inv",
    "distrib_maybe",
    "distrib_maybe_inv",
    "seq_m",
]


@dataclass(frozen=True, eq=False)
class Effect:
    """An effect constructor on response types.

    ``fmap(fn, v)`` maps a plain function over an effectful value.  Monadic
    effects also give ``pure(v)`` and ``join(vv)``.  ``member(v, ok)`` tells
    whether ``v`` is an effectful value all of whose plain values pass ``ok``;
    without it membership falls back to the finite ``values`` sample.
    """

    name: str
    fmap: Callable[[Callable[[Any], Any], Any], Any]
    pure: Optional[Callable[[Any], Any]] = None
    join: Optional[Callable[[Any], Any]] = None
    values: Optional[Callable[[Sequence[Any]], Iterable[Any]]] = None
    member: Optional[Callable[[Any, Callable[[Any], bool]], bool]] = None

    @property
    def monadic(self) -> bool:
        return self.pure is not None and self.join is not None

    def bind(self, v: Any, fn: Callable[[Any], Any]) -> Any:
        return self.join(self.fmap(fn, v))

    def __repr__(self) -> str:
        return f"Effect({self.name})"


def _apply(fn, v):
    return fn(v)


def _same(v):
    return v


IDENTITY = Effect(
    "Identity",
    fmap=_apply,
    pure=_same,
    join=_same,
    values=lambda base: base,
    member=lambda v, ok: ok(v),
)


def _maybe_fmap(fn, v):
    return NOTHING if v is NOTHING else Just(fn(v.value))


def _maybe_join(v):
    return NOTHING if v is NOTHING else v.value


def _maybe_values(base):
    yield NOTHING
    for b in base:
        yield Just(b)


def _maybe_member(v, ok):
    return v is NOTHING or (isinstance(v, Just) and ok(v.value))


MAYBE = Effect(
    "Maybe",
    fmap=_maybe_fmap,
    pure=Just,
    join=_maybe_join,
    values=_maybe_values,
    member=_maybe_member,
)


def writer(logs: Sequence[tuple] = ((), ("a",), ("b",))) -> Effect:
    """A writer effect whose values are ``(log, value)`` with ``log`` a tuple.

    ``logs`` is the finite sample of logs used when enumerating values.
    """

    def fmap(fn, v):
        log, x = v
        return log, fn(x)

    def join(vv):
        outer, (inner, x) = vv
        return outer + inner, x

    def values(base):
        for log in logs:
            for b in base:
                yield log, b

    def member(v, ok):
        return isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], tuple) and ok(v[1])

    return Effect(
        "Writer",
        fmap=fmap,
        pure=lambda x: ((), x),
        join=join,
        values=values,
        member=member,
    )


WRITER = writer()


def tell(message: Any, result: Any = UNIT) -> tuple:
    """A writer value logging one message."""
    return (message,), result


class IO:
    """A deferred action; nothing happens until :meth:`run`."""

    __slots__ = ("action",)

    def __init__(self, action: Callable[[], Any]):
        self.action = action

    def run(self) -> Any:
        return self.action()

    def __repr__(self) -> str:
        return f"IO({getattr(self.action, '__name__', 'action')})"


def _io_fmap(fn, io):
    return IO(lambda: fn(io.run()))


def _io_pure(x):
    return IO(lambda: x)


def _io_join(io):
    return IO(lambda: io.run().run())


IO_EFFECT = Effect("IO", fmap=_io_fmap, pure=_io_pure, join=_io_join)


def _either_fmap(fn, io):
    def action():
        r = io.run()
        return Inr(fn(r.value)) if isinstance(r, Inr) else r

    return IO(action)


def _either_pure(x):
    return IO(lambda: Inr(x))


def _either_join(io):
    def action():
        r = io.run()
        return r.value.run() if isinstance(r, Inr) else r

    return IO(action)


#: ``IO`` composed with ``error + _``: actions yield ``Inl(error)`` or ``Inr(value)``.
IO_EITHER = Effect("IO.Either", fmap=_either_fmap, pure=_either_pure, join=_either_join)


@dataclass(frozen=True)
class Lifted(Container):
    """``inner`` with every response wrapped in ``effect``."""

    name: str = field(default="", compare=False)
    effect: Effect = IDENTITY
    inner: Container = ONE

    def requests(self) -> Iterator[Any]:
        return self.inner.requests()

    def responses(self, request: Any) -> Iterator[Any]:
        if self.effect.values is None:
            raise NotEnumerable(f"effect {self.effect.name} has no finite values")
        return iter(self.effect.values(list(self.inner.responses(request))))

    def same_request(self, x: Any, y: Any) -> bool:
        return self.inner.same_request(x, y)

    def has_response(self, request: Any, response: Any) -> bool:
        if self.effect.member is not None:
            return self.effect.member(response, lambda r: self.inner.has_response(request, r))
        try:
            return response in list(self.responses(request))
        except NotEnumerable:
            return True


def lift(f: Effect, c: Container) -> Lifted:
    return Lifted(f"{f.name}({c.name})", effect=f, inner=c)


def _lifted(f, c):
    return lift(f, c) if c is not None else None


def lift_map(f: Effect, m: Morphism) -> Morphism:
    """``Lift f`` on morphisms: requests untouched, answers mapped under ``f``."""
    inner, fmap = m.lens, f.fmap

    def lens(x):
        y, back = inner(x)
        return y, lambda r: fmap(back, r)

    return Morphism(lens, _lifted(f, m.dom), _lifted(f, m.cod), name=f"{f.name}({m.name})")


def _require_monad(f: Effect) -> None:
    if not f.monadic:
        raise TypeError(f"effect {f.name} is not a monad")


def counit(f: Effect, c: Optional[Container] = None) -> Morphism:
    """``Lift f c => c``, answering with ``pure``: plugs a pure server into an
    effectful pipeline."""
    _require_monad(f)
    pure = f.pure
    return Morphism(lambda x: (x, pure), _lifted(f, c), c, name=f"counit[{f.name}]")


def comult(f: Effect, c: Optional[Container] = None) -> Morphism:
    """``Lift f c => Lift f (Lift f c)``, flattening answers with ``join``."""
    _require_monad(f)
    join = f.join
    cod = lift(f, lift(f, c)) if c is not None else None
    return Morphism(lambda x: (x, join), _lifted(f, c), cod, name=f"comult[{f.name}]")


def distrib_plus(f: Effect, a: Optional[Container] = None, b: Optional[Container] = None) -> Morphism:
    """``Lift f (a + b) => Lift f a + Lift f b``."""
    fmap = f.fmap

    def lens(x):
        tag = type(x)
        return x, lambda r: fmap(tag, choice(x, r))

    dom = cod = None
    if a is not None and b is not None:
        dom, cod = lift(f, coproduct(a, b)), coproduct(lift(f, a), lift(f, b))
    return Morphism(lens, dom, cod, name=f"distrib+[{f.name}]")


def distrib_plus_inv(f: Effect, a: Optional[Container] = None, b: Optional[Container] = None) -> Morphism:
    """``Lift f a + Lift f b => Lift f (a + b)``, inverse of :func:`distrib_plus`."""
    fmap = f.fmap

    def lens(x):
        tag = type(x)
        return x, lambda r: tag(fmap(lambda t: choice(x, t), r))

    dom = cod = None
    if a is not None and b is not None:
        dom, cod = coproduct(lift(f, a), lift(f, b)), lift(f, coproduct(a, b))
    return Morphism(lens, dom, cod, name=f"distrib+^-1[{f.name}]")


def distrib_maybe(f: Effect, a: Optional[Container] = None) -> Morphism:
    """``Lift f (MaybeAll a) => MaybeAll (Lift f a)``.

    On ``Just`` requests the answer passes through.  On ``NOTHING`` the
    domain expects ``f ()`` while the codomain gives ``()``, so the answer
    is wrapped with ``pure``; ``f`` must therefore be pointed.
    """
    if f.pure is None:
        raise TypeError(f"effect {f.name} has no pure")
    pure = f.pure

    def lens(x):
        if x is NOTHING:
            return x, lambda _: pure(UNIT)
        return x, _same

    dom = cod = None
    if a is not None:
        dom, cod = lift(f, maybe_all(a)), maybe_all(lift(f, a))
    return Morphism(lens, dom, cod, name=f"distribMaybe[{f.name}]")


def distrib_maybe_inv(f: Effect, a: Optional[Container] = None) -> Morphism:
    """``MaybeAll (Lift f a) => Lift f (MaybeAll a)``; a section of :func:`distrib_maybe`."""

    def lens(x):
        if x is NOTHING:
            return x, lambda _: UNIT
        return x, _same

    dom = cod = None
    if a is not None:
        dom, cod = maybe_all(lift(f, a)), lift(f, maybe_all(a))
    return Morphism(lens, dom, cod, name=f"distribMaybe^-1[{f.name}]")


def seq_m(m: Effect, co1: Morphism, co2: Morphism) -> Morphism:
    """Run two effectful servers one after the other.

    For a request ``<x, cont>`` the first server answers ``x`` with ``z``;
    only then is ``cont(z)`` computed and sent to the second server.  The
    result is ``(z, w)`` inside the effect.  A failing effect stops before
    the second server is consulted.
    """
    _require_monad(m)

    def handle(req):
        first = execute(co1, req.first)
        return m.bind(first, lambda z: m.fmap(lambda w: (z, w), execute(co2, req.cont(z))))

    dom = None
    if isinstance(co1.dom, Lifted) and isinstance(co2.dom, Lifted):
        dom = lift(m, seq(co1.dom.inner, co2.dom.inner))
    co = costate(handle, dom)
    co.name = f"seqM({co1.name}, {co2.name})"
    return co

"""Structural combinators on containers.

Coproducts tag both requests and responses with :class:`Inl` / :class:`Inr`
so that a response can be checked against the branch its request took.
Optional requests use :class:`Just` / ``NOTHING``, a separate union from the
coproduct tags; the isomorphism between ``maybe_all(c)`` and ``1 + c`` is
given by explicit morphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional

from .core import (
    ONE,
    UNIT,
    Container,
    Morphism,
    ProtocolError,
    Tabulated,
    compose,
)

__all__ = [
    "Inl",
    "Inr",
    "Just",
    "NOTHING",
    "Coproduct",
    "coproduct",
    "choice",
    "coproduct_map",
    "diagonal",
    "MaybeAll",
    "maybe_all",
    "maybe_map",
    "maybe_unit",
    "maybe_join",
    "kleisli",
    "maybe_iso_to",
    "maybe_iso_from",
    "maybe_u",
    "SeqRequest",
    "Seq",
    "seq",
    "unit_l",
    "unit_r",
    "unit_l_inv",
    "unit_r_inv",
    "DONE",
    "More",
    "Star",
    "star",
    "single",
    "star_map",
    "map_shape",
    "map_positions",
    "shape_requests",
]


# Tagged unions


@dataclass(frozen=True)
class Inl:
    value: Any

    def __repr__(self) -> str:
        return f"inl({self.value!r})"


@dataclass(frozen=True)
class Inr:
    value: Any

    def __repr__(self) -> str:
        return f"inr({self.value!r})"


@dataclass(frozen=True)
class Just:
    value: Any

    def __repr__(self) -> str:
        return f"Just({self.value!r})"


class _Nothing:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Nothing"

    def __reduce__(self):
        return "NOTHING"


NOTHING = _Nothing()


# Coproduct


@dataclass(frozen=True)
class Coproduct(Container):
    """``left + right``: a request from either side, answered on the same side."""

    name: str = field(default="", compare=False)
    left: Container = ONE
    right: Container = ONE

    def requests(self) -> Iterator[Any]:
        for x in self.left.requests():
            yield Inl(x)
        for x in self.right.requests():
            yield Inr(x)

    def responses(self, request: Any) -> Iterator[Any]:
        tag, side = self._side(request)
        for r in side.responses(request.value):
            yield tag(r)

    def same_request(self, x: Any, y: Any) -> bool:
        if type(x) is not type(y):
            return False
        _, side = self._side(x)
        return side.same_request(x.value, y.value)

    def has_response(self, request: Any, response: Any) -> bool:
        tag, side = self._side(request)
        return type(response) is tag and side.has_response(request.value, response.value)

    def _side(self, request):
        if isinstance(request, Inl):
            return Inl, self.left
        if isinstance(request, Inr):
            return Inr, self.right
        raise ProtocolError(f"{request!r} is not a request of {self.name}")


def coproduct(left: Container, right: Container) -> Coproduct:
    return Coproduct(f"({left.name} + {right.name})", left=left, right=right)


def choice(request: Any, response: Any) -> Any:
    """Unwrap a coproduct response, insisting it sits on the request's side."""
    if type(response) is not type(request) or not isinstance(request, (Inl, Inr)):
        raise ProtocolError(f"response {response!r} does not match request {request!r}")
    return response.value


def coproduct_map(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1 + m2 : a + b => c + d``, dispatching on the request's tag."""
    lens1, lens2 = m1.lens, m2.lens

    def lens(x):
        if isinstance(x, Inl):
            y, back = lens1(x.value)
            y = Inl(y)
        elif isinstance(x, Inr):
            y, back = lens2(x.value)
            y = Inr(y)
        else:
            raise ProtocolError(f"{x!r} is not a coproduct request")
        tag = type(x)
        return y, lambda r: tag(back(choice(y, r)))

    dom = coproduct(m1.dom, m2.dom) if m1.dom and m2.dom else None
    cod = coproduct(m1.cod, m2.cod) if m1.cod and m2.cod else None
    return Morphism(lens, dom, cod, name=f"({m1.name} + {m2.name})")


def diagonal(c: Optional[Container] = None) -> Morphism:
    """``c + c => c``: forget the tag, then restore it on the way back."""

    def lens(x):
        tag = type(x)
        return x.value, tag

    dom = coproduct(c, c) if c is not None else None
    return Morphism(lens, dom, c, name=f"dia[{c}]")


# MaybeAll


@dataclass(frozen=True)
class MaybeAll(Container):
    """Optional requests: ``NOTHING`` is answered by ``UNIT``, ``Just x`` as ``x``."""

    name: str = field(default="", compare=False)
    inner: Container = ONE

    def requests(self) -> Iterator[Any]:
        yield NOTHING
        for x in self.inner.requests():
            yield Just(x)

    def responses(self, request: Any) -> Iterator[Any]:
        if request is NOTHING:
            yield UNIT
        else:
            yield from self.inner.responses(request.value)

    def same_request(self, x: Any, y: Any) -> bool:
        if x is NOTHING or y is NOTHING:
            return x is y
        return self.inner.same_request(x.value, y.value)

    def has_response(self, request: Any, response: Any) -> bool:
        if request is NOTHING:
            return response == UNIT
        return self.inner.has_response(request.value, response)


def maybe_all(c: Container) -> MaybeAll:
    return MaybeAll(f"MaybeAll({c.name})", inner=c)


def _unit_back(_):
    return UNIT


def _same(r):
    return r


def maybe_map(m: Morphism) -> Morphism:
    """The MaybeAll functor on morphisms: option-map forward, ``mapAll`` back."""
    inner = m.lens

    def lens(x):
        if x is NOTHING:
            return NOTHING, _unit_back
        y, back = inner(x.value)
        return Just(y), back

    dom = maybe_all(m.dom) if m.dom else None
    cod = maybe_all(m.cod) if m.cod else None
    return Morphism(lens, dom, cod, name=f"MaybeAll({m.name})")


def maybe_unit(c: Optional[Container] = None) -> Morphism:
    """``c => MaybeAll c`` given by ``(Just <| id)``."""
    return Morphism(
        lambda x: (Just(x), _same),
        c,
        maybe_all(c) if c else None,
        name=f"unit[{c}]",
    )


def _join(x):
    if x is NOTHING:
        return NOTHING
    return x.value


def maybe_join(c: Optional[Container] = None) -> Morphism:
    """``MaybeAll (MaybeAll c) => MaybeAll c`` given by ``(join <| id)``."""
    return Morphism(
        lambda x: (_join(x), _same),
        maybe_all(maybe_all(c)) if c else None,
        maybe_all(c) if c else None,
        name=f"join[{c}]",
    )


def kleisli(m1: Morphism, m2: Morphism) -> Morphism:
    """``m1 >=> m2`` for ``m1 : a => MaybeAll b`` and ``m2 : b => MaybeAll c``."""
    c = m2.cod.inner if isinstance(m2.cod, MaybeAll) else None
    return compose(compose(m1, maybe_map(m2)), maybe_join(c))


def maybe_iso_to(c: Optional[Container] = None) -> Morphism:
    """``MaybeAll c => 1 + c``."""

    def lens(x):
        if x is NOTHING:
            return Inl(UNIT), lambda r: choice(Inl(UNIT), r)
        y = Inr(x.value)
        return y, lambda r: choice(y, r)

    return Morphism(
        lens,
        maybe_all(c) if c else None,
        coproduct(ONE, c) if c else None,
        name=f"iso_to[{c}]",
    )


def maybe_iso_from(c: Optional[Container] = None) -> Morphism:
    """``1 + c => MaybeAll c``."""

    def lens(x):
        if isinstance(x, Inl):
            return NOTHING, lambda r: Inl(r)
        if isinstance(x, Inr):
            return Just(x.value), Inr
        raise ProtocolError(f"{x!r} is not a request of 1 + {c}")

    return Morphism(
        lens,
        coproduct(ONE, c) if c else None,
        maybe_all(c) if c else None,
        name=f"iso_from[{c}]",
    )


def maybe_u() -> Morphism:
    """``MaybeAll 1 => 1``: the coproduct isomorphism followed by the diagonal."""
    m = compose(maybe_iso_to(ONE), diagonal(ONE))
    m.name = "MaybeU"
    return m


# Sequential product


@dataclass(frozen=True)
class SeqRequest:
    """A first request and a continuation choosing the second from the first answer."""

    first: Any
    cont: Callable[[Any], Any]

    def __repr__(self) -> str:
        return f"<{self.first!r}, {self.cont!r}>"


@dataclass(frozen=True)
class Seq(Container):
    """``first >> second``: responses are pairs ``(z, w)`` with ``w`` answering ``cont(z)``."""

    name: str = field(default="", compare=False)
    first: Container = ONE
    second: Container = ONE

    def requests(self) -> Iterator[Any]:
        for x in self.first.requests():
            answers = list(self.first.responses(x))
            nexts = list(self.second.requests())
            for choice_ in itertools.product(nexts, repeat=len(answers)):
                yield SeqRequest(x, Tabulated(zip(answers, choice_)))

    def responses(self, request: Any) -> Iterator[Any]:
        for z in self.first.responses(request.first):
            for w in self.second.responses(request.cont(z)):
                yield (z, w)

    def same_request(self, x: Any, y: Any) -> bool:
        if not self.first.same_request(x.first, y.first):
            return False
        return all(
            self.second.same_request(x.cont(z), y.cont(z))
            for z in self.first.responses(x.first)
        )

    def has_response(self, request: Any, response: Any) -> bool:
        if not (isinstance(response, tuple) and len(response) == 2):
            return False
        z, w = response
        return self.first.has_response(request.first, z) and self.second.has_response(
            request.cont(z), w
        )


def seq(first: Container, second: Container) -> Seq:
    return Seq(f"({first.name} >> {second.name})", first=first, second=second)


def unit_l(c: Optional[Container] = None) -> Morphism:
    """``1 >> c => c``, forward ``pi2``, backward ``y -> ((), y)``."""

    def lens(x):
        return x.cont(UNIT), lambda r: (UNIT, r)

    return Morphism(lens, seq(ONE, c) if c else None, c, name=f"unitL[{c}]")


def unit_r(c: Optional[Container] = None) -> Morphism:
    """``c >> 1 => c``, forward ``pi1``, backward ``y -> (y, ())``."""

    def lens(x):
        return x.first, lambda r: (r, UNIT)

    return Morphism(lens, seq(c, ONE) if c else None, c, name=f"unitR[{c}]")


def _second(pair):
    return pair[1]


def _first(pair):
    return pair[0]


def unit_l_inv(c: Optional[Container] = None) -> Morphism:
    """``c => 1 >> c``, the injection undone by :func:`unit_l`."""

    def lens(x):
        return SeqRequest(UNIT, Tabulated([(UNIT, x)])), _second

    return Morphism(lens, c, seq(ONE, c) if c else None, name=f"unitL^-1[{c}]")


def unit_r_inv(c: Optional[Container] = None) -> Morphism:
    """``c => c >> 1``, the injection undone by :func:`unit_r`."""

    def lens(x):
        return SeqRequest(x, _to_unit_cont), _first

    return Morphism(lens, c, seq(c, ONE) if c else None, name=f"unitR^-1[{c}]")


def _to_unit_cont(_):
    return UNIT


# Kleene star


class _Done:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Done"

    def __reduce__(self):
        return "DONE"


DONE = _Done()


@dataclass(frozen=True)
class More:
    """A request followed by a continuation picking the rest of the session."""

    request: Any
    cont: Callable[[Any], Any]

    def __repr__(self) -> str:
        return f"More({self.request!r}, {self.cont!r})"


def single(x: Any) -> More:
    """The session that sends ``x`` once and stops."""
    return More(x, _stop)


def _stop(_):
    return DONE


def shape_requests(inner: Container, depth: int) -> Iterator[Any]:
    """Every session tree over ``inner`` that is at most ``depth`` requests deep."""
    yield DONE
    if depth <= 0:
        return
    smaller = list(shape_requests(inner, depth - 1))
    for x in inner.requests():
        answers = list(inner.responses(x))
        for rest in itertools.product(smaller, repeat=len(answers)):
            yield More(x, Tabulated(zip(answers, rest)))


@dataclass(frozen=True)
class Star(Container):
    """``inner*``: zero or more requests of ``inner``, each chosen from the
    previous answers.  Enumeration stops at ``depth``."""

    name: str = field(default="", compare=False)
    inner: Container = ONE
    depth: int = field(default=3, compare=False)

    def requests(self) -> Iterator[Any]:
        return shape_requests(self.inner, self.depth)

    def responses(self, request: Any) -> Iterator[Any]:
        if request is DONE:
            yield UNIT
            return
        for r in self.inner.responses(request.request):
            for rest in self.responses(request.cont(r)):
                yield (r, rest)

    def same_request(self, x: Any, y: Any) -> bool:
        if x is DONE or y is DONE:
            return x is y
        if not self.inner.same_request(x.request, y.request):
            return False
        return all(
            self.same_request(x.cont(r), y.cont(r))
            for r in self.inner.responses(x.request)
        )

    def has_response(self, request: Any, response: Any) -> bool:
        if request is DONE:
            return response == UNIT
        if not (isinstance(response, tuple) and len(response) == 2):
            return False
        r, rest = response
        return self.inner.has_response(request.request, r) and self.has_response(
            request.cont(r), rest
        )


def star(c: Container, depth: int = 3) -> Star:
    return Star(f"{c.name}*", inner=c, depth=depth)


def map_shape(lens, shape: Any) -> Any:
    """``mapShp``: translate every request of a session tree."""
    if shape is DONE:
        return DONE
    y, back = lens(shape.request)
    rest = shape.cont
    return More(y, lambda r: map_shape(lens, rest(back(r))))


def map_positions(lens, shape: Any, positions: Any) -> Any:
    """``mapPos``: translate a path of answers back along the original tree."""
    if shape is DONE:
        return UNIT
    _, back = lens(shape.request)
    answer, rest = positions
    r = back(answer)
    return (r, map_positions(lens, shape.cont(r), rest))


def star_map(m: Morphism) -> Morphism:
    """The Kleene star functor on morphisms."""
    inner = m.lens

    def lens(shape):
        return map_shape(inner, shape), lambda pos: map_positions(inner, shape, pos)

    dom = star(m.dom) if m.dom else None
    cod = star(m.cod) if m.cod else None
    return Morphism(lens, dom, cod, name=f"({m.name})*")

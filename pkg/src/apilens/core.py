"""Containers, container morphisms and the state/costate runner.

A container is an API boundary: a set of requests together with, for each
request, the set of responses that may answer it.  A morphism translates
requests of one API into requests of another and carries, for every
original request, a way of translating the answers back.

Morphisms are stored in continuation form: calling ``m(x)`` returns the
translated request together with a closure that maps a codomain response
back to a domain response for that very ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional

__all__ = [
    "UNIT",
    "Container",
    "Unit",
    "ONE",
    "Morphism",
    "ContainerMismatch",
    "NotEnumerable",
    "ProtocolError",
    "Tabulated",
    "identity",
    "compose",
    "compose_all",
    "state",
    "value",
    "costate",
    "execute",
    "run",
    "Context",
]

#: The unique value of the terminal type, used as request and response of ``ONE``.
UNIT = ()

Lens = Callable[[Any], "tuple[Any, Callable[[Any], Any]]"]


class NotEnumerable(TypeError):
    """Raised when a finite enumeration is asked of an open container."""


class ProtocolError(ValueError):
    """A response was produced that does not belong to its request's family."""


class ContainerMismatch(TypeError):
    """Two morphisms were composed across different containers."""


@dataclass(frozen=True)
class Container:
    """An open container: requests are arbitrary values, responses are typed.

    ``response_type`` maps a request to the Python type its responses must
    have; leave it out when no runtime check is wanted.
    """

    name: str
    response_type: Optional[Callable[[Any], type]] = field(default=None, compare=False)

    def requests(self) -> Iterator[Any]:
        raise NotEnumerable(f"{self.name} has no finite request set")

    def responses(self, request: Any) -> Iterator[Any]:
        raise NotEnumerable(f"{self.name} has no finite response set")

    def same_request(self, x: Any, y: Any) -> bool:
        return x == y

    def has_response(self, request: Any, response: Any) -> bool:
        try:
            return response in list(self.responses(request))
        except NotEnumerable:
            if self.response_type is None:
                return True
            return isinstance(response, self.response_type(request))

    def check_response(self, request: Any, response: Any) -> Any:
        if not self.has_response(request, response):
            raise ProtocolError(
                f"{response!r} is not a response of {self.name} to {request!r}"
            )
        return response

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Unit(Container):
    """The neutral container ``1``: one request, one response, both ``UNIT``."""

    name: str = "1"

    def requests(self) -> Iterator[Any]:
        yield UNIT

    def responses(self, request: Any) -> Iterator[Any]:
        yield UNIT


ONE = Unit()


class Tabulated:
    """A finite function given by a table, usable wherever a closure is.

    Continuations inside finite requests (sequential product, Kleene star)
    are tabulated so that requests can be enumerated and printed.
    """

    __slots__ = ("items", "_table")

    def __init__(self, items: Iterable[tuple[Any, Any]]):
        self.items = tuple(items)
        self._table = dict(self.items)

    def __call__(self, key: Any) -> Any:
        return self._table[key]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tabulated) and self.items == other.items

    def __hash__(self) -> int:
        return hash(self.items)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {v!r}" for k, v in self.items)
        return "{" + inner + "}"


class Morphism:
    """A container morphism ``dom => cod``.

    Build one from a lens function ``x -> (y, back)`` or, with :meth:`of`,
    from separate forward and backward maps.  ``dom`` and ``cod`` are
    optional; when both sides of a composition know them they are checked.
    """

    __slots__ = ("lens", "dom", "cod", "name")

    def __init__(
        self,
        lens: Lens,
        dom: Optional[Container] = None,
        cod: Optional[Container] = None,
        name: Optional[str] = None,
    ):
        self.lens = lens
        self.dom = dom
        self.cod = cod
        self.name = name

    @classmethod
    def of(
        cls,
        forward: Callable[[Any], Any],
        backward: Callable[[Any, Any], Any],
        dom: Optional[Container] = None,
        cod: Optional[Container] = None,
        name: Optional[str] = None,
    ) -> "Morphism":
        """Build from ``forward(x)`` and ``backward(x, response)``."""

        def lens(x):
            return forward(x), lambda r: backward(x, r)

        return cls(lens, dom, cod, name)

    def __call__(self, x: Any) -> tuple[Any, Callable[[Any], Any]]:
        return self.lens(x)

    def forward(self, x: Any) -> Any:
        return self.lens(x)[0]

    def backward(self, x: Any) -> Callable[[Any], Any]:
        return self.lens(x)[1]

    def then(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    __rshift__ = then

    def __repr__(self) -> str:
        label = self.name or "Morphism"
        return f"<{label}: {self.dom} => {self.cod}>"


def _identity_back(r):
    return r


def identity(c: Optional[Container] = None) -> Morphism:
    """``(id <| id)`` on ``c``."""
    return Morphism(lambda x: (x, _identity_back), c, c, name=f"id[{c}]")


def compose(m1: Morphism, m2: Morphism) -> Morphism:
    """Sequential composition ``m1 ; m2``.

    Forward maps compose left to right; the backward map at ``x`` first
    translates with ``m2`` at ``m1``'s image of ``x``, then with ``m1`` at ``x``.
    """
    if m1.cod is not None and m2.dom is not None and m1.cod != m2.dom:
        raise ContainerMismatch(f"cannot compose {m1!r} with {m2!r}")
    lens1, lens2 = m1.lens, m2.lens

    def lens(x):
        y, back1 = lens1(x)
        z, back2 = lens2(y)
        return z, lambda r: back1(back2(r))

    name = f"{m1.name or '?'} ; {m2.name or '?'}"
    return Morphism(lens, m1.dom, m2.cod, name=name)


def compose_all(first: Morphism, *rest: Morphism) -> Morphism:
    result = first
    for m in rest:
        result = compose(result, m)
    return result


# State, costate, context


def _to_unit(_):
    return UNIT


def state(x: Any, c: Optional[Container] = None) -> Morphism:
    """The state ``1 => c`` picking out request ``x``."""
    return Morphism(lambda _: (x, _to_unit), ONE, c, name=f"state({x!r})")


def value(s: Morphism) -> Any:
    """The request a state points at."""
    return s.forward(UNIT)


def costate(handler: Callable[[Any], Any], c: Optional[Container] = None) -> Morphism:
    """The costate ``c => 1`` answering every request with ``handler``.

    The handler is called lazily, when the backward part is applied, and any
    exception it raises propagates untouched.
    """
    return Morphism(
        lambda x: (UNIT, lambda _: handler(x)),
        c,
        ONE,
        name=getattr(handler, "__name__", "costate"),
    )


def execute(co: Morphism, x: Any) -> Any:
    """Answer ``x`` with a costate: apply its backward map at ``x`` to ``UNIT``."""
    return co.backward(x)(UNIT)


def run(st: Morphism, co: Morphism, m: Optional[Morphism] = None) -> Any:
    """Run ``m`` between a client state and a server costate.

    ``run(st, co, m) == execute(m ; co, value(st))``.  Without ``m`` the
    state is answered directly by the costate.
    """
    if m is None:
        m = identity(co.dom)
    return execute(compose(m, co), value(st))


@dataclass(frozen=True)
class Context:
    """What is needed to close a morphism: a state for its domain and a
    costate for its codomain."""

    state: Morphism
    costate: Morphism

    def run(self, m: Optional[Morphism] = None) -> Any:
        return run(self.state, self.costate, m)

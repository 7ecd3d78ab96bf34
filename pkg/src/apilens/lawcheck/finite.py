"""Finite containers and morphisms, enumeration and extensional equality."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Optional, Sequence

from ..core import Container, Morphism

__all__ = [
    "SizeError",
    "FiniteContainer",
    "FiniteMorphism",
    "Counterexample",
    "enumerate_morphisms",
    "enumerate_handlers",
    "tabulate",
    "Comparer",
    "find_disagreement",
    "morphism_equal",
    "disagrees_at",
    "find_ill_typed",
]


class SizeError(ValueError):
    """An enumeration was requested beyond the configured caps."""


@dataclass(frozen=True)
class FiniteContainer(Container):
    """A container with an explicit request list and response table.

    >>> c = FiniteContainer.of("C", {"q0": ["r0"], "q1": ["r0", "r1"]})
    >>> list(c.responses("q1"))
    ['r0', 'r1']
    """

    table: tuple = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        requests = [q for q, _ in self.table]
        if len(set(requests)) != len(requests):
            raise ValueError(f"duplicate requests in {self.name}")
        for q, rs in self.table:
            if not rs:
                raise ValueError(f"request {q!r} of {self.name} has no responses")
        object.__setattr__(self, "_index", dict(self.table))

    @classmethod
    def of(cls, name: str, responses: Mapping[Any, Sequence[Any]]) -> "FiniteContainer":
        return cls(name, table=tuple((q, tuple(rs)) for q, rs in responses.items()))

    def requests(self) -> Iterator[Any]:
        for q, _ in self.table:
            yield q

    def responses(self, request: Any) -> Iterator[Any]:
        return iter(self._index[request])

    def has_response(self, request: Any, response: Any) -> bool:
        return response in self._index.get(request, ())


class FiniteMorphism(Morphism):
    """A morphism given by a forward table and a backward table keyed by
    ``(request, codomain response)``."""

    __slots__ = ("forward_table", "backward_table")

    def __init__(self, dom: Container, cod: Container, forward_table, backward_table, name=None):
        self.forward_table = dict(forward_table)
        self.backward_table = dict(backward_table)
        entries = {}
        for x, y in self.forward_table.items():
            back = {r: self.backward_table[(x, r)] for r in cod.responses(y)}
            entries[x] = (y, back.__getitem__)
        super().__init__(entries.__getitem__, dom, cod, name=name)

    def describe(self) -> str:
        parts = []
        for x, y in self.forward_table.items():
            backs = ", ".join(
                f"{r!r}->{a!r}" for (x2, r), a in self.backward_table.items() if x2 == x
            )
            parts.append(f"{x!r}=>{y!r} [{backs}]")
        return "; ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.name or 'FiniteMorphism'} {self.dom} => {self.cod}: {self.describe()}>"


def _check_caps(c: Container, max_requests: int, max_responses: int) -> None:
    requests = list(c.requests())
    if len(requests) > max_requests:
        raise SizeError(f"{c.name} has {len(requests)} requests (cap {max_requests})")
    for x in requests:
        n = len(list(c.responses(x)))
        if n > max_responses:
            raise SizeError(f"{c.name} answers {x!r} in {n} ways (cap {max_responses})")


def enumerate_morphisms(
    dom: Container,
    cod: Container,
    max_requests: int = 3,
    max_responses: int = 3,
) -> list[FiniteMorphism]:
    """Every morphism ``dom => cod``, in a stable order."""
    _check_caps(dom, max_requests, max_responses)
    _check_caps(cod, max_requests, max_responses)

    # per domain request: every (target, backward map) it can choose
    local = []
    for x in dom.requests():
        answers = list(dom.responses(x))
        options = []
        for y in cod.requests():
            incoming = list(cod.responses(y))
            for image in itertools.product(answers, repeat=len(incoming)):
                options.append((x, y, tuple(zip(incoming, image))))
        local.append(options)

    result = []
    for k, combo in enumerate(itertools.product(*local)):
        forward = {x: y for x, y, _ in combo}
        backward = {(x, r): a for x, _, back in combo for r, a in back}
        result.append(FiniteMorphism(dom, cod, forward, backward, name=f"{dom}->{cod}#{k}"))
    return result


def enumerate_handlers(c: Container) -> list[dict]:
    """Every total handler of ``c``, as a ``request -> response`` dict."""
    requests = list(c.requests())
    choices = [list(c.responses(x)) for x in requests]
    return [dict(zip(requests, pick)) for pick in itertools.product(*choices)]


def tabulate(m: Morphism, dom: Optional[Container] = None, cod: Optional[Container] = None) -> FiniteMorphism:
    """Evaluate ``m`` everywhere and freeze the result into tables."""
    dom = dom or m.dom
    cod = cod or m.cod
    forward, backward = {}, {}
    for x in dom.requests():
        y, back = m(x)
        forward[x] = y
        for r in cod.responses(y):
            backward[(x, r)] = back(r)
    return FiniteMorphism(dom, cod, forward, backward, name=m.name)


@dataclass(frozen=True)
class Counterexample:
    """Where two morphisms (or two computations) part ways.

    ``part`` is ``"forward"`` when the translated requests differ,
    ``"backward"`` when the answers to ``response`` differ, ``"error"`` when
    evaluation raised and ``"value"`` for non-morphism checks.
    """

    part: str
    request: Any
    response: Any = None
    left: Any = None
    right: Any = None
    case: str = ""

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "part": self.part,
            "request": repr(self.request),
            "response": repr(self.response),
            "left": repr(self.left),
            "right": repr(self.right),
        }

    def __str__(self) -> str:
        where = f"at {self.request!r}"
        if self.part == "backward":
            where += f" answering {self.response!r}"
        return f"{self.case}: {self.part} {where}: {self.left!r} != {self.right!r}"


def _error(x, r, exc, side="") -> Counterexample:
    return Counterexample("error", x, r, left=f"{side}{type(exc).__name__}: {exc}")


class Comparer:
    """Extensional comparison of morphisms ``dom => cod``.

    Request and response lists are computed once, so one comparer can be
    reused across many pairs with the same boundary.  ``parts`` restricts
    the comparison to the forward or backward side.
    """

    def __init__(
        self,
        dom: Container,
        cod: Container,
        parts: str = "both",
        requests: Optional[Iterable[Any]] = None,
    ):
        self.dom = dom
        self.cod = cod
        self.parts = parts
        self.requests = list(dom.requests() if requests is None else requests)
        self._plain = type(cod).same_request is Container.same_request
        self._answers = {}

    def answers(self, y: Any) -> list:
        if not self._plain:
            return list(self.cod.responses(y))
        try:
            return self._answers[y]
        except KeyError:
            found = self._answers[y] = list(self.cod.responses(y))
            return found

    def __call__(self, lhs: Morphism, rhs: Morphism) -> Optional[Counterexample]:
        check_forward = self.parts != "backward"
        check_backward = self.parts != "forward"
        plain = self._plain
        for x in self.requests:
            try:
                y1, back1 = lhs.lens(x)
                y2, back2 = rhs.lens(x)
                if check_forward and not (y1 == y2 if plain else self.cod.same_request(y1, y2)):
                    return Counterexample("forward", x, left=y1, right=y2)
                if not check_backward:
                    continue
                answers = self.answers(y1)
            except Exception as exc:  # noqa: BLE001 - any failure is a law violation
                return _error(x, None, exc)
            for r in answers:
                try:
                    a1 = back1(r)
                    a2 = back2(r)
                except Exception as exc:  # noqa: BLE001
                    return _error(x, r, exc)
                if a1 != a2:
                    return Counterexample("backward", x, r, left=a1, right=a2)
        return None


def find_disagreement(
    lhs: Morphism,
    rhs: Morphism,
    dom: Optional[Container] = None,
    cod: Optional[Container] = None,
    parts: str = "both",
    requests: Optional[Iterable[Any]] = None,
) -> Optional[Counterexample]:
    """First point where ``lhs`` and ``rhs`` differ, or ``None``.

    Forward parts are compared with the codomain's extensional request
    equality, backward parts on every codomain response to the translated
    request.
    """
    return Comparer(dom or lhs.dom, cod or lhs.cod, parts, requests)(lhs, rhs)


def morphism_equal(m1: Morphism, m2: Morphism, dom=None, cod=None) -> bool:
    return find_disagreement(m1, m2, dom, cod) is None


def disagrees_at(lhs: Morphism, rhs: Morphism, cx: Counterexample, cod: Optional[Container] = None) -> bool:
    """Re-evaluate both morphisms at the counterexample only."""
    cod = cod or lhs.cod
    try:
        y1, back1 = lhs(cx.request)
        y2, back2 = rhs(cx.request)
        if cx.part == "forward":
            return not cod.same_request(y1, y2)
        if cx.part == "backward":
            return back1(cx.response) != back2(cx.response)
        if cx.response is not None:
            back1(cx.response)
            back2(cx.response)
        else:
            list(cod.responses(y1))
    except Exception:  # noqa: BLE001
        return True
    return False


def find_ill_typed(m: Morphism, dom: Optional[Container] = None, cod: Optional[Container] = None) -> Optional[Counterexample]:
    """First backward answer that is not a valid domain response."""
    dom = dom or m.dom
    cod = cod or m.cod
    for x in dom.requests():
        try:
            y, back = m(x)
            answers = list(cod.responses(y))
        except Exception as exc:  # noqa: BLE001
            return _error(x, None, exc)
        for r in answers:
            try:
                a = back(r)
            except Exception as exc:  # noqa: BLE001
                return _error(x, r, exc)
            if not dom.has_response(x, a):
                return Counterexample("backward", x, r, left=a, right="<a response of the domain>")
    return None

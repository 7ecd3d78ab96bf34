"""Exhaustive law suites over a finite corpus of containers.

Every suite is a generator of :class:`LawReport`, one per (law, instance),
where an instance names the containers involved.  A report covers every
combination of corpus morphisms for that instance and stops at the first
counterexample it meets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

from .. import combinators as cb
from .. import core
from .. import effects as fx
from ..combinators import NOTHING, Just, SeqRequest
from ..core import ONE, UNIT, Container, Morphism
from .finite import (
    Comparer,
    Counterexample,
    FiniteContainer,
    FiniteMorphism,
    disagrees_at,
    enumerate_handlers,
    enumerate_morphisms,
    find_ill_typed,
)

__all__ = [
    "C2",
    "C3",
    "default_corpus",
    "Corpus",
    "LawReport",
    "SUITES",
    "check_all_laws",
    "run_suite",
    "compose_tables",
]

C2 = FiniteContainer.of("C2", {"q0": ("r0",), "q1": ("r0", "r1")})
C3 = FiniteContainer.of("C3", {"p0": ("s0", "s1"), "p1": ("s0", "s1")})


def default_corpus() -> list[Container]:
    return [ONE, C2, C3]


@dataclass
class LawReport:
    law: str
    instance: str
    passed: bool
    checked: int
    counterexample: Optional[Counterexample] = None
    replay: Optional[Callable[[], bool]] = field(default=None, repr=False, compare=False)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.law} [{self.instance}] ({self.checked} checked)"
        if self.counterexample is not None:
            text += f" -- {self.counterexample}"
        return text

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "instance": self.instance,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_dict(),
        }


class _Check:
    """Accumulates cases for one (law, instance) until the first failure."""

    def __init__(self, law: str, instance: str):
        self.law = law
        self.instance = instance
        self.checked = 0
        self.failure: Optional[Counterexample] = None
        self.replay: Optional[Callable[[], bool]] = None

    @property
    def failed(self) -> bool:
        return self.failure is not None

    def equal(self, case: str, lhs: Morphism, rhs: Morphism, comparer: Comparer) -> bool:
        """Record ``lhs == rhs`` extensionally; return False once failed."""
        self.checked += 1
        cx = comparer(lhs, rhs)
        if cx is None:
            return True
        self.failure = _named(cx, case)
        self.replay = lambda: disagrees_at(lhs, rhs, cx, comparer.cod)
        return False

    def same(self, case: str, request: Any, compute: Callable[[], tuple]) -> bool:
        """Record that ``compute()`` returns two equal values."""
        self.checked += 1
        try:
            left, right = compute()
        except Exception as exc:  # noqa: BLE001
            self.failure = Counterexample("error", request, left=f"{type(exc).__name__}: {exc}", case=case)
            self.replay = lambda: _raises(compute)
            return False
        if left == right:
            return True
        self.failure = Counterexample("value", request, left=left, right=right, case=case)
        self.replay = lambda: _differs(compute)
        return False

    def holds(self, case: str, request: Any, predicate: Callable[[], Any], expected: str) -> bool:
        """Record that ``predicate()`` is truthy."""
        return self.same(case, request, lambda: (bool(predicate()) or f"not {expected}", True))

    def typed(self, case: str, m: Morphism, dom: Container, cod: Container) -> bool:
        self.checked += 1
        cx = find_ill_typed(m, dom, cod)
        if cx is None:
            return True
        self.failure = _named(cx, case)
        self.replay = lambda: find_ill_typed(m, dom, cod) is not None
        return False

    def report(self) -> LawReport:
        return LawReport(
            self.law,
            self.instance,
            self.failure is None,
            self.checked,
            self.failure,
            self.replay,
        )


def _named(cx: Counterexample, case: str) -> Counterexample:
    return Counterexample(cx.part, cx.request, cx.response, cx.left, cx.right, case)


def _raises(compute) -> bool:
    try:
        compute()
    except Exception:  # noqa: BLE001
        return True
    return False


def _differs(compute) -> bool:
    try:
        left, right = compute()
    except Exception:  # noqa: BLE001
        return True
    return left != right


def _label(*cs: Container) -> str:
    return " -> ".join(c.name for c in cs)


class Corpus:
    """Containers, every morphism between them, and the derived instances.

    ``rotations`` controls how many partners each morphism gets in the
    pair-covering used by the Kleene-star composition laws.
    """

    def __init__(
        self,
        containers: Optional[Sequence[Container]] = None,
        star_depth: int = 3,
        rotations: int = 4,
        effects: Optional[Sequence[fx.Effect]] = None,
    ):
        self.containers = list(containers if containers is not None else default_corpus())
        self.star_depth = star_depth
        self.rotations = rotations
        self.effects = list(effects if effects is not None else (fx.IDENTITY, fx.MAYBE, fx.WRITER))
        self.morphisms = {
            (a, b): enumerate_morphisms(a, b) for a in self.containers for b in self.containers
        }
        self.derived = []
        if len(self.containers) >= 2:
            self.derived.append(cb.coproduct(self.containers[-2], self.containers[-1]))

    def pairs_between(self, a, b, c) -> Iterator[tuple[FiniteMorphism, FiniteMorphism]]:
        return itertools.product(self.morphisms[a, b], self.morphisms[b, c])

    def triples(self) -> Iterator[tuple[Container, Container, Container]]:
        return itertools.product(self.containers, repeat=3)

    def covering_pairs(self) -> dict[tuple, list]:
        """Composable pairs in which every morphism occurs as both factors.

        Grouped by ``(a, b, c)``.  Each morphism into ``b`` meets
        ``rotations`` different morphisms out of ``b``, and vice versa.
        """
        groups: dict[tuple, list] = {}
        seen = set()
        for b in self.containers:
            ins = [(a, f) for a in self.containers for f in self.morphisms[a, b]]
            outs = [(c, g) for c in self.containers for g in self.morphisms[b, c]]
            n = max(len(ins), len(outs))
            for r in range(self.rotations):
                shift = r * max(1, min(len(ins), len(outs)) // max(1, self.rotations)) + r
                for i in range(n):
                    a, f = ins[i % len(ins)]
                    c, g = outs[(i + shift) % len(outs)]
                    if (id(f), id(g)) in seen:
                        continue
                    seen.add((id(f), id(g)))
                    groups.setdefault((a, b, c), []).append((f, g))
        return groups


def compose_tables(f: FiniteMorphism, g: FiniteMorphism) -> FiniteMorphism:
    """Composite of two tabulated morphisms computed directly on the tables."""
    forward = {x: g.forward_table[y] for x, y in f.forward_table.items()}
    backward = {}
    for x, y in f.forward_table.items():
        for r in g.cod.responses(g.forward_table[y]):
            backward[(x, r)] = f.backward_table[(x, g.backward_table[(y, r)])]
    return FiniteMorphism(f.dom, g.cod, forward, backward, name="tables")


# Category


def category_laws(corpus: Corpus) -> Iterator[LawReport]:
    cs = corpus.containers
    for a, b in itertools.product(cs, repeat=2):
        cmp = Comparer(a, b)
        left = _Check("identity-left", _label(a, b))
        right = _Check("identity-right", _label(a, b))
        for m in corpus.morphisms[a, b]:
            if not left.failed:
                left.equal(m.name, core.compose(core.identity(a), m), m, cmp)
            if not right.failed:
                right.equal(m.name, core.compose(m, core.identity(b)), m, cmp)
        yield left.report()
        yield right.report()

    for a, b, c in corpus.triples():
        check = _Check("compose-tables", _label(a, b, c))
        cmp = Comparer(a, c)
        for f, g in corpus.pairs_between(a, b, c):
            if not check.equal(f"{f.name} ; {g.name}", core.compose(f, g), compose_tables(f, g), cmp):
                break
        yield check.report()

    composed = {}
    for a, b, c in corpus.triples():
        for f, g in corpus.pairs_between(a, b, c):
            composed[id(f), id(g)] = core.compose(f, g)
    for a, b, c, d in itertools.product(cs, repeat=4):
        check = _Check("associativity", _label(a, b, c, d))
        cmp = Comparer(a, d)
        hs = corpus.morphisms[c, d]
        for f, g in corpus.pairs_between(a, b, c):
            fg = composed[id(f), id(g)]
            for h in hs:
                lhs = core.compose(fg, h)
                rhs = core.compose(f, composed[id(g), id(h)])
                if not check.equal(f"({f.name} ; {g.name}) ; {h.name}", lhs, rhs, cmp):
                    break
            if check.failed:
                break
        yield check.report()


# State and costate


def state_laws(corpus: Corpus) -> Iterator[LawReport]:
    for c in corpus.containers:
        check = _Check("value-state", c.name)
        for x in c.requests():
            if not check.same(f"x={x!r}", x, lambda x=x: (core.value(core.state(x, c)), x)):
                break
        yield check.report()

        check = _Check("state-value", c.name)
        cmp = Comparer(ONE, c)
        for s in corpus.morphisms[ONE, c] if ONE in corpus.containers else []:
            if not check.equal(s.name, core.state(core.value(s), c), s, cmp):
                break
        yield check.report()

        check = _Check("exec-costate", c.name)
        for h in enumerate_handlers(c):
            co = core.costate(h.__getitem__, c)
            for x in c.requests():
                if not check.same(repr(h), x, lambda co=co, h=h, x=x: (core.execute(co, x), h[x])):
                    break
            if check.failed:
                break
        yield check.report()

        check = _Check("costate-exec", c.name)
        cmp = Comparer(c, ONE)
        for co in corpus.morphisms.get((c, ONE), []):
            rebuilt = core.costate(lambda x, co=co: core.execute(co, x), c)
            if not check.equal(co.name, rebuilt, co, cmp):
                break
        yield check.report()

    for a, b in itertools.product(corpus.containers, repeat=2):
        check = _Check("run-decomposition", _label(a, b))
        handlers = enumerate_handlers(b)
        for m in corpus.morphisms[a, b]:
            for h in handlers:
                co = core.costate(h.__getitem__, b)
                for x in a.requests():

                    def compute(m=m, co=co, h=h, x=x):
                        ran = core.run(core.state(x, a), co, m)
                        direct = core.execute(core.compose(m, co), x)
                        oracle = m.backward_table[(x, h[m.forward_table[x]])]
                        return (ran, direct), (oracle, oracle)

                    if not check.same(f"{m.name} with {h!r}", x, compute):
                        break
                if check.failed:
                    break
            if check.failed:
                break
        yield check.report()


# MaybeAll


def maybe_laws(corpus: Corpus) -> Iterator[LawReport]:
    cs = corpus.containers
    for c in cs:
        ma = cb.maybe_all(c)
        cmp = Comparer(ma, ma)
        identity = core.identity(ma)

        check = _Check("maybe-functor-identity", c.name)
        check.equal("mapMor id", cb.maybe_map(core.identity(c)), identity, cmp)
        yield check.report()

        check = _Check("maybe-unit-left", c.name)
        check.equal("unit ; join", core.compose(cb.maybe_map(cb.maybe_unit(c)), cb.maybe_join(c)), identity, cmp)
        yield check.report()

        check = _Check("maybe-unit-right", c.name)
        check.equal("unit ; join", core.compose(cb.maybe_unit(ma), cb.maybe_join(c)), identity, cmp)
        yield check.report()

        check = _Check("maybe-join-associativity", c.name)
        mmm = cb.maybe_all(cb.maybe_all(ma))
        lhs = core.compose(cb.maybe_join(ma), cb.maybe_join(c))
        rhs = core.compose(cb.maybe_map(cb.maybe_join(c)), cb.maybe_join(c))
        check.equal("join ; join", lhs, rhs, Comparer(mmm, ma))
        yield check.report()

    for a, b, c in corpus.triples():
        check = _Check("maybe-functor-composition", _label(a, b, c))
        cmp = Comparer(cb.maybe_all(a), cb.maybe_all(c))
        for f, g in corpus.pairs_between(a, b, c):
            lhs = cb.maybe_map(core.compose(f, g))
            rhs = core.compose(cb.maybe_map(f), cb.maybe_map(g))
            if not check.equal(f"{f.name} ; {g.name}", lhs, rhs, cmp):
                break
        yield check.report()

        check = _Check("kleisli-pure", _label(a, b, c))
        cmp = Comparer(a, cb.maybe_all(c))
        for f, g in corpus.pairs_between(a, b, c):
            lhs = cb.kleisli(core.compose(f, cb.maybe_unit(b)), core.compose(g, cb.maybe_unit(c)))
            rhs = core.compose(core.compose(f, g), cb.maybe_unit(c))
            if not check.equal(f"{f.name} >=> {g.name}", lhs, rhs, cmp):
                break
        yield check.report()

    for a, b in itertools.product(cs, repeat=2):
        yield _kleisli_short_circuit(a, b)

    for c in cs + corpus.derived:
        ma, plus = cb.maybe_all(c), cb.coproduct(ONE, c)
        check = _Check("maybe-iso-to-from", c.name)
        check.equal("to ; from", core.compose(cb.maybe_iso_to(c), cb.maybe_iso_from(c)), core.identity(ma), Comparer(ma, ma))
        yield check.report()
        check = _Check("maybe-iso-from-to", c.name)
        check.equal("from ; to", core.compose(cb.maybe_iso_from(c), cb.maybe_iso_to(c)), core.identity(plus), Comparer(plus, plus))
        yield check.report()

    ma1 = cb.maybe_all(ONE)
    check = _Check("maybe-u", "MaybeAll(1) -> 1")
    oracle = FiniteMorphism(ma1, ONE, {NOTHING: UNIT, Just(UNIT): UNIT}, {(NOTHING, UNIT): UNIT, (Just(UNIT), UNIT): UNIT})
    cmp = Comparer(ma1, ONE)
    if check.equal("MaybeU vs table", cb.maybe_u(), oracle, cmp):
        check.equal("MaybeU vs iso ; dia", cb.maybe_u(), core.compose(cb.maybe_iso_to(ONE), cb.diagonal(ONE)), cmp)
    yield check.report()


class _Spy(Morphism):
    __slots__ = ("calls",)

    def __init__(self, inner: Morphism):
        self.calls = 0

        def lens(x):
            self.calls += 1
            return inner.lens(x)

        super().__init__(lens, inner.dom, inner.cod, name=f"spy({inner.name})")


def _kleisli_short_circuit(a: Container, b: Container) -> LawReport:
    check = _Check("kleisli-short-circuit", _label(a, b))
    mb = cb.maybe_all(b)
    for m1 in enumerate_morphisms(a, mb):
        spy = _Spy(cb.maybe_unit(b))
        composite = cb.kleisli(m1, spy)
        for x in a.requests():
            if m1.forward_table[x] is not NOTHING:
                continue

            def compute(x=x, composite=composite, spy=spy):
                before = spy.calls
                y, back = composite(x)
                answer = back(UNIT)
                return (y, answer, spy.calls - before), (NOTHING, m1.backward_table[(x, UNIT)], 0)

            if not check.same(m1.name, x, compute):
                break
        if check.failed:
            break
    return check.report()


# Coproduct and diagonal


def coproduct_laws(corpus: Corpus) -> Iterator[LawReport]:
    cs = corpus.containers
    for a, b in itertools.product(cs, repeat=2):
        plus = cb.coproduct(a, b)
        check = _Check("coproduct-identity", plus.name)
        check.equal("id + id", cb.coproduct_map(core.identity(a), core.identity(b)), core.identity(plus), Comparer(plus, plus))
        yield check.report()

    # left pairs run through every composable pair; right pairs rotate through the same list
    all_pairs = [
        (a, b, c, f, g) for a, b, c in corpus.triples() for f, g in corpus.pairs_between(a, b, c)
    ]
    groups: dict[tuple, list] = {}
    n = len(all_pairs)
    for i, left in enumerate(all_pairs):
        right = all_pairs[(i * 7919 + 13) % n]
        key = (left[0], left[2], right[0], right[2])
        groups.setdefault(key, []).append((left, right))
    for (a1, c1, a2, c2), items in groups.items():
        check = _Check("coproduct-functor", f"{a1.name} + {a2.name} -> {c1.name} + {c2.name}")
        cmp = Comparer(cb.coproduct(a1, a2), cb.coproduct(c1, c2))
        for (_, _, _, f1, g1), (_, _, _, f2, g2) in items:
            lhs = cb.coproduct_map(core.compose(f1, g1), core.compose(f2, g2))
            rhs = core.compose(cb.coproduct_map(f1, f2), cb.coproduct_map(g1, g2))
            if not check.equal(f"({f1.name};{g1.name}) + ({f2.name};{g2.name})", lhs, rhs, cmp):
                break
        yield check.report()

    for c in cs + corpus.derived:
        cc = cb.coproduct(c, c)
        forward, backward = {}, {}
        for x in cc.requests():
            forward[x] = x.value
            for r in c.responses(x.value):
                backward[(x, r)] = type(x)(r)
        oracle = FiniteMorphism(cc, c, forward, backward, name="dia-table")
        check = _Check("diagonal", c.name)
        check.equal("dia vs table", cb.diagonal(c), oracle, Comparer(cc, c))
        yield check.report()


# Sequential product


def seq_laws(corpus: Corpus) -> Iterator[LawReport]:
    for c in corpus.containers:
        left, right = cb.seq(ONE, c), cb.seq(c, ONE)
        for law, there, back, big in (
            ("unitL-inverse", cb.unit_l_inv(c), cb.unit_l(c), left),
            ("unitR-inverse", cb.unit_r_inv(c), cb.unit_r(c), right),
        ):
            check = _Check(law, c.name)
            if check.equal("inj ; unit", core.compose(there, back), core.identity(c), Comparer(c, c)):
                check.equal("unit ; inj", core.compose(back, there), core.identity(big), Comparer(big, big))
            yield check.report()

        check = _Check("unitR-run", c.name)
        for h in enumerate_handlers(c):
            co = core.costate(h.__getitem__, c)
            for x in c.requests():
                st = core.state(SeqRequest(x, lambda _: UNIT), right)
                if not check.same(repr(h), x, lambda st=st, co=co, h=h, x=x: (core.run(st, co, cb.unit_r(c)), (h[x], UNIT))):
                    break
            if check.failed:
                break
        yield check.report()

        check = _Check("unitL-costate", c.name)
        cmp = Comparer(left, ONE)
        for h in enumerate_handlers(c):
            lhs = core.compose(cb.unit_l(c), core.costate(h.__getitem__, c))
            rhs = core.costate(lambda req, h=h: (UNIT, h[req.cont(UNIT)]), left)
            if not check.equal(repr(h), lhs, rhs, cmp):
                break
        yield check.report()


# Kleene star


def star_laws(corpus: Corpus) -> Iterator[LawReport]:
    depth = corpus.star_depth
    shapes = {c: list(cb.shape_requests(c, depth)) for c in corpus.containers}
    for c in corpus.containers:
        s = cb.star(c, depth)
        mapped, ident = cb.star_map(core.identity(c)), core.identity(s)
        for law, parts in (("mapShp-identity", "forward"), ("mapPos-identity", "backward")):
            check = _Check(law, f"{c.name}* depth {depth}")
            check.equal("map id", mapped, ident, Comparer(s, s, parts, shapes[c]))
            yield check.report()

    for (a, b, c), items in corpus.covering_pairs().items():
        sa, sc = cb.star(a, depth), cb.star(c, depth)
        for law, parts in (("mapShp-composition", "forward"), ("mapPos-composition", "backward")):
            check = _Check(law, f"{_label(a, b, c)} depth {depth}")
            cmp = Comparer(sa, sc, parts, shapes[a])
            for f, g in items:
                lhs = cb.star_map(core.compose(f, g))
                rhs = core.compose(cb.star_map(f), cb.star_map(g))
                if not check.equal(f"{f.name} ; {g.name}", lhs, rhs, cmp):
                    break
            yield check.report()

    for a, b in itertools.product(corpus.containers, repeat=2):
        check = _Check("single-natural", _label(a, b))
        sb = cb.star(b, depth)
        for m in corpus.morphisms[a, b]:
            for x in a.requests():
                mapped = cb.star_map(m).forward(cb.single(x))
                expected = cb.single(m.forward_table[x])
                if not check.holds(m.name, x, lambda: sb.same_request(mapped, expected), "single(m x)"):
                    break
            if check.failed:
                break
        yield check.report()


# Effects


def effect_laws(corpus: Corpus) -> Iterator[LawReport]:
    cs = corpus.containers
    for f in corpus.effects:
        for c in cs:
            lc, llc = fx.lift(f, c), fx.lift(f, fx.lift(f, c))
            cmp = Comparer(lc, lc)
            check = _Check("lift-identity", f"{f.name} {c.name}")
            check.equal("map id", fx.lift_map(f, core.identity(c)), core.identity(lc), cmp)
            yield check.report()
            if not f.monadic:
                continue
            delta = fx.comult(f, c)
            for law, lhs, rhs, dom, cod in (
                ("counit-left", core.compose(delta, fx.counit(f, lc)), core.identity(lc), lc, lc),
                ("counit-right", core.compose(delta, fx.lift_map(f, fx.counit(f, c))), core.identity(lc), lc, lc),
                (
                    "coassociativity",
                    core.compose(delta, fx.comult(f, lc)),
                    core.compose(delta, fx.lift_map(f, delta)),
                    lc,
                    fx.lift(f, llc),
                ),
            ):
                check = _Check(law, f"{f.name} {c.name}")
                check.equal(law, lhs, rhs, Comparer(dom, cod))
                yield check.report()

            ma, mla = cb.maybe_all(lc), fx.lift(f, cb.maybe_all(c))
            check = _Check("distrib-maybe-section", f"{f.name} {c.name}")
            check.equal("inv ; distrib", core.compose(fx.distrib_maybe_inv(f, c), fx.distrib_maybe(f, c)), core.identity(ma), Comparer(ma, ma))
            yield check.report()
            check = _Check("distrib-maybe-retraction", f"{f.name} {c.name}")
            # on NOTHING the lifted side holds more than the single pure answer unless f is trivial
            requests = [x for x in mla.requests() if x is not NOTHING or f is fx.IDENTITY]
            check.equal("distrib ; inv", core.compose(fx.distrib_maybe(f, c), fx.distrib_maybe_inv(f, c)), core.identity(mla), Comparer(mla, mla, requests=requests))
            yield check.report()

        for a, b, c in corpus.triples():
            check = _Check("lift-composition", f"{f.name} {_label(a, b, c)}")
            cmp = Comparer(fx.lift(f, a), fx.lift(f, c))
            for g, h in corpus.pairs_between(a, b, c):
                lhs = fx.lift_map(f, core.compose(g, h))
                rhs = core.compose(fx.lift_map(f, g), fx.lift_map(f, h))
                if not check.equal(f"{g.name} ; {h.name}", lhs, rhs, cmp):
                    break
            yield check.report()

        for a, b in itertools.product(cs, repeat=2):
            lifted, split = fx.lift(f, cb.coproduct(a, b)), cb.coproduct(fx.lift(f, a), fx.lift(f, b))
            d, inv = fx.distrib_plus(f, a, b), fx.distrib_plus_inv(f, a, b)
            check = _Check("distrib-plus-roundtrip", f"{f.name} {a.name} + {b.name}")
            if check.equal("distrib ; inv", core.compose(d, inv), core.identity(lifted), Comparer(lifted, lifted)):
                check.equal("inv ; distrib", core.compose(inv, d), core.identity(split), Comparer(split, split))
            yield check.report()

    for a, b in itertools.product(cs, repeat=2):
        yield _seq_m_writer_order(a, b)
        yield _seq_m_maybe_short_circuit(a, b)
        yield _seq_m_identity(a, b)


def _seq_m_writer_order(a: Container, b: Container) -> LawReport:
    w = fx.WRITER
    check = _Check("seqM-order", f"Writer {a.name} >> {b.name}")
    ha, hb = enumerate_handlers(a)[-1], enumerate_handlers(b)[-1]
    co1 = core.costate(lambda x: ((("first", x),), ha[x]), fx.lift(w, a))
    co2 = core.costate(lambda y: ((("second", y),), hb[y]), fx.lift(w, b))
    combined = fx.seq_m(w, co1, co2)
    for req in cb.seq(a, b).requests():

        def compute(req=req):
            z = ha[req.first]
            y = req.cont(z)
            expected = ((("first", req.first), ("second", y)), (z, hb[y]))
            return core.execute(combined, req), expected

        if not check.same(repr(req), req, compute):
            break
    return check.report()


def _seq_m_maybe_short_circuit(a: Container, b: Container) -> LawReport:
    m = fx.MAYBE
    check = _Check("seqM-short-circuit", f"Maybe {a.name} >> {b.name}")
    requests = list(a.requests())
    failing = requests[-1]
    ha, hb = enumerate_handlers(a)[0], enumerate_handlers(b)[0]
    calls = []
    co1 = core.costate(lambda x: NOTHING if x == failing else Just(ha[x]), fx.lift(m, a))
    co2 = core.costate(lambda y: calls.append(y) or Just(hb[y]), fx.lift(m, b))
    combined = fx.seq_m(m, co1, co2)
    for req in cb.seq(a, b).requests():

        def compute(req=req):
            del calls[:]
            got = core.execute(combined, req)
            if req.first == failing:
                return (got, len(calls)), (NOTHING, 0)
            z = ha[req.first]
            return (got, len(calls)), (Just((z, hb[req.cont(z)])), 1)

        if not check.same(repr(req), req, compute):
            break
    return check.report()


def _seq_m_identity(a: Container, b: Container) -> LawReport:
    i = fx.IDENTITY
    check = _Check("seqM-identity", f"Identity {a.name} >> {b.name}")
    for ha in enumerate_handlers(a):
        for hb in enumerate_handlers(b):
            combined = fx.seq_m(i, core.costate(ha.__getitem__, fx.lift(i, a)), core.costate(hb.__getitem__, fx.lift(i, b)))
            for req in cb.seq(a, b).requests():

                def compute(req=req, ha=ha, hb=hb, combined=combined):
                    z = ha[req.first]
                    return core.execute(combined, req), (z, hb[req.cont(z)])

                if not check.same(f"{ha!r} {hb!r}", req, compute):
                    break
            if check.failed:
                break
        if check.failed:
            break
    return check.report()


# Well-typedness of every combinator's backward answers


def typing_laws(corpus: Corpus) -> Iterator[LawReport]:
    cs = corpus.containers

    def instances():
        for a, b in itertools.product(cs, repeat=2):
            for m in corpus.morphisms[a, b]:
                yield "maybe_map", cb.maybe_map(m), cb.maybe_all(a), cb.maybe_all(b)
                yield "star_map", cb.star_map(m), cb.star(a, 2), cb.star(b, 2)
                for f in corpus.effects:
                    yield "lift_map", fx.lift_map(f, m), fx.lift(f, a), fx.lift(f, b)
            ms, ns = corpus.morphisms[a, a], corpus.morphisms[b, b]
            for i, m in enumerate(ms):
                n = ns[(i * 31) % len(ns)]
                yield "coproduct_map", cb.coproduct_map(m, n), cb.coproduct(a, b), cb.coproduct(a, b)
            for f in corpus.effects:
                yield "distrib_plus", fx.distrib_plus(f, a, b), fx.lift(f, cb.coproduct(a, b)), cb.coproduct(fx.lift(f, a), fx.lift(f, b))
        for c in cs + corpus.derived:
            yield "diagonal", cb.diagonal(c), cb.coproduct(c, c), c
            yield "maybe_unit", cb.maybe_unit(c), c, cb.maybe_all(c)
            yield "maybe_join", cb.maybe_join(c), cb.maybe_all(cb.maybe_all(c)), cb.maybe_all(c)
            yield "maybe_iso_to", cb.maybe_iso_to(c), cb.maybe_all(c), cb.coproduct(ONE, c)
            yield "maybe_iso_from", cb.maybe_iso_from(c), cb.coproduct(ONE, c), cb.maybe_all(c)
            yield "unit_l", cb.unit_l(c), cb.seq(ONE, c), c
            yield "unit_r", cb.unit_r(c), cb.seq(c, ONE), c
            for f in corpus.effects:
                if f.monadic:
                    yield "counit", fx.counit(f, c), fx.lift(f, c), c
                    yield "comult", fx.comult(f, c), fx.lift(f, c), fx.lift(f, fx.lift(f, c))
                yield "distrib_maybe", fx.distrib_maybe(f, c), fx.lift(f, cb.maybe_all(c)), cb.maybe_all(fx.lift(f, c))
        yield "maybe_u", cb.maybe_u(), cb.maybe_all(ONE), ONE

    checks: dict[str, _Check] = {}
    for name, m, dom, cod in instances():
        check = checks.setdefault(name, _Check("well-typed", name))
        if not check.failed:
            check.typed(m.name or name, m, dom, cod)
    for check in checks.values():
        yield check.report()


SUITES: dict[str, Callable[[Corpus], Iterable[LawReport]]] = {
    "state": state_laws,
    "category": category_laws,
    "maybe": maybe_laws,
    "coproduct": coproduct_laws,
    "seq": seq_laws,
    "star": star_laws,
    "effects": effect_laws,
    "typing": typing_laws,
}


def run_suite(name: str, corpus: Optional[Corpus] = None) -> list[LawReport]:
    return list(SUITES[name](corpus or Corpus()))


def check_all_laws(
    corpus: Optional[Sequence[Container]] = None,
    star_depth: int = 3,
    suites: Optional[Iterable[str]] = None,
    fail_fast: bool = False,
    **options: Any,
) -> list[LawReport]:
    """Run the law suites over ``corpus`` and return one report per (law, instance).

    With ``fail_fast`` the run stops after the first failing report.
    """
    ctx = corpus if isinstance(corpus, Corpus) else Corpus(corpus, star_depth=star_depth, **options)
    reports = []
    for name in suites or SUITES:
        for report in SUITES[name](ctx):
            reports.append(report)
            if fail_fast and not report.passed:
                return reports
    return reports

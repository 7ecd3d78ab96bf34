import pytest
from hypothesis import given
from hypothesis import strategies as st

from apilens.combinators import NOTHING, Inl, Inr, Just, SeqRequest, seq
from apilens.core import ONE, UNIT, costate, execute
from apilens.effects import (
    IDENTITY,
    IO,
    IO_EFFECT,
    IO_EITHER,
    MAYBE,
    WRITER,
    Effect,
    comult,
    counit,
    distrib_maybe,
    distrib_maybe_inv,
    distrib_plus,
    distrib_plus_inv,
    lift,
    lift_map,
    seq_m,
    tell,
    writer,
)
from apilens.lawcheck import C2, C3, enumerate_morphisms, find_ill_typed

maybes = st.one_of(st.just(NOTHING), st.integers().map(Just))
writers = st.tuples(st.lists(st.sampled_from("abc")).map(tuple), st.integers())


def _kf(x):
    return Just(x + 1) if x % 3 else NOTHING


def _wf(x):
    return (("f",), x * 2)


@given(maybes)
def test_maybe_functor_identity(v):
    assert MAYBE.fmap(lambda x: x, v) == v


@given(st.integers())
def test_maybe_left_identity(x):
    assert MAYBE.bind(MAYBE.pure(x), _kf) == _kf(x)


@given(maybes)
def test_maybe_right_identity(v):
    assert MAYBE.bind(v, MAYBE.pure) == v


@given(maybes)
def test_maybe_associativity(v):
    assert MAYBE.bind(MAYBE.bind(v, _kf), _kf) == MAYBE.bind(v, lambda x: MAYBE.bind(_kf(x), _kf))


@given(writers)
def test_writer_monad_laws(v):
    assert WRITER.bind(v, WRITER.pure) == v
    assert WRITER.bind(WRITER.pure(3), _wf) == _wf(3)
    lhs = WRITER.bind(WRITER.bind(v, _wf), _wf)
    rhs = WRITER.bind(v, lambda x: WRITER.bind(_wf(x), _wf))
    assert lhs == rhs


def test_writer_logs_in_order():
    v = WRITER.bind(tell("a", 1), lambda x: tell("b", x + 1))
    assert v == (("a", "b"), 2)


def test_writer_values_sample():
    w = writer(logs=((), ("z",)))
    assert list(w.values([1, 2])) == [((), 1), ((), 2), (("z",), 1), (("z",), 2)]


def test_io_is_deferred():
    seen = []
    action = IO_EFFECT.fmap(lambda x: x + 1, IO(lambda: seen.append("ran") or 1))
    assert seen == []
    assert action.run() == 2
    assert seen == ["ran"]


def test_io_either_short_circuits():
    seen = []
    failing = IO(lambda: Inl("boom"))
    result = IO_EITHER.bind(failing, lambda x: IO(lambda: seen.append(x) or Inr(x)))
    assert result.run() == Inl("boom")
    assert seen == []
    assert IO_EITHER.bind(IO_EITHER.pure(4), lambda x: IO_EITHER.pure(x * 2)).run() == Inr(8)


def test_lifted_responses():
    assert list(lift(MAYBE, C2).responses("q0")) == [NOTHING, Just("r0")]
    assert list(lift(IDENTITY, C2).responses("q1")) == ["r0", "r1"]
    assert lift(WRITER, C2).has_response("q1", (("a", "a", "b"), "r1"))
    assert not lift(WRITER, C2).has_response("q1", ((), "r9"))


def test_lift_without_values_is_open():
    assert lift(IO_EFFECT, C2).has_response("q0", IO(lambda: "r0"))


def test_lift_map_keeps_requests():
    m = enumerate_morphisms(C2, C3)[7]
    lm = lift_map(MAYBE, m)
    y, back = lm("q1")
    assert y == m.forward("q1")
    assert back(NOTHING) is NOTHING
    assert back(Just("s1")) == Just(m.backward("q1")("s1"))


def test_counit_and_comult_answers():
    assert counit(WRITER, C2).backward("q0")("r0") == ((), "r0")
    assert comult(WRITER, C2).backward("q0")((("a",), (("b",), "r0"))) == (("a", "b"), "r0")


def test_non_monadic_effect_has_no_comonad():
    bare = Effect("Bare", fmap=lambda fn, v: fn(v))
    with pytest.raises(TypeError):
        counit(bare, C2)
    with pytest.raises(TypeError):
        comult(bare, C2)
    with pytest.raises(TypeError):
        distrib_maybe(bare, C2)


def test_distrib_plus_moves_the_tag():
    d = distrib_plus(MAYBE, C2, C3)
    assert d.backward(Inr("p0"))(Inr(Just("s1"))) == Just(Inr("s1"))
    assert d.backward(Inr("p0"))(Inr(NOTHING)) is NOTHING
    inv = distrib_plus_inv(MAYBE, C2, C3)
    assert inv.backward(Inl("q1"))(Just(Inl("r1"))) == Inl(Just("r1"))


def test_distrib_maybe_wraps_unit_with_pure():
    d = distrib_maybe(WRITER, C2)
    assert d.backward(NOTHING)(UNIT) == ((), UNIT)
    assert d.backward(Just("q1"))((("a",), "r1")) == (("a",), "r1")
    assert distrib_maybe_inv(WRITER, C2).backward(NOTHING)(((), UNIT)) == UNIT


@pytest.mark.parametrize("f", [IDENTITY, MAYBE, WRITER])
def test_structure_maps_are_well_typed(f):
    assert find_ill_typed(counit(f, C3)) is None
    assert find_ill_typed(comult(f, C3)) is None
    assert find_ill_typed(distrib_plus(f, C2, C3)) is None
    assert find_ill_typed(distrib_maybe(f, C2)) is None


def test_seq_m_writer_order():
    co1 = costate(lambda x: (("first",), "r1"), lift(WRITER, C2))
    co2 = costate(lambda y: (("second",), "s0"), lift(WRITER, C3))
    req = SeqRequest("q1", lambda z: {"r0": "p0", "r1": "p1"}[z])
    assert execute(seq_m(WRITER, co1, co2), req) == (("first", "second"), ("r1", "s0"))


def test_seq_m_continuation_sees_first_answer():
    seen = []
    co1 = costate(lambda x: "r1", lift(IDENTITY, C2))
    co2 = costate(lambda y: seen.append(y) or "s0", lift(IDENTITY, C3))
    execute(seq_m(IDENTITY, co1, co2), SeqRequest("q1", lambda z: "p1" if z == "r1" else "p0"))
    assert seen == ["p1"]


def test_seq_m_maybe_skips_second_server():
    seen = []
    co1 = costate(lambda x: NOTHING, lift(MAYBE, C2))
    co2 = costate(lambda y: seen.append(y) or Just("s0"), lift(MAYBE, C3))
    assert execute(seq_m(MAYBE, co1, co2), SeqRequest("q0", lambda z: "p0")) is NOTHING
    assert seen == []


def test_seq_m_domain():
    co = seq_m(MAYBE, costate(lambda x: NOTHING, lift(MAYBE, C2)), costate(lambda y: NOTHING, lift(MAYBE, ONE)))
    assert co.dom == lift(MAYBE, seq(C2, ONE))

import pytest

from apilens.core import ONE, Morphism, compose, identity
from apilens.lawcheck import (
    C2,
    C3,
    Comparer,
    Counterexample,
    FiniteContainer,
    SizeError,
    disagrees_at,
    enumerate_handlers,
    enumerate_morphisms,
    find_disagreement,
    find_ill_typed,
    morphism_equal,
    tabulate,
)

from oracles import TABLES, morphism_count

CONTAINERS = {"1": ONE, "C2": C2, "C3": C3}

# frozen from the counting oracle in oracles.morphism_count
EXPECTED_COUNTS = {
    ("1", "1"): 1,
    ("1", "C2"): 2,
    ("1", "C3"): 2,
    ("C2", "1"): 2,
    ("C2", "C2"): 12,
    ("C2", "C3"): 16,
    ("C3", "1"): 4,
    ("C3", "C2"): 36,
    ("C3", "C3"): 64,
}


@pytest.mark.parametrize("pair", sorted(EXPECTED_COUNTS))
def test_enumeration_counts(pair):
    a, b = pair
    assert morphism_count(TABLES[a], TABLES[b]) == EXPECTED_COUNTS[pair]
    assert len(enumerate_morphisms(CONTAINERS[a], CONTAINERS[b])) == EXPECTED_COUNTS[pair]


def test_enumeration_is_stable():
    first = enumerate_morphisms(C3, C2)
    second = enumerate_morphisms(C3, C2)
    assert [m.name for m in first] == [m.name for m in second]
    assert [m.backward_table for m in first] == [m.backward_table for m in second]


def test_enumerated_morphisms_are_distinct_and_well_typed():
    ms = enumerate_morphisms(C2, C3)
    assert all(find_ill_typed(m) is None for m in ms)
    for i, m in enumerate(ms):
        for n in ms[i + 1:]:
            assert not morphism_equal(m, n)


def test_size_cap():
    big = FiniteContainer.of("Big", {k: ["a"] for k in range(4)})
    with pytest.raises(SizeError):
        enumerate_morphisms(big, ONE)
    assert len(enumerate_morphisms(big, ONE, max_requests=4)) == 1


def test_finite_container_validation():
    with pytest.raises(ValueError):
        FiniteContainer.of("Empty", {"q": []})
    with pytest.raises(ValueError):
        FiniteContainer("Dup", table=(("q", ("a",)), ("q", ("b",))))


def test_handlers():
    assert enumerate_handlers(C2) == [{"q0": "r0", "q1": "r0"}, {"q0": "r0", "q1": "r1"}]
    assert len(enumerate_handlers(C3)) == 4


def test_tabulate_roundtrip():
    m = compose(enumerate_morphisms(C2, C3)[5], enumerate_morphisms(C3, C2)[9])
    t = tabulate(m, C2, C2)
    assert morphism_equal(t, m)
    assert "q0" in t.describe()


def test_forward_disagreement():
    ms = enumerate_morphisms(ONE, C2)
    cx = find_disagreement(ms[0], ms[1])
    assert cx.part == "forward"
    assert disagrees_at(ms[0], ms[1], cx)


def test_backward_disagreement():
    ms = enumerate_morphisms(C3, ONE)
    cx = find_disagreement(ms[0], ms[1])
    assert cx.part == "backward"
    assert cx.left != cx.right
    assert disagrees_at(ms[0], ms[1], cx)
    assert not disagrees_at(ms[0], ms[0], cx)


def test_error_counts_as_disagreement():
    broken = Morphism(lambda x: (x, lambda r: 1 / 0), C2, C2)
    cx = find_disagreement(broken, identity(C2))
    assert cx.part == "error" and "ZeroDivisionError" in cx.left
    assert disagrees_at(broken, identity(C2), cx)


def test_comparer_parts():
    swap_back = Morphism(lambda x: (x, lambda r: "r0"), C2, C2)
    assert Comparer(C2, C2, parts="forward")(swap_back, identity(C2)) is None
    assert Comparer(C2, C2, parts="backward")(swap_back, identity(C2)) is not None


def test_ill_typed_answer_is_found():
    bad = Morphism(lambda x: ("p0", lambda r: "nope"), C2, C3)
    cx = find_ill_typed(bad)
    assert cx.part == "backward" and cx.left == "nope"


def test_counterexample_rendering():
    cx = Counterexample("backward", "q1", "r1", "r0", "r1", case="f ; g")
    assert cx.to_dict()["request"] == "'q1'"
    assert str(cx) == "f ; g: backward at 'q1' answering 'r1': 'r0' != 'r1'"


def test_identity_differs_from_forward_swap():
    swap = Morphism.of(lambda x: {"p0": "p1", "p1": "p0"}[x], lambda x, r: r, C3, C3)
    cx = find_disagreement(identity(C3), swap)
    assert cx.part == "forward"
    assert (cx.request, cx.left, cx.right) == ("p0", "p0", "p1")
    assert not morphism_equal(identity(C3), swap)


def test_unit_to_c3_count_by_brute_force():
    from oracles import C3_T, ONE_T, brute_morphisms

    # one forward choice per target request, and only one backward answer exists
    assert len(brute_morphisms(ONE_T, C3_T)) == 2

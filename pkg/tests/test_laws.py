import json

import pytest

from apilens.combinators import coproduct
from apilens.core import ONE
from apilens.lawcheck import C2, C3, Corpus, check_all_laws, default_corpus, run_suite, to_json, to_text
from apilens.lawcheck.laws import LawReport, compose_tables

from oracles import compose_tables as oracle_compose


@pytest.fixture(scope="module")
def corpus():
    return Corpus()


def test_default_corpus():
    assert default_corpus() == [ONE, C2, C3]
    assert Corpus().derived == [coproduct(C2, C3)]


def test_corpus_size(corpus):
    # 139 morphisms between the three containers (see test_finite)
    assert sum(len(ms) for ms in corpus.morphisms.values()) == 139


@pytest.mark.parametrize("suite", ["state", "maybe", "coproduct", "seq", "effects", "typing"])
def test_fast_suites_hold(corpus, suite):
    reports = run_suite(suite, corpus)
    assert reports
    bad = [r.line() for r in reports if not r.passed]
    assert not bad, bad


def test_only_unit_corpus_passes():
    reports = check_all_laws([ONE], star_depth=3)
    assert reports and all(r.passed for r in reports)


def test_runs_are_deterministic():
    first = check_all_laws([ONE, C2], star_depth=2)
    second = check_all_laws([ONE, C2], star_depth=2)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]


def test_covering_pairs_use_every_morphism(corpus):
    firsts, seconds = set(), set()
    for items in corpus.covering_pairs().values():
        for f, g in items:
            assert f.cod == g.dom
            firsts.add(id(f))
            seconds.add(id(g))
    every = {id(m) for ms in corpus.morphisms.values() for m in ms}
    assert firsts == every
    assert seconds == every


def test_compose_tables_agrees_with_oracle(corpus):
    for f in corpus.morphisms[C2, C3]:
        for g in corpus.morphisms[C3, C2][:6]:
            t = compose_tables(f, g)
            fwd, bwd = oracle_compose((f.forward_table, f.backward_table), (g.forward_table, g.backward_table))
            assert t.forward_table == fwd
            assert t.backward_table == bwd


def test_fail_fast_stops_at_first_failure():
    reports = check_all_laws([ONE], suites=["seq"], fail_fast=True)
    assert all(r.passed for r in reports)


def test_report_rendering():
    ok = LawReport("identity-left", "C2 -> C3", True, 16)
    assert ok.line() == "PASS identity-left [C2 -> C3] (16 checked)"
    text = to_text([ok])
    assert text.endswith("1/1 laws hold (16 cases)\n")
    doc = json.loads(to_json([ok], depth=3))
    assert doc["summary"] == {"reports": 1, "failed": 0, "checked": 16}
    assert doc["reports"][0]["status"] == "pass"
    assert doc["meta"] == {"depth": 3}


def test_failure_report_carries_replay():
    from apilens.lawcheck import MUTATIONS, mutated

    with mutated(MUTATIONS[2]):
        reports = run_suite("maybe", Corpus([ONE, C2]))
    bad = [r for r in reports if not r.passed]
    assert bad
    assert all(r.counterexample is not None for r in bad)
    with mutated(MUTATIONS[2]):
        assert all(r.replay() for r in bad)

import pytest

import apilens
from apilens import combinators, core, effects
from apilens.core import ONE
from apilens.lawcheck import C2, MUTATIONS, Corpus, mutated, run_suite

# the suite that is expected to notice each mutant first, on a small corpus
CATCHING_SUITE = {
    "compose-backward-order": "category",
    "diagonal-left-only": "coproduct",
    "join-swap": "maybe",
    "mapshape-truncated": "star",
    "seqm-reordered": "effects",
}


def test_five_documented_mutations():
    assert [m.name for m in MUTATIONS] == list(CATCHING_SUITE)


@pytest.mark.parametrize("mutation", MUTATIONS, ids=lambda m: m.name)
def test_mutant_is_caught_with_replayable_counterexample(mutation):
    corpus = Corpus([ONE, C2], star_depth=2)
    with mutated(mutation):
        reports = run_suite(CATCHING_SUITE[mutation.name], corpus)
        bad = [r for r in reports if not r.passed]
        assert bad
        assert all(r.replay() for r in bad)


@pytest.mark.parametrize("mutation", MUTATIONS, ids=lambda m: m.name)
def test_mutation_is_undone(mutation):
    before = getattr(mutation.module, mutation.attribute)
    with mutated(mutation):
        assert getattr(mutation.module, mutation.attribute) is mutation.replacement
    assert getattr(mutation.module, mutation.attribute) is before


def test_reexports_are_patched_too():
    with mutated(MUTATIONS[0]):
        assert apilens.compose is MUTATIONS[0].replacement
        assert combinators.compose is MUTATIONS[0].replacement
    assert apilens.compose is core.compose
    assert effects.seq_m is apilens.seq_m


def test_replays_fail_once_mutation_is_removed():
    corpus = Corpus([ONE, C2], star_depth=2)
    with mutated(MUTATIONS[3]):
        bad = [r for r in run_suite("star", corpus) if not r.passed]
    # positions recorded under the mutant may not fit the real shape, so
    # only forward counterexamples are expected to heal
    forward = [r for r in bad if r.counterexample.part == "forward"]
    assert forward
    assert not any(r.replay() for r in forward)

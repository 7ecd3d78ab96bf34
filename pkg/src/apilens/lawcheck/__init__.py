"""Exhaustive checking of the algebraic laws on a finite corpus."""

from .finite import (
    Comparer,
    Counterexample,
    FiniteContainer,
    FiniteMorphism,
    SizeError,
    disagrees_at,
    enumerate_handlers,
    enumerate_morphisms,
    find_disagreement,
    find_ill_typed,
    morphism_equal,
    tabulate,
)
from .laws import C2, C3, SUITES, Corpus, LawReport, check_all_laws, default_corpus, run_suite
from .mutations import MUTATIONS, Mutation, mutated
from .report import to_json, to_text, write_report

__all__ = [
    "Comparer",
    "Counterexample",
    "FiniteContainer",
    "FiniteMorphism",
    "SizeError",
    "disagrees_at",
    "enumerate_handlers",
    "enumerate_morphisms",
    "find_disagreement",
    "find_ill_typed",
    "morphism_equal",
    "tabulate",
    "C2",
    "C3",
    "SUITES",
    "Corpus",
    "LawReport",
    "check_all_laws",
    "default_corpus",
    "run_suite",
    "MUTATIONS",
    "Mutation",
    "mutated",
    "to_json",
    "to_text",
    "write_report",
]

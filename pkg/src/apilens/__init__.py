"""Container morphisms for API design.

The core types live in :mod:`apilens.core`, the structural combinators in
:mod:`apilens.combinators` and effects in :mod:`apilens.effects`.
"""

from .combinators import (
    DONE,
    NOTHING,
    Inl,
    Inr,
    Just,
    More,
    SeqRequest,
    choice,
    coproduct,
    coproduct_map,
    diagonal,
    kleisli,
    maybe_all,
    maybe_iso_from,
    maybe_iso_to,
    maybe_join,
    maybe_map,
    maybe_u,
    maybe_unit,
    seq,
    single,
    star,
    star_map,
    unit_l,
    unit_r,
)
from .core import (
    ONE,
    UNIT,
    Container,
    Context,
    Morphism,
    ProtocolError,
    compose,
    costate,
    execute,
    identity,
    run,
    state,
    value,
)
from .effects import IDENTITY, IO, IO_EITHER, MAYBE, WRITER, Effect, lift, lift_map, seq_m

__version__ = "0.1.0"

__all__ = [
    "DONE",
    "NOTHING",
    "Inl",
    "Inr",
    "Just",
    "More",
    "SeqRequest",
    "choice",
    "coproduct",
    "coproduct_map",
    "diagonal",
    "kleisli",
    "maybe_all",
    "maybe_iso_from",
    "maybe_iso_to",
    "maybe_join",
    "maybe_map",
    "maybe_u",
    "maybe_unit",
    "seq",
    "single",
    "star",
    "star_map",
    "unit_l",
    "unit_r",
    "ONE",
    "UNIT",
    "Container",
    "Context",
    "Morphism",
    "ProtocolError",
    "compose",
    "costate",
    "execute",
    "identity",
    "run",
    "state",
    "value",
    "IDENTITY",
    "IO",
    "IO_EITHER",
    "MAYBE",
    "WRITER",
    "Effect",
    "lift",
    "lift_map",
    "seq_m",
]

"""Workbench for finite BCK-algebras."""

from ._backend import BACKEND
from .constructions import chain_algebra, commutative_chain, lemma2_algebra, top_extension
from .core import (
    AxiomViolation,
    BckAlgebra,
    CayleyTable,
    ClosureError,
    ElementError,
    NotBCKError,
    TableShapeError,
    canonical_form,
    check_axioms,
    hasse_covers,
    is_isomorphic,
    is_linear,
    leq,
    maximal_elements,
    restrict,
    validate,
)
from .search import SearchConfig, SearchOutcome, census, enumerate_algebras, find_nonprolongable
from .sequences import (
    commutativity_index,
    find_identity_violation,
    in_variety,
    pair_sequences,
    prolongation_depth,
    satisfies_identity,
    single_sequence,
)
from .textio import format_table, parse_table, parse_tables

__version__ = "0.1.0"

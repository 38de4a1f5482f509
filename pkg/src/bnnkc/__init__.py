"""Toolkit for the Boolean nearest-neighbor representation language.

A function is a pair of disjoint prototype sets over the Boolean hypercube;
a vector's value is the class of its strictly nearest prototype under Hamming
distance.  The package provides the core types and geometry, the standard
query suite, semantic conditioning and forgetting, compilers to and from
model lists and decision diagrams, component-based lower bounds with an exact
minimizer, witness-family and hardness-reduction generators, text formats and
a command-line interface, all backed by brute-force oracles at desk scale.
"""

from .analysis import ComponentReport, MinBnn, bnn_lower_bound, components, min_bnn
from .compilers import (
    Bdd,
    BddNode,
    T0,
    T1,
    Terminal,
    bdd_eval,
    bdd_node_count,
    bnn_to_bdd,
    comparison_gadget,
    mods_to_bnn,
)
from .core import (
    BnnRep,
    BoolVec,
    EXH_MAX,
    FunctionTable,
    N_MAX,
    evaluate,
    hamming,
    negate,
    neighborhood,
    to_truth_table,
    validate_semantic,
    weight,
)
from .errors import (
    BnnError,
    DegenerateDimension,
    DimensionMismatch,
    DimensionTooLarge,
    InvariantViolation,
    ParseError,
    TieError,
    VertexCountTooLarge,
)
from .families import (
    Cnf3,
    Graph,
    HsisPair,
    count_half_is,
    gen_exact_half,
    gen_hsis_from_3sat,
    gen_hsis_pair,
    gen_majority,
    gen_parity,
    gen_threshold,
    gen_xor_match,
    xor_match_cnf,
)
from .formats import Document, detect_kind, parse, serialize
from .queries import (
    Clause,
    QueryStats,
    Term,
    ce,
    co,
    ct_enumerate,
    eq,
    im,
    me,
    project,
    se,
    va,
)
from .transforms import ReducedRep, condition, forget

__version__ = "0.1.0"

__all__ = [
    "Bdd",
    "BddNode",
    "BnnError",
    "BnnRep",
    "BoolVec",
    "Clause",
    "Cnf3",
    "ComponentReport",
    "DegenerateDimension",
    "DimensionMismatch",
    "DimensionTooLarge",
    "Document",
    "EXH_MAX",
    "FunctionTable",
    "Graph",
    "HsisPair",
    "InvariantViolation",
    "MinBnn",
    "N_MAX",
    "ParseError",
    "QueryStats",
    "ReducedRep",
    "T0",
    "T1",
    "Term",
    "Terminal",
    "TieError",
    "VertexCountTooLarge",
    "bdd_eval",
    "bdd_node_count",
    "bnn_lower_bound",
    "bnn_to_bdd",
    "ce",
    "co",
    "comparison_gadget",
    "components",
    "condition",
    "count_half_is",
    "ct_enumerate",
    "detect_kind",
    "eq",
    "evaluate",
    "forget",
    "gen_exact_half",
    "gen_hsis_from_3sat",
    "gen_hsis_pair",
    "gen_majority",
    "gen_parity",
    "gen_threshold",
    "gen_xor_match",
    "hamming",
    "im",
    "me",
    "min_bnn",
    "mods_to_bnn",
    "negate",
    "neighborhood",
    "parse",
    "project",
    "se",
    "serialize",
    "to_truth_table",
    "va",
    "validate_semantic",
    "weight",
    "xor_match_cnf",
]

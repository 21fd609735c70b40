"""Exact toolkit for pointed, central, and tolerance interval graph classes
and interval catch digraphs: realization, verification, constructive
conversions, and bounded exhaustive recognition with re-checkable
certificates."""

from .conditions import (
    CONDITION_KINDS,
    ConditionResult,
    check_condition,
    check_optimized,
    validate_labeling,
)
from .core import (
    BinaryMatrix,
    Digraph,
    Graph,
    InputError,
    augmented_adjacency,
    check_c1p_rows,
    common_neighborhood_subgraph,
    complement_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    generate_gnr,
    intersect_transpose,
    is_tournament,
    path_graph,
    reduced_graph,
    star_graph,
    structure_from_edgelist,
    structure_from_json,
    structure_to_edgelist,
    validate_ordering,
    wedge,
)
from .feasibility import FeasibilityResult, feasible_point
from .proper import (
    NotProperIntervalError,
    neighborhoods_consecutive,
    proper_interval_ordering,
    unit_positions,
)
from .rational import Rat, format_rational, parse_rational
from .recognize import (
    Certificate,
    SearchLimits,
    Verdict,
    check_mptg_matrix_pattern,
    cicd_feasible_for_ordering,
    common_neighborhood_obstruction,
    exhaustive_recognize,
    find_ordering,
    is_proper_interval,
    tournament_block_form,
    validate_block_form,
    verify_c4_p4_conditions,
)
from .reps import (
    Interval,
    PointedInterval,
    Representation,
    ToleranceInterval,
    VerifyResult,
    center_adjacent,
    center_order,
    pointed,
    realize,
    representation_from_json,
    representation_to_json,
    tied_center_pairs,
    tolerant,
    verify,
)
from .transforms import (
    LabeledGraph,
    cicd_to_labeling,
    cmptg_to_umtg,
    labeled_to_cmptg,
    optimized_to_cicd,
    pcmptg_to_50mtg,
    pcmptg_to_ucmptg,
    proper_to_ucmptg,
    rep_to_icd_digraph,
    umtg_to_cmptg,
)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact computations on the extended bicyclic semigroup with adjoined zero:
arithmetic, symbolic set algebra, neighborhood bases for three topology
families, continuity witnesses, and a brute-force verification oracle."""

from .core import (
    DomainError,
    Element,
    Pair,
    ParseError,
    Word,
    ZERO,
    bicyclic_multiply,
    corner_contains,
    difference_hom,
    format_element,
    invert,
    is_idempotent,
    is_zero,
    leq,
    multiply,
    parse_element,
    quotient_mod,
    shift_automorphism,
    to_bicyclic,
)
from .sequences import AffineSeq, SequenceError, SequencePair, make_pair
from .sets import (
    Corner,
    DiagonalSegment,
    RightHalf,
    Staircase,
    UpperHalf,
    UpSet,
    coverage_level,
    quadrant_member,
    staircase_apexes_in_halfplane,
    staircase_member,
    upset_member,
    upset_minus_staircase,
    upset_trace,
)
from .topology import (
    ComparisonVerdict,
    ContainsWitness,
    Discrete,
    InconclusiveAtWindow,
    InfiniteTailError,
    LcShift,
    MinInverse,
    MinShift,
    NbhdDescriptor,
    NotFound,
    SeparatedBy,
    TopologySpec,
    basic_nbhd,
    compare_at_zero,
    corner_tail,
    distinctness_certificate,
    nbhd_difference,
    nbhd_member,
)
from .continuity import (
    EmptySolutions,
    ShiftWitness,
    SingletonSolution,
    SolutionSet,
    UpSetSolutions,
    check_translate_inclusion,
    inversion_image,
    min_i_complement_check,
    min_i_complement_counterexample,
    minimal_solution,
    shift_witness,
    solution_contains,
    solve_left,
    solve_right,
    translate,
)
from .oracle import (
    Window,
    brute_member,
    brute_set,
    brute_solutions,
    enumerate_window,
    region_mask,
    translate_violations,
)

__version__ = "0.1.0"

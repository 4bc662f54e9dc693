"""vecdom: reduction rules, linear kernels, and exact solvers for planar
vector domination.

The library is organized around one mutable :class:`AnnotatedInstance`
(graph, demands, budget, forbidden vertices), a combinatorial planar
embedding layer, thirteen answer-preserving reduction rules driven to a
fixpoint, candidate-region machinery for the planar coloring rules, and a
pair of exact solvers whose agreement is the ground truth for everything
else.
"""

from .instance import (
    AnnotatedInstance,
    FORCE,
    InvalidInstanceError,
    KERNEL_BOUND,
    NeighborhoodView,
    ReductionEvent,
    Status,
    UnknownVertexError,
    VecdomError,
    dominates,
    force_into_solution,
    neighborhood,
    replay,
    validate,
)
from .planarity import (
    ClosedWalkRegion,
    NonPlanarError,
    NotACycleError,
    RotationSystem,
    StaleEmbeddingError,
    cycle_sides,
    embed,
    faces,
)
from .regions import (
    CandidateRegion,
    MalformedPathError,
    RegionPartition,
    TypedPath,
    classify_path,
    enumerate_boundary_paths,
    enumerate_candidate_regions,
    region_partition,
    rule6,
    rule7,
    rule8,
)
from .rules import (
    FixpointOptions,
    FixpointReport,
    KERNEL_FACTOR,
    RULE_PRIORITY,
    potential,
    rule1,
    rule2,
    rule3,
    rule4,
    rule5,
    rule9,
    rule10,
    rule11,
    rule12,
    rule13,
    run_fixpoint,
)
from .solver import (
    NodeBudgetError,
    OracleLimitError,
    SolveResult,
    solve_bb,
    solve_brute,
    verify_solution,
)
from .toolkit import (
    KernelStats,
    ParseError,
    format_stats,
    generate_planar,
    kernel_report,
    make_special_case,
    parse,
    trivial_instance,
    write,
)
from .selftest import corpus_instance, evaluate_instance, oracle_answer, run_selftest
from .cli import cli_main

__version__ = "0.1.0"

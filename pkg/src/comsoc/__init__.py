"""Exact desk-scale toolkit for computational social choice.

Modules cover the core election model, Kemeny and Dodgson solving,
voter-deletion control, four bribery flavors, structured-preference
recognition, weighted circuit satisfiability with majority gates, and
cake cutting with piecewise-polynomial densities. Every nontrivial solver
ships with an independent brute-force oracle so results are checkable at
small scale.

All public objects are immutable after construction and all operations
are pure functions, so concurrent use on distinct inputs is safe.
"""

from .bribery import (
    BriberyBudget,
    BriberyPlan,
    ShiftPriceFunction,
    SwapPriceFunction,
    apply_swap_sequence,
    min_cost_to_target,
    shift_bribery,
    swap_bribery,
    unit_or_priced_bribery,
)
from .cake import (
    Division,
    FairnessReport,
    Piece,
    PiecewisePolyDensity,
    check_fairness,
    cut_and_choose,
    cut_query,
    last_diminisher,
    measure,
    welfare,
)
from .circuits import (
    Circuit,
    CircuitMetrics,
    MabInstance,
    mab_solve,
    mab_to_majority_circuit,
    wcs_solve,
)
from .control import (
    ApprovalView,
    ControlInstance,
    RelevanceSplit,
    approval_view,
    ccdv_bruteforce,
    ccdv_fpt,
    reduce_instance,
    relevance_split,
)
from .dodgson import (
    DodgsonProgram,
    DodgsonSolution,
    build_program,
    dodgson_bruteforce,
    dodgson_decision,
    dodgson_score,
)
from .elections import (
    Election,
    MajorityMatrix,
    PreferenceOrder,
    ScoringResult,
    ScoringVector,
    condorcet_winner,
    is_winner,
    kendall_tau,
    majority_matrix,
    scoring_winners,
    sum_kendall_tau,
)
from .errors import CapacityError, ParseError
from .generators import GeneratedElection, GeneratorSpec, generate
from .kemeny import (
    KemenyResult,
    avg_pairwise_distance,
    kemeny_brute_force,
    kemeny_decision,
    kemeny_dp,
)
from .structure import (
    EuclideanEmbedding,
    all_single_peaked_axes,
    find_single_peaked_axis,
    group_separable_split,
    is_single_peaked_wrt,
    peak_count,
    single_crossing_report,
    sp_deletion_distance,
    verify_euclidean,
)

__version__ = "0.1.0"

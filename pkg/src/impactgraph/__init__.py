"""Impact-scenario analysis and influence ranking for cognitive maps.

A cognitive map is a weighted signed digraph.  This package enumerates
simple-path impact scenarios between node pairs, scores them by force and
speed, resolves the best scenario per pair through Pareto dominance and a
repetition tie-break, propagates the result to a normalized steady state,
and ranks nodes by the influence they exert.  Reference models (weakest
link, impulse process, plain summation) are included for comparison, as
are scikit-learn style estimator wrappers and a CLI.
"""

from .baselines import (
    ImpulseState,
    compare_models,
    impulse_run,
    impulse_step,
    kosko_influence,
    kosko_rank,
    kosko_values,
    summed_impact,
    summed_rank,
    summed_values,
)
from .cognitive_map import CognitiveMap, as_cognitive_map, default_labels
from .errors import (
    ConvergenceError,
    ImpactGraphError,
    LcmOverflowError,
    MapFormatError,
    NormalizationError,
    PathLimitError,
    UnknownNodeError,
)
from .estimators import InfluenceRanker, KoskoRanker, SummedImpactRanker
from .impact import (
    AmplificationParams,
    PathScore,
    accumulate_forward,
    accumulate_truncated,
    amplification,
    score_path,
)
from .influence import (
    InfluenceResult,
    RankEntry,
    analyze,
    build_matrices,
    influence_values,
    propagate,
    rank_nodes,
    rank_values,
    rate_matrix,
    steady_state,
)
from .paths import ImpactPath, enumerate_simple_paths
from .selection import (
    LCM_LIMIT,
    OptimalChoice,
    PairAssessment,
    ParetoFrontier,
    assess_pair,
    dominates,
    lcm_tiebreak,
    pareto_frontier,
    select_optimal,
)

__version__ = "0.1.0"

__all__ = [
    "AmplificationParams",
    "CognitiveMap",
    "ConvergenceError",
    "ImpactGraphError",
    "ImpactPath",
    "ImpulseState",
    "InfluenceRanker",
    "InfluenceResult",
    "KoskoRanker",
    "LCM_LIMIT",
    "LcmOverflowError",
    "MapFormatError",
    "NormalizationError",
    "OptimalChoice",
    "PairAssessment",
    "ParetoFrontier",
    "PathLimitError",
    "PathScore",
    "RankEntry",
    "SummedImpactRanker",
    "UnknownNodeError",
    "accumulate_forward",
    "accumulate_truncated",
    "amplification",
    "analyze",
    "as_cognitive_map",
    "assess_pair",
    "build_matrices",
    "compare_models",
    "default_labels",
    "dominates",
    "enumerate_simple_paths",
    "impulse_run",
    "impulse_step",
    "influence_values",
    "kosko_influence",
    "kosko_rank",
    "kosko_values",
    "lcm_tiebreak",
    "pareto_frontier",
    "propagate",
    "rank_nodes",
    "rank_values",
    "rate_matrix",
    "score_path",
    "select_optimal",
    "steady_state",
    "summed_impact",
    "summed_rank",
    "summed_values",
]

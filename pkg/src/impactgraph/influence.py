"""Whole-map influence analysis.

Resolving the optimal scenario for every ordered node pair yields two
matrices: signed forces and edge counts.  Their elementwise ratio is the
rate at which influence is delivered.  Repeatedly adding the rate matrix
to a running total and renormalizing settles into a steady state whose
entries sum to one; a node's influence is the absolute sum of its row
there, and nodes are ranked by that value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cognitive_map import CognitiveMap
from .errors import ConvergenceError, NormalizationError
from .impact import DEFAULT_PARAMS, AmplificationParams
from .paths import DEFAULT_MAX_PATHS
from .selection import select_optimal

DEFAULT_EPSILON = 1e-9
DEFAULT_MAX_STEPS = 10_000
SUM_EPSILON = 1e-12

NORMALIZATIONS = ("signed", "abs")


def _entry_sum(matrix: np.ndarray, normalization: str) -> float:
    if normalization == "signed":
        return float(matrix.sum())
    if normalization == "abs":
        return float(np.abs(matrix).sum())
    raise ValueError(
        f"normalization must be one of {NORMALIZATIONS}, got {normalization!r}"
    )


def build_matrices(
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> tuple[np.ndarray, np.ndarray]:
    """Optimal signed force and edge count for every ordered pair.

    Returns ``(impact, time)``; both hold zero where no path exists, and
    the diagonal is always zero.
    """
    n = cmap.n
    impact = np.zeros((n, n))
    time = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            choice = select_optimal(cmap, i, j, params, max_paths)
            if choice is not None:
                impact[i, j] = choice.impact
                time[i, j] = choice.time
    return impact, time


def rate_matrix(impact: np.ndarray, time: np.ndarray) -> np.ndarray:
    """Elementwise force per edge traversed; zero where no path exists."""
    impact = np.asarray(impact, dtype=float)
    time = np.asarray(time)
    delivered = impact != 0
    if np.any(delivered & (time == 0)):
        i, j = np.argwhere(delivered & (time == 0))[0]
        raise ValueError(
            f"entry ({i}, {j}) has nonzero impact but zero time"
        )
    rate = np.zeros_like(impact)
    np.divide(impact, time, out=rate, where=time != 0)
    return rate


def propagate(
    rate: np.ndarray,
    epsilon: float = DEFAULT_EPSILON,
    max_steps: int = DEFAULT_MAX_STEPS,
    normalization: str = "signed",
    sum_epsilon: float = SUM_EPSILON,
) -> np.ndarray:
    """Iterate accumulate-and-normalize from the rate matrix to a fixed point.

    Starting from the rate matrix itself, each step adds the rate matrix
    and divides by the entry sum ("signed") or the absolute entry sum
    ("abs").  Iteration stops when no entry moves by ``epsilon`` or more.

    Raises
    ------
    NormalizationError
        If any denominator along the way is within ``sum_epsilon`` of zero.
    ConvergenceError
        If ``max_steps`` steps pass without settling.
    """
    rate = np.asarray(rate, dtype=float)
    total = _entry_sum(rate, normalization)
    if abs(total) <= sum_epsilon:
        raise NormalizationError(total, sum_epsilon)
    state = rate.copy()
    residual = None
    for _ in range(max_steps):
        grown = state + rate
        denom = _entry_sum(grown, normalization)
        if abs(denom) <= sum_epsilon:
            raise NormalizationError(denom, sum_epsilon)
        grown = grown / denom
        residual = float(np.max(np.abs(grown - state)))
        state = grown
        if residual < epsilon:
            return state
    raise ConvergenceError(max_steps, residual)


def steady_state(
    rate: np.ndarray,
    normalization: str = "signed",
    sum_epsilon: float = SUM_EPSILON,
) -> np.ndarray:
    """Closed form of the fixed point: the rate matrix over its entry sum.

    The iteration in :func:`propagate` converges to exactly this matrix,
    which is why its entries always sum to one (signed mode) or to a sum
    of absolute values of one (abs mode).
    """
    rate = np.asarray(rate, dtype=float)
    total = _entry_sum(rate, normalization)
    if abs(total) <= sum_epsilon:
        raise NormalizationError(total, sum_epsilon)
    return rate / total


@dataclass(frozen=True)
class RankEntry:
    """One node's position in an influence ranking."""

    node: int
    influence: float


def rank_values(values) -> tuple[RankEntry, ...]:
    """Rank nodes by descending value; equal values fall back to node order."""
    values = [float(v) for v in values]
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    return tuple(RankEntry(node=i, influence=values[i]) for i in order)


def influence_values(steady: np.ndarray) -> np.ndarray:
    """Per-node influence: absolute sum of the node's steady-state row."""
    return np.abs(np.asarray(steady, dtype=float)).sum(axis=1)


def rank_nodes(steady: np.ndarray) -> tuple[RankEntry, ...]:
    return rank_values(influence_values(steady))


@dataclass(frozen=True)
class InfluenceResult:
    """Everything the full analysis produces for one map."""

    impact: np.ndarray
    time: np.ndarray
    rate: np.ndarray
    steady: np.ndarray
    ranking: tuple[RankEntry, ...]

    @property
    def influence(self) -> np.ndarray:
        return influence_values(self.steady)


def analyze(
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
    normalization: str = "signed",
    method: str = "closed_form",
    epsilon: float = DEFAULT_EPSILON,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> InfluenceResult:
    """Run the whole pipeline: matrices, rate, steady state, ranking.

    ``method`` picks how the steady state is computed: ``"closed_form"``
    (the default) divides once, ``"iterative"`` runs :func:`propagate`
    with the given ``epsilon`` and ``max_steps``.  A map with no influence
    at all (rate matrix identically zero) short-circuits to an all-zero
    steady state instead of failing the normalization check; there is
    nothing to normalize, and ranking such a map should still work.
    """
    if method not in ("closed_form", "iterative"):
        raise ValueError(f"method must be closed_form or iterative, got {method!r}")
    impact, time = build_matrices(cmap, params, max_paths)
    rate = rate_matrix(impact, time)
    if not rate.any():
        steady = np.zeros_like(rate)
    elif method == "iterative":
        steady = propagate(rate, epsilon, max_steps, normalization)
    else:
        steady = steady_state(rate, normalization)
    return InfluenceResult(
        impact=impact,
        time=time,
        rate=rate,
        steady=steady,
        ranking=rank_nodes(steady),
    )

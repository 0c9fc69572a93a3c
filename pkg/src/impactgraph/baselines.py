"""Reference influence models the optimal-scenario ranking is compared against.

Three alternatives: weakest-link scoring (a path is as strong as its
weakest edge, a pair as strong as its strongest path), a discrete impulse
process that spreads pulses along edges step by step, and plain summation
of every scenario's force with no selection at all.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cognitive_map import CognitiveMap
from .impact import DEFAULT_PARAMS, AmplificationParams, score_path
from .influence import RankEntry, analyze, rank_values
from .paths import DEFAULT_MAX_PATHS, enumerate_simple_paths


def kosko_influence(
    cmap: CognitiveMap,
    source: int,
    target: int,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> float:
    """Strongest-path weakest-link influence of ``source`` on ``target``.

    Edge magnitudes only; 0.0 when no path exists.
    """
    paths = enumerate_simple_paths(cmap, source, target, max_paths)
    if not paths:
        return 0.0
    return max(
        min(abs(cmap.weight(a, b)) for a, b in p.edges()) for p in paths
    )


def kosko_values(cmap: CognitiveMap, max_paths: int = DEFAULT_MAX_PATHS) -> np.ndarray:
    """Per-node total weakest-link influence over all other nodes."""
    n = cmap.n
    values = np.zeros(n)
    for i in range(n):
        values[i] = sum(
            kosko_influence(cmap, i, j, max_paths) for j in range(n) if j != i
        )
    return values


def kosko_rank(
    cmap: CognitiveMap, max_paths: int = DEFAULT_MAX_PATHS
) -> tuple[RankEntry, ...]:
    return rank_values(kosko_values(cmap, max_paths))


def summed_impact(
    cmap: CognitiveMap,
    source: int,
    target: int,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> float:
    """Sum of every scenario's signed force for the pair, no selection.

    Cancellation is the point of this baseline: opposing paths may wash
    each other out where the optimal-scenario model would pick one.
    """
    paths = enumerate_simple_paths(cmap, source, target, max_paths)
    return sum(score_path(p, cmap, params).force for p in paths)


def summed_values(
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> np.ndarray:
    """Per-node absolute sum of summed-impact values over all other nodes."""
    n = cmap.n
    values = np.zeros(n)
    for i in range(n):
        values[i] = sum(
            abs(summed_impact(cmap, i, j, params, max_paths))
            for j in range(n)
            if j != i
        )
    return values


def summed_rank(
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> tuple[RankEntry, ...]:
    return rank_values(summed_values(cmap, params, max_paths))


@dataclass(frozen=True)
class ImpulseState:
    """Node values and outstanding pulses at one step of the impulse process."""

    values: tuple[float, ...]
    pulses: tuple[float, ...]


def impulse_step(cmap: CognitiveMap, state: ImpulseState) -> ImpulseState:
    """Advance the impulse process one step.

    Node i gains ``sum_j w(i, j) * pulse(j)``: its own row of the weight
    matrix applied to the outstanding pulses.  The new pulse at a node is
    how much its value just moved.
    """
    v = np.asarray(state.values, dtype=float)
    p = np.asarray(state.pulses, dtype=float)
    if v.shape != (cmap.n,) or p.shape != (cmap.n,):
        raise ValueError(f"state vectors must have length {cmap.n}")
    grown = v + cmap.weights @ p
    return ImpulseState(
        values=tuple(float(x) for x in grown),
        pulses=tuple(float(x) for x in grown - v),
    )


def impulse_run(
    cmap: CognitiveMap,
    initial_pulses,
    steps: int,
    initial_values=None,
) -> list[ImpulseState]:
    """Trajectory of the impulse process: initial state plus ``steps`` updates."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if initial_values is None:
        initial_values = (0.0,) * cmap.n
    state = ImpulseState(
        values=tuple(float(x) for x in initial_values),
        pulses=tuple(float(x) for x in initial_pulses),
    )
    if len(state.values) != cmap.n or len(state.pulses) != cmap.n:
        raise ValueError(f"state vectors must have length {cmap.n}")
    trajectory = [state]
    for _ in range(steps):
        state = impulse_step(cmap, state)
        trajectory.append(state)
    return trajectory


def compare_models(
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
    normalization: str = "signed",
) -> dict[str, tuple[RankEntry, ...]]:
    """Rankings from the optimal-scenario model and both path baselines.

    Keys: "pareto", "kosko", "sum".
    """
    result = analyze(cmap, params, max_paths, normalization)
    return {
        "pareto": result.ranking,
        "kosko": kosko_rank(cmap, max_paths),
        "sum": summed_rank(cmap, params, max_paths),
    }

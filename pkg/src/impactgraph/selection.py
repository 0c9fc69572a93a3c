"""Choosing the optimal scenario for a node pair.

Scenario comparison is two-criteria: force (larger magnitude is better,
sign kept aside for later) and speed (fewer edges is better).  Scenarios
no other scenario beats on both counts form the Pareto frontier.  A
multi-member frontier is settled by a repetition argument: run every
member back to back over a window as long as the least common multiple of
their speeds, and keep the one delivering the most absolute force in that
window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .cognitive_map import CognitiveMap
from .errors import LcmOverflowError
from .impact import DEFAULT_PARAMS, AmplificationParams, PathScore, score_path
from .paths import DEFAULT_MAX_PATHS, enumerate_simple_paths

# windows and repetition counts stay exact below this; beyond it we refuse
# rather than hand the comparison to rounded arithmetic
LCM_LIMIT = 2**63 - 1


def dominates(first: PathScore, second: PathScore) -> bool:
    """True when ``first`` beats ``second``: at least as forceful (by
    magnitude) and at least as fast, strictly better on one count."""
    df = abs(first.force) - abs(second.force)
    ds = second.speed - first.speed
    return df >= 0 and ds >= 0 and (df > 0 or ds > 0)


@dataclass(frozen=True)
class ParetoFrontier:
    """Non-dominated scenarios for one ordered node pair, in enumeration order."""

    pair: tuple[int, int]
    members: tuple[PathScore, ...]


def pareto_frontier(scores: Sequence[PathScore]) -> ParetoFrontier:
    """Filter scored scenarios for one pair down to the non-dominated set.

    Input order is preserved; ties (equal force magnitude and speed) are
    all retained.  At least one scenario always survives.
    """
    if not scores:
        raise ValueError("need at least one scored scenario")
    pair = (scores[0].path.source, scores[0].path.target)
    for s in scores[1:]:
        if (s.path.source, s.path.target) != pair:
            raise ValueError("all scenarios must share one source/target pair")
    members = tuple(
        s for s in scores if not any(dominates(other, s) for other in scores)
    )
    return ParetoFrontier(pair=pair, members=members)


@dataclass(frozen=True)
class OptimalChoice:
    """Outcome of frontier resolution for one ordered node pair.

    ``horizon`` is the common window length, ``repetitions[k]`` how often
    member k runs inside it, and ``scores[k]`` the absolute force it
    delivers there.  ``impact`` keeps the chosen scenario's sign even
    though the comparison ignored it.
    """

    pair: tuple[int, int]
    frontier: ParetoFrontier
    horizon: int
    repetitions: tuple[int, ...]
    scores: tuple[float, ...]
    chosen: PathScore
    impact: float
    time: int


def lcm_tiebreak(frontier: ParetoFrontier, lcm_limit: int = LCM_LIMIT) -> OptimalChoice:
    """Resolve a frontier to a single scenario via the repetition window.

    The window is the least common multiple of the member speeds; each
    member repeats ``window // speed`` times and banks ``abs(force)`` per
    run.  Highest total wins; equal totals fall back to fewer edges, then
    to enumeration order.

    Raises
    ------
    LcmOverflowError
        If the window exceeds ``lcm_limit``; the comparison would need
        repetition counts too large to keep exact.
    """
    members = frontier.members
    if not members:
        raise ValueError("frontier has no members")
    speeds = [m.speed for m in members]
    horizon = math.lcm(*speeds)
    if horizon > lcm_limit:
        raise LcmOverflowError(horizon, lcm_limit)
    repetitions = tuple(horizon // s for s in speeds)
    scores = tuple(abs(m.force) * r for m, r in zip(members, repetitions))
    best = 0
    for k in range(1, len(members)):
        if scores[k] > scores[best] or (
            scores[k] == scores[best] and speeds[k] < speeds[best]
        ):
            best = k
    chosen = members[best]
    return OptimalChoice(
        pair=frontier.pair,
        frontier=frontier,
        horizon=horizon,
        repetitions=repetitions,
        scores=scores,
        chosen=chosen,
        impact=chosen.force,
        time=chosen.speed,
    )


@dataclass(frozen=True)
class PairAssessment:
    """Every scored scenario for a pair plus the resolved choice.

    ``choice`` is None when the pair admits no path at all.
    """

    pair: tuple[int, int]
    scores: tuple[PathScore, ...]
    choice: Optional[OptimalChoice]


def assess_pair(
    cmap: CognitiveMap,
    source: int,
    target: int,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> PairAssessment:
    """Enumerate, score, and resolve all scenarios from source to target."""
    paths = enumerate_simple_paths(cmap, source, target, max_paths)
    scores = tuple(score_path(p, cmap, params) for p in paths)
    if not scores:
        return PairAssessment(pair=(source, target), scores=(), choice=None)
    choice = lcm_tiebreak(pareto_frontier(scores))
    return PairAssessment(pair=(source, target), scores=scores, choice=choice)


def select_optimal(
    cmap: CognitiveMap,
    source: int,
    target: int,
    params: AmplificationParams = DEFAULT_PARAMS,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> Optional[OptimalChoice]:
    """The resolved optimal scenario for a pair, or None if unreachable."""
    return assess_pair(cmap, source, target, params, max_paths).choice

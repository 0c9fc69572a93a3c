"""Accumulative impact scoring along a single path.

Walking a path accumulates a running value: each edge contributes its
weight, scaled up or down by how much signed value has already built up
relative to the largest edge magnitude in the map.  The gain is bounded,
so a chain can at most double an edge's contribution and influence still
fades over long paths.

Two runs of the same recurrence score a path.  The full run starts at the
path's first edge; the truncated run drops that first edge.  Their final
difference isolates what the source node itself injects (the *force* of
the scenario).  The number of edges is the scenario's *speed*.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cognitive_map import CognitiveMap
from .paths import ImpactPath


@dataclass(frozen=True)
class AmplificationParams:
    """Steepness of the bounded gain curve ``1 - exp(-steepness * x)``."""

    steepness: float = 2.0

    def __post_init__(self):
        if not self.steepness > 0:
            raise ValueError(f"steepness must be positive, got {self.steepness!r}")


DEFAULT_PARAMS = AmplificationParams()


def amplification(x: float, params: AmplificationParams = DEFAULT_PARAMS) -> float:
    """Bounded gain in [0, 1) for a relative magnitude ``x >= 0``."""
    if x < 0:
        raise ValueError(f"relative magnitude must be nonnegative, got {x!r}")
    return 1.0 - math.exp(-params.steepness * x)


def _sign(value: float) -> int:
    return (value > 0.0) - (value < 0.0)


def _accumulate(nodes, cmap, scale, params):
    z = 0.0
    out = []
    for a, b in zip(nodes, nodes[1:]):
        gain = 1.0 + _sign(z) * amplification(abs(z) / scale, params)
        z = gain * cmap.weight(a, b)
        out.append(z)
    return out


@dataclass(frozen=True)
class PathScore:
    """A scored scenario.

    ``force`` is the final accumulated value minus the final value of the
    truncated run; ``speed`` is the edge count.  Larger ``abs(force)`` and
    smaller ``speed`` are both better.
    """

    path: ImpactPath
    forward_total: float
    truncated_total: float
    force: float
    speed: int


def accumulate_forward(
    path: ImpactPath,
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
) -> list[float]:
    """Accumulated value after each edge of the path, in order.

    The first entry equals the first edge's weight exactly: nothing has
    accumulated yet, so the gain factor is 1.
    """
    scale = cmap.max_abs_weight
    if scale == 0.0:
        raise ValueError("map has no edges; impact along a path is undefined")
    return _accumulate(path.nodes, cmap, scale, params)


def accumulate_truncated(
    path: ImpactPath,
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
) -> float:
    """Final accumulated value with the path's first edge removed.

    A single-edge path truncates to nothing and yields 0.0.
    """
    scale = cmap.max_abs_weight
    if scale == 0.0:
        raise ValueError("map has no edges; impact along a path is undefined")
    if path.edge_count == 1:
        return 0.0
    return _accumulate(path.nodes[1:], cmap, scale, params)[-1]


def score_path(
    path: ImpactPath,
    cmap: CognitiveMap,
    params: AmplificationParams = DEFAULT_PARAMS,
) -> PathScore:
    """Score one scenario: run both accumulations and take their difference."""
    forward = accumulate_forward(path, cmap, params)
    truncated = accumulate_truncated(path, cmap, params)
    return PathScore(
        path=path,
        forward_total=forward[-1],
        truncated_total=truncated,
        force=forward[-1] - truncated,
        speed=path.edge_count,
    )

"""Scikit-learn style estimators wrapping the ranking models.

Each estimator takes an adjacency matrix (or a :class:`CognitiveMap`) in
``fit`` and exposes the analysis as fitted attributes; ``fit_predict``
returns every node's rank position.  Parameters follow sklearn rules:
stored verbatim in ``__init__``, validated in ``fit``, so instances clone
and grid-search cleanly.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .baselines import kosko_values, summed_values
from .cognitive_map import as_cognitive_map
from .impact import AmplificationParams
from .influence import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_STEPS,
    analyze,
    rank_values,
)
from .paths import DEFAULT_MAX_PATHS


class _RankerBase(BaseEstimator):
    """Shared fit/predict plumbing; subclasses provide _fit_values."""

    def fit(self, X, y=None):
        """Analyze the map in ``X``; ``y`` is ignored (present for API compatibility)."""
        cmap = as_cognitive_map(X)
        values = self._fit_values(cmap)
        self.labels_ = cmap.labels
        self.n_nodes_ = cmap.n
        self.influence_ = np.asarray(values, dtype=float)
        self.ranking_ = rank_values(self.influence_)
        return self

    def fit_predict(self, X, y=None):
        """Fit and return each node's rank position (0 = most influential)."""
        self.fit(X, y)
        positions = np.empty(self.n_nodes_, dtype=int)
        for place, entry in enumerate(self.ranking_):
            positions[entry.node] = place
        return positions


class InfluenceRanker(_RankerBase):
    """Rank nodes by optimal-scenario influence.

    For every ordered node pair the estimator enumerates simple paths,
    scores each by force and speed, resolves the Pareto frontier, and
    assembles the chosen forces into matrices; node influence is the
    absolute row sum of the normalized steady state.

    Parameters
    ----------
    steepness : float, default=2.0
        Steepness of the amplification curve applied along paths.
    max_paths : int, default=1_000_000
        Per-pair enumeration budget; exceeding it raises rather than truncates.
    normalization : {"signed", "abs"}, default="signed"
        Steady-state denominator: plain entry sum or absolute entry sum.
    method : {"closed_form", "iterative"}, default="closed_form"
        How the steady state is computed; both agree within ``epsilon``.
    epsilon : float, default=1e-9
        Convergence threshold for the iterative method.
    max_steps : int, default=10_000
        Step budget for the iterative method.

    Attributes
    ----------
    impact_matrix_, time_matrix_, rate_matrix_, steady_state_ : ndarray
        The assembled analysis matrices.
    influence_ : ndarray of shape (n_nodes,)
        Per-node influence values, node order.
    ranking_ : tuple of RankEntry
        Nodes sorted by descending influence, ties by node index.
    """

    def __init__(
        self,
        steepness=2.0,
        max_paths=DEFAULT_MAX_PATHS,
        normalization="signed",
        method="closed_form",
        epsilon=DEFAULT_EPSILON,
        max_steps=DEFAULT_MAX_STEPS,
    ):
        self.steepness = steepness
        self.max_paths = max_paths
        self.normalization = normalization
        self.method = method
        self.epsilon = epsilon
        self.max_steps = max_steps

    def _fit_values(self, cmap):
        result = analyze(
            cmap,
            params=AmplificationParams(self.steepness),
            max_paths=self.max_paths,
            normalization=self.normalization,
            method=self.method,
            epsilon=self.epsilon,
            max_steps=self.max_steps,
        )
        self.impact_matrix_ = result.impact
        self.time_matrix_ = result.time
        self.rate_matrix_ = result.rate
        self.steady_state_ = result.steady
        return result.influence


class KoskoRanker(_RankerBase):
    """Rank nodes by total weakest-link influence over all other nodes."""

    def __init__(self, max_paths=DEFAULT_MAX_PATHS):
        self.max_paths = max_paths

    def _fit_values(self, cmap):
        return kosko_values(cmap, max_paths=self.max_paths)


class SummedImpactRanker(_RankerBase):
    """Rank nodes by summing every scenario's force instead of selecting one."""

    def __init__(self, steepness=2.0, max_paths=DEFAULT_MAX_PATHS):
        self.steepness = steepness
        self.max_paths = max_paths

    def _fit_values(self, cmap):
        return summed_values(
            cmap,
            params=AmplificationParams(self.steepness),
            max_paths=self.max_paths,
        )

"""Shared test data and brute-force oracles.

The reference map is a bundled 4-node example with hand-checked expected
values; every frozen constant here was verified against an independent
brute-force implementation before being committed.
"""

import math
from itertools import permutations

import numpy as np

from impactgraph import CognitiveMap

REFERENCE_WEIGHTS = [
    [0, 0, 0, 0],
    [0, 0, 2, 8],
    [-3, 9, 0, 5],
    [2, 0, -1, 0],
]

# (force, speed) per path of the reference map, keyed by 0-based node
# tuples; force rounded to the 2 decimals of the known-good tables.
# Single-edge paths carry the raw edge weight by construction.
REFERENCE_SCENARIOS = {
    (1, 2, 0): (-1.08, 2),
    (1, 3, 2, 0): (0.41, 3),
    (1, 3, 0): (1.66, 2),
    (1, 2, 3, 0): (0.22, 3),
    (1, 2): (2.0, 1),
    (1, 3, 2): (-0.83, 2),
    (1, 3): (8.0, 1),
    (1, 2, 3): (1.79, 2),
    (2, 0): (-3.0, 1),
    (2, 1, 3, 0): (0.27, 3),
    (2, 3, 0): (1.34, 2),
    (2, 3): (5.0, 1),
    (2, 1, 3): (6.92, 2),
    (3, 2, 0): (0.59, 2),
    (3, 0): (2.0, 1),
}

# the ten recurrence-derived (multi-edge) forces among the above
REFERENCE_MULTI_EDGE = {
    path: expected for path, expected in REFERENCE_SCENARIOS.items() if len(path) > 2
}

REFERENCE_Z = [
    [0, 0, 0, 0],
    [1.66, 0, 2, 8],
    [-3, 9, 0, 5],
    [2, -1.79, -1, 0],
]

REFERENCE_T = [
    [0, 0, 0, 0],
    [2, 0, 1, 1],
    [1, 1, 0, 1],
    [1, 2, 1, 0],
]

REFERENCE_STEADY = [
    [0, 0, 0, 0],
    [0.038, 0, 0.091, 0.365],
    [-0.137, 0.41, 0, 0.228],
    [0.091, -0.04, -0.046, 0],
]

REFERENCE_INFLUENCE = [0.0, 0.494, 0.775, 0.178]
REFERENCE_RANK_ORDER = [2, 1, 3, 0]
REFERENCE_KOSKO = [0.0, 12.0, 20.0, 4.0]

# full-precision pins from the independent enumeration (sum-over-paths model)
REFERENCE_SUMMED = [0.0, 12.170155, 22.310348, 5.391151]


def reference_map() -> CognitiveMap:
    return CognitiveMap(REFERENCE_WEIGHTS)


def brute_force_paths(weights, source, target):
    """All simple paths by trying every permutation of intermediate nodes."""
    n = len(weights)
    middles = [k for k in range(n) if k not in (source, target)]
    found = []
    for r in range(len(middles) + 1):
        for mid in permutations(middles, r):
            nodes = (source, *mid, target)
            if all(weights[a][b] != 0 for a, b in zip(nodes, nodes[1:])):
                found.append(nodes)
    found.sort(key=lambda p: (len(p), p))
    return found


def brute_force_force(weights, nodes, steepness=2.0):
    """Direct restatement of the scoring recurrence, no package code."""
    mu = max(abs(w) for row in weights for w in row)

    def run(seq):
        z = 0.0
        for a, b in zip(seq, seq[1:]):
            sign = (z > 0) - (z < 0)
            z = (1.0 + sign * (1.0 - math.exp(-steepness * abs(z) / mu))) * weights[a][b]
        return z

    truncated = run(nodes[1:]) if len(nodes) > 2 else 0.0
    return run(nodes) - truncated


def random_map(rng, n=None, density=0.5, low=-10.0, high=10.0) -> CognitiveMap:
    if n is None:
        n = int(rng.integers(2, 7))
    w = rng.uniform(low, high, size=(n, n))
    w = np.where(rng.random((n, n)) < density, w, 0.0)
    np.fill_diagonal(w, 0.0)
    return CognitiveMap(w)

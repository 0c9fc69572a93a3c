"""Simple-path enumeration: completeness, ordering, limits."""

import numpy as np
import pytest

from helpers import brute_force_paths, random_map

from impactgraph import (
    CognitiveMap,
    ImpactPath,
    PathLimitError,
    enumerate_simple_paths,
)


class TestImpactPath:
    def test_properties(self):
        p = ImpactPath((1, 3, 0))
        assert p.source == 1
        assert p.target == 0
        assert p.edge_count == 2
        assert list(p.edges()) == [(1, 3), (3, 0)]

    def test_rejects_repeated_node(self):
        with pytest.raises(ValueError, match="repeats"):
            ImpactPath((0, 1, 0))

    def test_rejects_single_node(self):
        with pytest.raises(ValueError):
            ImpactPath((2,))

    def test_describe(self, ref_map):
        p = ImpactPath((1, 3, 0))
        assert p.describe(ref_map) == "u2 -(8)-> u4 -(2)-> u1"


class TestEnumeration:
    def test_reference_pair_with_four_paths(self, ref_map):
        paths = enumerate_simple_paths(ref_map, 1, 0)
        assert [p.nodes for p in paths] == [
            (1, 2, 0),
            (1, 3, 0),
            (1, 2, 3, 0),
            (1, 3, 2, 0),
        ]

    def test_unreachable_pair_is_empty(self, ref_map):
        assert enumerate_simple_paths(ref_map, 0, 3) == ()

    def test_single_direct_path(self, ref_map):
        paths = enumerate_simple_paths(ref_map, 2, 1)
        assert [p.nodes for p in paths] == [(2, 1)]

    def test_ordering_shorter_first_then_lexicographic(self):
        # complete 4-node map: orderings are fully exercised
        w = np.ones((4, 4)) - np.eye(4)
        paths = enumerate_simple_paths(CognitiveMap(w), 0, 3)
        assert [p.nodes for p in paths] == [
            (0, 3),
            (0, 1, 3),
            (0, 2, 3),
            (0, 1, 2, 3),
            (0, 2, 1, 3),
        ]

    def test_repeated_runs_identical(self, ref_map):
        a = enumerate_simple_paths(ref_map, 1, 0)
        b = enumerate_simple_paths(ref_map, 1, 0)
        assert a == b

    def test_matches_brute_force_on_random_maps(self, rng):
        for _ in range(150):
            m = random_map(rng, n=int(rng.integers(2, 8)))
            nodes = rng.choice(m.n, size=2, replace=False)
            source, target = int(nodes[0]), int(nodes[1])
            expected = brute_force_paths(m.weights.tolist(), source, target)
            got = [p.nodes for p in enumerate_simple_paths(m, source, target)]
            assert got == expected

    def test_paths_touch_target_only_at_the_end(self, rng):
        for _ in range(30):
            m = random_map(rng, density=0.8)
            nodes = rng.choice(m.n, size=2, replace=False)
            source, target = int(nodes[0]), int(nodes[1])
            for p in enumerate_simple_paths(m, source, target):
                assert p.nodes[0] == source
                assert p.nodes[-1] == target
                assert target not in p.nodes[:-1]
                assert all(m.weight(a, b) != 0 for a, b in p.edges())


class TestValidationAndLimits:
    def test_source_equals_target_rejected(self, ref_map):
        with pytest.raises(ValueError, match="differ"):
            enumerate_simple_paths(ref_map, 2, 2)

    def test_out_of_range_rejected(self, ref_map):
        with pytest.raises(ValueError, match="out of range"):
            enumerate_simple_paths(ref_map, 0, 9)

    def test_nonpositive_budget_rejected(self, ref_map):
        with pytest.raises(ValueError, match="positive"):
            enumerate_simple_paths(ref_map, 1, 0, max_paths=0)

    def test_limit_exceeded_raises_not_truncates(self):
        # complete 7-node digraph: 326 simple paths between any two nodes
        w = np.ones((7, 7)) - np.eye(7)
        m = CognitiveMap(w)
        with pytest.raises(PathLimitError) as exc:
            enumerate_simple_paths(m, 0, 1, max_paths=10)
        assert exc.value.limit == 10
        assert len(enumerate_simple_paths(m, 0, 1, max_paths=326)) == 326

    def test_limit_equal_to_count_is_fine(self, ref_map):
        assert len(enumerate_simple_paths(ref_map, 1, 0, max_paths=4)) == 4
        with pytest.raises(PathLimitError):
            enumerate_simple_paths(ref_map, 1, 0, max_paths=3)

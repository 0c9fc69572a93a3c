"""Exhaustive enumeration of simple directed paths between node pairs."""

from __future__ import annotations

from dataclasses import dataclass

from .cognitive_map import CognitiveMap
from .errors import PathLimitError

DEFAULT_MAX_PATHS = 1_000_000


@dataclass(frozen=True)
class ImpactPath:
    """One impact scenario: a simple path stored as 0-based node indices."""

    nodes: tuple[int, ...]

    def __post_init__(self):
        if len(self.nodes) < 2:
            raise ValueError("a path needs at least two nodes")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"path {self.nodes} repeats a node")

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def target(self) -> int:
        return self.nodes[-1]

    @property
    def edge_count(self) -> int:
        return len(self.nodes) - 1

    def edges(self):
        """Consecutive (source, destination) pairs along the path."""
        return zip(self.nodes, self.nodes[1:])

    def describe(self, cmap: CognitiveMap) -> str:
        """Human-readable rendering such as ``u2 -(8)-> u4 -(2)-> u1``."""
        parts = [cmap.labels[self.nodes[0]]]
        for a, b in self.edges():
            parts.append(f"-({cmap.weight(a, b):g})-> {cmap.labels[b]}")
        return " ".join(parts)


def enumerate_simple_paths(
    cmap: CognitiveMap,
    source: int,
    target: int,
    max_paths: int = DEFAULT_MAX_PATHS,
) -> tuple[ImpactPath, ...]:
    """All simple paths from ``source`` to ``target``, deterministically ordered.

    Paths follow nonzero-weight edges only and never revisit a node.  The
    result is sorted by edge count, then lexicographically by node indices,
    so repeated runs agree byte for byte.

    Raises
    ------
    PathLimitError
        If the pair admits more than ``max_paths`` simple paths.  The limit
        exists to fail loudly instead of silently truncating: a partial
        enumeration would bias every downstream score.
    """
    n = cmap.n
    if not 0 <= source < n:
        raise ValueError(f"source index {source} out of range for {n} nodes")
    if not 0 <= target < n:
        raise ValueError(f"target index {target} out of range for {n} nodes")
    if source == target:
        raise ValueError("source and target must differ; self-influence is not modelled")
    if max_paths < 1:
        raise ValueError("max_paths must be positive")

    found: list[tuple[int, ...]] = []
    path = [source]
    visited = {source}
    stack = [iter(cmap.successors(source))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            visited.discard(path.pop())
        elif step == target:
            # a simple path may touch the target only as its final node
            found.append(tuple(path) + (target,))
            if len(found) > max_paths:
                raise PathLimitError(source, target, max_paths)
        elif step not in visited:
            visited.add(step)
            path.append(step)
            stack.append(iter(cmap.successors(step)))
    found.sort(key=lambda p: (len(p), p))
    return tuple(ImpactPath(p) for p in found)

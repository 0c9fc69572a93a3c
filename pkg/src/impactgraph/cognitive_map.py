"""Cognitive map model: labelled nodes plus a square matrix of signed weights.

A map is a directed graph whose adjacency matrix holds real edge weights.
Entry ``(i, j)`` is the weight of the edge from node ``i`` to node ``j``;
zero means the edge is absent.  Two on-disk formats are supported, CSV and
JSON, and both round-trip bit-exactly through :meth:`CognitiveMap.to_csv`
and :meth:`CognitiveMap.to_json`.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .errors import MapFormatError, UnknownNodeError


def default_labels(n: int) -> tuple[str, ...]:
    """Labels u1..uN used when the input names no nodes."""
    return tuple(f"u{i + 1}" for i in range(n))


class CognitiveMap:
    """Immutable weighted signed digraph given by its adjacency matrix.

    Parameters
    ----------
    weights : array-like of shape (n, n)
        Signed edge weights, row = source, column = destination.
        The diagonal must be zero; self-influence is not modelled.
    labels : sequence of str, optional
        Distinct node names.  Defaults to u1..uN.
    """

    def __init__(self, weights, labels=None):
        w = np.asarray(weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise MapFormatError(
                f"weight matrix is non-square: shape {tuple(w.shape)}"
            )
        n = w.shape[0]
        if n == 0:
            raise MapFormatError("a map needs at least one node")
        if not np.all(np.isfinite(w)):
            raise MapFormatError("edge weights must be finite numbers")
        if labels is None:
            labels = default_labels(n)
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise MapFormatError(
                f"{len(labels)} labels for {n} nodes"
            )
        if len(set(labels)) != n:
            raise MapFormatError("node labels must be distinct")
        diag = np.flatnonzero(np.diagonal(w))
        if diag.size:
            raise MapFormatError(
                f"self-loop on node {labels[diag[0]]!r}; diagonal weights must be zero"
            )
        w = w.copy()
        w.setflags(write=False)
        self._weights = w
        self._labels = labels
        # adjacency lists drive path enumeration; build them once
        self._successors = tuple(
            tuple(int(j) for j in np.flatnonzero(w[i])) for i in range(n)
        )

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def max_abs_weight(self) -> float:
        """Largest edge magnitude in the map; 0.0 when there are no edges."""
        return float(np.max(np.abs(self._weights)))

    def successors(self, node: int) -> tuple[int, ...]:
        """Destinations of the outgoing edges of ``node``, ascending."""
        return self._successors[node]

    def weight(self, source: int, target: int) -> float:
        return float(self._weights[source, target])

    def resolve(self, reference) -> int:
        """Map a node reference to its 0-based index.

        Accepts a label, or a 1-based position given as an int or a string
        of digits.  Labels win when a label happens to look like a number.
        """
        if isinstance(reference, str):
            if reference in self._labels:
                return self._labels.index(reference)
            try:
                position = int(reference)
            except ValueError:
                raise UnknownNodeError(reference, self._labels) from None
        elif isinstance(reference, (int, np.integer)):
            position = int(reference)
        else:
            raise UnknownNodeError(reference, self._labels)
        if 1 <= position <= self.n:
            return position - 1
        raise UnknownNodeError(reference, self._labels)

    def __eq__(self, other):
        if not isinstance(other, CognitiveMap):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(
            self._weights, other._weights
        )

    def __hash__(self):
        return hash((self._labels, self._weights.tobytes()))

    def __repr__(self):
        return f"CognitiveMap(n={self.n}, labels={list(self._labels)!r})"

    # -- parsing ---------------------------------------------------------

    @classmethod
    def from_csv_text(cls, text: str) -> "CognitiveMap":
        """Parse a CSV document: weight rows, optional leading label row.

        The first row is treated as a label header when its first cell is
        not a number.
        """
        rows = [row for row in csv.reader(io.StringIO(text)) if row]
        if not rows:
            raise MapFormatError("empty CSV document")
        labels = None
        if not _is_number(rows[0][0]):
            labels = [cell.strip() for cell in rows[0]]
            rows = rows[1:]
            if not rows:
                raise MapFormatError("CSV header without weight rows")
        weights = []
        for k, row in enumerate(rows):
            parsed = []
            for cell in row:
                cell = cell.strip()
                if not _is_number(cell):
                    raise MapFormatError(
                        f"non-numeric weight {cell!r} in CSV row {k + 1}"
                    )
                parsed.append(float(cell))
            weights.append(parsed)
        widths = {len(r) for r in weights}
        if len(widths) != 1:
            raise MapFormatError("CSV rows have differing lengths")
        return cls(weights, labels)

    @classmethod
    def from_json_text(cls, text: str) -> "CognitiveMap":
        """Parse a JSON document: {"weights": [[...]], "nodes": [...]?}."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MapFormatError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or "weights" not in doc:
            raise MapFormatError('JSON map needs a "weights" key')
        labels = doc.get("nodes")
        if labels is not None and not isinstance(labels, list):
            raise MapFormatError('"nodes" must be a list of labels')
        try:
            return cls(doc["weights"], labels)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, MapFormatError):
                raise
            raise MapFormatError(f'bad "weights" value: {exc}') from None

    @classmethod
    def loads(cls, text: str) -> "CognitiveMap":
        """Parse either supported format, sniffing JSON by a leading brace."""
        if text.lstrip().startswith("{"):
            return cls.from_json_text(text)
        return cls.from_csv_text(text)

    @classmethod
    def load(cls, path) -> "CognitiveMap":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.loads(fh.read())

    # -- serialization ---------------------------------------------------

    def to_csv(self) -> str:
        """CSV document with a label header; floats written via repr."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self._labels)
        for row in self._weights:
            writer.writerow([repr(float(v)) for v in row])
        return out.getvalue()

    def to_json(self) -> str:
        doc = {
            "nodes": list(self._labels),
            "weights": [[float(v) for v in row] for row in self._weights],
        }
        return json.dumps(doc, indent=2)


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def as_cognitive_map(source) -> CognitiveMap:
    """Coerce a CognitiveMap, array-like, or nested lists into a map."""
    if isinstance(source, CognitiveMap):
        return source
    return CognitiveMap(source)

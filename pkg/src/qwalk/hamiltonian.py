"""Integer Hamiltonians built from graphs.

Every matrix here is symmetric with integer entries, its off-diagonal
support matches the edge set exactly, and all nonzero off-diagonal entries
share one sign. Entries are Python ints so later exact arithmetic never
overflows.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from numbers import Integral
from typing import Sequence

import numpy as np

from .graph import Graph


class Kind(str, enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless"
    WEIGHTED_ADJACENCY = "weighted-adjacency"
    CUSTOM = "custom"


class HamiltonianValidationError(ValueError):
    """A matrix falls outside the admissible class; ``entry`` names the culprit."""

    def __init__(self, message: str, entry: tuple[int, int] | None = None):
        super().__init__(message if entry is None else f"{message} at entry {entry}")
        self.entry = entry


@dataclass(frozen=True)
class Hamiltonian:
    kind: Kind
    entries: tuple[tuple[int, ...], ...]
    graph: Graph

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.n, self.n)

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind.value, "entries": [list(r) for r in self.entries]})


def validate(matrix: Sequence[Sequence], g: Graph) -> tuple[tuple[int, ...], ...]:
    """Check ``matrix`` against ``g`` and return it as nested int tuples."""
    n = g.n
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise HamiltonianValidationError(f"matrix must be {n}x{n}")
    rows = []
    for u, row in enumerate(matrix):
        out = []
        for v, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (Integral, float)) or x != int(x):
                raise HamiltonianValidationError("non-integer entry", (u, v))
            out.append(int(x))
        rows.append(tuple(out))
    sign = 0
    for u in range(n):
        for v in range(u + 1, n):
            x = rows[u][v]
            if x != rows[v][u]:
                raise HamiltonianValidationError("matrix is not symmetric", (u, v))
            if (x != 0) != g.has_edge(u, v):
                raise HamiltonianValidationError(
                    "off-diagonal pattern disagrees with the edge set", (u, v))
            if x:
                s = 1 if x > 0 else -1
                if sign and s != sign:
                    raise HamiltonianValidationError("off-diagonal entries change sign", (u, v))
                sign = s
    return tuple(rows)


def build(g: Graph, kind: Kind | str, matrix: Sequence[Sequence[int]] | None = None) -> Hamiltonian:
    """Adjacency ``A[u,v] = w(u,v)``; Laplacian ``D - A``; signless ``D + A``.

    ``D`` holds weighted degrees. ``Kind.CUSTOM`` takes a caller-supplied
    matrix and validates it.
    """
    kind = Kind(kind)
    if kind is Kind.CUSTOM:
        if matrix is None:
            raise HamiltonianValidationError("custom kind requires a matrix")
        return Hamiltonian(kind, validate(matrix, g), g)
    if matrix is not None:
        raise HamiltonianValidationError(f"{kind.value} is built from the graph; drop the matrix")
    n = g.n
    a = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        w = g.weight(u, v)
        a[u][v] = a[v][u] = w
    if kind in (Kind.ADJACENCY, Kind.WEIGHTED_ADJACENCY):
        rows = a
    else:
        sgn = -1 if kind is Kind.LAPLACIAN else 1
        rows = [[sgn * x for x in row] for row in a]
        for u in range(n):
            rows[u][u] = sum(a[u])
    return Hamiltonian(kind, tuple(tuple(r) for r in rows), g)


def trace_square(h: Hamiltonian) -> int:
    """Exact tr(M^2), i.e. the sum of squared entries of a symmetric M."""
    return sum(x * x for row in h.entries for x in row)


def trace(h: Hamiltonian) -> int:
    return sum(h.entries[i][i] for i in range(h.n))

"""Simple undirected graphs: construction, graph6/edge-list I/O, products, distances.

Vertices are ``0..n-1``. Edges are stored as sorted ``(u, v)`` pairs with
``u < v``. Weights, when present, are positive integers aligned with ``edges``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class Graph6Error(GraphError):
    """Malformed or unsupported graph6 input."""


class DisconnectedGraphError(GraphError):
    """A vertex is unreachable where a connected graph is required."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...] | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        normalized = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has endpoint outside 0..{self.n - 1}")
            normalized.append((min(u, v), max(u, v)))
        weights = self.weights
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(normalized):
                raise GraphError("weights must align with edges")
            if any(w < 1 for w in weights):
                raise GraphError("edge weights must be positive integers")
            order = sorted(range(len(normalized)), key=normalized.__getitem__)
            normalized = [normalized[i] for i in order]
            weights = tuple(weights[i] for i in order)
        else:
            normalized.sort()
        if len(set(normalized)) != len(normalized):
            raise GraphError("duplicate edge")
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(normalized)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   weights: Mapping[tuple[int, int], int] | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if weights is None:
            return cls(n, tuple(edges))
        w = [weights.get((u, v), weights.get((v, u), 1)) for u, v in edges]
        return cls(n, tuple(edges), tuple(w))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def weight(self, u: int, v: int) -> int:
        i = self._index[(min(u, v), max(u, v))]
        return 1 if self.weights is None else self.weights[i]

    def neighbors(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.neighbors()]

    def unweighted(self) -> "Graph":
        return Graph(self.n, self.edges)


# ---------------------------------------------------------------- graph6

def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62).

    The bit vector lists the upper triangle column by column:
    (0,1), (0,2), (1,2), (0,3), ... six bits per byte, high bit first.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} outside ASCII 63-126")
    if s[0] == "~":
        raise Graph6Error("extended graph6 forms (n > 62) are not supported")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(s) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(s) - 1}")
    bits = []
    for ch in s[1:]:
        x = ord(ch) - 63
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def to_graph6(g: Graph) -> str:
    if g.weighted:
        raise Graph6Error("graph6 cannot encode edge weights")
    if g.n > GRAPH6_MAX_N:
        raise Graph6Error(f"short-form graph6 needs n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


# ------------------------------------------------------------- edge list

def parse_edge_list(text: str) -> Graph:
    """Read ``"n m"`` followed by ``m`` lines ``"u v [w]"``.

    Blank lines and ``#`` comments are ignored. If any line carries a weight
    the graph is weighted and missing weights default to 1.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise GraphError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges, weights, any_weight = [], [], False
    for ln in body:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise GraphError(f"bad edge line {ln!r}")
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphError(f"non-integer token in edge line {ln!r}") from None
        edges.append((nums[0], nums[1]))
        if len(nums) == 3:
            any_weight = True
            weights.append(nums[2])
        else:
            weights.append(1)
    return Graph(n, tuple(edges), tuple(weights) if any_weight else None)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    for i, (u, v) in enumerate(g.edges):
        lines.append(f"{u} {v} {g.weights[i]}" if g.weighted else f"{u} {v}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ generators

def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs k >= 1")
    return Graph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))


def complete(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs k >= 1")
    return Graph(k, tuple(itertools.combinations(range(k), 2)))


def star(k: int) -> Graph:
    """The star K_{1,k}: center 0 joined to leaves 1..k."""
    if k < 1:
        raise GraphError("star needs k >= 1")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def hypercube(d: int) -> Graph:
    if d < 0:
        raise GraphError("hypercube needs d >= 0")
    n = 1 << d
    return Graph(n, tuple((u, u | (1 << b)) for u in range(n) for b in range(d) if not u >> b & 1))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (u, v) flattened to ``u * h.n + v``."""
    if g.weighted or h.weighted:
        raise GraphError("cartesian product is defined here for unweighted graphs only")
    nh = h.n
    edges = [(u * nh + a, u * nh + b) for u in range(g.n) for a, b in h.edges]
    edges += [(a * nh + v, b * nh + v) for a, b in g.edges for v in range(nh)]
    return Graph(g.n * nh, tuple(edges))


def cartesian_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError("cartesian power needs k >= 1")
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g)
    return out


# -------------------------------------------------------------- metrics

@dataclass(frozen=True)
class DistanceTable:
    source: int
    dist: tuple[int | None, ...]  # None marks an unreachable vertex

    @property
    def reachable(self) -> bool:
        return all(d is not None for d in self.dist)


def distances(g: Graph, a: int) -> DistanceTable:
    """Breadth-first hop distances from ``a``; weights are ignored."""
    if not 0 <= a < g.n:
        raise GraphError(f"vertex {a} out of range for n={g.n}")
    adj = g.neighbors()
    dist: list[int | None] = [None] * g.n
    dist[a] = 0
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return DistanceTable(a, tuple(dist))


def eccentricity(g: Graph, a: int) -> int:
    table = distances(g, a)
    if not table.reachable:
        far = [v for v, d in enumerate(table.dist) if d is None]
        raise DisconnectedGraphError(f"vertices {far} unreachable from {a}")
    return max(table.dist)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or distances(g, 0).reachable

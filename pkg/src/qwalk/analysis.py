"""Whole-graph analysis: per-vertex certificates, bound reports and PST pairs.

Both ``qwalk analyze`` and ``qwalk search`` are thin layers over
:func:`analyze`, which keeps their outputs consistent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bounds import BoundReport, check_bound, check_lemma1
from .config import DEFAULT, Tolerances
from .evolution import transition_matrix
from .graph import Graph, is_connected
from .hamiltonian import Kind, build
from .periodicity import NotPeriodic, PeriodicityCertificate, fraction_json, is_periodic
from .spectral import SpectralDecomposition, decompose

MAX_ENUMERATION_N = 7


@dataclass
class VertexAnalysis:
    vertex: int
    result: PeriodicityCertificate | NotPeriodic
    bound: BoundReport | None = None
    lemma1_ok: bool | None = None

    @property
    def periodic(self) -> bool:
        return self.result.periodic


@dataclass(frozen=True)
class PstPair:
    a: int
    b: int
    time: float
    fidelity: float


@dataclass
class AnalysisReport:
    graph: Graph
    kind: Kind
    source: str
    tolerances: Tolerances
    decomposition: SpectralDecomposition
    vertices: list[VertexAnalysis]
    pst_pairs: list[PstPair]
    warnings: list[str] = field(default_factory=list)

    @property
    def periodic_vertices(self) -> list[int]:
        return [v.vertex for v in self.vertices if v.periodic]

    @property
    def bound_reports(self) -> list[BoundReport]:
        return [v.bound for v in self.vertices if v.bound is not None]

    @property
    def bounds_ok(self) -> bool:
        return all(r.ok for r in self.bound_reports) and all(
            v.lemma1_ok for v in self.vertices if v.lemma1_ok is not None)

    def to_dict(self) -> dict:
        dec = self.decomposition
        g = self.graph
        vertices = []
        for v in self.vertices:
            res = v.result
            supp = res.support if res.periodic else None
            entry = {"vertex": v.vertex, "periodic": res.periodic}
            if supp is not None:
                entry["support"] = [float(dec.thetas[r]) for r in supp.support]
            entry["classification"] = res.classification.cls.value
            entry["certificate" if res.periodic else "not_periodic"] = res.to_dict()
            entry["lemma1_ok"] = v.lemma1_ok
            entry["bound"] = v.bound.to_dict() if v.bound else None
            vertices.append(entry)
        return {
            "graph": {"n": g.n, "m": g.m, "source": self.source, "weighted": g.weighted},
            "model": self.kind.value,
            "tolerances": self.tolerances.as_dict(),
            "charpoly": list(dec.charpoly.coeffs),
            "eigenvalues": [float(x) for x in dec.thetas],
            "multiplicities": list(dec.multiplicities),
            "vertices": vertices,
            "pst_pairs": [{"a": p.a, "b": p.b, "time": p.time, "fidelity": p.fidelity}
                          for p in self.pst_pairs],
            "warnings": list(self.warnings),
        }

    def search_record(self) -> dict:
        """The subset of the analysis emitted per graph by ``qwalk search``."""
        reports = self.bound_reports
        periodic = [v for v in self.vertices if v.periodic]
        return {
            "graph6": self.source,
            "n": self.graph.n,
            "m": self.graph.m,
            "model": self.kind.value,
            "periodic": [v.vertex for v in periodic],
            "class": {str(v.vertex): v.result.classification.cls.value for v in periodic},
            "tau_min": {str(v.vertex): v.result.tau_min for v in periodic},
            "g": {str(v.vertex): fraction_json(v.result.g) for v in periodic},
            "pst": [[p.a, p.b, p.time] for p in self.pst_pairs],
            "violations": {
                "theorem": sum(not r.theorem_ok for r in reports),
                "lemma2": sum(not r.lemma2_ok for r in reports),
                "lemma1": sum(v.lemma1_ok is False for v in periodic),
            },
            "bounds_ok": self.bounds_ok,
            "max_tightness": max((r.tightness for r in reports), default=None),
        }


def find_pst_pairs(dec: SpectralDecomposition, certs: list[PeriodicityCertificate],
                   tol: float = DEFAULT.pst) -> list[PstPair]:
    """PST pairs among periodic vertices sharing a minimal period.

    If a and b exchange perfectly at t then a is periodic at 2t, and the
    fidelity is tau-periodic in t, so t = tau/2 is the only time to test.
    """
    groups: dict[float, list[PeriodicityCertificate]] = {}
    for c in certs:
        key = round(c.tau_min, 9)
        groups.setdefault(key, []).append(c)
    pairs = []
    for group in groups.values():
        if len(group) < 2:
            continue
        t = group[0].tau_min / 2
        u = transition_matrix(dec, t).entries
        for c1, c2 in itertools.combinations(group, 2):
            f = float(abs(u[c1.vertex, c2.vertex]) ** 2)
            if f > 1 - tol:
                pairs.append(PstPair(c1.vertex, c2.vertex, t, min(f, 1.0)))
    pairs.sort(key=lambda p: (p.a, p.b))
    return pairs


def analyze(g: Graph, kind: Kind | str = Kind.ADJACENCY, tol: Tolerances = DEFAULT,
            source: str = "") -> AnalysisReport:
    """Run decomposition, certificates, bounds and PST detection on every vertex.

    Raises ``CorollaryViolation`` for a Laplacian vertex classified quadratic.
    """
    kind = Kind(kind)
    h = build(g, kind)
    dec = decompose(h, tol.cluster)
    warnings = list(dec.warnings)
    bounded = kind in (Kind.ADJACENCY, Kind.LAPLACIAN) and not g.weighted
    connected = is_connected(g)
    if bounded and not connected:
        warnings.append("graph is disconnected; eccentricity bounds skipped")
    vertices = []
    for a in range(g.n):
        res = is_periodic(h, a, tol, dec)
        va = VertexAnalysis(a, res)
        if res.periodic:
            va.lemma1_ok = check_lemma1(res, dec)
            if bounded and connected:
                va.bound = check_bound(g, a, res, source)
        vertices.append(va)
    certs = [v.result for v in vertices if v.periodic]
    pairs = find_pst_pairs(dec, certs, tol.pst)
    return AnalysisReport(g, kind, source, tol, dec, vertices, pairs, warnings)


def enumerate_labeled_graphs(n: int, connected_only: bool = False):
    """Yield every labeled simple graph on ``n`` vertices.

    Graphs come out in order of the edge-subset bitmask over the pairs
    (0,1), (0,2), ..., (n-2,n-1).
    """
    if n < 0 or n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        if connected_only and not _connected(n, edges):
            continue
        yield Graph(n, edges)


def _connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


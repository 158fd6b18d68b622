"""Eccentricity versus size bounds for periodic vertices.

For a periodic vertex ``a`` with eccentricity ``ecc`` in a graph with ``m``
edges:

* adjacency model: ``(ecc/3)**3 < 2m``, i.e. ``ecc**3 < 54 m``;
* Laplacian model: ``(ecc/3)**2 < m``, i.e. ``ecc**2 < 9 m``.

Both rest on the support size bound ``ecc + 1 <= |support|`` and on the
eigenvalue gap ``theta - theta' >= 2 pi / tau`` within a support. All
verdicts on strict inequalities are taken in integer arithmetic.
"""

from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, eccentricity
from .hamiltonian import Kind
from .periodicity import PeriodicityCertificate
from .spectral import EigenvalueSupport, SpectralDecomposition

GAP_SLACK = 1e-9


class ModelMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Lemma2Check:
    eccentricity: int
    support_size: int
    ok: bool          # ecc + 1 <= |support|, the form the proof establishes
    stated_ok: bool   # ecc <= |support|, the weaker stated form


@dataclass(frozen=True)
class BoundReport:
    vertex: int
    model: str
    eccentricity: int
    support_size: int
    edge_count: int
    lemma2_ok: bool
    lemma2_stated_ok: bool
    support_bound_ok: bool   # |support| <= 3 * cbrt(2m) + 1, resp. 3 * sqrt(m) + 1
    theorem_lhs: Fraction
    theorem_rhs: int
    theorem_ok: bool
    tightness: float
    vacuous: bool = False
    label: str = ""

    @property
    def ok(self) -> bool:
        return self.lemma2_ok and self.theorem_ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d["theorem_lhs"] = float(self.theorem_lhs)
        return d


def check_lemma1(cert: PeriodicityCertificate, dec: SpectralDecomposition | None = None) -> bool:
    """Every two distinct support eigenvalues differ by at least 2 pi / tau_min."""
    vals = (cert.eigenvalues if dec is None
            else tuple(float(dec.thetas[r]) for r in cert.support.support))
    if len(vals) < 2:
        return True
    gap = min(abs(x - y) for i, x in enumerate(vals) for y in vals[i + 1:])
    return gap >= 2 * math.pi / cert.tau_min - GAP_SLACK


def check_lemma2(g: Graph, a: int, supp: EigenvalueSupport) -> Lemma2Check:
    ecc = eccentricity(g, a)
    size = len(supp)
    return Lemma2Check(ecc, size, ecc + 1 <= size, ecc <= size)


def _report(g, a, cert, model, lhs_num, lhs_den, rhs, support_ok, label):
    lemma = check_lemma2(g, a, cert.support)
    lhs = Fraction(lhs_num, lhs_den)
    vacuous = lemma.eccentricity == 0
    ok = lhs < rhs or vacuous
    tightness = float(lhs / rhs) if rhs else 0.0
    return BoundReport(a, model, lemma.eccentricity, lemma.support_size, g.m,
                       lemma.ok, lemma.stated_ok, support_ok, lhs, rhs, ok,
                       tightness, vacuous, label)


def _require(cert, kind: Kind, g: Graph):
    if cert.kind is not kind:
        raise ModelMismatch(f"expected a {kind.value} certificate, got {cert.kind.value}")
    if g.weighted:
        raise ModelMismatch("the edge-count bounds hold for unweighted graphs")


def check_adjacency_bound(g: Graph, a: int, cert: PeriodicityCertificate,
                          label: str = "") -> BoundReport:
    """``(ecc/3)**3 < 2m`` together with ``|support| <= 3 cbrt(2m) + 1``."""
    _require(cert, Kind.ADJACENCY, g)
    ecc = eccentricity(g, a)
    k = len(cert.support) - 1
    support_ok = k <= 0 or k ** 3 <= 54 * g.m
    return _report(g, a, cert, "adjacency", ecc ** 3, 27, 2 * g.m, support_ok, label)


def check_laplacian_bound(g: Graph, a: int, cert: PeriodicityCertificate,
                          label: str = "") -> BoundReport:
    """``(ecc/3)**2 < m`` together with ``|support| <= 3 sqrt(m) + 1``."""
    _require(cert, Kind.LAPLACIAN, g)
    ecc = eccentricity(g, a)
    k = len(cert.support) - 1
    support_ok = k <= 0 or k ** 2 <= 9 * g.m
    return _report(g, a, cert, "laplacian", ecc ** 2, 9, g.m, support_ok, label)


def check_bound(g: Graph, a: int, cert: PeriodicityCertificate, label: str = "") -> BoundReport:
    if cert.kind is Kind.LAPLACIAN:
        return check_laplacian_bound(g, a, cert, label)
    return check_adjacency_bound(g, a, cert, label)


def eigenvalue_tail_ok(dec: SpectralDecomposition, kind: Kind, m: int,
                       slack: float = 1e-8) -> bool:
    """theta_j**2 <= 2m/(j+1) (adjacency) or lambda_j <= 2m/(j+1) (Laplacian)."""
    spec = dec.spectrum()
    if kind is Kind.LAPLACIAN:
        vals = np.sort(spec)[::-1]
    elif kind is Kind.ADJACENCY:
        vals = np.sort(spec ** 2)[::-1]
    else:
        raise ModelMismatch(f"no tail bound for {kind.value}")
    caps = 2 * m / np.arange(1, len(vals) + 1)
    return bool(np.all(vals <= caps + slack * (1 + caps)))


def tightness_survey(reports) -> list[dict]:
    """Maximum tightness per family label, largest first."""
    best = defaultdict(lambda: None)
    for r in reports:
        cur = best[r.label]
        if cur is None or r.tightness > cur.tightness:
            best[r.label] = r
    rows = [{"family": label, "max_tightness": r.tightness, "vertex": r.vertex,
             "model": r.model, "eccentricity": r.eccentricity, "edge_count": r.edge_count}
            for label, r in best.items()]
    rows.sort(key=lambda row: (-row["max_tightness"], row["family"]))
    return rows


def survey_to_csv(rows) -> str:
    cols = ["family", "max_tightness", "vertex", "model", "eccentricity", "edge_count"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def reports_to_csv(reports) -> str:
    cols = list(BoundReport.__dataclass_fields__)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.to_dict())
    return buf.getvalue()

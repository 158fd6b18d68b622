"""Classification of eigenvalue supports and periodicity certificates.

A periodic vertex has a support made of integers, or of quadratic integers
``(alpha + beta_r * sqrt(delta)) / 2`` sharing one ``alpha`` and one
square-free ``delta``. That condition is necessary, not sufficient, so a
certificate is only issued after the modulus of ``U(tau)_aa`` has been
checked numerically at the predicted period.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .config import DEFAULT, Tolerances
from .evolution import transition_matrix
from .hamiltonian import Hamiltonian, Kind
from .spectral import (CharPoly, EigenvalueSupport, SpectralDecomposition,
                       certify_integer_eigenvalue, certify_quadratic_factor,
                       decompose, eigenvalue_support)


class SupportClass(str, enum.Enum):
    INTEGER = "integer"
    QUADRATIC = "quadratic"
    UNSTRUCTURED = "unstructured"


class CorollaryViolation(RuntimeError):
    """A Laplacian support was classified as quadratic; integer supports are forced."""


@dataclass(frozen=True)
class SupportClassification:
    cls: SupportClass
    delta: int = 1
    alpha: int = 0
    betas: tuple[int, ...] = ()
    certified: bool = False
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class PeriodicityCertificate:
    vertex: int
    kind: Kind
    classification: SupportClassification
    support: EigenvalueSupport
    eigenvalues: tuple[float, ...]   # support eigenvalues, decreasing
    g: Fraction
    tau_min: float
    verified_modulus: float
    degenerate: bool = False         # single-eigenvalue support, periodic at every t

    periodic = True

    def to_dict(self) -> dict:
        c = self.classification
        return {
            "vertex": self.vertex,
            "class": c.cls.value,
            "delta": c.delta,
            "alpha": c.alpha,
            "betas": list(c.betas),
            "g": fraction_json(self.g),
            "tau_min": self.tau_min,
            "verified_modulus": self.verified_modulus,
            "support_norms": [self.support.norms[r] for r in self.support.support],
        }


@dataclass(frozen=True)
class NotPeriodic:
    vertex: int
    classification: SupportClassification
    measured_modulus: float | None = None
    reason: str = ""

    periodic = False

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "class": self.classification.cls.value,
                "measured_modulus": self.measured_modulus, "reason": self.reason}


def fraction_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def squarefree_decomposition(d: int) -> tuple[int, int]:
    """Write ``d > 0`` as ``f**2 * core`` with ``core`` square-free."""
    core, f, p = d, 1, 2
    while p * p <= core:
        while core % (p * p) == 0:
            core //= p * p
            f *= p
        p += 1
    return f, core


def _near_int(x: float, tol: float) -> int | None:
    k = round(x)
    return int(k) if abs(x - k) < tol else None


def classify_support(dec: SpectralDecomposition, supp: EigenvalueSupport,
                     cp: CharPoly | None = None,
                     tol: float = DEFAULT.rounding) -> SupportClassification:
    cp = dec.charpoly if cp is None else cp
    thetas = dec.thetas
    members = list(supp.support)
    notes = []

    ints = {}
    for r in members:
        k = _near_int(thetas[r], tol)
        if k is not None:
            if certify_integer_eigenvalue(cp, k):
                ints[r] = k
            else:
                notes.append(f"theta={thetas[r]:.12g} rounds to {k} but cp({k}) != 0")
    if len(ints) == len(members):
        return SupportClassification(SupportClass.INTEGER, 1, 0,
                                     tuple(2 * ints[r] for r in members), True, tuple(notes))

    shapes = {}
    for r in members:
        if r in ints:
            continue
        found = None
        for r2 in range(len(thetas)):
            if r2 == r:
                continue
            s = _near_int(thetas[r] + thetas[r2], tol)
            p = _near_int(thetas[r] * thetas[r2], tol)
            if s is None or p is None:
                continue
            disc = s * s - 4 * p
            if disc <= 0 or math.isqrt(disc) ** 2 == disc:
                continue
            if not certify_quadratic_factor(cp, s, p):
                notes.append(f"x^2 - {s}x + {p} passes the float filter but does not divide cp")
                continue
            f, delta = squarefree_decomposition(disc)
            found = (delta, s, f if thetas[r] > thetas[r2] else -f)
            break
        if found is None:
            notes.append(f"theta={thetas[r]:.12g} has no certified quadratic partner")
            return SupportClassification(SupportClass.UNSTRUCTURED, notes=tuple(notes))
        shapes[r] = found

    deltas = {d for d, _, _ in shapes.values()}
    alphas = {s for _, s, _ in shapes.values()}
    if len(deltas) > 1 or len(alphas) > 1:
        notes.append(f"support mixes delta {sorted(deltas)} / alpha {sorted(alphas)}")
        return SupportClassification(SupportClass.UNSTRUCTURED, notes=tuple(notes))
    delta, alpha = deltas.pop(), alphas.pop()
    betas = []
    for r in members:
        if r in ints:
            # an integer (zero included) fits (alpha + beta sqrt(delta))/2 only with beta = 0
            if 2 * ints[r] != alpha:
                notes.append(f"integer {ints[r]} is off the alpha={alpha} lattice")
                return SupportClassification(SupportClass.UNSTRUCTURED, notes=tuple(notes))
            betas.append(0)
        else:
            betas.append(shapes[r][2])
    return SupportClassification(SupportClass.QUADRATIC, delta, alpha, tuple(betas), True,
                                 tuple(notes))


def period_gcd(cls: SupportClassification) -> Fraction:
    """gcd of (theta_0 - theta_r)/sqrt(delta) = (beta_0 - beta_r)/2 over the support."""
    diffs = [Fraction(cls.betas[0] - b, 2) for b in cls.betas[1:]]
    diffs = [d for d in diffs if d]
    if not diffs:
        return Fraction(1)
    num = reduce(math.gcd, (d.numerator for d in diffs))
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (d.denominator for d in diffs))
    return Fraction(num, den)


def minimal_period(cls: SupportClassification, dec: SpectralDecomposition,
                   supp: EigenvalueSupport, kind: Kind = Kind.CUSTOM,
                   tol: float = DEFAULT.periodic):
    """Certificate at ``tau = 2 pi / (g sqrt(delta))`` or NotPeriodic."""
    if cls.cls is SupportClass.UNSTRUCTURED:
        return NotPeriodic(supp.vertex, cls, reason="support is neither integral nor quadratic")
    g = period_gcd(cls)
    tau = 2 * math.pi / (float(g) * math.sqrt(cls.delta))
    a = supp.vertex
    modulus = float(abs(transition_matrix(dec, tau).entries[a, a]))
    if modulus <= 1 - tol:
        return NotPeriodic(a, cls, modulus, reason=f"|U(tau)_aa| = {modulus:.12g} at tau = {tau:.12g}")
    return PeriodicityCertificate(
        vertex=a, kind=kind, classification=cls, support=supp,
        eigenvalues=tuple(float(dec.thetas[r]) for r in supp.support),
        g=g, tau_min=tau, verified_modulus=modulus, degenerate=len(supp) == 1)


def is_periodic(h: Hamiltonian, a: int, tol: Tolerances = DEFAULT,
                dec: SpectralDecomposition | None = None):
    if dec is None:
        dec = decompose(h, tol.cluster)
    supp = eigenvalue_support(dec, a, tol.support)
    cls = classify_support(dec, supp, dec.charpoly, tol.rounding)
    if h.kind is Kind.LAPLACIAN and cls.cls is SupportClass.QUADRATIC:
        raise CorollaryViolation(f"Laplacian support of vertex {a} classified quadratic: {cls}")
    return minimal_period(cls, dec, supp, h.kind, tol.periodic)

"""Continuous-time quantum walk propagator and state transfer detection."""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, Tolerances
from .hamiltonian import Hamiltonian
from .spectral import SpectralDecomposition, decompose


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    time: float
    entries: np.ndarray


def transition_matrix(dec: SpectralDecomposition, t: float) -> TransitionMatrix:
    """U(t) = exp(itM) = sum_r exp(i theta_r t) E_r."""
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t}")
    phases = np.exp(1j * dec.thetas * t)
    u = np.tensordot(phases, dec.idempotents, axes=1)
    u.setflags(write=False)
    return TransitionMatrix(float(t), u)


def transition_entries(dec: SpectralDecomposition, a: int, b: int, times) -> np.ndarray:
    """U(t)_{ab} for an array of times, without forming full matrices."""
    times = np.asarray(times, dtype=float)
    weights = dec.idempotents[:, a, b]
    return np.exp(1j * np.outer(times, dec.thetas)) @ weights


def fidelity(dec: SpectralDecomposition, a: int, b: int, t: float) -> float:
    n = dec.n
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices ({a}, {b}) out of range for n={n}")
    amp = transition_entries(dec, a, b, [t])[0]
    return min(float(abs(amp) ** 2), 1.0)


def fidelity_curve(dec: SpectralDecomposition, a: int, b: int,
                   t_max: float, samples: int) -> list[tuple[float, float]]:
    if samples < 2:
        raise ValueError("samples must be at least 2")
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    n = dec.n
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"vertices ({a}, {b}) out of range for n={n}")
    ts = np.linspace(0.0, t_max, samples)
    fids = np.minimum(np.abs(transition_entries(dec, a, b, ts)) ** 2, 1.0)
    return [(float(t), float(f)) for t, f in zip(ts, fids)]


def curve_to_csv(curve) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "fidelity"])
    for t, f in curve:
        w.writerow([repr(t), repr(f)])
    return buf.getvalue()


class PstVerdict(str, enum.Enum):
    PST = "PST"
    NONE = "NoPST-at-tested-times"


@dataclass(frozen=True)
class PstReport:
    a: int
    b: int
    time: float | None
    fidelity: float
    verdict: PstVerdict

    @property
    def pst(self) -> bool:
        return self.verdict is PstVerdict.PST


def detect_pst(h: Hamiltonian, a: int, b: int, tol: Tolerances = DEFAULT,
               dec: SpectralDecomposition | None = None) -> PstReport:
    """Look for perfect state transfer from ``a`` to ``b`` within (0, 2 pi].

    Candidates are odd multiples of tau/2 from the periodicity certificate of
    ``a``; a uniform grid is scanned as a fallback. A source vertex that is not
    periodic cannot transfer perfectly, so it short-circuits.
    """
    from .periodicity import is_periodic

    if a == b:
        raise ValueError("state transfer needs two distinct vertices")
    if dec is None:
        dec = decompose(h, tol.cluster)
    if not (0 <= a < dec.n and 0 <= b < dec.n):
        raise ValueError(f"vertices ({a}, {b}) out of range for n={dec.n}")
    cert = is_periodic(h, a, tol, dec)
    if not cert.periodic:
        return PstReport(a, b, None, 0.0, PstVerdict.NONE)

    half = cert.tau_min / 2
    candidates = [k * half for k in (1, 3, 5, 7) if k * half <= 2 * math.pi + 1e-12]
    fids = np.abs(transition_entries(dec, a, b, candidates)) ** 2
    for t, f in zip(candidates, fids):
        if f > 1 - tol.pst:
            return PstReport(a, b, t, min(float(f), 1.0), PstVerdict.PST)

    grid = np.linspace(0.0, 2 * math.pi, tol.grid + 1)[1:]
    gfids = np.abs(transition_entries(dec, a, b, grid)) ** 2
    i = int(np.argmax(gfids))
    best_t, best_f = float(grid[i]), float(gfids[i])
    if candidates and float(fids.max()) >= best_f:
        j = int(np.argmax(fids))
        best_t, best_f = candidates[j], float(fids[j])
    verdict = PstVerdict.PST if best_f > 1 - tol.pst else PstVerdict.NONE
    return PstReport(a, b, best_t, min(best_f, 1.0), verdict)

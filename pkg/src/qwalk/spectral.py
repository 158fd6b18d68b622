"""Spectral decomposition, exact characteristic polynomials and eigenvalue supports.

Two layers work side by side: a floating-point eigensolve gives eigenvalues
and spectral idempotents, while the characteristic polynomial is computed
over the integers so that integrality and quadratic factors can be certified
exactly rather than guessed from rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .config import DEFAULT
from .hamiltonian import Hamiltonian


class SpectralError(ArithmeticError):
    """The numerical eigensolver failed."""


@dataclass(frozen=True)
class CharPoly:
    """Integer coefficients ``c_0..c_n`` of det(xI - M), lowest degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if mag == 1 and k else str(mag)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(("-" if c < 0 else "+", coef + mono))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])


def char_poly(h: Hamiltonian) -> CharPoly:
    """Faddeev-LeVerrier over Python ints.

    ``M_1 = I``, ``M_k = A M_{k-1} + c_{n-k+1} I`` and
    ``c_{n-k} = -tr(A M_k) / k``; the division is exact for integer A.
    """
    n = h.n
    if n < 1:
        raise ValueError("characteristic polynomial needs n >= 1")
    rows = [[(j, x) for j, x in enumerate(r) if x] for r in h.entries]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = []
        for u in range(n):
            out = [0] * n
            for j, x in rows[u]:
                rj = mk[j]
                for v in range(n):
                    if rj[v]:
                        out[v] += x * rj[v]
            am.append(out)
        tr = sum(am[u][u] for u in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError(f"inexact Faddeev-LeVerrier division at step {k}")
        coeffs[n - k] = q
        if k < n:
            for u in range(n):
                am[u][u] += q
            mk = am
    return CharPoly(tuple(coeffs))


def certify_integer_eigenvalue(cp: CharPoly, candidate: int) -> bool:
    return cp(int(candidate)) == 0


def divide_by_monic_quadratic(cp: CharPoly, s: int, p: int) -> tuple[list[int], list[int]]:
    """Divide ``cp`` by ``x^2 - s x + p``; returns (quotient, remainder), low degree first."""
    rem = list(cp.coeffs)
    deg = len(rem) - 1
    if deg < 2:
        return [0], rem
    quot = [0] * (deg - 1)
    for k in range(deg, 1, -1):
        c = rem[k]
        quot[k - 2] = c
        rem[k] = 0
        rem[k - 1] += s * c
        rem[k - 2] -= p * c
    return quot, rem[:2]


def certify_quadratic_factor(cp: CharPoly, s: int, p: int) -> bool:
    """True iff x^2 - s x + p divides ``cp`` over Z.

    The discriminant must be positive and not a perfect square, so the
    factor is irreducible with two real roots.
    """
    disc = s * s - 4 * p
    if disc <= 0 or _isqrt_exact(disc):
        raise ValueError(f"x^2 - {s}x + {p} has no irrational real roots (discriminant {disc})")
    _, rem = divide_by_monic_quadratic(cp, s, p)
    return rem == [0, 0]


def _isqrt_exact(x: int) -> bool:
    from math import isqrt
    return x >= 0 and isqrt(x) ** 2 == x


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    thetas: np.ndarray            # distinct eigenvalues, strictly decreasing
    multiplicities: tuple[int, ...]
    idempotents: np.ndarray       # shape (t+1, n, n)
    hamiltonian: Hamiltonian
    matrix: np.ndarray
    warnings: tuple[str, ...] = ()

    @cached_property
    def charpoly(self) -> CharPoly:
        return char_poly(self.hamiltonian)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.thetas)))

    def spectrum(self) -> np.ndarray:
        """Eigenvalues with repetition, in decreasing order."""
        return np.repeat(self.thetas, self.multiplicities)


def decompose(h: Hamiltonian, tol: float = DEFAULT.cluster) -> SpectralDecomposition:
    """Eigendecompose M and merge eigenvalues whose sorted gaps fall below
    ``tol * (1 + rho)``. Each cluster's projector is the sum of v v^T over
    its eigenvectors and its eigenvalue is the cluster mean.
    """
    m = h.as_array()
    n = m.shape[0]
    if n < 1:
        raise ValueError("decomposition needs n >= 1")
    try:
        vals, vecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigensolver failed: {exc}") from exc
    if not np.all(np.isfinite(vals)):
        raise SpectralError("eigensolver returned non-finite eigenvalues")
    order = np.argsort(vals)[::-1]
    vals, vecs = vals[order], vecs[:, order]
    cut = tol * (1.0 + float(np.max(np.abs(vals))))

    clusters = [[0]]
    for i in range(1, n):
        if vals[i - 1] - vals[i] < cut:
            clusters[-1].append(i)
        else:
            clusters.append([i])

    thetas, mults, projs, notes = [], [], [], []
    for idx in clusters:
        block = vals[idx]
        spread = float(block[0] - block[-1])
        if spread > 10 * cut:
            notes.append(f"cluster around {block.mean():.12g} spans {spread:.3g}, near-degenerate")
        v = vecs[:, idx]
        thetas.append(float(block.sum()) / len(idx))
        mults.append(len(idx))
        projs.append(v @ v.T)
    thetas = np.array(thetas)
    projs = np.array(projs)
    for arr in (thetas, projs, m):
        arr.setflags(write=False)
    return SpectralDecomposition(thetas, tuple(mults), projs, h, m, tuple(notes))


@dataclass(frozen=True)
class EigenvalueSupport:
    vertex: int
    support: tuple[int, ...]      # indices into SpectralDecomposition.thetas
    norms: tuple[float, ...]      # ||E_r e_a|| for every r, for audit

    def __len__(self):
        return len(self.support)


def eigenvalue_support(dec: SpectralDecomposition, a: int,
                       tol: float = DEFAULT.support) -> EigenvalueSupport:
    if not 0 <= a < dec.n:
        raise ValueError(f"vertex {a} out of range for n={dec.n}")
    norms = np.linalg.norm(dec.idempotents[:, :, a], axis=1)
    support = tuple(int(r) for r in np.flatnonzero(norms > tol))
    return EigenvalueSupport(a, support, tuple(float(x) for x in norms))


def walk_module_dimension(h: Hamiltonian, a: int, tol: float = DEFAULT.rank) -> int:
    """Numerical dimension of span{M^i e_a}.

    Builds the Krylov space by repeated multiplication with Gram-Schmidt
    (two passes) and stops once the fresh component is below ``tol`` relative
    to the spectral radius of M.
    """
    m = h.as_array()
    n = m.shape[0]
    if not 0 <= a < n:
        raise ValueError(f"vertex {a} out of range for n={n}")
    cut = tol * max(float(np.max(np.abs(np.linalg.eigvalsh(m)))), 1.0)
    basis = np.zeros((n, n))
    basis[a, 0] = 1.0
    dim = 1
    while dim < n:
        w = m @ basis[:, dim - 1]
        for _ in range(2):
            w -= basis[:, :dim] @ (basis[:, :dim].T @ w)
        res = np.linalg.norm(w)
        if res <= cut:
            break
        basis[:, dim] = w / res
        dim += 1
    return dim


def krylov_rank_exact(h: Hamiltonian, a: int) -> int:
    """Exact rank of [e_a, M e_a, ..., M^{n-1} e_a] over Q."""
    n = h.n
    vec = [int(i == a) for i in range(n)]
    cols = []
    for _ in range(n):
        cols.append(vec)
        vec = [sum(x * y for x, y in zip(row, vec)) for row in h.entries]
    rows = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, n):
            f = rows[r][col] / rows[rank][col]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank

"""Spectrum of the random-walk Laplacian I - D^{-1} A.

The Laplacian is not symmetric, but D^{1/2} (I - D^{-1} A) D^{-1/2} is, so
eigenvalues are computed on that symmetric form with cyclic Jacobi rotations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AlphaOutOfRange, ConvergenceFailure, InvalidParameter
from .graph import Graph

MAX_SWEEPS = 100


@dataclass(frozen=True)
class LaplacianSpectrum:
    eigenvalues: tuple[float, ...]
    lambda1: float


def normalized_laplacian(g: Graph) -> list[list[Fraction]]:
    """Exact rows of I - D^{-1} A."""
    rows = []
    for x in range(g.n):
        row = [Fraction(0)] * g.n
        row[x] = Fraction(1)
        for v in g.adjacency[x]:
            row[v] = Fraction(-1, g.degree(x))
        rows.append(row)
    return rows


def _symmetric_adjacency(g: Graph) -> np.ndarray:
    """D^{-1/2} A D^{-1/2}."""
    s = np.zeros((g.n, g.n))
    scale = 1.0 / np.sqrt(np.array(g.degrees, dtype=float))
    for u, v in g.edges():
        s[u, v] = s[v, u] = scale[u] * scale[v]
    return s


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, ascending.

    Sweeps rotate away every off-diagonal entry in row order until the
    off-diagonal Frobenius norm drops below ``tol``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, atol=0.0, rtol=0.0):
        raise InvalidParameter("jacobi_eigenvalues expects a square symmetric matrix")
    for sweep in range(max_sweeps + 1):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol:
            return np.sort(np.diag(a))
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                # an entry this small moves the eigenvalues by O(apq^2): drop it
                if abs(apq) <= 1e-18 * (abs(a[p, p]) + abs(a[q, q])) or abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceFailure(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})")


def spectrum(g: Graph, tol: float = 1e-9) -> LaplacianSpectrum:
    if tol <= 0:
        raise InvalidParameter(f"tol must be positive, got {tol}")
    sym = np.eye(g.n) - _symmetric_adjacency(g)
    # converge well below tol so each eigenvalue is accurate to tol
    eig = jacobi_eigenvalues(sym, tol=min(tol, 1e-12) * 1e-2)
    eig[np.abs(eig) < tol] = 0.0
    positive = eig[eig > tol]
    if len(positive) != g.n - 1:
        raise ConvergenceFailure(f"expected a simple zero eigenvalue, found {g.n - len(positive)} near zero")
    return LaplacianSpectrum(tuple(float(x) for x in eig), float(positive[0]))


def averaging_operator_eigenvalues(g: Graph, alpha, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of alpha I + (1 - alpha) D^{-1} A, ascending."""
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    a = float(alpha)
    sym = a * np.eye(g.n) + (1.0 - a) * _symmetric_adjacency(g)
    return jacobi_eigenvalues(sym, tol=tol)


def mixing_operator_check(g: Graph, alpha, tol: float = 1e-9) -> bool:
    """The averaging operator's spectrum is 1 - (1 - alpha) times the Laplacian's."""
    alpha = Fraction(alpha)
    m_eig = averaging_operator_eigenvalues(g, alpha, tol=tol * 1e-3)
    lap = np.array(spectrum(g, tol).eigenvalues)
    predicted = np.sort(1.0 - (1.0 - float(alpha)) * lap)
    return bool(np.all(np.abs(m_eig - predicted) <= tol))


def mixing_rate(g: Graph, alpha) -> float:
    """Largest modulus among the non-principal eigenvalues of the averaging operator."""
    eig = averaging_operator_eigenvalues(g, alpha)
    return float(np.max(np.abs(eig[:-1])))

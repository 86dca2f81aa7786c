"""Eigendecomposition of graph Laplacians and derived operators."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DisconnectedGraphError, Graph, laplacian

__all__ = [
    "Spectrum",
    "zero_threshold",
    "eigendecompose",
    "graph_spectrum",
    "pseudo_inverse",
    "moore_penrose_residuals",
    "decomposition_check",
    "energy_residual",
]

ZERO_RTOL = 1e-9


def zero_threshold(n: int, scale: float) -> float:
    """Cut-off below which an eigenvalue counts as zero.

    ``scale`` is the maximum vertex degree of the graph, which bounds the
    Laplacian's norm up to a factor 2.
    """
    return ZERO_RTOL * n * max(scale, 1.0)


@dataclass(frozen=True)
class Spectrum:
    """Ascending Laplacian eigenvalues and the matching orthonormal basis.

    Column ``k`` of ``basis`` is the unit eigenvector for ``eigenvalues[k]``;
    column 0 is exactly ``(1, ..., 1) / sqrt(n)``.
    """

    eigenvalues: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        for arr in (self.eigenvalues, self.basis):
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def frequencies(self) -> np.ndarray:
        """Normal-mode frequencies ``sqrt(lambda_i)`` for ``i = 1..n-1``."""
        return np.sqrt(self.eigenvalues[1:])


def eigendecompose(L: np.ndarray, *, symmetry_tol: float = 1e-12) -> Spectrum:
    """Diagonalize a connected graph's Laplacian.

    The zero mode is replaced by the exact normalized all-ones vector and every
    other eigenvector is signed so its largest-magnitude entry is positive.

    Raises
    ------
    ValueError
        If ``L`` is not square and symmetric.
    DisconnectedGraphError
        If more than one eigenvalue falls below :func:`zero_threshold`.
    """
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {L.shape}")
    n = L.shape[0]
    scale = float(np.max(np.abs(np.diag(L)))) if n else 0.0
    if np.max(np.abs(L - L.T), initial=0.0) > symmetry_tol * max(scale, 1.0):
        raise ValueError("matrix is not symmetric")

    w, S = np.linalg.eigh(L)
    tol = zero_threshold(n, scale)
    if w[0] < -tol:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {w[0]:.3e})")
    zeros = int(np.count_nonzero(w <= tol))
    if zeros > 1:
        raise DisconnectedGraphError(f"graph is disconnected ({zeros} zero eigenvalues)")
    if zeros == 0:
        raise ValueError("matrix has no zero eigenvalue; not a graph Laplacian")

    w = w.copy()
    w[0] = 0.0
    S = S.copy()
    S[:, 0] = 1.0 / np.sqrt(n)
    if n > 1:
        cols = np.arange(1, n)
        pivots = np.argmax(np.abs(S[:, 1:]), axis=0)
        signs = np.sign(S[pivots, cols])
        S[:, 1:] *= np.where(signs == 0, 1.0, signs)
    return Spectrum(w, S)


def graph_spectrum(g: Graph) -> Spectrum:
    return eigendecompose(laplacian(g))


def pseudo_inverse(s: Spectrum) -> np.ndarray:
    """Moore-Penrose inverse ``S diag(0, 1/lambda_1, ...) S^T``."""
    lam = s.eigenvalues
    tol = zero_threshold(s.n, lam[-1] / 2 if s.n > 1 else 1.0)
    if s.n > 1 and lam[1] <= tol:
        raise DisconnectedGraphError(f"graph is disconnected (lambda_1 = {lam[1]:.3e})")
    inv = np.zeros_like(lam)
    inv[1:] = 1.0 / lam[1:]
    Lp = (s.basis * inv) @ s.basis.T
    return 0.5 * (Lp + Lp.T)


def moore_penrose_residuals(A: np.ndarray, Ap: np.ndarray) -> tuple[float, float, float, float]:
    """Max-abs residuals of the four Moore-Penrose conditions.

    In order: ``A Ap A = A``, ``Ap A Ap = Ap``, ``(A Ap)^T = A Ap`` and
    ``(Ap A)^T = Ap A``.
    """
    AAp = A @ Ap
    ApA = Ap @ A
    return (
        float(np.max(np.abs(AAp @ A - A))),
        float(np.max(np.abs(ApA @ Ap - Ap))),
        float(np.max(np.abs(AAp.T - AAp))),
        float(np.max(np.abs(ApA.T - ApA))),
    )


def decomposition_check(g: Graph, s: Spectrum, trials: int, *, seed=None) -> float:
    """Largest residual of the normal-mode energy decomposition.

    For random real ``q`` and ``p`` the harmonic energy ``p.p + q^T L q``
    must equal ``sum_k (u_k . p)**2 + lambda_k (u_k . q)**2`` with ``u_k`` the
    eigenbasis columns. Returns the maximum absolute discrepancy.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    L = laplacian(g)
    worst = 0.0
    for _ in range(trials):
        q = rng.standard_normal(g.n)
        p = rng.standard_normal(g.n)
        worst = max(worst, energy_residual(L, s, q, p))
    return worst


def energy_residual(L: np.ndarray, s: Spectrum, q, p) -> float:
    """``|p.p + q^T L q - sum_k (u_k.p)**2 + lambda_k (u_k.q)**2|`` for one state."""
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    direct = p @ p + q @ L @ q
    P = s.basis.T @ p
    Q = s.basis.T @ q
    modal = np.sum(P**2 + s.eigenvalues * Q**2)
    return float(abs(direct - modal))

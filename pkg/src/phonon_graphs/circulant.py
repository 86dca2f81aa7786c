"""Closed-form Laplacian spectra of circulant graphs ``Ci(n, l)``.

Each vertex of ``Ci(n, l)`` is joined to its ``l`` nearest neighbours on both
sides of a ring, so

    lambda_j = 2l + 1 - sin(j pi (2l+1) / n) / sin(j pi / n),   j = 1..n-1,

with ``lambda_0 = 0``. Equivalently ``lambda_j = 2l - 2 sum_{s=1..l} cos(2 pi j s / n)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import GraphError

__all__ = [
    "CirculantSpectrum",
    "circulant_eigenvalues",
    "cosine_sum_direct",
    "cosine_sum_closed",
    "cosine_sum_check",
]

_SIN_GUARD = 1e-8


@dataclass(frozen=True)
class CirculantSpectrum:
    """Eigenvalues of ``Ci(n, l)`` in index order ``j = 0..n-1`` (not sorted)."""

    n: int
    l: int
    eigenvalues: np.ndarray

    def __post_init__(self):
        self.eigenvalues.setflags(write=False)

    def sorted(self) -> np.ndarray:
        return np.sort(self.eigenvalues)


def _check(n: int, l: int):
    if l < 1 or 2 * l >= n:
        raise GraphError(f"circulant Ci({n},{l}) requires 1 <= l and 2l < n")


def cosine_sum_direct(n: int, l: int, j) -> np.ndarray:
    j = np.asarray(j, dtype=float)
    s = np.arange(1, l + 1)
    return np.cos(2 * np.pi * np.multiply.outer(j, s) / n).sum(axis=-1)


def cosine_sum_closed(n: int, l: int, j) -> np.ndarray:
    """``sum_{s=1..l} cos(s theta)`` as ``cos((l+1) theta/2) sin(l theta/2) / sin(theta/2)``."""
    theta = 2 * np.pi * np.asarray(j, dtype=float) / n
    return np.cos((l + 1) * theta / 2) * np.sin(l * theta / 2) / np.sin(theta / 2)


def circulant_eigenvalues(n: int, l: int) -> CirculantSpectrum:
    """Laplacian eigenvalues of ``Ci(n, l)`` from the closed form.

    Where ``|sin(j pi / n)|`` drops below 1e-8 the direct cosine sum is used
    instead of the sine ratio.
    """
    _check(n, l)
    j = np.arange(1, n)
    t = j * np.pi / n
    denom = np.sin(t)
    safe = np.abs(denom) >= _SIN_GUARD
    lam = np.empty(n)
    lam[0] = 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.sin(t * (2 * l + 1)) / denom
    lam[1:] = np.where(safe, 2 * l + 1 - ratio, 0.0)
    if not safe.all():
        lam[1:][~safe] = 2 * l - 2 * cosine_sum_direct(n, l, j[~safe])
    return CirculantSpectrum(n, l, lam)


def cosine_sum_check(n: int, l: int, j: int) -> float:
    """``|direct cosine sum - closed form|`` for one index ``j``."""
    _check(n, l)
    if not 1 <= j <= n - 1:
        raise ValueError(f"j must lie in 1..{n - 1}")
    return float(abs(cosine_sum_direct(n, l, j) - cosine_sum_closed(n, l, j)))

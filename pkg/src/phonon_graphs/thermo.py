"""Phonon-gas thermodynamics of a harmonic network (hbar = m = k_B = 1).

Mode ``i`` has frequency ``omega_i = sqrt(lambda_i)``. The zero Laplacian
mode is the centre-of-mass translation and is dropped from every sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectral import zero_threshold

__all__ = [
    "ThermoPoint",
    "RegimeIndicator",
    "occupation",
    "einstein",
    "mode_occupation",
    "mode_frequencies",
    "thermo_point",
    "mean_energy",
    "thermal_energy",
    "regime_indicator",
]

_SMALL_X = 1e-8
_LARGE_X = 700.0


@dataclass(frozen=True)
class ThermoPoint:
    beta: float
    avg_N: float
    avg_H: float
    heat: float


@dataclass(frozen=True)
class RegimeIndicator:
    """Thermal-wavelength density ``<N> sqrt(2 pi beta) / V``."""

    value: float
    volume: float


def occupation(x):
    """Bose-Einstein factor ``1 / (e^x - 1)`` for ``x > 0``, overflow-safe."""
    x = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        mid = 1.0 / np.expm1(np.minimum(x, _LARGE_X))
        big = np.exp(-x) / -np.expm1(-x)
        small = 1.0 / x - 0.5
    out = np.where(x < _SMALL_X, small, np.where(x > _LARGE_X, big, mid))
    return out[()] if out.ndim == 0 else out


def einstein(x):
    """Einstein function ``x^2 e^x / (e^x - 1)^2``, written with ``e^-x`` so it never overflows."""
    x = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        em = -np.expm1(-x)
        regular = x * x * np.exp(-x) / (em * em)
        small = 1.0 - x * x / 12.0
    out = np.where(x < _SMALL_X, small, regular)
    return out[()] if out.ndim == 0 else out


def mode_occupation(omega: float, beta: float) -> float:
    """Average phonon number of a single mode of frequency ``omega``."""
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return float(occupation(beta * omega))


def mode_frequencies(eigenvalues) -> np.ndarray:
    """Frequencies of the ``n - 1`` non-translational modes.

    Raises
    ------
    ValueError
        If an eigenvalue is negative beyond rounding, or if more than one
        eigenvalue is numerically zero (a disconnected graph).
    """
    lam = np.sort(np.asarray(eigenvalues, dtype=float))
    n = lam.size
    if n < 2:
        raise ValueError("need at least two eigenvalues")
    tol = zero_threshold(n, lam[-1] / 2)
    if lam[0] < -tol:
        raise ValueError(f"negative eigenvalue {lam[0]:.3e}")
    if abs(lam[0]) > tol:
        raise ValueError("no zero eigenvalue; expected a graph Laplacian spectrum")
    if lam[1] <= tol:
        raise ValueError("more than one zero eigenvalue; graph is disconnected")
    return np.sqrt(lam[1:])


def _sum(terms) -> float:
    return math.fsum(np.ravel(terms))


def mean_energy(omega: np.ndarray, beta: float) -> float:
    return _sum(omega * occupation(beta * omega)) + _sum(omega) / 2


def thermal_energy(eigenvalues, beta: float) -> float:
    """``<H>`` minus the zero-point energy; the only part of ``<H>`` that depends on ``beta``."""
    omega = mode_frequencies(eigenvalues)
    return _sum(omega * occupation(beta * omega))


def thermo_point(eigenvalues, beta: float) -> ThermoPoint:
    """``<N>``, ``<H>`` (with zero-point energy) and ``c`` at inverse temperature ``beta``.

    Sums use :func:`math.fsum`, so results do not depend on mode order.
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    omega = mode_frequencies(eigenvalues)
    x = beta * omega
    return ThermoPoint(
        beta=float(beta),
        avg_N=_sum(occupation(x)),
        avg_H=mean_energy(omega, beta),
        heat=_sum(einstein(x)),
    )


def regime_indicator(tp: ThermoPoint, volume: float = 1.0) -> RegimeIndicator:
    if not volume > 0:
        raise ValueError(f"volume must be positive, got {volume}")
    return RegimeIndicator(tp.avg_N * math.sqrt(2 * math.pi * tp.beta) / volume, float(volume))

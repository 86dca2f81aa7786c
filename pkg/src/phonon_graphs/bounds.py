"""Global bounds on the phonon number and specific heat of a network.

Two scalar inequalities, valid for every ``x > 0``, drive everything here::

    1 / (e^x - 1)          <= alpha_N(k) / x^k
    x^2 e^x / (e^x - 1)^2  <= alpha_E / (x^2 + 1)

Summing them over the normal modes turns them into bounds on ``<N>`` and
``c(beta)`` in terms of the graph ratio ``cap / n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

from .capacity import CapacityProfile, capacity_profile
from .graph import GeneratorSpec, generate
from .thermo import einstein, occupation, thermo_point

__all__ = [
    "BoundConstants",
    "BoundReport",
    "FamilyClassification",
    "lambert_w0",
    "alpha_N",
    "occupation_maximizer",
    "einstein_root_function",
    "einstein_bracket_top",
    "alpha_E",
    "bound_constants",
    "phonon_bound",
    "heat_bound_value",
    "heat_bound",
    "modewise_heat_bound",
    "check_function_bounds",
    "bound_report",
    "classify_family",
]

INV_E = math.exp(-1.0)


def lambert_w0(x: float) -> float:
    """Principal branch of the Lambert W function for real ``x >= -1/e``.

    Halley's iteration from a branch-point series (near ``-1/e``), ``log1p``
    (moderate ``x``) or ``log x - log log x`` (large ``x``).
    """
    x = float(x)
    if math.isnan(x):
        return math.nan
    if x < -INV_E:
        # accept values that are -1/e up to rounding
        if x < -INV_E * (1 + 4 * np.finfo(float).eps):
            raise ValueError(f"lambert_w0 is real only for x >= -1/e, got {x!r}")
        return -1.0
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    if x < -0.25:
        p = math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
    elif x < 3.0:
        w = math.log1p(x) * (1.0 - 0.3 * math.log1p(x) / (1.0 + math.log1p(x)))
    else:
        lx = math.log(x)
        w = lx - math.log(lx)

    for _ in range(64):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if abs(dw) <= 1e-15 * (1.0 + abs(w)):
            break
    return max(w, -1.0)


def occupation_maximizer(k: int) -> float:
    """Positive maximizer ``x* = W0(-k e^-k) + k`` of ``x^k / (e^x - 1)``."""
    return lambert_w0(-k * math.exp(-k)) + k


@lru_cache(maxsize=None)
def alpha_N(k: int) -> float:
    """``alpha_N(k) = -W(-k e^-k) (W(-k e^-k) + k)^(k-1)`` on the principal branch.

    The other real branch, ``W_{-1}``, returns ``-k`` here and collapses the
    maximizer to ``x = 0``.
    """
    if int(k) != k or k < 2:
        raise ValueError(f"alpha_N is defined for integer k >= 2, got {k!r}")
    k = int(k)
    w = lambert_w0(-k * math.exp(-k))
    return -w * (w + k) ** (k - 1)


def einstein_root_function(x):
    """``g(x) = x + 2 + (x + 4) x^2 + e^x (x^3 - 4x^2 + x - 2)``.

    Its unique positive root locates the maximum of ``(x^2 + 1) E(x)``.
    """
    return x + 2 + (x + 4) * x * x + np.exp(x) * (x**3 - 4 * x * x + x - 2)


def einstein_bracket_top() -> float:
    """Positive real root of ``x^3 - 4x^2 + x - 2``, written with radicals."""
    r = math.sqrt(87.0)
    return (np.cbrt(6 * r + 73) + np.cbrt(73 - 6 * r) + 4) / 3


@lru_cache(maxsize=None)
def alpha_E() -> tuple[float, float]:
    """Return ``(x_star, alpha_E)`` where ``alpha_E = max_x (x^2 + 1) E(x)``.

    ``x_star`` is bracketed in ``(1, s0)``: ``g(1) = 8 - 4e < 0`` and
    ``g(s0) > 0`` since the cubic factor vanishes at ``s0``.
    """
    lo, hi = 1.0, einstein_bracket_top()
    if not einstein_root_function(lo) < 0 < einstein_root_function(hi):
        raise ArithmeticError("root of g is not bracketed by (1, s0)")
    x = brentq(einstein_root_function, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    ex = math.exp(x)
    alpha = (x * x + 1) * x * x * ex / (ex - 1) ** 2
    return x, alpha


@dataclass(frozen=True)
class BoundConstants:
    alpha_N: dict[int, float]
    alpha_E: float
    x_star_E: float


def bound_constants(ks: Sequence[int] = (2, 3, 4, 5)) -> BoundConstants:
    x, a = alpha_E()
    return BoundConstants({k: alpha_N(k) for k in ks}, a, x)


def _average_capacity(profile) -> float:
    return profile.average if isinstance(profile, CapacityProfile) else float(profile)


def _check_beta(beta):
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")


def phonon_bound(profile, n: int, beta: float) -> float:
    """Upper bound ``alpha_N(2) cap / (beta^2 n)`` on the total phonon number.

    ``profile`` is a :class:`CapacityProfile` or the average capacity itself.
    """
    _check_beta(beta)
    return alpha_N(2) * _average_capacity(profile) / (beta * beta * n)


def heat_bound_value(profile, n: int, beta: float) -> float:
    """``alpha_E r / (1 + r)`` with ``r = cap / (beta^2 n)``, ignoring the validity condition."""
    _check_beta(beta)
    r = _average_capacity(profile) / (beta * beta * n)
    return alpha_E()[1] * r / (1 + r)


def heat_bound(profile, n: int, beta: float) -> float | None:
    """Low-temperature specific-heat bound, or ``None`` unless ``beta^2 > cap / n``."""
    _check_beta(beta)
    if not beta * beta > _average_capacity(profile) / n:
        return None
    return heat_bound_value(profile, n, beta)


def modewise_heat_bound(eigenvalues, beta: float) -> float:
    """``alpha_E * sum_i 1 / (beta^2 lambda_i + 1)`` over the nonzero modes.

    This is the bound obtained by applying the Einstein inequality mode by
    mode, before any aggregation into ``cap / n``.
    """
    _check_beta(beta)
    lam = np.sort(np.asarray(eigenvalues, dtype=float))[1:]
    return alpha_E()[1] * math.fsum(1.0 / (beta * beta * lam + 1.0))


def check_function_bounds(k: int, grid) -> float:
    """Largest violation of the two scalar inequalities over ``grid``.

    Returns ``max(1/(e^x-1) - alpha_N(k)/x^k, E(x) - alpha_E/(x^2+1))``; a
    non-positive result means both hold everywhere on the grid.
    """
    x = np.asarray(grid, dtype=float)
    if np.any(x <= 0):
        raise ValueError("grid must be strictly positive")
    a_n = alpha_N(k)
    a_e = alpha_E()[1]
    with np.errstate(over="ignore"):
        v_n = occupation(x) - a_n / x**k
    v_e = einstein(x) - a_e / (x * x + 1)
    return float(np.max(np.maximum(v_n, v_e)))


@dataclass(frozen=True)
class BoundReport:
    beta: float
    cap_ratio: float
    phonon_bound: float
    phonon_actual: float
    heat_bound: float | None
    heat_actual: float
    holds_N: bool
    holds_c: bool | None


def bound_report(profile, eigenvalues, beta: float) -> BoundReport:
    """Evaluate both bounds against the exact thermodynamics of one spectrum."""
    n = len(eigenvalues)
    tp = thermo_point(eigenvalues, beta)
    pb = phonon_bound(profile, n, beta)
    hb = heat_bound(profile, n, beta)
    return BoundReport(
        beta=float(beta),
        cap_ratio=_average_capacity(profile) / n,
        phonon_bound=pb,
        phonon_actual=tp.avg_N,
        heat_bound=hb,
        heat_actual=tp.heat,
        holds_N=tp.avg_N <= pb,
        holds_c=None if hb is None else tp.heat < hb,
    )


@dataclass
class FamilyClassification:
    family: Callable[[int], GeneratorSpec]
    samples: list[tuple[int, float]] = field(default_factory=list)
    slope: float = math.nan
    verdict: str = ""


def classify_family(
    family: Callable[[int], GeneratorSpec],
    ns: Sequence[int],
    *,
    tolerance: float = 0.1,
    window: float = 0.5,
) -> FamilyClassification:
    """Decide whether a graph family keeps ``<N>`` bounded as it grows.

    The average capacity is computed for each size in ``ns`` and the growth
    exponent of ``cap`` against ``n`` is fitted on a log-log scale over the last
    ``window`` fraction of samples. Linear growth (slope ``<= 1 + tolerance``)
    keeps ``cap / n`` and hence the phonon bound finite.

    Returns
    -------
    FamilyClassification
        ``samples`` holds ``(n, cap / n)`` pairs; ``verdict`` is ``"bounded"``
        or ``"divergent"``.
    """
    ns = [int(n) for n in ns]
    if len(ns) < 4:
        raise ValueError("need at least 4 sample sizes")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("sample sizes must be strictly increasing")
    caps = []
    for n in ns:
        caps.append(capacity_profile(generate(family(n))).average)
    caps = np.array(caps)
    start = min(int(len(ns) * (1 - window)), len(ns) - 2)
    slope = np.polyfit(np.log(ns[start:]), np.log(caps[start:]), 1)[0]
    return FamilyClassification(
        family=family,
        samples=[(n, c / n) for n, c in zip(ns, caps)],
        slope=float(slope),
        verdict="bounded" if slope <= 1 + tolerance else "divergent",
    )

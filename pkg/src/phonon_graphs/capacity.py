"""Wiener capacities and the Kirchhoff index.

The average Wiener capacity of a connected graph equals its Kirchhoff index
``R(G) = n * sum_{i>=1} 1/lambda_i`` and ``n * tr(L^+)``. The three routes are
computed independently here so they can validate one another.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import DisconnectedGraphError, Graph, is_connected
from .spectral import Spectrum, graph_spectrum, pseudo_inverse, zero_threshold

__all__ = [
    "CapacityProfile",
    "equilibrium_measure",
    "wiener_capacity",
    "kirchhoff_index",
    "capacity_profile",
]


@dataclass(frozen=True)
class CapacityProfile:
    """Per-vertex Wiener capacities with their mean and the Kirchhoff index.

    ``kirchhoff`` comes from the eigenvalues; ``average`` from the per-vertex
    capacities. They agree to rounding for a connected graph.
    """

    per_vertex: np.ndarray
    average: float
    kirchhoff: float
    trace_route: float

    @property
    def n(self) -> int:
        return len(self.per_vertex)

    @property
    def ratio(self) -> float:
        """``cap / n``, the graph quantity that controls both thermal bounds."""
        return self.average / self.n


def _require_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedGraphError()


def _check_vertex(g: Graph, i: int):
    if not 1 <= i <= g.n:
        raise IndexError(f"vertex {i} outside 1..{g.n}")


def _measure_from_pinv(Lp: np.ndarray, i: int) -> np.ndarray:
    n = Lp.shape[0]
    rhs = np.ones(n)
    rhs[i - 1] -= n
    v = Lp @ rhs
    # kernel of L is the constant vector; fix it with v_i = 0
    v -= v[i - 1]
    v[i - 1] = 0.0
    return v


def equilibrium_measure(g: Graph, i: int, *, spectrum: Spectrum | None = None) -> np.ndarray:
    """Solve ``L v = 1 - n e_i`` with the normalization ``v_i = 0``.

    Parameters
    ----------
    g : Graph
        Connected graph.
    i : int
        1-based vertex label.
    spectrum : Spectrum, optional
        Reused if the caller already diagonalized ``L(g)``.
    """
    _require_connected(g)
    _check_vertex(g, i)
    s = spectrum if spectrum is not None else graph_spectrum(g)
    return _measure_from_pinv(pseudo_inverse(s), i)


def wiener_capacity(g: Graph, i: int, *, spectrum: Spectrum | None = None) -> float:
    """Component sum of the equilibrium measure of vertex ``i``."""
    return math.fsum(equilibrium_measure(g, i, spectrum=spectrum))


def kirchhoff_index(eigenvalues) -> float:
    """``n * sum(1 / lambda_i)`` over the nonzero Laplacian eigenvalues.

    ``eigenvalues`` holds all ``n`` eigenvalues, the zero one included, in any
    order; exactly one of them must be (numerically) zero.
    """
    lam = np.sort(np.asarray(eigenvalues, dtype=float))
    n = len(lam)
    if n == 1:
        return 0.0
    if lam[1] <= zero_threshold(n, lam[-1] / 2):
        raise DisconnectedGraphError()
    return n * math.fsum(1.0 / lam[1:])


def capacity_profile(g: Graph, *, spectrum: Spectrum | None = None) -> CapacityProfile:
    _require_connected(g)
    s = spectrum if spectrum is not None else graph_spectrum(g)
    Lp = pseudo_inverse(s)
    caps = np.array([math.fsum(_measure_from_pinv(Lp, i)) for i in range(1, g.n + 1)])
    return CapacityProfile(
        per_vertex=caps,
        average=math.fsum(caps) / g.n,
        kirchhoff=kirchhoff_index(s.eigenvalues),
        trace_route=g.n * float(np.trace(Lp)),
    )

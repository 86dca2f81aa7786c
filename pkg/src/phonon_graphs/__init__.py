"""Phonon thermodynamics of harmonic oscillator networks on graphs."""
from .bounds import (
    BoundConstants,
    BoundReport,
    FamilyClassification,
    alpha_E,
    alpha_N,
    bound_constants,
    bound_report,
    check_function_bounds,
    classify_family,
    heat_bound,
    heat_bound_value,
    lambert_w0,
    modewise_heat_bound,
    phonon_bound,
)
from .capacity import CapacityProfile, capacity_profile, equilibrium_measure, kirchhoff_index, wiener_capacity
from .circulant import CirculantSpectrum, circulant_eigenvalues, cosine_sum_check
from .graph import (
    DisconnectedGraphError,
    EdgeListParseError,
    GeneratorSpec,
    Graph,
    GraphError,
    generate,
    is_connected,
    laplacian,
    parse_edge_list,
)
from .spectral import Spectrum, decomposition_check, eigendecompose, graph_spectrum, pseudo_inverse
from .thermo import RegimeIndicator, ThermoPoint, mode_occupation, regime_indicator, thermo_point

__version__ = "0.1.0"

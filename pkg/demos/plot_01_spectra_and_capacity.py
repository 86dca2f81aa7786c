"""
Laplacian spectra and the Kirchhoff index
=========================================

Build a few small graphs, diagonalize their Laplacians and compute the
average Wiener capacity three different ways.
"""

# %%
# Graphs come from generators or from the edge-list text format.
import numpy as np

from phonon_graphs import (
    GeneratorSpec,
    capacity_profile,
    generate,
    graph_spectrum,
    parse_edge_list,
    pseudo_inverse,
)

path = generate(GeneratorSpec("path", 4))
star = parse_edge_list("""n=5
# a star with centre 1
1 2
1 3
1 4
1 5
""")

# %%
# The spectrum starts with the zero mode; its eigenvector is the uniform vector.
for name, g in [("P4", path), ("star", star)]:
    s = graph_spectrum(g)
    print(name, "eigenvalues:", np.round(s.eigenvalues, 6))
    print("   zero mode:", np.round(s.basis[:, 0], 6))

# %%
# Average capacity, Kirchhoff index from the eigenvalues, and n tr(L^+)
# coincide. For the path the closed form is (n-1) n (n+1) / 6 = 10.
for name, g in [("P4", path), ("star", star)]:
    s = graph_spectrum(g)
    prof = capacity_profile(g, spectrum=s)
    print(f"{name}: per-vertex {np.round(prof.per_vertex, 6)}")
    print(f"   average {prof.average:.10f}  kirchhoff {prof.kirchhoff:.10f}"
          f"  n tr(L+) {g.n * np.trace(pseudo_inverse(s)):.10f}")

"""
Low-temperature specific-heat bound
===================================

Compare the exact specific heat of Ci(1000, l) with the bound
alpha_E r / (1 + r), r = cap / (beta^2 n), as a function of T = 1/beta.
The bound is claimed for T < sqrt(n / cap); on these graphs it keeps holding
well past that line.
"""

# %%
import numpy as np

from phonon_graphs import alpha_E, graph_spectrum, generate, GeneratorSpec, heat_bound, modewise_heat_bound, thermo_point
from phonon_graphs.sweeps import SweepConfig, run_sweep

x_star, a_e = alpha_E()
print(f"alpha_E = {a_e:.8f} at x* = {x_star:.8f}")

rows, csv_path, svg_path = run_sweep(SweepConfig("bound_vs_T", output_dir="sweeps"))
for l in (100, 200, 300, 400):
    mine = [r for r in rows if r["l"] == l]
    broken = [r["T"] for r in mine if r["bound"] < r["exact"]]
    print(f"l={l}: threshold T={mine[0]['threshold_T']:.3f}, bound first fails at T={broken[0] if broken else None}")

# %%
# The aggregated bound is not universal. For the triangle at beta = 2 the
# threshold condition holds, yet the exact heat exceeds alpha_E r/(1+r).
# Summing the Einstein inequality mode by mode still gives a valid bound.
lam = graph_spectrum(generate(GeneratorSpec("complete", 3))).eigenvalues
print("K3, beta=2: c =", thermo_point(lam, 2.0).heat,
      " aggregated bound =", heat_bound(2.0, 3, 2.0),
      " mode-wise bound =", modewise_heat_bound(lam, 2.0))

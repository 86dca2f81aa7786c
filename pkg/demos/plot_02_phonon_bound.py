"""
Phonon number against its capacity bound
========================================

The total phonon number never exceeds alpha_N(2) cap / (beta^2 n). Complete
graphs keep the bound below alpha_N(2) / beta^2 for every n, paths let it
grow like n^2.
"""

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from phonon_graphs import GeneratorSpec, alpha_N, capacity_profile, generate, graph_spectrum, phonon_bound, thermo_point

print("alpha_N(k):", {k: round(alpha_N(k), 6) for k in (2, 3, 4, 5)})

# %%
beta = 1.0
ns = np.arange(2, 61)
fig, ax = plt.subplots(figsize=(6, 4))
for kind, style in [("complete", "-"), ("path", "--")]:
    actual, bound = [], []
    for n in ns:
        g = generate(GeneratorSpec(kind, int(n)))
        s = graph_spectrum(g)
        actual.append(thermo_point(s.eigenvalues, beta).avg_N)
        bound.append(phonon_bound(capacity_profile(g, spectrum=s), g.n, beta))
    ax.plot(ns, actual, style, label=f"{kind}: <N>")
    ax.plot(ns, bound, style, alpha=0.5, label=f"{kind}: bound")
ax.set_yscale("log")
ax.set_xlabel("n")
ax.legend()
fig.savefig("phonon_bound.svg")
print("wrote phonon_bound.svg")

"""
Circulant families: phonons, capacity and specific heat
=======================================================

Circulant graphs Ci(n, l) with l = floor((n/2)^r) interpolate between the
cycle (r = 0) and the complete graph (r = 1). Their spectra are known in
closed form, so sweeps up to n = 1000 take seconds.
"""

# %%
from phonon_graphs.sweeps import SweepConfig, run_sweep

ns = list(range(10, 1001, 10))
for experiment in ("phonons_vs_n", "cap_vs_n"):
    rows, csv_path, svg_path = run_sweep(
        SweepConfig(experiment, n_range=ns, output_dir="sweeps", log_scale=True)
    )
    print(experiment, "->", csv_path, svg_path)

# %%
# Sparse families (small r) accumulate phonons as n grows; dense ones freeze out.
for r in (0.0, 0.4, 1.0):
    small_rows, _, _ = run_sweep(
        SweepConfig("phonons_vs_n", n_range=[250, 500, 1000], r_values=[r], output_dir="sweeps/small")
    )
    print(f"r={r}: <N> at n=250/500/1000 =", [f"{row['avg_N']:.4g}" for row in small_rows])

# %%
# At fixed n = 1000 and beta = 1, adding neighbours lowers the specific heat.
rows, csv_path, _ = run_sweep(SweepConfig("heat_vs_l", n=1000, output_dir="sweeps"))
print("c(l=1) =", rows[0]["heat"], " c(l=499) =", rows[-1]["heat"])

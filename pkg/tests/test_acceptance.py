"""Exit criteria for the package, one test per criterion.

Each test prints a single PASS/FAIL line; the lines are repeated in the
pytest terminal summary under "acceptance criteria".
"""
import math
import time

import numpy as np
import pytest

from phonon_graphs.bounds import (
    alpha_E,
    alpha_N,
    check_function_bounds,
    classify_family,
    heat_bound,
    lambert_w0,
    phonon_bound,
)
from phonon_graphs.capacity import capacity_profile, kirchhoff_index
from phonon_graphs.circulant import circulant_eigenvalues
from phonon_graphs.graph import GeneratorSpec, generate, laplacian
from phonon_graphs.spectral import decomposition_check, eigendecompose, graph_spectrum
from phonon_graphs.sweeps import family_eigenvalues, neighbours_for_power
from phonon_graphs.thermo import thermal_energy, thermo_point

from conftest import acceptance_line, random_corpus

BETAS = (0.1, 0.5, 1.0, 2.0, 10.0)


def gen(kind, n, l=None):
    return generate(GeneratorSpec(kind, n, l))


def _corpus():
    """(label, eigenvalues, average capacity) for every graph in the bound corpus."""
    items = []
    for n in range(3, 301):
        for l in range(1, (n - 1) // 2 + 1):
            lam = circulant_eigenvalues(n, l).eigenvalues
            items.append((f"Ci({n},{l})", lam, kirchhoff_index(lam)))
    for g in random_corpus(200, 100, seed=2024):
        s = graph_spectrum(g)
        items.append((f"random(n={g.n},m={g.num_edges})", s.eigenvalues, capacity_profile(g, spectrum=s).average))
    for n in range(2, 101):
        for kind in ("complete", "path"):
            g = gen(kind, n)
            s = graph_spectrum(g)
            items.append((f"{kind}({n})", s.eigenvalues, capacity_profile(g, spectrum=s).average))
    return items


@pytest.fixture(scope="module")
def corpus():
    return _corpus()


def test_criterion_01_constants():
    t0 = time.perf_counter()
    expected = {2: 0.648, 3: 1.421, 4: 4.780, 5: 21.201}
    got = {k: alpha_N(k) for k in expected}
    a_e = alpha_E()[1]
    elapsed = time.perf_counter() - t0
    ok = all(abs(got[k] - v) <= 1e-3 for k, v in expected.items()) and abs(a_e - 5.23) <= 0.01
    detail = ", ".join(f"alpha_N({k})={v:.6f}" for k, v in got.items()) + f", alpha_E={a_e:.6f} ({elapsed*1e3:.1f} ms)"
    assert acceptance_line(1, ok, detail), detail


def test_criterion_02_closed_form_capacities():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(2, 101):
        worst = max(
            worst,
            abs(capacity_profile(gen("complete", n)).average / (n - 1) - 1),
            abs(capacity_profile(gen("path", n)).average / ((n - 1) * n * (n + 1) / 6) - 1),
        )
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed < 30
    detail = f"max relative error {worst:.2e} (<= 1e-8), {elapsed:.1f} s (< 30 s)"
    assert acceptance_line(2, ok, detail), detail


def test_criterion_03_circulant_spectra():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(5, 61):
        for l in range(1, (n - 1) // 2 + 1):
            closed = circulant_eigenvalues(n, l).sorted()
            dense = eigendecompose(laplacian(gen("circulant", n, l))).eigenvalues
            worst = max(worst, np.max(np.abs(closed - dense)) / (2 * l + 1))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 60
    detail = f"max error/(2l+1) {worst:.2e} (<= 1e-9), {elapsed:.1f} s (< 60 s)"
    assert acceptance_line(3, ok, detail), detail


def test_criterion_04_phonon_bound(corpus):
    violations = []
    checks = 0
    for label, lam, cap in corpus:
        n = len(lam)
        for beta in BETAS:
            checks += 1
            if not thermo_point(lam, beta).avg_N <= phonon_bound(cap, n, beta):
                violations.append((label, beta))
    k2 = thermo_point([0.0, 2.0], 1.0).avg_N / phonon_bound(1.0, 2, 1.0)
    ok = not violations and k2 >= 0.99
    detail = f"{len(violations)} violations in {checks} checks; K2 tightness {k2:.4f} (>= 0.99)"
    assert acceptance_line(4, ok, detail), f"{detail}: {violations[:10]}"


def test_criterion_05_heat_bound(corpus):
    violations = []
    checks = 0
    for label, lam, cap in corpus:
        n = len(lam)
        for beta in BETAS:
            hb = heat_bound(cap, n, beta)
            if hb is None:
                continue
            checks += 1
            c = thermo_point(lam, beta).heat
            if not c < hb:
                violations.append((label, beta, c, hb))
    ok = not violations
    detail = f"{len(violations)} violations in {checks} applicable checks"
    if violations:
        worst = max(violations, key=lambda v: v[2] / v[3])
        detail += f"; worst {worst[0]} at beta={worst[1]}: c={worst[2]:.4f} vs bound {worst[3]:.4f}"
    assert acceptance_line(5, ok, detail), f"{detail}: {[v[:2] for v in violations[:15]]}"


def test_criterion_06_figure4():
    t0 = time.perf_counter()
    n = 1000
    temps = np.round(np.arange(1, 3001) * 1e-3, 12)
    theoretical, empirical = [], []
    ok_a = ok_b = True
    for l in (100, 200, 300, 400):
        lam = circulant_eigenvalues(n, l).eigenvalues
        cap = kirchhoff_index(lam)
        t_max = math.sqrt(n / cap)
        a_e = alpha_E()[1]
        exact = np.array([thermo_point(lam, 1 / T).heat for T in temps])
        r = cap / (n * (1 / temps) ** 2)
        bound = a_e * r / (1 + r)
        holds = bound >= exact
        ok_a &= bool(np.all(holds[temps <= t_max]))
        fails = temps[~holds]
        crossover = float(fails[0]) if fails.size else math.inf
        ok_b &= crossover >= t_max
        theoretical.append(t_max)
        empirical.append(crossover)
    ok_c = all(np.diff(theoretical) >= 0) and all(np.diff(empirical) >= 0)
    elapsed = time.perf_counter() - t0
    ok = ok_a and ok_b and ok_c
    detail = (
        f"(a) {ok_a} (b) {ok_b} (c) {ok_c}; sqrt(n/cap)="
        + "/".join(f"{t:.3f}" for t in theoretical)
        + ", crossover="
        + "/".join(f"{t:.3f}" for t in empirical)
        + f" for l=100/200/300/400 ({elapsed:.1f} s)"
    )
    assert acceptance_line(6, ok, detail), detail


def _quartile_means(values):
    values = np.asarray(values)
    return [chunk.mean() for chunk in np.array_split(values, 4)]


def test_criterion_07_figures_1_2():
    ns = list(range(10, 1001, 10))
    checks = []
    for r in (0.0, 0.2, 0.4, 0.8, 1.0):
        N, ratio = [], []
        for n in ns:
            lam = family_eigenvalues(n, neighbours_for_power(n, r))
            N.append(thermo_point(lam, 1.0).avg_N)
            ratio.append(kirchhoff_index(lam) / n)
        qN, qR = _quartile_means(N), _quartile_means(ratio)
        if r <= 0.4:
            checks.append((f"r={r} <N> up", qN[3] > qN[2]))
            checks.append((f"r={r} cap/n up", qR[3] > qR[2]))
        else:
            checks.append((f"r={r} <N> down", qN[3] < qN[2]))
    ok = all(c for _, c in checks)
    detail = "; ".join(f"{name}: {'ok' if c else 'no'}" for name, c in checks)
    assert acceptance_line(7, ok, detail), detail


def test_criterion_08_figure3():
    t0 = time.perf_counter()
    heat = np.array([thermo_point(family_eigenvalues(1000, l), 1.0).heat for l in range(1, 500)])
    elapsed = time.perf_counter() - t0
    worst = float(np.max(np.diff(heat)))
    ok = worst <= 1e-9 and elapsed < 10
    detail = f"largest adjacent increase {worst:.2e} (<= 1e-9), c(l=1)={heat[0]:.3f} -> c(l=499)={heat[-1]:.3f}, {elapsed:.1f} s"
    assert acceptance_line(8, ok, detail), detail


def test_criterion_09_classifier():
    ns = list(range(10, 201, 10))
    complete = classify_family(lambda n: GeneratorSpec("complete", n), ns)
    path = classify_family(lambda n: GeneratorSpec("path", n), ns)
    ok = complete.verdict == "bounded" and path.verdict == "divergent"
    detail = f"complete: {complete.verdict} (slope {complete.slope:.3f}); path: {path.verdict} (slope {path.slope:.3f})"
    assert acceptance_line(9, ok, detail), detail


def test_criterion_10_property_suites():
    results = {}

    # energy decomposition, residual relative to the largest sampled energy
    worst = 0.0
    for g in [gen("path", 2), gen("path", 3), gen("circulant", 50, 5)] + random_corpus(10, 80, seed=99):
        s = graph_spectrum(g)
        rng = np.random.default_rng(0)
        L = laplacian(g)
        scale = max(
            p @ p + q @ L @ q
            for q, p in ((rng.standard_normal(g.n), rng.standard_normal(g.n)) for _ in range(100))
        )
        worst = max(worst, decomposition_check(g, s, 100, seed=0) / scale)
    results["decomposition"] = worst <= 1e-10

    # three Kirchhoff routes
    ok = True
    graphs = random_corpus(40, 200, seed=31) + [gen("circulant", n, l) for n in (7, 20, 41) for l in range(1, (n - 1) // 2 + 1)]
    for g in graphs:
        prof = capacity_profile(g)
        R = prof.kirchhoff
        ok &= abs(R - prof.average) <= 1e-8 * R and abs(prof.trace_route - prof.average) <= 1e-8 * R
    results["kirchhoff"] = ok

    # global scalar inequalities
    grid = np.logspace(-6, math.log10(50), 10_000)
    results["function_bounds"] = all(check_function_bounds(k, grid) <= 1e-12 for k in (2, 3, 4, 5))

    # Lambert residual
    xs = np.concatenate([-math.exp(-1) + np.logspace(-12, -0.5, 500), np.logspace(-8, 6, 500), -np.logspace(-8, -0.5, 200)])
    xs = xs[xs >= -math.exp(-1)]
    results["lambert"] = all(
        abs(lambert_w0(x) * math.exp(lambert_w0(x)) - x) <= 1e-12 * max(1.0, abs(x)) for x in xs
    )

    # c = -beta^2 dH/dbeta by central differences
    rng = np.random.default_rng(5)
    ok = True
    for _ in range(50):
        beta = float(rng.uniform(0.05, 10))
        # beta*omega <= 20 keeps the O(h^2) truncation below the tolerance
        lam = np.concatenate([[0.0], (rng.uniform(0.01, 20, rng.integers(1, 60)) / beta) ** 2])
        h = 1e-4 * beta
        c = thermo_point(lam, beta).heat
        dH = (thermal_energy(lam, beta + h) - thermal_energy(lam, beta - h)) / (2 * h)
        ok &= abs(c + beta * beta * dH) <= 1e-6 * c
    results["finite_difference"] = ok

    detail = ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in results.items())
    assert acceptance_line(10, all(results.values()), detail), detail

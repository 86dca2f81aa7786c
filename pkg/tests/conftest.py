import numpy as np
import pytest

from phonon_graphs.graph import Graph


def random_connected_graph(rng, n, extra_p=None):
    """Random spanning tree plus independent extra edges."""
    order = rng.permutation(n) + 1
    edges = set()
    for k in range(1, n):
        parent = order[rng.integers(0, k)]
        child = order[k]
        edges.add((min(parent, child), max(parent, child)))
    p = rng.uniform(0.0, 0.5) if extra_p is None else extra_p
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < p:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


def random_corpus(count, n_max, seed):
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng, int(rng.integers(2, n_max + 1))) for _ in range(count)]


def golden_max(f, lo, hi, tol=1e-12):
    """Golden-section search for the maximum of a unimodal f on [lo, hi]."""
    invphi = (np.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol * (1 + abs(a) + abs(b)):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


ACCEPTANCE_LINES: list[str] = []


def acceptance_line(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

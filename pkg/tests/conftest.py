import os

import numpy as np
import pytest

from qwalk import graph as gr

SEED = int(os.environ.get("QWALK_SEED", "20161"))

NAMED = {
    "K1": gr.complete(1),
    "P2": gr.path(2),
    "P3": gr.path(3),
    "P4": gr.path(4),
    "C4": gr.cycle(4),
    "C5": gr.cycle(5),
    "K4": gr.complete(4),
    "star3": gr.star(3),
    "Q3": gr.hypercube(3),
    "P3xP3": gr.cartesian_power(gr.path(3), 2),
    "P3^3": gr.cartesian_power(gr.path(3), 3),
}


def gid(g):
    return f"n{g.n}-m{g.m}-{hash(g.edges) & 0xffff:04x}"


def random_connected_graph(rng, n):
    """A random spanning tree plus G(n, p) edges with p drawn per graph."""
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        u, v = int(order[i]), int(order[rng.integers(i)])
        edges.add((min(u, v), max(u, v)))
    p = rng.uniform(0.05, 0.6)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return gr.Graph(n, tuple(edges))


def random_graphs(count, n_max, seed=SEED, n_min=1):
    rng = np.random.default_rng(seed)
    return [random_connected_graph(rng, int(rng.integers(n_min, n_max + 1))) for _ in range(count)]


@pytest.fixture(scope="session")
def named_graphs():
    return NAMED


# acceptance criteria record one line each; printed at the end of the run
_CRITERIA = []


@pytest.fixture
def criterion():
    def record(label, ok, detail=""):
        _CRITERIA.append((label, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")

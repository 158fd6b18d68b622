import pytest

from qwalk import graph as gr
from qwalk.hamiltonian import HamiltonianValidationError, Kind, build, trace, trace_square, validate

from conftest import NAMED, gid, random_graphs


def test_examples():
    assert build(gr.path(2), Kind.ADJACENCY).entries == ((0, 1), (1, 0))
    assert build(gr.path(2), Kind.LAPLACIAN).entries == ((1, -1), (-1, 1))
    assert build(gr.path(3), "adjacency").entries == ((0, 1, 0), (1, 0, 1), (0, 1, 0))
    assert build(gr.path(3), "signless").entries == ((1, 1, 0), (1, 2, 1), (0, 1, 1))


def test_weighted():
    g = gr.Graph(3, ((0, 1), (1, 2)), (2, 3))
    assert build(g, Kind.WEIGHTED_ADJACENCY).entries == ((0, 2, 0), (2, 0, 3), (0, 3, 0))
    assert build(g, Kind.LAPLACIAN).entries == ((2, -2, 0), (-2, 5, -3), (0, -3, 3))


def test_trace_square_examples():
    assert trace_square(build(gr.path(3), Kind.ADJACENCY)) == 4
    assert trace_square(build(gr.hypercube(3), Kind.ADJACENCY)) == 24
    l = build(gr.path(2), Kind.LAPLACIAN).entries
    direct = sum(l[i][k] * l[k][i] for i in range(2) for k in range(2))
    assert trace_square(build(gr.path(2), Kind.LAPLACIAN)) == direct == 4


@pytest.mark.parametrize("g", list(NAMED.values()) + random_graphs(30, 12), ids=gid)
def test_trace_identities(g):
    assert trace_square(build(g, Kind.ADJACENCY)) == 2 * g.m
    assert trace(build(g, Kind.LAPLACIAN)) == 2 * g.m
    assert all(sum(row) == 0 for row in build(g, Kind.LAPLACIAN).entries)


@pytest.mark.parametrize("g", random_graphs(20, 8, seed=7), ids=gid)
@pytest.mark.parametrize("kind", [Kind.ADJACENCY, Kind.LAPLACIAN, Kind.SIGNLESS_LAPLACIAN])
def test_validator_metamorphic(g, kind):
    h = build(g, kind)
    assert build(g, Kind.CUSTOM, h.entries).entries == h.entries
    if g.m < 2:
        return
    for u, v in g.edges:
        rows = [list(r) for r in h.entries]
        rows[u][v] = rows[v][u] = -rows[u][v]
        with pytest.raises(HamiltonianValidationError, match="sign") as info:
            validate(rows, g)
        assert info.value.entry is not None


def test_validator_errors():
    g = gr.path(3)
    with pytest.raises(HamiltonianValidationError, match="symmetric") as info:
        validate([[0, 1, 0], [2, 0, 1], [0, 1, 0]], g)
    assert info.value.entry == (0, 1)
    with pytest.raises(HamiltonianValidationError, match="pattern"):
        validate([[0, 1, 1], [1, 0, 1], [1, 1, 0]], g)
    with pytest.raises(HamiltonianValidationError, match="non-integer"):
        validate([[0, 0.5, 0], [0.5, 0, 1], [0, 1, 0]], g)
    with pytest.raises(HamiltonianValidationError):
        validate([[0, 1], [1, 0]], g)
    with pytest.raises(HamiltonianValidationError):
        build(g, Kind.CUSTOM)


def test_custom_signed_and_diagonal():
    g = gr.path(3)
    h = build(g, Kind.CUSTOM, [[5, -2, 0], [-2, 0, -1], [0, -1, -4]])
    assert h.entries[0][0] == 5


def test_json_dump():
    import json
    doc = json.loads(build(gr.path(2), Kind.LAPLACIAN).to_json())
    assert doc == {"kind": "laplacian", "entries": [[1, -1], [-1, 1]]}

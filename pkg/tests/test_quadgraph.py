import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zccs.gbf import GBF
from zccs.quadgraph import (
    ClassificationError,
    GraphPartition,
    QuadGraph,
    check_partition,
    classify,
    delete_vertices,
    find_deletion_sets,
    quadratic_part,
)

Z4_EDGES = {(2, 3): 2, (1, 3): 2, (0, 2): 2, (0, 3): 2, (0, 1): 2, (0, 4): 2}


def z4_graph():
    return QuadGraph.from_edges(5, Z4_EDGES)


def nx_accepts(g: QuadGraph, deleted, q) -> bool:
    """Reference test: surviving edges all q/2 and forming one simple path."""
    G = nx.Graph()
    G.add_nodes_from(g.vertices - set(deleted))
    for (i, j), w in g.edges.items():
        if i not in deleted and j not in deleted:
            if q % 2 or w != q // 2:
                return False
            G.add_edge(i, j)
    if G.number_of_nodes() == 0:
        return False
    H = G.subgraph([v for v in G if G.degree(v) > 0])
    if H.number_of_nodes() == 0:
        return True
    return nx.is_connected(H) and nx.is_tree(H) and max(d for _, d in H.degree()) <= 2


@st.composite
def quadgraphs(draw, max_m=6):
    q = draw(st.sampled_from((2, 4)))
    m = draw(st.integers(1, max_m))
    pairs = list(itertools.combinations(range(m), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = {e: draw(st.sampled_from([q // 2] * 3 + list(range(1, q)))) for e in chosen}
    return q, QuadGraph.from_edges(m, edges)


def test_quadratic_part_examples():
    terms = dict(Z4_EDGES)
    terms.update({(0,): 1, (1,): 3})
    g = quadratic_part(GBF(4, 5, terms))
    assert g.edges == {tuple(sorted(e)): 2 for e in Z4_EDGES}
    assert quadratic_part(GBF(4, 3, {(0,): 1, (2,): 3})).edges == {}
    assert quadratic_part(GBF(4, 2, {(0, 1): 3})).edges == {(0, 1): 3}
    with pytest.raises(ValueError):
        quadratic_part(GBF(2, 3, {(0, 1, 2): 1}))


def test_delete_vertices_examples():
    h = delete_vertices(z4_graph(), {0})
    assert h.edges == {(2, 3): 2, (1, 3): 2}
    assert h.vertices == frozenset({1, 2, 3, 4})
    assert h.degree(4) == 0
    assert delete_vertices(z4_graph(), set()) == z4_graph()
    empty = delete_vertices(z4_graph(), range(5))
    assert empty.vertices == frozenset() and empty.edges == {}
    with pytest.raises(ValueError):
        delete_vertices(z4_graph(), {7})


def test_classify_z4_graph():
    back, fwd = classify(z4_graph(), {0}, 4)
    assert back.path == (2, 3, 1) and back.gamma == 1
    assert fwd.path == (1, 3, 2) and fwd.gamma == 2
    assert back.isolated == fwd.isolated == (4,)
    assert back.deleted == (0,)


def test_classify_plain_path_and_single_vertex():
    g = QuadGraph.from_edges(3, {(0, 1): 1, (1, 2): 1})
    _, fwd = classify(g, (), 2)
    assert fwd.path == (0, 1, 2) and fwd.isolated == ()
    lone = QuadGraph.from_edges(1, {})
    back, fwd = classify(lone, (), 2)
    assert back.path == fwd.path == (0,)
    assert back.gamma == fwd.gamma == 0


@pytest.mark.parametrize(
    "m,edges,q,reason",
    [
        (3, {(0, 1): 2, (1, 2): 2, (0, 2): 2}, 4, "cycle"),
        (4, {(0, 1): 2, (0, 2): 2, (0, 3): 2}, 4, "branching"),
        (3, {(0, 1): 1, (1, 2): 2}, 4, "weight"),
        (4, {(0, 1): 1, (2, 3): 1}, 2, "components"),
    ],
)
def test_classify_failures(m, edges, q, reason):
    with pytest.raises(ClassificationError) as exc:
        classify(QuadGraph.from_edges(m, edges), (), q)
    assert exc.value.reason == reason


def test_classify_all_deleted():
    with pytest.raises(ClassificationError) as exc:
        classify(z4_graph(), range(5), 4)
    assert exc.value.reason == "no-path"
    with pytest.raises(ClassificationError) as exc:
        classify(z4_graph(), {9}, 4)
    assert exc.value.reason == "unknown-label"


def test_find_deletion_sets_examples():
    found = find_deletion_sets(z4_graph(), 4, 1)
    assert (0,) in [d for d, _ in found]
    path = QuadGraph.from_edges(3, {(0, 1): 1, (1, 2): 1})
    assert [d for d, _ in find_deletion_sets(path, 2, 0)] == [()]
    k4 = QuadGraph.from_edges(4, {e: 1 for e in itertools.combinations(range(4), 2)})
    assert find_deletion_sets(k4, 4, 0) == []
    sizes = [len(d) for d, _ in find_deletion_sets(z4_graph(), 4, 3)]
    assert sizes == sorted(sizes)


def test_check_partition():
    g = z4_graph()
    check_partition(g, GraphPartition((2, 3, 1), (0,), (4,), 1), 4)
    with pytest.raises(ClassificationError):
        check_partition(g, GraphPartition((2, 3, 1), (), (0, 4), 1), 4)
    with pytest.raises(ClassificationError):
        check_partition(g, GraphPartition((2, 1, 3), (0,), (4,), 3), 4)
    with pytest.raises(ClassificationError):
        check_partition(g, GraphPartition((2, 3), (0,), (4,), 3), 4)


def test_partition_gamma_must_be_end():
    with pytest.raises(ValueError):
        GraphPartition((2, 3, 1), (0,), (4,), 3)


@given(quadgraphs(), st.data())
def test_classify_agrees_with_networkx(qg, data):
    q, g = qg
    k = data.draw(st.integers(0, g.m))
    deleted = tuple(sorted(data.draw(st.permutations(range(g.m)))[:k]))
    expect = nx_accepts(g, deleted, q)
    try:
        back, fwd = classify(g, deleted, q)
    except ClassificationError:
        assert not expect
        return
    assert expect
    assert back.path == tuple(reversed(fwd.path))
    assert {back.gamma, fwd.gamma} == {fwd.path[0], fwd.path[-1]}
    labels = sorted(fwd.path + fwd.deleted + fwd.isolated)
    assert labels == list(range(g.m))
    check_partition(g, fwd, q)
    check_partition(g, back, q)


@given(quadgraphs(), st.data())
def test_classify_invariant_under_relabelling_fixing_deleted(qg, data):
    q, g = qg
    k = data.draw(st.integers(0, g.m))
    order = data.draw(st.permutations(range(g.m)))
    deleted = set(order[:k])
    free = sorted(set(range(g.m)) - deleted)
    perm = dict(zip(free, data.draw(st.permutations(free))))
    perm.update({d: d for d in deleted})
    h = QuadGraph.from_edges(g.m, {(perm[i], perm[j]): w for (i, j), w in g.edges.items()})

    def ok(graph):
        try:
            classify(graph, deleted, q)
            return True
        except ClassificationError:
            return False

    assert ok(g) == ok(h)


@given(quadgraphs(), st.data())
def test_delete_composes(qg, data):
    _, g = qg
    A = set(data.draw(st.lists(st.integers(0, g.m - 1), max_size=g.m)))
    B = set(data.draw(st.lists(st.integers(0, g.m - 1), max_size=g.m)))
    assert delete_vertices(delete_vertices(g, A), B - A) == delete_vertices(g, A | B)

import random

import pytest

from sumgraph import Mode, SizeLimitError, SumGraph, canonical_form, equivalence_classes, equivalent, induce, isomorphic
from sumgraph.errors import FormatError
from sumgraph.graph import canonical_form_naive, class_index, format_graph, parse_graph, to_dot
from sumgraph.induction import gen_A


def cycle(n):
    return SumGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_mode_parse_aliases():
    assert Mode.parse("WithLoops") is Mode.LOOPS
    assert Mode.parse(" loopless ") is Mode.SIMPLE
    with pytest.raises(ValueError):
        Mode.parse("directed")


def test_simple_graph_rejects_loops():
    with pytest.raises(ValueError):
        SumGraph.from_edges(2, [(0, 0)], Mode.SIMPLE)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(ValueError):
        SumGraph(2, (frozenset({1}), frozenset()), Mode.SIMPLE)


def test_edges_and_counts_include_loops():
    G = SumGraph.from_edges(3, [(0, 0), (0, 1), (2, 1)], Mode.LOOPS)
    assert list(G.edges()) == [(0, 0), (0, 1), (1, 2)]
    assert G.edge_count == 3
    assert G.has_loop(0) and not G.has_loop(1)
    assert G.degree(0) == 2


def test_isolates_round_trip():
    G = cycle(4).with_isolates(3)
    assert G.vertex_count == 7
    core, k = G.without_isolates()
    assert k == 3 and isomorphic(core, cycle(4))


def test_equivalent_isolated_values_in_gap_graph():
    ig = induce([2, 3, 4, 6, 7], Mode.LOOPS)
    six, seven = ig.psi[6][0], ig.psi[7][0]
    assert equivalent(ig.graph, six, seven)
    assert equivalent(ig.graph, 0, 0)
    assert not equivalent(ig.graph, ig.psi[2][0], ig.psi[3][0])


def test_equivalent_out_of_range():
    with pytest.raises(IndexError):
        equivalent(cycle(4), 0, 9)


def test_classes_of_gap_graph():
    ig = induce([2, 3, 4, 6, 7], Mode.LOOPS)
    blocks = {tuple(ig.labels[v] for v in b) for b in equivalence_classes(ig.graph)}
    assert blocks == {(2,), (3,), (4,), (6, 7)}


def test_edgeless_graph_is_one_class():
    assert len(equivalence_classes(SumGraph.empty(5))) == 1


def test_a39_all_vertices_distinct():
    assert len(equivalence_classes(gen_A(39).graph)) == 39


def test_clique_copies_are_equivalent():
    from sumgraph import c2_of_A
    ig = c2_of_A(7)
    for value in (2, 3):
        a, b = ig.psi[value]
        assert equivalent(ig.graph, a, b)


def test_class_index_consistent():
    G = induce([2, 2, 3, 3, 4, 6, 7]).graph
    idx = class_index(G)
    for u in range(G.vertex_count):
        for v in range(G.vertex_count):
            assert (idx[u] == idx[v]) == equivalent(G, u, v)


def test_multiset_isomorphism_claim():
    G = induce([2, 2, 3, 3, 4, 6, 7], Mode.SIMPLE).graph
    H = induce([1, 5, 2, 2, 4, 6, 9], Mode.SIMPLE).graph
    assert isomorphic(G, H)


def test_path_not_triangle():
    path = SumGraph.from_edges(3, [(0, 1), (1, 2)])
    assert not isomorphic(path, cycle(3))


def test_isomorphic_rejects_mixed_modes():
    with pytest.raises(ValueError):
        isomorphic(SumGraph.empty(1, Mode.LOOPS), SumGraph.empty(1, Mode.SIMPLE))


def test_loop_is_part_of_canonical_form():
    a = SumGraph.from_edges(2, [(0, 0)], Mode.LOOPS)
    b = SumGraph.from_edges(2, [(0, 1)], Mode.LOOPS)
    assert canonical_form(a) != canonical_form(b)


@pytest.mark.parametrize("seed", range(12))
def test_canonical_form_matches_naive(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    mode = rng.choice([Mode.SIMPLE, Mode.LOOPS])
    pairs = [(u, v) for u in range(n) for v in range(u, n) if u != v or mode is Mode.LOOPS]
    G = SumGraph.from_edges(n, [p for p in pairs if rng.random() < 0.4], mode)
    for _ in range(100):
        perm = list(range(n))
        rng.shuffle(perm)
        H = G.permuted(perm)
        assert canonical_form(H) == canonical_form(G)
    assert canonical_form_naive(G) == canonical_form_naive(H)


@pytest.mark.parametrize("seed", range(200))
def test_canonical_agrees_with_naive_on_pairs(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 7)
    mode = rng.choice([Mode.SIMPLE, Mode.LOOPS])
    pairs = [(u, v) for u in range(n) for v in range(u, n) if u != v or mode is Mode.LOOPS]
    m = rng.randint(0, len(pairs))
    G = SumGraph.from_edges(n, rng.sample(pairs, m), mode)
    H = SumGraph.from_edges(n, rng.sample(pairs, m), mode)
    same = canonical_form_naive(G) == canonical_form_naive(H)
    assert (canonical_form(G) == canonical_form(H)) == same


def test_canonical_form_on_sixteen_vertices():
    rng = random.Random(7)
    G = induce(sorted(rng.sample(range(1, 60), 16))).graph
    perm = list(range(16))
    rng.shuffle(perm)
    assert isomorphic(G, G.permuted(perm))


def test_canonical_form_size_limits():
    with pytest.raises(SizeLimitError):
        canonical_form(SumGraph.empty(65))
    with pytest.raises(SizeLimitError):
        canonical_form_naive(SumGraph.empty(11))


def test_graph_text_round_trip():
    G = induce([2, 3, 4, 6, 7], Mode.LOOPS).graph
    text = format_graph(G)
    assert text.splitlines()[0] == "5 loops"
    assert parse_graph(text) == G


def test_parse_graph_comments_and_errors():
    G = parse_graph("# header next\n3 simple\n0 1  # an edge\n\n1 2\n")
    assert G.edge_count == 2
    with pytest.raises(FormatError) as exc:
        parse_graph("3 simple\n0 5\n", "g.txt")
    assert exc.value.line == 2 and "g.txt:2:" in str(exc.value)
    with pytest.raises(FormatError):
        parse_graph("2 simple\n1 1\n")
    with pytest.raises(FormatError):
        parse_graph("")
    with pytest.raises(FormatError):
        parse_graph("3 simple\n0 x\n")


def test_dot_export_lists_labels():
    G = induce([1, 2, 3]).graph
    dot = to_dot(G, [1, 2, 3])
    assert dot.startswith("graph G {") and '"0: 1"' in dot and "0 -- 1;" in dot

import pytest

from sumgraph import Labeling, Mode, SumGraph, induce
from sumgraph.covers import (ArithSequence, all_covers, build_cover, merge_one_bound, merge_relations, mergeable,
                             relation_holds, shared_run)
from sumgraph.errors import InvalidLabelingError

GAP = induce([2, 3, 4, 6, 7], Mode.LOOPS)


def seqs(cover):
    return [s.elements() for s in cover.sequences]


def test_arith_sequence_basics():
    s = ArithSequence(3, 2, 4)
    assert s.elements() == (3, 5, 7, 9) and s.last == 9
    assert 7 in s and 8 not in s and 11 not in s
    assert s.render() == "3 +2×3 → 9 [terminal]"
    with pytest.raises(ValueError):
        ArithSequence(0, 1, 1)


def test_cover_of_looped_generator():
    c = build_cover(Labeling(GAP.graph, GAP.labels), GAP.psi[2][0])
    assert seqs(c) == [(2, 4, 6), (3,), (7,)]
    assert c.terminal_count == 3
    assert not any(s.improper for s in c.sequences)


def test_difference_one_cover_is_intervals():
    ig = induce([1, 2, 3, 5, 6, 8], Mode.LOOPS)
    c = build_cover(Labeling(ig.graph, ig.labels), ig.psi[1][0])
    assert seqs(c) == [(1, 2, 3), (5, 6), (8,)]


def test_loopless_generator_is_its_own_singleton():
    ig = induce([1, 2, 3, 5, 6, 8])
    c = build_cover(Labeling(ig.graph, ig.labels), ig.psi[1][0])
    assert seqs(c) == [(2, 3), (5, 6), (8,), (1,)]
    assert c.sequences[-1].improper and c.terminal_count == 4


def test_single_vertex_cover():
    c = build_cover(Labeling(SumGraph.empty(1), [5]), 0)
    assert seqs(c) == [(5,)] and c.sequences[0].improper


def test_cover_needs_valid_labeling():
    with pytest.raises(InvalidLabelingError):
        build_cover(Labeling(GAP.graph, [2, 3, 4, 6, 8]), 0)


def test_cover_render_and_json():
    c = build_cover(Labeling(GAP.graph, GAP.labels), 0)
    assert c.render().splitlines()[1] == "2 +2×2 → 6 [terminal]"
    js = c.to_json()
    assert js["generator_label"] == 2 and js["sequences"][0]["last"] == 6


@pytest.mark.parametrize("args, expected", [((4, 7, 39), True), ((2, 2, 5), True), ((4, 7, 38), False)])
def test_mergeable_threshold(args, expected):
    assert mergeable(*args) is expected


def test_mergeable_rejects_zero():
    with pytest.raises(ValueError):
        mergeable(0, 3, 10)


def test_merge_relations_examples():
    r = merge_relations(3, 4)
    assert r == {(1, 1), (1, 2), (1, 3), (2, 1), (2, 3)}
    # with d1 = alpha, d2 = beta the non-trivial relations read
    # alpha = 2 beta, 2 alpha = beta, 3 alpha = beta, 3 alpha = 2 beta
    assert {(k, j) for j, k in r if (j, k) != (1, 1)} == {(2, 1), (1, 2), (3, 1), (3, 2)}
    assert merge_relations(2, 2) == {(1, 1)}
    assert merge_relations(4, 4) == {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (2, 3), (3, 2)}
    with pytest.raises(ValueError):
        merge_relations(1, 3)


def test_relation_holds():
    assert relation_holds(1, 2, 3, 6)
    assert not relation_holds(1, 2, 3, 5)


def test_merge_one_bound():
    assert [merge_one_bound(t) for t in (4, 2, 7)] == [3, 1, 6]
    with pytest.raises(ValueError):
        merge_one_bound(1)


def test_shared_run_on_interval():
    ig = induce(range(1, 9), Mode.LOOPS)
    L = Labeling(ig.graph, ig.labels)
    one, two = build_cover(L, 0), build_cover(L, 1)
    assert seqs(one) == [tuple(range(1, 9))]
    assert seqs(two) == [(1, 3, 5, 7), (2, 4, 6, 8)]
    run = shared_run(one, two)
    assert run is not None and run.smallest == (1, 3, 5)
    assert set(one.sequences[0].elements()) & set(two.sequences[1].elements()) >= {2, 4, 6}


def test_shared_run_with_itself():
    ig = induce(range(1, 9))
    c = build_cover(Labeling(ig.graph, ig.labels), 0)
    run = shared_run(c, c)
    assert run.first == run.second and run.first.length >= 3


def test_shared_run_needs_same_label_set():
    a = build_cover(Labeling(GAP.graph, GAP.labels), 0)
    ig = induce(range(1, 9))
    b = build_cover(Labeling(ig.graph, ig.labels), 0)
    with pytest.raises(ValueError):
        shared_run(a, b)


def test_all_covers_one_per_vertex():
    L = Labeling(GAP.graph, GAP.labels)
    assert [c.generator for c in all_covers(L)] == list(range(5))

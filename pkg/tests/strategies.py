"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from sumgraph import LabelBag, Mode, SumGraph

modes = st.sampled_from([Mode.SIMPLE, Mode.LOOPS])


@st.composite
def bags(draw, max_size=7, max_value=30, distinct=False):
    values = st.integers(min_value=1, max_value=max_value)
    if distinct:
        xs = draw(st.sets(values, max_size=max_size))
    else:
        xs = draw(st.lists(values, max_size=max_size))
    return LabelBag(xs)


@st.composite
def graphs(draw, max_vertices=8, mode=None):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    m = draw(modes) if mode is None else mode
    pairs = [(u, v) for u in range(n) for v in range(u, n) if u != v or m is Mode.LOOPS]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SumGraph.from_edges(n, chosen, m)


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))

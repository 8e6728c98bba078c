from hypothesis import strategies as st

from clutterbei.clutter import new_clutter


@st.composite
def clutters(draw, max_n=7, max_arity=4, min_n=0):
    n = draw(st.integers(min_n, max_n))
    labels = [str(i) for i in range(1, n + 1)]
    if n == 0:
        return new_clutter([], [])
    edge = st.lists(st.sampled_from(labels), min_size=1, max_size=max_arity, unique=True)
    edges = draw(st.lists(edge, max_size=n + 2))
    return new_clutter(labels, edges, minimize=True)

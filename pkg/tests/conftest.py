import pytest
from hypothesis import strategies as st

from planarcert.graphs import from_edge_mask


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 6, connected: bool = False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    bits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << bits) - 1))
    g = from_edge_mask(n, mask)
    if connected and not g.is_connected():
        # resample densely instead of rejecting outright
        mask |= draw(st.integers(min_value=0, max_value=(1 << bits) - 1))
        g = from_edge_mask(n, mask)
    return g


@pytest.fixture(scope="session")
def all_graphs_up_to_5():
    from planarcert.graphs import enumerate_labeled_graphs

    out = []
    for n in range(0, 6):
        out.extend(enumerate_labeled_graphs(n))
    return out

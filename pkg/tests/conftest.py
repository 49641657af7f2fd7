import sys
from pathlib import Path

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from koebe.graph import PlanarGraph, ordering_from_ids  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def small_graphs(draw, max_n=7):
    """Random simple planar graphs (outerplanar-ish sparse ones via networkx check)."""
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)) if pairs else st.just([]))
    G = nx.Graph()
    G.add_nodes_from(range(n))
    edges = []
    for e in chosen:
        G.add_edge(*e)
        if nx.check_planarity(G)[0] and len(edges) + 1 <= max(3 * n - 6, n - 1):
            edges.append(e)
        else:
            G.remove_edge(*e)
    return PlanarGraph.from_edges(n, edges)


@st.composite
def graph_and_order(draw, max_n=7):
    g = draw(small_graphs(max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, ordering_from_ids(perm)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])

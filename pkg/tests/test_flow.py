import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from koebe.flow import disjoint_paths, max_flow_value


def _nx_menger(G, sources, targets, allowed=None):
    """Vertex connectivity through a super source/sink, via networkx."""
    H = nx.Graph()
    keep = set(G) if allowed is None else set(allowed) | set(sources) | set(targets)
    H.add_nodes_from(keep)
    H.add_edges_from((u, v) for u, v in G.edges if u in keep and v in keep)
    # targets may not be internal: cut their outgoing use by splitting off
    H = nx.DiGraph()
    for x in keep:
        H.add_edge(("in", x), ("out", x), capacity=1)
    for u, v in G.edges:
        for a, b in ((u, v), (v, u)):
            if a in keep and b in keep and a not in targets:
                H.add_edge(("out", a), ("in", b), capacity=1)
    for s in sources:
        H.add_edge("S", ("in", s), capacity=1)
    for t in targets:
        H.add_edge(("out", t), "T", capacity=1)
    if "S" not in H or "T" not in H:
        return 0
    return nx.maximum_flow_value(H, "S", "T")


@st.composite
def flow_case(draw):
    n = draw(st.integers(2, 12))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.05, 0.7))
    G = nx.gnp_random_graph(n, p, seed=seed)
    S = draw(st.sets(st.integers(0, n - 1), min_size=1))
    T = draw(st.sets(st.integers(0, n - 1), min_size=1))
    allowed = draw(st.one_of(st.none(), st.sets(st.integers(0, n - 1))))
    return G, S, T, allowed


def _check_paths(G, paths, S, T, allowed):
    used = [x for p in paths for x in p]
    assert len(used) == len(set(used))
    for p in paths:
        assert p[0] in S and p[-1] in T
        assert all(G.has_edge(a, b) for a, b in zip(p, p[1:]))
        if allowed is not None:
            assert all(x in allowed for x in p[1:-1])
        assert not any(x in T for x in p[:-1])


@given(flow_case())
def test_max_flow_matches_networkx(case):
    G, S, T, allowed = case
    adj = [sorted(G[v]) for v in range(len(G))]
    paths = disjoint_paths(adj, S, T, allowed)
    _check_paths(G, paths, S, T, allowed)
    assert len(paths) == _nx_menger(G, S, T, allowed)
    assert len(disjoint_paths(adj, S, T, allowed, min_cost=True)) == len(paths)


@given(flow_case(), st.integers(0, 11))
def test_hub_paths(case, hub):
    G, _, T, allowed = case
    hub %= len(G)
    T = set(T) - {hub}
    adj = [sorted(G[v]) for v in range(len(G))]
    a = disjoint_paths(adj, (), T, allowed, hub=hub)
    b = disjoint_paths(adj, (), T, allowed, hub=hub, min_cost=True)
    assert len(a) == len(b)
    for paths in (a, b):
        assert all(p[0] == hub for p in paths)
        _check_paths(G, [p[1:] for p in paths], set(G[hub]), T, allowed)
    # min-cost decomposition is never longer in total
    assert sum(map(len, b)) <= sum(map(len, a))


def test_source_equal_target_is_a_single_vertex_path():
    adj = [[1], [0]]
    assert disjoint_paths(adj, {0}, {0}) == [[0]]
    assert max_flow_value(adj, {0, 1}, {1}) == 1


def test_limit():
    G = nx.complete_graph(6)
    adj = [sorted(G[v]) for v in range(6)]
    assert len(disjoint_paths(adj, {0, 1, 2}, {3, 4, 5}, limit=2)) == 2

"""Brute-force reference implementations used only by the tests."""
from itertools import combinations


def simple_paths(g, start, max_len):
    """All simple paths from ``start`` with at most ``max_len`` edges."""
    out = []

    def rec(p):
        out.append(tuple(p))
        if len(p) - 1 == max_len:
            return
        for y in g.adj[p[-1]]:
            if y not in p:
                p.append(y)
                rec(p)
                p.pop()

    rec([start])
    return out


def brute_wreach(g, order, d):
    rank = order.rank
    res = []
    for v in range(g.n):
        s = set()
        for p in simple_paths(g, v, d):
            end = p[-1]
            if rank[end] <= rank[v] and all(rank[x] >= rank[end] for x in p):
                s.add(end)
        res.append(frozenset(s))
    return res


def brute_sreach(g, order, d):
    rank = order.rank
    res = []
    for v in range(g.n):
        s = set()
        for p in simple_paths(g, v, d):
            end = p[-1]
            if rank[end] <= rank[v] and all(rank[x] > rank[v] for x in p[1:-1]):
                s.add(end)
        res.append(frozenset(s))
    return res


def brute_adm(g, order, d, v, strict=False):
    rank = order.rank
    cands = []
    for p in simple_paths(g, v, d):
        if len(p) < 2 or (strict and len(p) - 1 != d):
            continue
        if rank[p[-1]] < rank[v] and all(rank[x] > rank[v] for x in p[1:-1]):
            cands.append(frozenset(p[1:]))
    best = 0
    for k in range(1, g.degree(v) + 1):
        ok = False
        for combo in combinations(cands, k):
            total = sum(len(c) for c in combo)
            if len(frozenset().union(*combo)) == total:
                ok = True
                break
        if not ok:
            break
        best = k
    return best

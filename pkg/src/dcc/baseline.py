"""Adjacency-list versions of the DCC algorithms.

Same contracts and tie-breaking as their counterparts in algorithms.py, so
outputs can be compared directly. Isolated vertices are treated like the
DCC side treats uncovered ones.
"""
from collections import deque

from .algorithms import INF, Components, CorenessResult, DisconnectedGraphError, Matching, UnionFind


def baseline_bfs(g, s):
    dist = [INF] * g.n
    parent = [None] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for u in g.adj[v]:
            if dist[u] == INF:
                dist[u] = dist[v] + 1
                parent[u] = v
                q.append(u)
    return dist, parent


def baseline_bfs_forest(g):
    parent = [None] * g.n
    seen = [False] * g.n
    roots = []
    for r in range(g.n):
        if seen[r] or not g.adj[r]:
            continue
        roots.append(r)
        seen[r] = True
        q = deque([r])
        while q:
            v = q.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    q.append(u)
    return parent, roots


def baseline_eccentricity(g):
    V = [v for v in range(g.n) if g.adj[v]]
    if not V:
        return 0, 0, []
    ecc = {}
    for s in V:
        dist, _ = baseline_bfs(g, s)
        far = [v for v in V if dist[v] == INF]
        if far:
            raise DisconnectedGraphError(s, far[0])
        ecc[s] = max(dist[v] for v in V)
    rad = min(ecc.values())
    return max(ecc.values()), rad, [v for v in V if ecc[v] == rad]


def baseline_dfs_forest(g):
    parent = [None] * g.n
    seen = [False] * g.n
    roots = []
    for r in range(g.n):
        if seen[r] or not g.adj[r]:
            continue
        roots.append(r)
        seen[r] = True
        stack = [(r, iter(g.adj[r]))]
        while stack:
            v, it = stack[-1]
            for u in it:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    stack.append((u, iter(g.adj[u])))
                    break
            else:
                stack.pop()
    return parent, roots


def baseline_components(g):
    uf = UnionFind(g.n)
    forest = []
    for u, v in g.edges():
        if uf.union(u, v):
            forest.append((u, v))
    label = [uf.find(v) if g.adj[v] else -1 for v in range(g.n)]
    count = sum(1 for v in range(g.n) if g.adj[v] and label[v] == v)
    return Components(label, forest, count)


def baseline_matching(g):
    matched = [False] * g.n
    edges = []
    for u, v in g.edges():
        if not matched[u] and not matched[v]:
            matched[u] = matched[v] = True
            edges.append((u, v))
    return Matching(edges, sorted(x for e in edges for x in e))


def baseline_mis(g):
    blocked = [False] * g.n
    out = []
    for v in range(g.n):
        if blocked[v] or not g.adj[v]:
            continue
        out.append(v)
        for u in g.adj[v]:
            blocked[u] = True
    return out


def baseline_coloring(g, order=None):
    if order is None:
        order = [v for v in range(g.n) if g.adj[v]]
    color = [0] * g.n
    for v in order:
        taken = {color[u] for u in g.adj[v]}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
    return color


def baseline_kcore(g):
    """Peeling with a bucket queue over adjacency lists."""
    n = g.n
    deg = [len(a) for a in g.adj]
    V = [v for v in range(n) if deg[v]]
    maxd = max(deg, default=0)
    buckets = [[] for _ in range(maxd + 1)]
    for v in V:
        buckets[deg[v]].append(v)
    done = [False] * n
    core = [0] * n
    order = []
    k = 0
    d = 0
    while len(order) < len(V):
        while not buckets[d]:
            d += 1
        v = buckets[d].pop()
        if done[v] or deg[v] != d:
            continue
        done[v] = True
        k = max(k, d)
        core[v] = k
        order.append(v)
        for u in g.adj[v]:
            if not done[u] and deg[u] > 0:
                deg[u] -= 1
                buckets[deg[u]].append(u)
                d = min(d, deg[u])
    return CorenessResult(core, k, order)


def baseline_maximal_clique(g):
    """Greedy from the smallest non-isolated vertex."""
    V = [v for v in range(g.n) if g.adj[v]]
    if not V:
        raise ValueError("maximal clique needs at least one edge")
    S = [V[0]]
    cand = set(g.adj[V[0]])
    while cand:
        v = min(cand)
        S.append(v)
        cand &= g.adj_sets[v]
    return sorted(S)

"""Graph algorithms that run on a clique cover / DCC instead of adjacency lists.

Every algorithm works over the vertex universe V = union of the cliques;
vertices in no clique are left at their default (INF distance, color 0,
no component, ...). connected_components and maximal_matching only need the
cliques, so they also accept an EncodedCover and decode one clique at a time.
"""
import sys
from collections import deque
from dataclasses import dataclass

INF = sys.maxsize


class DisconnectedGraphError(ValueError):
    def __init__(self, u, v):
        self.pair = (u, v)
        super().__init__(f"graph is disconnected: no path between {u} and {v}")


def _stream(cover):
    # EncodedCover decodes into a reused buffer; plain covers yield tuples
    it = getattr(cover, "iter_cliques", None)
    return it() if it is not None else iter(cover.cliques)


def _covered(dcc):
    return [bool(l) for l in dcc.dual.labels]


# -- traversal ----------------------------------------------------------------

@dataclass
class BfsResult:
    dist: list
    parent: list
    order: list          # dequeue order
    cliques_scanned: int


class _BfsScratch:
    """Arrays for repeated BFS runs; reset only what the last run touched."""

    def __init__(self, dcc):
        self.dcc = dcc
        n, k = dcc.n, len(dcc.cover)
        self.dist = [INF] * n
        self.parent = [None] * n
        self.scanned = [False] * k
        self.touched = []
        self.touched_cliques = []

    def reset(self):
        for v in self.touched:
            self.dist[v] = INF
            self.parent[v] = None
        for ell in self.touched_cliques:
            self.scanned[ell] = False
        self.touched = []
        self.touched_cliques = []

    def run(self, s):
        cliques, labels = self.dcc.cover.cliques, self.dcc.dual.labels
        dist, parent, scanned = self.dist, self.parent, self.scanned
        dist[s] = 0
        self.touched.append(s)
        q = deque([s])
        order = []
        while q:
            v = q.popleft()
            order.append(v)
            dv = dist[v] + 1
            for ell in labels[v]:
                if scanned[ell]:
                    continue
                # every vertex of a clique is a neighbor of the first one to reach it
                scanned[ell] = True
                self.touched_cliques.append(ell)
                for u in cliques[ell]:
                    if dist[u] == INF:
                        dist[u] = dv
                        parent[u] = v
                        self.touched.append(u)
                        q.append(u)
        return order


def _check_source(dcc, s):
    if not 0 <= s < dcc.n:
        raise IndexError(f"source {s} outside 0..{dcc.n - 1}")


def bfs(dcc, s):
    _check_source(dcc, s)
    sc = _BfsScratch(dcc)
    order = sc.run(s)
    return BfsResult(sc.dist, sc.parent, order, len(sc.touched_cliques))


def bfs_forest(dcc):
    """BFS from each unreached covered vertex in ascending order. Returns (parent, roots)."""
    sc = _BfsScratch(dcc)
    roots = []
    for v in range(dcc.n):
        if dcc.dual.labels[v] and sc.dist[v] == INF:
            roots.append(v)
            sc.run(v)
    return sc.parent, roots


def eccentricity_sweep(dcc):
    """(diameter, radius, center) from one BFS per covered vertex."""
    V = [v for v in range(dcc.n) if dcc.dual.labels[v]]
    if not V:
        return 0, 0, []
    sc = _BfsScratch(dcc)
    ecc = {}
    for s in V:
        sc.run(s)
        if len(sc.touched) < len(V):
            far = next(v for v in V if sc.dist[v] == INF)
            raise DisconnectedGraphError(s, far)
        ecc[s] = max(sc.dist[v] for v in sc.touched)
        sc.reset()
    diam = max(ecc.values())
    rad = min(ecc.values())
    return diam, rad, [v for v in V if ecc[v] == rad]


def dfs_forest(dcc):
    """Depth-first forest with one shared cursor per clique. Returns (parent, roots).

    A clique's cursor only moves forward, so each clique is scanned once in
    total; the explicit stack replaces recursion.
    """
    cliques, labels = dcc.cover.cliques, dcc.dual.labels
    n = dcc.n
    cursor = [0] * len(cliques)
    seen = [False] * n
    parent = [None] * n
    roots = []
    for r in range(n):
        if seen[r] or not labels[r]:
            continue
        seen[r] = True
        roots.append(r)
        stack = [[r, 0]]  # vertex, index into its label list
        while stack:
            frame = stack[-1]
            v = frame[0]
            lv = labels[v]
            child = None
            while frame[1] < len(lv) and child is None:
                ell = lv[frame[1]]
                c = cliques[ell]
                while cursor[ell] < len(c):
                    u = c[cursor[ell]]
                    cursor[ell] += 1
                    if not seen[u]:
                        child = u
                        break
                if child is None:
                    frame[1] += 1
            if child is None:
                stack.pop()
            else:
                seen[child] = True
                parent[child] = v
                stack.append([child, 0])
    return parent, roots


# -- cover-only algorithms ----------------------------------------------------

class UnionFind:
    """Disjoint sets with union by rank and path compression."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass
class Components:
    label: list      # representative per covered vertex, -1 elsewhere
    forest: list     # spanning forest edges (u, v)
    count: int


def connected_components(cover):
    n = cover.n
    uf = UnionFind(n)
    covered = [False] * n
    forest = []
    for c in _stream(cover):
        if not c:
            continue
        v = c[0]
        covered[v] = True
        for u in c[1:]:
            covered[u] = True
            if uf.union(u, v):
                forest.append((v, u))
    label = [uf.find(v) if covered[v] else -1 for v in range(n)]
    count = sum(1 for v in range(n) if covered[v] and label[v] == v)
    return Components(label, forest, count)


@dataclass
class Matching:
    edges: list
    vertex_cover: list


def maximal_matching(cover):
    matched = [False] * cover.n
    edges = []
    for c in _stream(cover):
        free = [v for v in c if not matched[v]]
        for i in range(0, len(free) - 1, 2):
            u, v = free[i], free[i + 1]
            matched[u] = matched[v] = True
            edges.append((u, v))
    vc = sorted(x for e in edges for x in e)
    return Matching(edges, vc)


# -- DCC algorithms -----------------------------------------------------------

def maximal_independent_set(dcc):
    cliques, labels = dcc.cover.cliques, dcc.dual.labels
    blocked = [False] * len(cliques)
    out = []
    for v in range(dcc.n):
        lv = labels[v]
        if not lv or any(blocked[ell] for ell in lv):
            continue
        out.append(v)
        for ell in lv:
            blocked[ell] = True
    return out


def first_fit_coloring(dcc, order=None):
    """Colors 1, 2, ...; uncolored (uncovered) vertices keep 0."""
    cliques, labels = dcc.cover.cliques, dcc.dual.labels
    n = dcc.n
    if order is None:
        order = [v for v in range(n) if labels[v]]
    color = [0] * n
    flag = [0] * (n + 2)  # flag[c] == t means color c is taken at step t
    for t, v in enumerate(order, 1):
        for ell in labels[v]:
            for u in cliques[ell]:
                flag[color[u]] = t
        c = 1
        while flag[c] == t:
            c += 1
        color[v] = c
    return color


@dataclass
class CorenessResult:
    core: list
    degeneracy: int
    peel_order: list


def _dcc_degrees(dcc):
    cliques, labels = dcc.cover.cliques, dcc.dual.labels
    n = dcc.n
    seen = [-1] * n
    deg = [0] * n
    for v in range(n):
        seen[v] = v
        d = 0
        for ell in labels[v]:
            for u in cliques[ell]:
                if seen[u] != v:
                    seen[u] = v
                    d += 1
        deg[v] = d
    return deg


def k_core_decomposition(dcc):
    """Bucket-queue peeling; neighbors found through cliques, deduplicated by stamps."""
    cliques, labels = dcc.cover.cliques, dcc.dual.labels
    n = dcc.n
    deg = _dcc_degrees(dcc)
    V = [v for v in range(n) if labels[v]]
    maxd = max((deg[v] for v in V), default=0)
    # bin sort into vert/pos arrays; bucket d occupies vert[start[d]:start[d+1]]
    count = [0] * (maxd + 2)
    for v in V:
        count[deg[v]] += 1
    start = [0] * (maxd + 2)
    for d in range(1, maxd + 2):
        start[d] = start[d - 1] + count[d - 1]
    vert = [0] * len(V)
    pos = [0] * n
    fill = start[:]
    for v in V:
        pos[v] = fill[deg[v]]
        vert[pos[v]] = v
        fill[deg[v]] += 1
    seen = [-1] * n
    core = [0] * n
    for i in range(len(V)):
        v = vert[i]
        core[v] = deg[v]
        seen[v] = v
        for ell in labels[v]:
            for u in cliques[ell]:
                if seen[u] == v:
                    continue
                seen[u] = v
                du = deg[u]
                if du > deg[v]:
                    # swap u to the front of its bucket, then shrink the bucket
                    w = vert[start[du]]
                    pu = pos[u]
                    if w != u:
                        vert[pu], vert[start[du]] = w, u
                        pos[w], pos[u] = pu, start[du]
                    start[du] += 1
                    deg[u] = du - 1
    return CorenessResult(core, max(core, default=0), vert)


def densest_subgraph_2approx(dcc, cores=None):
    """The top core; its density is at least half the optimum. Returns (S, density)."""
    if not any(dcc.dual.labels):
        raise ValueError("densest subgraph of an empty graph is undefined")
    if cores is None:
        cores = k_core_decomposition(dcc)
    d = cores.degeneracy
    S = [v for v in range(dcc.n) if dcc.dual.labels[v] and cores.core[v] == d]
    inside = [False] * dcc.n
    for v in S:
        inside[v] = True
    twice_m = 0
    for v in S:
        twice_m += sum(1 for u in _neighbors(dcc, v) if inside[u])
    return S, twice_m / 2 / len(S)


def _neighbors(dcc, v):
    out = set()
    for ell in dcc.dual.labels[v]:
        out.update(dcc.cover.cliques[ell])
    out.discard(v)
    return out


def _adjacent(Lsets, u, v):
    a, b = Lsets[u], Lsets[v]
    if len(a) > len(b):
        a, b = b, a
    return any(x in b for x in a)


def maximal_clique(dcc):
    """Grow the largest cover clique into a maximal clique of G."""
    cliques = dcc.cover.cliques
    if not cliques:
        raise ValueError("maximal clique needs a nonempty cover")
    Ls = dcc.dual.label_sets
    S = list(max(cliques, key=len))  # first largest
    inS = set(S)
    x = S[0]
    cand = set()
    for ell in dcc.dual.labels[x]:
        cand.update(cliques[ell])
    cand -= inS
    for v in S:
        cand = {u for u in cand if _adjacent(Ls, u, v)}
    while cand:
        v = min(cand)
        S.append(v)
        cand.discard(v)
        cand = {u for u in cand if _adjacent(Ls, u, v)}
    return sorted(S)


def ff_complement_coloring_dcc(dcc, order=None):
    """First-fit coloring of the complement; colors 1-based, 0 = not colored."""
    cliques, labels = dcc.cover.cliques, dcc.dual.labels
    n = dcc.n
    if order is None:
        order = [v for v in range(n) if labels[v]]
    color = [0] * n
    tsize = [0] * (n + 2)
    rsize = [0] * (n + 2)
    flag = [0] * (n + 2)
    seen = [0] * n
    q = 0
    for t, v in enumerate(order, 1):
        p = q + 1
        seen[v] = t
        for ell in labels[v]:
            for u in cliques[ell]:
                if seen[u] == t:
                    continue
                seen[u] = t
                c = color[u]
                if c == 0:
                    continue
                if flag[c] != t:
                    flag[c] = t
                    rsize[c] = tsize[c]
                rsize[c] -= 1
                if rsize[c] == 0 and c < p:
                    p = c
        color[v] = p
        tsize[p] += 1
        q = max(q, p)
    return color

"""Clique cover constructors.

  lovasz_peeling        complement-coloring classes plus per-vertex patches
  succinct_peeling      the same skeleton, but greedy extension keeps it succinct
  global_admissibility  one pass over the edges with admissible label sets
  local_admissibility   reverse degeneracy order with local colorings + augmentation
  local_peeling         local_admissibility without the augmentation step

All return a Dcc (cover plus incidence dual). Sets below are plain Python
sets keyed by vertex id or label; every emitted clique is sorted.
"""
from dataclasses import dataclass

from .cover import CliqueCover, Dcc
from .graph import backward_neighborhoods, degeneracy_ordering


@dataclass(frozen=True)
class ColorClasses:
    classes: tuple  # each class in coloring order of its members
    color: tuple    # per-vertex class index (0-based)


def ff_complement_color_classes(g, order=None):
    """First-fit coloring of the complement without building it.

    When v is colored, class c can take it iff every member of c is a
    G-neighbor of v; counting v's neighbors per class against the class
    size tells us which classes are full of neighbors.
    """
    if order is None:
        order = range(g.n)
    color = [-1] * g.n
    tsize = []   # members per class
    rsize = []   # class members not yet matched against the current vertex
    flag = []    # stamp of the last vertex that touched the class
    classes = []
    for t, v in enumerate(order):
        p = len(classes)
        for u in g.adj[v]:
            c = color[u]
            if c < 0:
                continue
            if flag[c] != t:
                flag[c] = t
                rsize[c] = tsize[c]
            rsize[c] -= 1
            if rsize[c] == 0 and c < p:
                p = c
        if p == len(classes):
            classes.append([])
            tsize.append(0)
            rsize.append(0)
            flag.append(-1)
        classes[p].append(v)
        tsize[p] += 1
        color[v] = p
    return ColorClasses(tuple(tuple(c) for c in classes), tuple(color))


def _finish(g, cliques):
    return Dcc.from_cover(CliqueCover(g.n, [sorted(c) for c in cliques]))


def _earlier_classes_hit(g, F, color, v):
    """T_v as a map: each earlier class holding a neighbor of v -> those neighbors."""
    k = color[v]
    hit = {}
    for u in g.adj[v]:
        c = color[u]
        if c < k:
            hit.setdefault(c, []).append(u)
    return hit


def lovasz_peeling(g, order=None):
    if order is None:
        order = range(g.n)
    cc = ff_complement_color_classes(g, order)
    cliques = [list(f) for f in cc.classes if len(f) >= 2]
    for v in order:
        hit = _earlier_classes_hit(g, cc.classes, cc.color, v)
        for ell in sorted(hit):
            cliques.append(hit[ell] + [v])
    return _finish(g, cliques)


class _Extender:
    """Greedy growth of a clique along still-uncovered edges (the Extend step)."""

    def __init__(self, g, M, pos, back):
        self.adj = g.adj_sets
        self.M = M
        self.pos = pos
        self.back = back

    def closed(self, v):
        return self.adj[v] | {v}

    def extend(self, C, u, v):
        adj, M, pos = self.adj, self.M, self.pos
        Vk = self.closed(u) & self.closed(v)
        for w in C:
            Vk &= self.closed(w)
        edges = []
        for y in Vk:
            # x in N^<(y) & M_y; walk whichever side is smaller
            My = M[y]
            if len(My) <= len(self.back[y]):
                xs = [x for x in My if pos[x] < pos[y]]
            else:
                xs = [x for x in self.back[y] if x in My]
            edges.extend((x, y) for x in xs if x in Vk)
        edges.sort()
        for x, y in edges:
            if x not in M[y] or x not in Vk or y not in Vk:
                continue
            C.update((x, y))
            pair = (x, y)
            for z in C:
                M[z].difference_update(pair)
            M[x].difference_update(C)
            M[y].difference_update(C)
            Vk &= self.closed(x)
            Vk &= self.closed(y)
        return C


def succinct_peeling(g, order=None):
    if order is None:
        order = range(g.n)
    order = list(order)
    M = [set(a) for a in g.adj]
    cc = ff_complement_color_classes(g, order)
    F, color = cc.classes, cc.color
    pi = degeneracy_ordering(g)
    ext = _Extender(g, M, pi.position, backward_neighborhoods(g, pi))

    cliques = [set(f) for f in F if len(f) >= 2]
    for C in cliques:
        for v in C:
            M[v].difference_update(C)
    for C in cliques:
        a, b = sorted(C)[:2]
        ext.extend(C, a, b)

    for v in order:
        hit = _earlier_classes_hit(g, F, color, v)
        for ell in sorted(hit):
            part = M[v].intersection(F[ell])
            if not part:
                continue
            C = part | {v}
            for u in C:
                M[u].difference_update(C)
            ext.extend(C, min(part), v)
            cliques.append(C)
    return _finish(g, cliques)


class AdmissibilityState:
    """Working state of the admissibility constructors.

    A[v]  labels whose clique lies inside N[v]
    D[l]  vertices admissible to clique l (the dual of A)
    M[v]  neighbors u with {u, v} still uncovered
    L[v]  labels of the cliques holding v
    """

    def __init__(self, g):
        self.g = g
        self.A = [set() for _ in range(g.n)]
        self.D = []
        self.M = [set(a) for a in g.adj]
        self.L = [[] for _ in range(g.n)]
        self.cliques = []

    def new_clique(self, members, admissible):
        ell = len(self.cliques)
        self.cliques.append(set(members))
        self.D.append(set(admissible))
        for w in admissible:
            self.A[w].add(ell)
        for w in members:
            self.L[w].append(ell)
        return ell

    def grow(self, ell, u, v):
        """Add u, v to clique ell and drop vertices that stop being admissible."""
        C = self.cliques[ell]
        adj = self.g.adj_sets
        for w in (u, v):
            if w not in C:
                C.add(w)
                self.L[w].append(ell)
        D = self.D[ell]
        gone = [w for w in D if w not in C and (w not in adj[u] or w not in adj[v])]
        for w in gone:
            D.discard(w)
            self.A[w].discard(ell)
        return C

    def check(self):
        """Full recheck of the invariants; raises AssertionError."""
        adj = self.g.adj_sets
        n = self.g.n
        for ell, C in enumerate(self.cliques):
            for v in range(n):
                inside = all(w == v or w in adj[v] for w in C)
                assert (ell in self.A[v]) == (v in self.D[ell]), (ell, v)
                assert (ell in self.A[v]) == inside, f"A[{v}] wrong for label {ell}"
            assert C <= self.D[ell]
        for v in range(n):
            assert set(self.L[v]) <= self.A[v]
            for u in self.M[v]:
                assert v in self.M[u]


def global_admissibility(g, edge_order=None, check_invariants=False):
    # coverage is read off L directly, so M stays unused here
    st = AdmissibilityState(g)
    adj = g.adj_sets
    Lset = [set() for _ in range(g.n)]
    for u, v in (g.edges() if edge_order is None else edge_order):
        if not Lset[u].isdisjoint(Lset[v]):
            continue
        common = st.A[u] & st.A[v]
        if common:
            ell = min(common)
            st.grow(ell, u, v)
        else:
            ell = st.new_clique((u, v), (adj[u] | {u}) & (adj[v] | {v}))
        Lset[u].add(ell)
        Lset[v].add(ell)
        if check_invariants:
            st.check()
    return _finish(g, st.cliques)


def _local(g, augment):
    st = AdmissibilityState(g)
    adj = g.adj_sets
    M = st.M
    pi = degeneracy_ordering(g)
    back = backward_neighborhoods(g, pi)
    for i in range(g.n - 1, 0, -1):
        v = pi.order[i]
        if not M[v]:
            continue
        window = set(back[v])
        window.add(v)
        S = {v} | {u for u in back[v] if not M[u].isdisjoint(window)}
        # first-fit coloring of the complement of G[M_v], ascending ids
        classes = []
        for w in sorted(M[v]):
            for q in classes:
                if all(x in adj[w] for x in q):
                    q.append(w)
                    break
            else:
                classes.append([w])
        labels = []
        for q in classes:
            C = q + [v]
            for u in C:
                M[u].difference_update(C)
            if augment:
                D = set(C) | {u for u in S if u not in C and all(x in adj[u] for x in C)}
                labels.append(st.new_clique(C, D))
            else:
                st.new_clique(C, ())
        if augment:
            _augment(st, labels, S)
    return _finish(g, st.cliques)


def _augment(st, labels, S):
    adj = st.g.adj_sets
    M, A = st.M, st.A
    for u in sorted(S):
        for w in sorted(adj[u] & S):
            if w <= u or w not in M[u]:
                continue
            common = A[u] & A[w]
            if not common:
                continue
            ell = min(common)
            C = st.grow(ell, u, w)
            M[u].difference_update(C)
            M[w].difference_update(C)
            for y in C:
                M[y].discard(u)
                M[y].discard(w)
    # local structures die with the iteration
    for ell in labels:
        for w in st.D[ell]:
            st.A[w].discard(ell)
        st.D[ell] = set()


def local_admissibility(g):
    return _local(g, True)


def local_peeling(g):
    return _local(g, False)


CONSTRUCTORS = {
    "lp": lovasz_peeling,
    "sp": succinct_peeling,
    "ga": global_admissibility,
    "la": local_admissibility,
    "pl": local_peeling,
}

"""Full-scan checks for greedy outputs (matchings, independent sets, cliques)."""


def is_matching(g, edges):
    used = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_maximal_matching(g, edges):
    if not is_matching(g, edges):
        return False
    used = {x for e in edges for x in e}
    return all(u in used or v in used for u, v in g.edges())


def is_vertex_cover(g, vs):
    s = set(vs)
    return all(u in s or v in s for u, v in g.edges())


def is_independent(g, vs):
    s = set(vs)
    return all(not (s & g.adj_sets[v]) for v in s)


def is_maximal_independent(g, vs):
    """Independent, and every non-isolated vertex outside has a neighbor inside."""
    if not is_independent(g, vs):
        return False
    s = set(vs)
    return all(v in s or s & g.adj_sets[v] for v in range(g.n) if g.adj[v])


def is_clique(g, vs):
    vs = list(vs)
    return all(g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_maximal_clique(g, vs):
    if not is_clique(g, vs):
        return False
    s = set(vs)
    return all(v in s or not s <= g.adj_sets[v] for v in range(g.n))


def is_proper_coloring(g, color):
    return all(color[u] != color[v] for u, v in g.edges())


def canonical_partition(labels):
    """Relabel so each class is named by its smallest member; -1 stays -1."""
    first = {}
    out = []
    for v, l in enumerate(labels):
        if l == -1:
            out.append(-1)
            continue
        first.setdefault(l, v)
        out.append(first[l])
    return out


def is_spanning_forest(g, parent, labels):
    """parent edges are graph edges, and each tree spans one class of labels."""
    roots = {}
    for v, p in enumerate(parent):
        if p is not None and not g.has_edge(v, p):
            return False
    for v in range(g.n):
        if labels[v] == -1:
            continue
        r, steps = v, 0
        while parent[r] is not None:
            r = parent[r]
            steps += 1
            if steps > g.n:
                return False  # cycle
        if roots.setdefault(labels[v], r) != r:
            return False
    return len(set(roots.values())) == len(roots)

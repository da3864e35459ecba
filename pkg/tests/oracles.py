"""Independent reference computations for tests.

Nothing here imports the algorithms under test: brute force over subsets,
explicit complements, and networkx for textbook quantities.
"""
from itertools import combinations

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def edge_set(g):
    return {(u, v) for u in range(g.n) for v in g.adj[u] if u < v}


def brute_degeneracy(g):
    """Max over nonempty vertex subsets of the induced minimum degree."""
    best = 0
    adj = [set(a) for a in g.adj]
    for r in range(1, g.n + 1):
        for S in combinations(range(g.n), r):
            s = set(S)
            best = max(best, min(len(adj[v] & s) for v in S))
    return best


def brute_densest(g):
    adj = [set(a) for a in g.adj]
    best = 0.0
    for r in range(1, g.n + 1):
        for S in combinations(range(g.n), r):
            s = set(S)
            e = sum(len(adj[v] & s) for v in S) / 2
            best = max(best, e / r)
    return best


def complement_first_fit(g, order):
    """First-fit coloring (1-based) of the explicitly built complement."""
    n = g.n
    comp = [set(range(n)) - set(g.adj[v]) - {v} for v in range(n)]
    color = [0] * n
    for v in order:
        used = {color[u] for u in comp[v] if color[u]}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def first_fit(g, order):
    color = [0] * g.n
    for v in order:
        used = {color[u] for u in g.adj[v]}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def nx_coreness(g):
    return [nx.core_number(to_nx(g))[v] for v in range(g.n)]


def nx_partition(g):
    """Component id = smallest member, for non-isolated vertices; -1 otherwise."""
    lab = [-1] * g.n
    for comp in nx.connected_components(to_nx(g)):
        if len(comp) < 2:
            continue
        m = min(comp)
        for v in comp:
            lab[v] = m
    return lab


def nx_dist(g, s, inf):
    d = nx.single_source_shortest_path_length(to_nx(g), s)
    return [d.get(v, inf) for v in range(g.n)]


def clique_number(g):
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(to_nx(g)))

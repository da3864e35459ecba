"""Synthetic graph families: random models and structured counterexamples.

Structured families come with the covers they are known for, so tests and
demos can compare constructor output against a hand-built reference.
"""
import math

import numpy as np

from .cover import CliqueCover
from .graph import Graph

# above this size ER switches from per-pair coin flips to geometric skipping
ER_PAIRWISE_LIMIT = 10_000


def _rng(seed):
    return np.random.default_rng(seed)


def gen_er(n, p, seed=0):
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = _rng(seed)
    edges = []
    if p == 0.0 or n < 2:
        return Graph(n, [()] * n)
    if n <= ER_PAIRWISE_LIMIT:
        for u in range(n - 1):
            hits = np.flatnonzero(rng.random(n - u - 1) < p)
            edges.extend((u, u + 1 + int(j)) for j in hits)
    elif p == 1.0:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        # walk the upper triangle, jumping geometric gaps between edges
        lp = math.log1p(-p)
        u, v = 1, -1
        while u < n:
            r = rng.random()
            v += 1 + int(math.log1p(-r) / lp)
            while v >= u and u < n:
                v -= u
                u += 1
            if u < n:
                edges.append((v, u))
    return Graph.from_edges(n, edges)


def _attachment(n, k, seed, preferential):
    if k < 1 or k >= n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    rng = _rng(seed)
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    deg = np.zeros(n, dtype=float)
    deg[:k] = k - 1
    for v in range(k, n):
        if preferential and deg[:v].sum() > 0:
            w = deg[:v] / deg[:v].sum()
            targets = rng.choice(v, size=k, replace=False, p=w)
        else:
            targets = rng.choice(v, size=k, replace=False)
        for u in targets:
            edges.append((int(u), v))
            deg[u] += 1
        deg[v] = k
    return Graph.from_edges(n, edges)


def gen_ba(n, k, seed=0):
    """Preferential attachment grown from a k-clique; each new vertex adds k edges."""
    return _attachment(n, k, seed, True)


def gen_ua(n, k, seed=0):
    """Uniform attachment grown from a k-clique."""
    return _attachment(n, k, seed, False)


def gen_complete(n):
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def _clique_edges(vs):
    vs = list(vs)
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


def _biclique_edges(xs, ys):
    return [(x, y) for x in xs for y in ys]


def gen_matched_cliques(n):
    """Two n-cliques a=0..n-1 and b=n..2n-1 joined by the matching {i, n+i}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = range(n), range(n, 2 * n)
    edges = _clique_edges(a) + _clique_edges(b) + [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def matched_cliques_cover(n):
    """The two big cliques plus one pair per matching edge."""
    cl = [tuple(range(n)), tuple(range(n, 2 * n))] if n > 1 else []
    cl += [(i, n + i) for i in range(n)]
    return CliqueCover(2 * n, cl)


def _check_power_of_two(k):
    if k < 2 or k & (k - 1):
        raise ValueError(f"k must be a power of two >= 2, got {k}")


def gen_clique_minus_matching(k):
    """K_{2k} minus the perfect matching {u_i, v_i}, u_i = i and v_i = k + i."""
    _check_power_of_two(k)
    n = 2 * k
    adj = [[w for w in range(n) if w != x and w != (x + k) % n] for x in range(n)]
    return Graph(n, adj)


def clique_minus_matching_log_cover(k):
    """U, V and the bit-split cliques A_p, B_p: 2 + 2 log2(k) cliques."""
    _check_power_of_two(k)
    t = k.bit_length() - 1
    cl = [tuple(range(k)), tuple(range(k, 2 * k))]
    for p in range(t):
        a = [i if not (i >> p) & 1 else k + i for i in range(k)]
        b = [k + i if not (i >> p) & 1 else i for i in range(k)]
        cl += [tuple(sorted(a)), tuple(sorted(b))]
    return CliqueCover(2 * k, cl)


def gen_abu_family(n):
    """Cliques A=0..n-1, B=n..2n-1, U=2n..3n-1 with U joined to A and B."""
    if n < 2:
        raise ValueError("n must be >= 2")
    A, B, U = range(n), range(n, 2 * n), range(2 * n, 3 * n)
    edges = (_clique_edges(A) + _clique_edges(B) + _clique_edges(U)
             + _biclique_edges(U, A) + _biclique_edges(U, B))
    return Graph.from_edges(3 * n, edges)


def gen_separation_family(n):
    """Five n-cliques A, B, U, V, W (ids in that order, n apart).

    A and B are matched, U is joined to A and B, V to A, W to B.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    A, B, U, V, W = (range(i * n, (i + 1) * n) for i in range(5))
    edges = []
    for part in (A, B, U, V, W):
        edges += _clique_edges(part)
    edges += [(i, n + i) for i in range(n)]
    edges += _biclique_edges(U, A) + _biclique_edges(U, B)
    edges += _biclique_edges(V, A) + _biclique_edges(W, B)
    return Graph.from_edges(5 * n, edges)


def separation_covers(n):
    """(fewest-cliques cover of size ~n^2, fewest-assignments style cover of size ~n)."""
    A, B, U, V, W = (list(range(i * n, (i + 1) * n)) for i in range(5))
    first = [tuple(sorted([i, n + i] + U)) for i in range(n)]
    first += [tuple(A + V), tuple(B + W)]
    second = [(i, n + i) for i in range(n)]
    second += [tuple(A + V), tuple(B + W), tuple(A + U), tuple(B + U)]
    return CliqueCover(5 * n, first), CliqueCover(5 * n, second)


# small worked example, vertices a..h are 0..7
EXAMPLE_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 5), (2, 5),
                 (0, 4), (1, 4), (3, 6), (1, 6), (3, 7), (2, 7)]
EXAMPLE_COVER = [(0, 1, 2), (0, 1, 4), (0, 2, 5), (1, 3, 6), (2, 3, 7)]


def gen_example_graph():
    return Graph.from_edges(8, EXAMPLE_EDGES)


def example_cover():
    """Support-minimal but not assignment-minimal: a can leave the first clique."""
    return CliqueCover(8, EXAMPLE_COVER)


FAMILIES = {
    "er": gen_er,
    "ba": gen_ba,
    "ua": gen_ua,
    "complete": gen_complete,
    "matched-cliques": gen_matched_cliques,
    "clique-minus-matching": gen_clique_minus_matching,
    "abu": gen_abu_family,
    "separation": gen_separation_family,
    "example": gen_example_graph,
}

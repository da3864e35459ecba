"""Simple undirected graphs, text I/O, degeneracy peeling and basic statistics."""
import heapq
import io
import os
from dataclasses import dataclass


class GraphFormatError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class Graph:
    """Immutable simple graph on vertices 0..n-1 with sorted adjacency tuples."""

    __slots__ = ("n", "adj", "m", "_sets")

    def __init__(self, n, adj):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        if len(self.adj) != n:
            raise ValueError(f"expected {n} adjacency lists, got {len(self.adj)}")
        self.m = sum(len(a) for a in self.adj) // 2
        self._sets = None

    @classmethod
    def from_edges(cls, n, edges):
        """Build from an edge iterable; merges duplicates, drops loops, symmetrizes."""
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [sorted(s) for s in nbrs])

    @property
    def adj_sets(self):
        # built lazily, used for O(1) adjacency tests
        if self._sets is None:
            self._sets = tuple(frozenset(a) for a in self.adj)
        return self._sets

    def has_edge(self, u, v):
        return v in self.adj_sets[u]

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, nb in enumerate(self.adj):
            for v in nb:
                if v > u:
                    yield (u, v)

    def check(self):
        """Full scan of the structural invariants; raises AssertionError."""
        for v, nb in enumerate(self.adj):
            for i, u in enumerate(nb):
                assert 0 <= u < self.n, f"neighbor {u} of {v} out of range"
                assert u != v, f"self-loop at {v}"
                assert i == 0 or nb[i - 1] < u, f"adj[{v}] not strictly ascending"
                assert v in self.adj_sets[u], f"asymmetric edge {v}-{u}"
        assert 2 * self.m == sum(len(a) for a in self.adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _open_text(source):
    if isinstance(source, (str, os.PathLike)):
        return open(source, "r", encoding="ascii"), True
    return source, False


def _data_lines(fh):
    # yields (line_number, tokens) for non-comment, non-blank lines
    for no, line in enumerate(fh, 1):
        s = line.strip()
        if not s or s.startswith("%"):
            continue
        yield no, s.split()


def _ints(tokens, no, err=GraphFormatError):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise err(f"non-integer token in {' '.join(tokens)!r}", no) from None


def load_graph(source):
    """Read the '%'-commented "n m" edge-list format (1-based ids)."""
    fh, close = _open_text(source)
    try:
        lines = _data_lines(fh)
        header = next(lines, None)
        if header is None:
            raise GraphFormatError("missing header 'n m'")
        no, toks = header
        if len(toks) != 2:
            raise GraphFormatError("malformed header, expected 'n m'", no)
        n, m = _ints(toks, no)
        if n < 0 or m < 0:
            raise GraphFormatError("negative count in header", no)
        edges = []
        for no, toks in lines:
            if len(toks) != 2:
                raise GraphFormatError("expected an edge line 'u v'", no)
            u, v = _ints(toks, no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", no)
            if len(edges) == m:
                raise GraphFormatError(f"more than the declared {m} edge lines", no)
            edges.append((u - 1, v - 1))
        if len(edges) != m:
            raise GraphFormatError(f"expected {m} edge lines, found {len(edges)}")
    finally:
        if close:
            fh.close()
    return Graph.from_edges(n, edges)


def format_graph(g):
    out = io.StringIO()
    out.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"{u + 1} {v + 1}\n")
    return out.getvalue()


def save_graph(g, sink):
    text = format_graph(g)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sink.write(text)


@dataclass(frozen=True)
class DegeneracyOrdering:
    order: tuple
    position: tuple
    coreness: tuple
    degeneracy: int

    @classmethod
    def from_order(cls, order, coreness=None):
        """Wrap an arbitrary vertex order (coreness left as zeros if not given)."""
        order = tuple(order)
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        core = tuple(coreness) if coreness is not None else (0,) * len(order)
        return cls(order, tuple(pos), core, max(core, default=0))


def degeneracy_ordering(g):
    """Peel minimum-degree vertices (smallest id first among ties).

    The returned order is the reverse of the removal order, so every vertex
    has at most d neighbors placed before it.
    """
    n = g.n
    deg = [len(a) for a in g.adj]
    maxd = max(deg, default=0)
    # one min-heap of ids per degree value; stale entries are skipped on pop
    buckets = [[] for _ in range(maxd + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids already form a heap
    removed = [False] * n
    core = [0] * n
    removal = []
    k = 0
    d = 0
    while len(removal) < n:
        while True:
            b = buckets[d]
            while b and (removed[b[0]] or deg[b[0]] != d):
                heapq.heappop(b)
            if b:
                break
            d += 1
        v = heapq.heappop(buckets[d])
        removed[v] = True
        k = max(k, d)
        core[v] = k
        removal.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(buckets[deg[u]], u)
                if deg[u] < d:
                    d = deg[u]
    order = removal[::-1]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    return DegeneracyOrdering(tuple(order), tuple(pos), tuple(core), k)


def backward_neighborhoods(g, ordering):
    """N^<(v): neighbors of v placed before v. Accepts an ordering or a plain order."""
    if not isinstance(ordering, DegeneracyOrdering):
        ordering = DegeneracyOrdering.from_order(ordering)
    if len(ordering.order) != g.n:
        raise ValueError(f"ordering has {len(ordering.order)} vertices, graph has {g.n}")
    pos = ordering.position
    return [tuple(u for u in g.adj[v] if pos[u] < pos[v]) for v in range(g.n)]


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    max_degree: int
    min_degree: int
    degeneracy: int
    clique_distance: int


def clique_distance(g):
    return g.n * (g.n - 1) // 2 - g.m + 1


def graph_stats(g, ordering=None):
    if ordering is None:
        ordering = degeneracy_ordering(g)
    degs = [len(a) for a in g.adj]
    return GraphStats(g.n, g.m, max(degs, default=0), min(degs, default=0),
                      ordering.degeneracy, clique_distance(g))

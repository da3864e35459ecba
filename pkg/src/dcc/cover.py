"""Clique covers, their incidence duals, queries and minimality checks."""
import io
import math
import os
from dataclasses import dataclass, field


class CoverFormatError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class InvalidCoverError(ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"invalid clique cover: {report.describe()}")


class CliqueCover:
    """A labeled family of cliques; clique ell is cliques[ell] (ascending ids)."""

    __slots__ = ("n", "cliques")

    def __init__(self, n, cliques):
        self.n = n
        self.cliques = tuple(tuple(c) for c in cliques)

    @property
    def size(self):
        return sum(len(c) for c in self.cliques)

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]

    def __eq__(self, other):
        return isinstance(other, CliqueCover) and self.n == other.n and self.cliques == other.cliques

    def __hash__(self):
        return hash((self.n, self.cliques))

    def __repr__(self):
        return f"CliqueCover(n={self.n}, cliques={len(self.cliques)}, size={self.size})"

    def universe(self):
        """Vertices that appear in at least one clique, ascending."""
        seen = [False] * self.n
        for c in self.cliques:
            for v in c:
                seen[v] = True
        return [v for v in range(self.n) if seen[v]]


class IncidenceDual:
    """Per-vertex ascending label lists L_v, plus the number of labels k."""

    __slots__ = ("n", "k", "labels", "_sets")

    def __init__(self, n, labels, k=None):
        self.n = n
        self.labels = tuple(tuple(l) for l in labels)
        if len(self.labels) != n:
            raise ValueError(f"expected {n} label lists, got {len(self.labels)}")
        if k is None:
            k = 1 + max((l[-1] for l in self.labels if l), default=-1)
        self.k = k
        self._sets = None

    @property
    def size(self):
        return sum(len(l) for l in self.labels)

    @property
    def label_sets(self):
        if self._sets is None:
            self._sets = tuple(frozenset(l) for l in self.labels)
        return self._sets

    def __eq__(self, other):
        return isinstance(other, IncidenceDual) and (self.n, self.k, self.labels) == (other.n, other.k, other.labels)

    def __repr__(self):
        return f"IncidenceDual(n={self.n}, k={self.k}, size={self.size})"


@dataclass(frozen=True)
class Dcc:
    """A cover together with its incidence dual."""
    cover: CliqueCover
    dual: IncidenceDual

    @property
    def n(self):
        return self.cover.n

    @property
    def size(self):
        return self.cover.size + self.dual.size

    @classmethod
    def from_cover(cls, cover):
        return cls(cover, dual_from_cover(cover))


def dual_from_cover(cover):
    n = cover.n
    labels = [[] for _ in range(n)]
    for ell, c in enumerate(cover.cliques):
        for v in c:
            if not 0 <= v < n:
                raise ValueError(f"clique {ell} holds vertex {v}, outside 0..{n - 1}")
            labels[v].append(ell)  # ascending since ell only grows
    return IncidenceDual(n, labels, len(cover.cliques))


def cover_from_dual(dual):
    cliques = [[] for _ in range(dual.k)]
    for v, ls in enumerate(dual.labels):
        for ell in ls:
            if not 0 <= ell < dual.k:
                raise ValueError(f"label {ell} of vertex {v} outside 0..{dual.k - 1}")
            cliques[ell].append(v)
    return CliqueCover(dual.n, cliques)


def validate_dcc(dcc):
    """True when the dual is exactly the incidence dual of the cover."""
    return dual_from_cover(dcc.cover) == dcc.dual


# -- validation ---------------------------------------------------------------

@dataclass
class CoverReport:
    # (clique index, (u, v) non-edge inside it)
    non_cliques: list = field(default_factory=list)
    uncovered: list = field(default_factory=list)
    # malformed entries: (clique index, message)
    malformed: list = field(default_factory=list)

    @property
    def ok(self):
        return not (self.non_cliques or self.uncovered or self.malformed)

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return "valid"
        parts = []
        if self.malformed:
            i, msg = self.malformed[0]
            parts.append(f"clique {i}: {msg}")
        if self.non_cliques:
            i, (u, v) = self.non_cliques[0]
            parts.append(f"clique {i} is not a clique, non-edge {{{u}, {v}}}")
        if self.uncovered:
            u, v = self.uncovered[0]
            parts.append(f"edge {{{u}, {v}}} is not covered")
        return "; ".join(parts)


def validate_cover(g, cover):
    rep = CoverReport()
    if cover.n != g.n:
        rep.malformed.append((-1, f"cover has n={cover.n}, graph has n={g.n}"))
        return rep
    adj = g.adj_sets
    for i, c in enumerate(cover.cliques):
        if any(not 0 <= v < g.n for v in c):
            rep.malformed.append((i, "vertex id out of range"))
            continue
        if len(set(c)) != len(c):
            rep.malformed.append((i, "repeated vertex"))
            continue
        bad = None
        for a in range(len(c)):
            nb = adj[c[a]]
            for b in range(a + 1, len(c)):
                if c[b] not in nb:
                    bad = (min(c[a], c[b]), max(c[a], c[b]))
                    break
            if bad:
                break
        if bad:
            rep.non_cliques.append((i, bad))
    if rep.malformed:
        return rep
    L = dual_from_cover(cover).label_sets
    for u, v in g.edges():
        if L[u].isdisjoint(L[v]):
            rep.uncovered.append((u, v))
    return rep


def require_valid(g, cover):
    rep = validate_cover(g, cover)
    if not rep.ok:
        raise InvalidCoverError(rep)


# -- minimality ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def is_inclusion_minimal(g, cover):
    """No clique is contained in another. Witness: (contained, container)."""
    require_valid(g, cover)
    L = dual_from_cover(cover).labels
    for i, c in enumerate(cover.cliques):
        if not c:
            continue
        common = set(L[c[0]])
        for v in c[1:]:
            common.intersection_update(L[v])
        common.discard(i)
        if common:
            return Check(False, (i, min(common)))
    return Check(True)


def _edge_counts(g, cover):
    n = g.n
    cnt = {}
    for c in cover.cliques:
        for a in range(len(c)):
            base = c[a] * n
            for b in range(a + 1, len(c)):
                key = base + c[b]
                cnt[key] = cnt.get(key, 0) + 1
    return cnt


def is_support_minimal(g, cover):
    """Every clique covers some edge no other clique covers. Witness: clique index."""
    require_valid(g, cover)
    n = g.n
    cnt = _edge_counts(g, cover)
    for i, c in enumerate(cover.cliques):
        if not any(cnt[c[a] * n + c[b]] == 1
                   for a in range(len(c)) for b in range(a + 1, len(c))):
            return Check(False, i)
    return Check(True)


def admissible_vertices(g, clique):
    """Vertices w with clique contained in N[w]."""
    if not clique:
        return set(range(g.n))
    adj = g.adj_sets
    out = set(adj[clique[0]])
    out.add(clique[0])
    for v in clique[1:]:
        out.intersection_update(adj[v] | {v})
    return out


def is_composition_minimal(g, cover):
    """No two cliques merge into a clique. Witness: a mergeable pair (i, j)."""
    require_valid(g, cover)
    L = dual_from_cover(cover).labels
    sizes = [len(c) for c in cover.cliques]
    for i, c in enumerate(cover.cliques):
        # C_i u C_j is a clique iff every vertex of C_j is admissible to C_i
        hits = {}
        for w in admissible_vertices(g, c):
            for j in L[w]:
                hits[j] = hits.get(j, 0) + 1
        for j in sorted(hits):
            if j != i and hits[j] == sizes[j]:
                return Check(False, (min(i, j), max(i, j)))
    return Check(True)


def is_assignment_minimal(g, cover):
    """No vertex can leave its clique. Witness: (clique index, vertex)."""
    require_valid(g, cover)
    n = g.n
    cnt = _edge_counts(g, cover)
    for i, c in enumerate(cover.cliques):
        for v in c:
            if all(cnt[min(u, v) * n + max(u, v)] >= 2 for u in c if u != v):
                return Check(False, (i, v))
    return Check(True)


def make_assignment_minimal(g, cover):
    """Greedily drop vertex-clique assignments whose edges are covered elsewhere.

    Cliques are scanned in label order and vertices in ascending order;
    cliques left with fewer than two vertices are deleted.
    """
    require_valid(g, cover)
    n = g.n
    cnt = _edge_counts(g, cover)
    out = []
    for c in cover.cliques:
        cur = list(c)
        for v in c:
            if all(cnt[min(u, v) * n + max(u, v)] >= 2 for u in cur if u != v):
                cur.remove(v)
                for u in cur:
                    cnt[min(u, v) * n + max(u, v)] -= 1
        if len(cur) >= 2:
            out.append(cur)
    return CliqueCover(cover.n, out)


# -- queries ------------------------------------------------------------------

def _check_vertex(n, v):
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} outside 0..{n - 1}")


def adjacency_query(dual, u, v):
    _check_vertex(dual.n, u)
    _check_vertex(dual.n, v)
    if u == v:
        raise ValueError("adjacency query needs two distinct vertices")
    lu, lv = dual.labels[u], dual.labels[v]
    if len(lu) > len(lv):
        u, v, lu = v, u, lv
    other = dual.label_sets[v]
    return any(ell in other for ell in lu)


def neighborhood_query(dcc, v):
    _check_vertex(dcc.n, v)
    out = set()
    for ell in dcc.dual.labels[v]:
        out.update(dcc.cover.cliques[ell])
    out.discard(v)
    return sorted(out)


# -- statistics ---------------------------------------------------------------

@dataclass(frozen=True)
class CoverStats:
    num_cliques: int
    assignments: int
    max_clique_size: int
    compression_ratio: float
    ub_opt: float


def ub_opt_denominator(g, coreness):
    """Sum of ceil(deg/core) over non-isolated vertices: a floor on any cover size."""
    return sum(-(-len(g.adj[v]) // coreness[v]) for v in range(g.n) if coreness[v] > 0)


def cover_stats(g, cover, coreness):
    size = cover.size
    denom = ub_opt_denominator(g, coreness)
    # edgeless graphs have nothing to compress; report nan rather than divide by 0
    ratio = 2 * g.m / size if size else math.nan
    ub = 2 * g.m / denom if denom else math.nan
    return CoverStats(len(cover), size, max((len(c) for c in cover.cliques), default=0), ratio, ub)


# -- text format --------------------------------------------------------------

def format_cover(cover):
    out = io.StringIO()
    out.write(f"{cover.n} {len(cover)} {cover.size}\n")
    for c in cover.cliques:
        out.write(" ".join(str(v + 1) for v in c))
        out.write("\n")
    return out.getvalue()


def write_cover(cover, sink):
    text = format_cover(cover)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sink.write(text)


def read_cover(source):
    """Parse the "n k s" cover format; ids in the file are 1-based."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="ascii") as fh:
            return _parse_cover(fh)
    return _parse_cover(source)


def _parse_cover(fh):
    header = None
    cliques = []
    for no, line in enumerate(fh, 1):
        s = line.strip()
        if s.startswith("%"):
            continue
        if header is None:
            if not s:
                continue
            toks = s.split()
            if len(toks) != 3:
                raise CoverFormatError("malformed header, expected 'n k s'", no)
            header = _ints(toks, no)
            n, k, total = header
            if min(header) < 0:
                raise CoverFormatError("negative count in header", no)
            continue
        if not s:
            continue
        ids = _ints(s.split(), no)
        if any(not 1 <= v <= n for v in ids):
            raise CoverFormatError(f"vertex id out of range 1..{n}", no)
        if any(ids[i] >= ids[i + 1] for i in range(len(ids) - 1)):
            raise CoverFormatError("clique ids must be strictly ascending", no)
        if len(cliques) == k:
            raise CoverFormatError(f"more than the declared {k} cliques", no)
        cliques.append([v - 1 for v in ids])
    if header is None:
        raise CoverFormatError("missing header 'n k s'")
    if len(cliques) != k:
        raise CoverFormatError(f"expected {k} cliques, found {len(cliques)}")
    cover = CliqueCover(n, cliques)
    if cover.size != total:
        raise CoverFormatError(f"header declares {total} assignments, found {cover.size}")
    return cover


def _ints(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise CoverFormatError(f"non-integer token in {' '.join(tokens)!r}", no) from None

"""Benchmark harness: run each app on adjacency lists and on the cover, compare.

Memory is charged in abstract units (one unit per stored id or offset) for
the representation-specific arrays only; per-vertex scratch needed by both
arms is not charged.
"""
import csv
import io
import json
import os
import time
from dataclasses import asdict, dataclass, field

from . import algorithms as alg
from . import baseline as base
from . import verify
from .cover import Dcc, cover_stats, dual_from_cover, read_cover, require_valid
from .encoding import EncodedCover, decode_cover, is_encoded_file, read_encoded
from .graph import degeneracy_ordering, load_graph


class BenchError(RuntimeError):
    pass


def _first_vertex(g):
    return next((v for v in range(g.n) if g.adj[v]), 0)


@dataclass(frozen=True)
class App:
    name: str
    cover_only: bool        # runs on the cliques alone, no dual needed
    run_dcc: object         # (cover_or_dcc, g) -> result
    run_adj: object         # g -> result
    agree: object           # (g, dcc_result, adj_result) -> bool
    extra_units: object     # (num_cliques) -> {array name: units}


def _no_extra(k):
    return {}


def _scan_flags(k):
    return {"clique_scanned_flags": k}


def _cursors(k):
    return {"clique_cursors": k}


def _agree_cc(g, a, b):
    return (verify.canonical_partition(a.label) == verify.canonical_partition(b.label)
            and verify.is_spanning_forest(g, _forest_parents(g, a.forest), a.label))


def _forest_parents(g, edges):
    # orient forest edges away from arbitrary roots so is_spanning_forest can walk them
    nb = [[] for _ in range(g.n)]
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    parent = [None] * g.n
    seen = [False] * g.n
    for r in range(g.n):
        if seen[r]:
            continue
        seen[r] = True
        stack = [r]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)
    return parent


def _agree_dfs(g, a, b):
    comps = base.baseline_components(g).label
    return a[1] == b[1] and verify.is_spanning_forest(g, a[0], comps)


def _agree_matching(g, a, b):
    return (verify.is_maximal_matching(g, a.edges) and verify.is_vertex_cover(g, a.vertex_cover)
            and len(a.vertex_cover) == 2 * len(a.edges) and verify.is_maximal_matching(g, b.edges))


def _agree_clique(g, a, b):
    return verify.is_maximal_clique(g, a) and verify.is_maximal_clique(g, b)


APPS = {
    "cc": App("cc", True, lambda c, g: alg.connected_components(c), base.baseline_components,
              _agree_cc, _no_extra),
    "bfs": App("bfs", False, lambda d, g: alg.bfs(d, _first_vertex(g)).dist,
               lambda g: base.baseline_bfs(g, _first_vertex(g))[0],
               lambda g, a, b: a == b, _scan_flags),
    "bfs-forest": App("bfs-forest", False, lambda d, g: alg.bfs_forest(d), base.baseline_bfs_forest,
                      lambda g, a, b: a[1] == b[1], _scan_flags),
    "dfs": App("dfs", False, lambda d, g: alg.dfs_forest(d), base.baseline_dfs_forest,
               _agree_dfs, _cursors),
    "matching": App("matching", True, lambda c, g: alg.maximal_matching(c), base.baseline_matching,
                    _agree_matching, _no_extra),
    "mis": App("mis", False, lambda d, g: alg.maximal_independent_set(d), base.baseline_mis,
               lambda g, a, b: a == b, _no_extra),
    "color": App("color", False, lambda d, g: alg.first_fit_coloring(d), base.baseline_coloring,
                 lambda g, a, b: a == b, _no_extra),
    "kcore": App("kcore", False, lambda d, g: alg.k_core_decomposition(d).core,
                 lambda g: base.baseline_kcore(g).core, lambda g, a, b: a == b, _no_extra),
    "ecc": App("ecc", False, lambda d, g: alg.eccentricity_sweep(d), base.baseline_eccentricity,
               lambda g, a, b: a == b, _scan_flags),
    "maxclique": App("maxclique", False, lambda d, g: alg.maximal_clique(d),
                     base.baseline_maximal_clique, _agree_clique, _no_extra),
}


def memory_units(app, n, m, size_cover, num_cliques, universe):
    """(adjacency units, cover-side units, breakdown of the cover side)."""
    adj = 2 * m + n
    parts = {"cover_ids": size_cover, "cover_offsets": num_cliques}
    if not app.cover_only:
        parts["dual_ids"] = size_cover
        parts["dual_offsets"] = universe
        parts.update(app.extra_units(num_cliques))
    return adj, sum(parts.values()), parts


@dataclass
class AppRecord:
    app: str
    read_time_s: float
    dual_build_time_s: float
    compute_time_s: float
    total_time_s: float
    adj_read_time_s: float
    adj_compute_time_s: float
    adj_total_time_s: float
    mem_units_adj: int
    mem_units_dcc: int
    mem_ratio: float
    mem_breakdown: dict = field(default_factory=dict)


@dataclass
class BenchReport:
    graph: str
    n: int
    m: int
    constructor: str
    num_cliques: int
    size_cover: int
    compression_ratio: float
    ub_opt: float
    repetitions: int
    apps: list = field(default_factory=list)

    def to_json(self):
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    def to_csv(self):
        out = io.StringIO()
        top = ["graph", "n", "m", "constructor", "num_cliques", "size_cover",
               "compression_ratio", "ub_opt", "repetitions"]
        rec = [f.name for f in AppRecord.__dataclass_fields__.values()]
        w = csv.writer(out, lineterminator="\n")
        w.writerow(top + rec)
        head = [getattr(self, k) for k in top]
        for a in self.apps:
            row = asdict(a)
            row["mem_breakdown"] = ";".join(f"{k}={v}" for k, v in sorted(row["mem_breakdown"].items()))
            w.writerow(head + [row[k] for k in rec])
        return out.getvalue()


TIME_FIELDS = ("read_time_s", "dual_build_time_s", "compute_time_s", "total_time_s",
               "adj_read_time_s", "adj_compute_time_s", "adj_total_time_s")

_num = {"type": "number"}
_int = {"type": "integer", "minimum": 0}
REPORT_SCHEMA = {
    "type": "object",
    "required": ["graph", "n", "m", "constructor", "num_cliques", "size_cover",
                 "compression_ratio", "ub_opt", "repetitions", "apps"],
    "properties": {
        "graph": {"type": "string"}, "constructor": {"type": "string"},
        "n": _int, "m": _int, "num_cliques": _int, "size_cover": _int,
        "compression_ratio": _num, "ub_opt": _num,
        "repetitions": {"type": "integer", "minimum": 1},
        "apps": {"type": "array", "items": {
            "type": "object",
            "required": ["app", "mem_units_adj", "mem_units_dcc", "mem_ratio", "mem_breakdown",
                         *TIME_FIELDS],
            "properties": {
                "app": {"enum": sorted(APPS)},
                **{k: {"type": "number", "minimum": 0} for k in TIME_FIELDS},
                "mem_units_adj": _int, "mem_units_dcc": _int, "mem_ratio": _num,
                "mem_breakdown": {"type": "object", "additionalProperties": _int},
            },
        }},
    },
}


def load_cover_any(path):
    """Text or encoded cover, told apart by the magic bytes."""
    return read_encoded(path) if is_encoded_file(path) else read_cover(path)


def _plain(cover):
    return decode_cover(cover) if isinstance(cover, EncodedCover) else cover


def run_app(app, cover, g):
    """One DCC-arm run. Returns (result, dual_build_s, compute_s)."""
    if app.cover_only:
        t0 = time.perf_counter()
        res = app.run_dcc(cover, g)
        return res, 0.0, time.perf_counter() - t0
    t0 = time.perf_counter()
    plain = _plain(cover)
    dcc = Dcc(plain, dual_from_cover(plain))
    t1 = time.perf_counter()
    res = app.run_dcc(dcc, g)
    return res, t1 - t0, time.perf_counter() - t1


def bench(graph_path, cover_path, apps=None, reps=5, name=None, constructor="unspecified"):
    if reps < 1:
        raise ValueError("reps must be >= 1")
    apps = list(apps or APPS)
    unknown = [a for a in apps if a not in APPS]
    if unknown:
        raise ValueError(f"unknown app(s): {', '.join(unknown)}")
    g = load_graph(graph_path)
    cover = _plain(load_cover_any(cover_path))
    if cover.n != g.n:
        raise BenchError(f"cover has n={cover.n} but graph has n={g.n}")
    require_valid(g, cover)
    core = degeneracy_ordering(g).coreness
    st = cover_stats(g, cover, core)
    universe = len(cover.universe())
    report = BenchReport(name or os.path.basename(str(graph_path)), g.n, g.m, constructor,
                         st.num_cliques, st.assignments, st.compression_ratio, st.ub_opt, reps)
    for a in apps:
        app = APPS[a]
        sums = [0.0] * 5
        for _ in range(reps):
            t0 = time.perf_counter()
            gg = load_graph(graph_path)
            t1 = time.perf_counter()
            adj_res = app.run_adj(gg)
            t2 = time.perf_counter()
            c = load_cover_any(cover_path)
            t3 = time.perf_counter()
            try:
                dcc_res, tb, tc = run_app(app, c, g)
            except Exception as e:
                raise BenchError(f"app {a} failed on the cover arm: {e}") from e
            if not app.agree(g, dcc_res, adj_res):
                raise BenchError(f"app {a}: cover result disagrees with the adjacency baseline")
            for i, x in enumerate((t1 - t0, t2 - t1, t3 - t2, tb, tc)):
                sums[i] += x
        adj_read, adj_comp, read, build, comp = (s / reps for s in sums)
        mu_adj, mu_dcc, parts = memory_units(app, g.n, g.m, st.assignments, st.num_cliques, universe)
        report.apps.append(AppRecord(
            a, read, build, comp, read + build + comp, adj_read, adj_comp, adj_read + adj_comp,
            mu_adj, mu_dcc, mu_adj / mu_dcc if mu_dcc else float("inf"), parts))
    return report

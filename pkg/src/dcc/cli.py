"""dcc command line: gen | construct | convert | stats | run | bench.

Exit codes: 0 ok, 1 domain error (bad file, invalid cover, ...), 2 usage error.
DCC_SEED sets the seed when --seed is not given.
"""
import argparse
import json
import math
import os
import sys
import time
from dataclasses import asdict

from . import algorithms as alg
from . import baseline as base
from . import generators as gen
from .bench import APPS, BenchError, bench, load_cover_any
from .constructors import CONSTRUCTORS
from .cover import (CoverFormatError, Dcc, InvalidCoverError, cover_stats, dual_from_cover,
                    format_cover, make_assignment_minimal, read_cover, validate_cover)
from .encoding import EncodedCover, EncodingError, decode_cover, encode_cover, to_bytes
from .graph import GraphFormatError, degeneracy_ordering, format_graph, load_graph


class UsageError(Exception):
    pass


DOMAIN_ERRORS = (GraphFormatError, CoverFormatError, EncodingError, InvalidCoverError,
                 alg.DisconnectedGraphError, BenchError, OSError, ValueError, IndexError)


def default_seed():
    raw = os.environ.get("DCC_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"DCC_SEED must be an integer, got {raw!r}") from None


def _emit(data, out):
    """Write text or bytes to a path, or to stdout when out is None."""
    if out is None:
        if isinstance(data, bytes):
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            sys.stdout.write(data)
        return
    mode = "wb" if isinstance(data, bytes) else "w"
    kw = {} if isinstance(data, bytes) else {"encoding": "ascii", "newline": "\n"}
    with open(out, mode, **kw) as fh:
        fh.write(data)


def _note(msg, to_stdout):
    print(msg, file=sys.stdout if to_stdout else sys.stderr)


def _json_safe(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, dict):
        return {k: _json_safe(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_safe(v) for v in x]
    return x


# -- gen ----------------------------------------------------------------------

def cmd_gen(args):
    fam = args.family
    seed = args.seed if args.seed is not None else default_seed()
    try:
        if fam == "er":
            if args.n is None or args.p is None:
                raise UsageError("er needs --n and --p")
            g = gen.gen_er(args.n, args.p, seed)
        elif fam in ("ba", "ua"):
            if args.n is None or args.k is None:
                raise UsageError(f"{fam} needs --n and --k")
            g = gen.FAMILIES[fam](args.n, args.k, seed)
        elif fam == "example":
            g = gen.gen_example_graph()
        else:
            size = args.k if fam == "clique-minus-matching" else args.n
            if size is None:
                raise UsageError(f"{fam} needs --{'k' if fam == 'clique-minus-matching' else 'n'}")
            g = gen.FAMILIES[fam](size)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(format_graph(g), args.out)
    _note(f"n={g.n} m={g.m}", args.out is not None)
    return 0


# -- construct / convert / stats ----------------------------------------------

def _stats_line(g, cover):
    st = cover_stats(g, cover, degeneracy_ordering(g).coreness)
    return (f"cliques={st.num_cliques} assignments={st.assignments} "
            f"max_clique={st.max_clique_size} ratio={st.compression_ratio:.3f} ub_opt={st.ub_opt:.3f}")


def cmd_construct(args):
    g = load_graph(args.graph)
    t0 = time.perf_counter()
    cover = CONSTRUCTORS[args.algo](g).cover
    if args.assignment_minimal:
        cover = make_assignment_minimal(g, cover)
    elapsed = time.perf_counter() - t0
    data = to_bytes(encode_cover(cover)) if args.format == "encoded" else format_cover(cover)
    _emit(data, args.out)
    _note(f"algo={args.algo} {_stats_line(g, cover)} time_s={elapsed:.6f}", args.out is not None)
    return 0


def cmd_convert(args):
    src = load_cover_any(args.input)
    if args.to == "encoded":
        enc = src if isinstance(src, EncodedCover) else encode_cover(src)
        _emit(to_bytes(enc), args.out)
    else:
        _emit(format_cover(decode_cover(src) if isinstance(src, EncodedCover) else src), args.out)
    return 0


def cmd_stats(args):
    g = load_graph(args.graph)
    path = args.cover
    src = load_cover_any(path)
    cover = decode_cover(src) if isinstance(src, EncodedCover) else src
    rep = validate_cover(g, cover)
    if not rep.ok:
        raise InvalidCoverError(rep)
    st = asdict(cover_stats(g, cover, degeneracy_ordering(g).coreness))
    # file-level ratio: adjacency text bytes over cover file bytes
    st["file_bytes"] = os.path.getsize(path)
    st["graph_file_bytes"] = os.path.getsize(args.graph)
    st["byte_ratio"] = st["graph_file_bytes"] / st["file_bytes"] if st["file_bytes"] else None
    _emit(json.dumps(_json_safe(st), indent=2, sort_keys=True) + "\n", args.out)
    return 0


# -- run ----------------------------------------------------------------------

def _sniff(path):
    """'encoded', 'cover' or 'graph' from the file's first bytes / header."""
    with open(path, "rb") as fh:
        if fh.read(4) == b"DCCE":
            return "encoded"
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            s = line.strip()
            if s and not s.startswith("%"):
                return "cover" if len(s.split()) == 3 else "graph"
    raise GraphFormatError(f"{path}: no header line found")


def _dist(d):
    return [None if x == alg.INF else x for x in d]


def _serialize(app, res):
    if app == "cc":
        return {"components": res.count, "label": res.label, "forest": res.forest}
    if app == "bfs":
        return {"dist": _dist(res[0]), "parent": res[1]}
    if app in ("bfs-forest", "dfs"):
        return {"parent": res[0], "roots": res[1]}
    if app == "matching":
        return {"edges": res.edges, "vertex_cover": res.vertex_cover}
    if app == "mis":
        return {"set": res}
    if app == "color":
        return {"color": res}
    if app == "kcore":
        return {"core": res.core, "degeneracy": res.degeneracy}
    if app == "ecc":
        return {"diameter": res[0], "radius": res[1], "center": res[2]}
    if app == "maxclique":
        return {"clique": res}
    raise AssertionError(app)


def _run_graph(app, g, source):
    if app == "cc":
        return base.baseline_components(g)
    if app == "bfs":
        return base.baseline_bfs(g, source)
    return {
        "bfs-forest": base.baseline_bfs_forest, "dfs": base.baseline_dfs_forest,
        "matching": base.baseline_matching, "mis": base.baseline_mis,
        "color": base.baseline_coloring, "kcore": base.baseline_kcore,
        "ecc": base.baseline_eccentricity, "maxclique": base.baseline_maximal_clique,
    }[app](g)


def _run_cover(app, cover, source):
    if app == "cc":
        return alg.connected_components(cover), 0.0
    if app == "matching":
        return alg.maximal_matching(cover), 0.0
    t0 = time.perf_counter()
    plain = decode_cover(cover) if isinstance(cover, EncodedCover) else cover
    dcc = Dcc(plain, dual_from_cover(plain))
    build = time.perf_counter() - t0
    if app == "bfs":
        r = alg.bfs(dcc, source)
        return (r.dist, r.parent), build
    return {
        "bfs-forest": alg.bfs_forest, "dfs": alg.dfs_forest,
        "mis": alg.maximal_independent_set, "color": alg.first_fit_coloring,
        "kcore": alg.k_core_decomposition, "ecc": alg.eccentricity_sweep,
        "maxclique": alg.maximal_clique,
    }[app](dcc), build


def cmd_run(args):
    kind = _sniff(args.rep)
    t0 = time.perf_counter()
    if kind == "graph":
        rep = load_graph(args.rep)
    else:
        rep = read_cover(args.rep) if kind == "cover" else load_cover_any(args.rep)
    read = time.perf_counter() - t0
    if args.source is not None and not 0 <= args.source < rep.n:
        raise UsageError(f"--source must lie in 0..{rep.n - 1}")
    t0 = time.perf_counter()
    if kind == "graph":
        res, build = _run_graph(args.app, rep, args.source or 0), 0.0
    else:
        res, build = _run_cover(args.app, rep, args.source or 0)
    compute = time.perf_counter() - t0
    out = {"app": args.app, "representation": kind, **_serialize(args.app, res)}
    if kind != "graph":
        plain = decode_cover(rep) if isinstance(rep, EncodedCover) else rep
        covered = set(plain.universe())
        out["uncovered"] = [v for v in range(rep.n) if v not in covered]
    _emit(json.dumps(out, sort_keys=True) + "\n", args.out)
    # dual build is part of compute time; it is also shown on its own
    _note(f"read_time_s={read:.6f} dual_build_time_s={build:.6f} compute_time_s={compute:.6f} "
          f"total_time_s={read + compute:.6f}", args.out is not None)
    return 0


# -- bench --------------------------------------------------------------------

def cmd_bench(args):
    apps = args.apps.split(",") if args.apps else None
    if apps:
        bad = [a for a in apps if a not in APPS]
        if bad:
            raise UsageError(f"unknown app(s): {', '.join(bad)}")
    rep = bench(args.graph, args.cover, apps, args.reps, args.name, args.constructor)
    _emit(rep.to_csv() if args.format == "csv" else rep.to_json(), args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="dcc", description="Dual clique cover toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("gen", help="write a synthetic graph")
    s.add_argument("family", choices=sorted(gen.FAMILIES))
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=float)
    s.add_argument("--k", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("construct", help="build a clique cover of a graph")
    s.add_argument("graph")
    s.add_argument("--algo", choices=sorted(CONSTRUCTORS), default="sp")
    s.add_argument("--assignment-minimal", action="store_true")
    s.add_argument("--format", choices=["text", "encoded"], default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("convert", help="convert a cover between text and encoded form")
    s.add_argument("input")
    s.add_argument("--to", choices=["text", "encoded"], required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("stats", help="validate a cover and report compression")
    s.add_argument("graph")
    s.add_argument("cover")
    s.add_argument("--out")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("run", help="run one app on a graph or cover file")
    s.add_argument("app", choices=sorted(APPS))
    s.add_argument("rep")
    s.add_argument("--source", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("bench", help="time apps on both representations")
    s.add_argument("graph")
    s.add_argument("cover")
    s.add_argument("--apps", help="comma-separated subset of " + ",".join(sorted(APPS)))
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--name")
    s.add_argument("--constructor", default="unspecified")
    s.add_argument("--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        if getattr(args, "reps", 1) < 1:
            raise UsageError("--reps must be >= 1")
        return args.func(args)
    except UsageError as e:
        print(f"dcc: usage error: {e}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as e:
        print(f"dcc: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

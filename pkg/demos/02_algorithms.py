"""Run traversal and greedy apps directly on a cover and check them against adjacency lists."""
from dcc import algorithms as alg
from dcc import baseline as base
from dcc.constructors import succinct_peeling
from dcc.generators import gen_matched_cliques

g = gen_matched_cliques(32)
d = succinct_peeling(g)
print(f"n={g.n} m={g.m} cliques={len(d.cover)} size={d.cover.size}")

r = alg.bfs(d, 0)
print("bfs distances agree:", r.dist == base.baseline_bfs(g, 0)[0], "cliques scanned:", r.cliques_scanned)
print("components:", alg.connected_components(d.cover).count)
print("coreness agrees:", alg.k_core_decomposition(d).core == base.baseline_kcore(g).core)
m = alg.maximal_matching(d.cover)
print("matching size:", len(m.edges), "vertex cover size:", len(m.vertex_cover))
print("maximal clique:", alg.maximal_clique(d)[:8], "...")
print("diameter, radius:", alg.eccentricity_sweep(d)[:2])

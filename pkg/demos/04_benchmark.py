"""Time every app on adjacency lists and on a cover, with memory units for each arm."""
import tempfile
from pathlib import Path

from dcc.bench import bench
from dcc.constructors import succinct_peeling
from dcc.cover import write_cover
from dcc.generators import gen_matched_cliques
from dcc.graph import save_graph

g = gen_matched_cliques(256)
with tempfile.TemporaryDirectory() as tmp:
    gp, cp = Path(tmp) / "g.txt", Path(tmp) / "c.txt"
    save_graph(g, gp)
    write_cover(succinct_peeling(g).cover, cp)
    rep = bench(gp, cp, reps=3, constructor="sp")

print(f"{rep.graph}: n={rep.n} m={rep.m} size={rep.size_cover} ratio={rep.compression_ratio:.1f}")
print(f"{'app':<11}{'adj s':>10}{'cover s':>10}{'mem ratio':>11}")
for a in rep.apps:
    print(f"{a.app:<11}{a.adj_total_time_s:>10.4f}{a.total_time_s:>10.4f}{a.mem_ratio:>11.1f}")

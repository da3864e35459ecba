"""Build a clique cover of a small graph with every constructor and compare sizes."""
from dcc.constructors import CONSTRUCTORS
from dcc.cover import cover_stats, validate_cover
from dcc.generators import gen_er, gen_example_graph
from dcc.graph import degeneracy_ordering

for label, g in [("example", gen_example_graph()), ("er(200, 0.2)", gen_er(200, 0.2, seed=1))]:
    core = degeneracy_ordering(g).coreness
    print(f"{label}: n={g.n} m={g.m}")
    for name, make in sorted(CONSTRUCTORS.items()):
        d = make(g)
        assert validate_cover(g, d.cover).ok
        st = cover_stats(g, d.cover, core)
        print(f"  {name}: cliques={st.num_cliques:5d} size={st.assignments:6d} "
              f"ratio={st.compression_ratio:.3f} ub_opt={st.ub_opt:.3f}")

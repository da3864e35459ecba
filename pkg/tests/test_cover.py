import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dcc.constructors import global_admissibility
from dcc.cover import (CliqueCover, CoverFormatError, Dcc, IncidenceDual, InvalidCoverError,
                       adjacency_query, cover_from_dual, cover_stats, dual_from_cover,
                       is_assignment_minimal, is_composition_minimal, is_inclusion_minimal,
                       is_support_minimal, make_assignment_minimal, neighborhood_query,
                       read_cover, validate_cover, validate_dcc, write_cover)
from dcc.generators import (example_cover, gen_complete, gen_er, gen_example_graph,
                            gen_matched_cliques, matched_cliques_cover)
from dcc.graph import Graph, degeneracy_ordering

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def random_cover(g, rng):
    """A valid but deliberately sloppy cover: random cliques, sub-cliques, repeats, edges."""
    cl = []
    for _ in range(rng.randint(0, g.n)):
        v = rng.randrange(g.n)
        c = [v]
        cand = set(g.adj[v])
        while cand and rng.random() < 0.8:
            u = rng.choice(sorted(cand))
            c.append(u)
            cand &= g.adj_sets[u]
        if len(c) >= 2:
            cl.append(sorted(c))
            if rng.random() < 0.2:
                cl.append(sorted(c)[:2])
    covered = set()
    for c in cl:
        covered.update((a, b) for a in c for b in c if a < b)
    for e in g.edges():
        if e not in covered or rng.random() < 0.05:
            cl.append(list(e))
    rng.shuffle(cl)
    return CliqueCover(g.n, cl)


@st.composite
def graph_and_cover(draw, max_n=14):
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    n = draw(st.integers(1, max_n))
    p = draw(st.sampled_from([0.2, 0.5, 0.8]))
    g = gen_er(n, p, seed)
    return g, random_cover(g, rng)


def test_dual_examples():
    assert dual_from_cover(CliqueCover(3, [(0, 1, 2)])).labels == ((0,), (0,), (0,))
    assert dual_from_cover(CliqueCover(3, [(0, 1), (1, 2)])).labels[1] == (0, 1)
    assert cover_from_dual(IncidenceDual(0, [])) == CliqueCover(0, [])
    assert cover_from_dual(IncidenceDual(2, [(0,), (0,)])).cliques == ((0, 1),)
    with pytest.raises(ValueError):
        dual_from_cover(CliqueCover(2, [(0, 2)]))


@settings(max_examples=60, deadline=None)
@given(graph_and_cover())
def test_duality_round_trip(gc):
    g, c = gc
    d = dual_from_cover(c)
    assert d.size == c.size
    assert cover_from_dual(d) == c
    assert dual_from_cover(cover_from_dual(d)) == d
    assert validate_dcc(Dcc(c, d))
    assert Dcc(c, d).size == 2 * c.size


def test_validate_examples():
    assert validate_cover(gen_complete(3), CliqueCover(3, [(0, 1, 2)])).ok
    r = validate_cover(P3, CliqueCover(3, [(0, 1, 2)]))
    assert r.non_cliques == [(0, (0, 2))]
    r = validate_cover(P3, CliqueCover(3, [(0, 1)]))
    assert r.uncovered == [(1, 2)]
    assert validate_cover(Graph(4, [()] * 4), CliqueCover(4, [])).ok
    assert not validate_cover(P3, CliqueCover(4, [(0, 1), (1, 2)])).ok


def test_minimality_examples():
    k3 = gen_complete(3)
    edges = CliqueCover(3, [(0, 1), (0, 2), (1, 2)])
    assert is_inclusion_minimal(k3, edges).holds
    chk = is_composition_minimal(k3, edges)
    assert not chk.holds and chk.witness == (0, 1)
    assert is_composition_minimal(gen_matched_cliques(4), matched_cliques_cover(4)).holds

    g, c = gen_example_graph(), example_cover()
    assert is_support_minimal(g, c).holds
    chk = is_assignment_minimal(g, c)
    assert not chk.holds and chk.witness == (0, 0)  # vertex a leaves the first clique

    nested = CliqueCover(3, [(0, 1, 2), (0, 1)])
    chk = is_inclusion_minimal(k3, nested)
    assert not chk.holds and chk.witness == (1, 0)
    assert not is_support_minimal(k3, nested).holds


def test_verifiers_reject_invalid_cover():
    with pytest.raises(InvalidCoverError):
        is_support_minimal(P3, CliqueCover(3, [(0, 1)]))


@settings(max_examples=120, deadline=None)
@given(graph_and_cover())
def test_partial_order_consistency(gc):
    g, c = gc
    am = is_assignment_minimal(g, c).holds
    sm = is_support_minimal(g, c).holds
    im = is_inclusion_minimal(g, c).holds
    cm = is_composition_minimal(g, c).holds
    assert not am or sm
    assert not sm or im
    assert not cm or im


def _brute_composition(g, c):
    for i in range(len(c)):
        for j in range(i + 1, len(c)):
            u = set(c[i]) | set(c[j])
            if all(g.has_edge(a, b) for a in u for b in u if a < b):
                return False
    return True


@settings(max_examples=80, deadline=None)
@given(graph_and_cover())
def test_composition_matches_pairwise_definition(gc):
    g, c = gc
    assert is_composition_minimal(g, c).holds == _brute_composition(g, c)


def test_make_assignment_minimal_example():
    g, c = gen_example_graph(), example_cover()
    out = make_assignment_minimal(g, c)
    assert out.cliques[0] == (1, 2)
    assert out.cliques[1:] == c.cliques[1:]
    assert is_assignment_minimal(g, out).holds
    assert make_assignment_minimal(g, out) == out


@settings(max_examples=80, deadline=None)
@given(graph_and_cover())
def test_make_assignment_minimal_properties(gc):
    g, c = gc
    out = make_assignment_minimal(g, c)
    assert validate_cover(g, out).ok
    assert is_assignment_minimal(g, out).holds
    assert is_support_minimal(g, out).holds
    assert out.size <= c.size
    assert all(len(x) >= 2 for x in out.cliques)


def test_make_assignment_minimal_on_ga_output():
    g = gen_er(60, 0.4, seed=2)
    c = global_admissibility(g).cover
    out = make_assignment_minimal(g, c)
    assert out.size <= c.size and validate_cover(g, out).ok


def test_queries():
    d = Dcc.from_cover(CliqueCover(3, [(0, 1), (1, 2)]))
    assert adjacency_query(d.dual, 0, 1) and not adjacency_query(d.dual, 0, 2)
    with pytest.raises(ValueError):
        adjacency_query(d.dual, 1, 1)
    with pytest.raises(IndexError):
        adjacency_query(d.dual, 0, 3)
    t = Dcc.from_cover(CliqueCover(4, [(0, 1, 2)]))
    assert neighborhood_query(t, 0) == [1, 2]
    assert neighborhood_query(t, 3) == []


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 1000), st.sampled_from([0.1, 0.4, 0.7]))
def test_queries_agree_with_graph(seed, p):
    g = gen_er(40 + seed % 41, p, seed)
    d = Dcc.from_cover(random_cover(g, random.Random(seed)))
    for u in range(g.n):
        assert neighborhood_query(d, u) == list(g.adj[u])
        for v in range(u + 1, g.n):
            assert adjacency_query(d.dual, u, v) == g.has_edge(u, v)


def test_cover_stats():
    k4 = gen_complete(4)
    st4 = cover_stats(k4, CliqueCover(4, [(0, 1, 2, 3)]), degeneracy_ordering(k4).coreness)
    assert (st4.compression_ratio, st4.ub_opt, st4.max_clique_size) == (3, 3, 4)
    st3 = cover_stats(P3, CliqueCover(3, [(0, 1), (1, 2)]), degeneracy_ordering(P3).coreness)
    assert st3.compression_ratio == 1
    g = gen_matched_cliques(64)
    s = cover_stats(g, matched_cliques_cover(64), degeneracy_ordering(g).coreness)
    assert s.compression_ratio == 32 and s.num_cliques == 66 and s.assignments == 256


def test_cover_text_round_trip(tmp_path):
    c = CliqueCover(5, [(0, 1, 4), (2, 3)])
    p = tmp_path / "c.txt"
    write_cover(c, p)
    assert p.read_text() == "5 2 5\n1 2 5\n3 4\n"
    assert read_cover(p) == c


@pytest.mark.parametrize("text, line", [
    ("3 1 2 9\n", 1),
    ("3 1 2\n1 x\n", 2),
    ("3 1 2\n2 1\n", 2),
    ("3 1 2\n1 4\n", 2),
    ("% hi\n3 1 2\n1 2\n2 3\n", 4),
])
def test_cover_format_errors(text, line):
    with pytest.raises(CoverFormatError) as e:
        read_cover(io.StringIO(text))
    assert e.value.line == line


def test_cover_format_count_mismatch():
    with pytest.raises(CoverFormatError):
        read_cover(io.StringIO("3 2 4\n1 2\n"))
    with pytest.raises(CoverFormatError):
        read_cover(io.StringIO("3 1 3\n1 2\n"))

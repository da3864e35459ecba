from math import comb

import pytest

from dcc.cover import is_composition_minimal, validate_cover
from dcc.generators import (ER_PAIRWISE_LIMIT, clique_minus_matching_log_cover, gen_abu_family,
                            gen_ba, gen_clique_minus_matching, gen_er, gen_matched_cliques,
                            gen_separation_family, gen_ua, matched_cliques_cover,
                            separation_covers)

from oracles import clique_number, edge_set


def test_matched_cliques():
    assert edge_set(gen_matched_cliques(1)) == {(0, 1)}
    g = gen_matched_cliques(2)
    assert (g.n, g.m) == (4, 4)
    g7 = gen_matched_cliques(7)
    assert g7.m == 49
    assert all(g7.has_edge(i, 7 + i) for i in range(7))
    assert not g7.has_edge(0, 8)


def test_clique_minus_matching():
    assert edge_set(gen_clique_minus_matching(2)) == {(0, 1), (0, 3), (1, 2), (2, 3)}
    g = gen_clique_minus_matching(4)
    assert g.m == comb(8, 2) - 4
    non = {(u, v) for u in range(8) for v in range(u + 1, 8)} - edge_set(g)
    assert non == {(i, 4 + i) for i in range(4)}
    for bad in (0, 1, 3, 6):
        with pytest.raises(ValueError):
            gen_clique_minus_matching(bad)


@pytest.mark.parametrize("k, t", [(2, 1), (4, 2), (8, 3), (16, 4)])
def test_log_cover(k, t):
    g = gen_clique_minus_matching(k)
    c = clique_minus_matching_log_cover(k)
    assert len(c) == 2 + 2 * t
    assert validate_cover(g, c).ok
    assert is_composition_minimal(g, c).holds


def test_abu_family():
    g = gen_abu_family(2)
    assert (g.n, g.m) == (6, 11)
    assert not any(g.has_edge(a, b) for a in range(2) for b in range(2, 4))
    assert clique_number(gen_abu_family(3)) == 6
    with pytest.raises(ValueError):
        gen_abu_family(1)


def test_separation_family():
    for n in (1, 2, 5):
        g = gen_separation_family(n)
        first, second = separation_covers(n)
        assert validate_cover(g, first).ok and validate_cover(g, second).ok
        assert len(first) == n + 2 and len(second) == n + 4
        # n pairs widened by U, plus A+V and B+W; versus n pairs plus four 2n-cliques
        assert first.size == n * n + 6 * n
        assert second.size == 10 * n


def test_canonical_matched_cover():
    for n in (1, 4, 9):
        assert validate_cover(gen_matched_cliques(n), matched_cliques_cover(n)).ok
    assert is_composition_minimal(gen_matched_cliques(4), matched_cliques_cover(4)).holds


def test_er_extremes_and_determinism():
    assert gen_er(10, 0, 3).m == 0
    assert gen_er(10, 1, 3).m == 45
    assert gen_er(60, 0.3, 7) == gen_er(60, 0.3, 7)
    assert gen_er(60, 0.3, 7) != gen_er(60, 0.3, 8)
    for p in (-0.1, 1.5):
        with pytest.raises(ValueError):
            gen_er(5, p, 0)


def test_er_geometric_branch():
    n = ER_PAIRWISE_LIMIT + 50
    g = gen_er(n, 2e-4, seed=5)
    g.check()
    expected = 2e-4 * comb(n, 2)
    assert abs(g.m - expected) < 5 * expected ** 0.5
    assert g == gen_er(n, 2e-4, seed=5)


@pytest.mark.parametrize("fn", [gen_ba, gen_ua])
def test_attachment_edge_count(fn):
    g = fn(50, 3, seed=11)
    g.check()
    assert g.m == comb(3, 2) + 3 * 47
    assert g == fn(50, 3, seed=11)
    with pytest.raises(ValueError):
        fn(5, 5, 0)

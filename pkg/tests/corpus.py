"""The fixed 300-graph fuzz corpus shared by the acceptance tests."""
from functools import lru_cache

from dcc.generators import (gen_abu_family, gen_ba, gen_clique_minus_matching, gen_complete,
                            gen_er, gen_example_graph, gen_matched_cliques,
                            gen_separation_family, gen_ua)


def _er_specs():
    for i in range(200):
        n = 5 + (i * 37) % 116          # 5..120
        p = round(0.1 * (1 + i % 9), 1)  # 0.1..0.9
        yield f"er-{n}-{p}-s{i}", (lambda n=n, p=p, i=i: gen_er(n, p, seed=i))


def _attach_specs():
    for i in range(60):
        n = 10 + (i * 53) % 191          # 10..200
        k = 1 + i % 6
        fn = gen_ba if i % 2 == 0 else gen_ua
        yield f"{fn.__name__[4:]}-{n}-{k}-s{i}", (lambda fn=fn, n=n, k=k, i=i: fn(n, k, seed=1000 + i))


def _family_specs():
    for n in range(1, 11):
        yield f"matched-{n}", (lambda n=n: gen_matched_cliques(n))
    for k in (2, 4, 8, 16):
        yield f"cmm-{k}", (lambda k=k: gen_clique_minus_matching(k))
    for n in range(2, 10):
        yield f"abu-{n}", (lambda n=n: gen_abu_family(n))
    for n in range(1, 9):
        yield f"sep-{n}", (lambda n=n: gen_separation_family(n))
    yield "example", gen_example_graph
    for n in range(2, 11):
        yield f"K{n}", (lambda n=n: gen_complete(n))


@lru_cache(maxsize=None)
def corpus():
    """List of (name, Graph), 300 entries, deterministic."""
    specs = list(_er_specs()) + list(_attach_specs()) + list(_family_specs())
    return [(name, make()) for name, make in specs]

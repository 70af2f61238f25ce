import random

from hypothesis import strategies as st

from rainbowsub.graph import build


def greedy_colored(n, pairs, order_rng=None):
    """Properly color ``pairs`` greedily (smallest color free at both ends)."""
    pairs = list(pairs)
    if order_rng is not None:
        order_rng.shuffle(pairs)
    used = [set() for _ in range(n)]
    edges = []
    for u, v in pairs:
        c = 0
        while c in used[u] or c in used[v]:
            c += 1
        used[u].add(c)
        used[v].add(c)
        edges.append((u, v, c))
    return edges


def random_small_graph(rng: random.Random, max_n=10, min_n=2, density=None):
    n = rng.randint(min_n, max_n)
    p = rng.random() if density is None else density
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build(n, greedy_colored(n, pairs, rng))


@st.composite
def colored_graphs(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(all_pairs), unique=True)) if all_pairs else []
    # shuffle via a drawn permutation so colorings vary too
    seed = draw(st.integers(min_value=0, max_value=2**16))
    return build(n, greedy_colored(n, chosen, random.Random(seed)))

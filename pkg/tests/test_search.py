import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowsub import errors
from rainbowsub.expansion import EMPTY, ForbiddenSet
from rainbowsub.generators import complete, hypercube, random_colored
from rainbowsub.graph import build
from rainbowsub.search import (
    PhiBudgetWarning,
    SearchParams,
    build_tkt,
    connect,
    default_rounds,
    find_rainbow_cycle,
    q_schedule,
    reach,
)
from rainbowsub.verify import verify_cycle, verify_path, verify_subdivision

STAR = build(6, [(0, k, k - 1) for k in range(1, 6)])
TRIANGLE = build(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])


def bisect_q(p_c, l):
    """Solve (1 - p_c/2)(1 - q)^(l-1) = 1 - p_c for q by bisection."""
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = (lo + hi) / 2
        if (1 - p_c / 2) * (1 - mid) ** (l - 1) > 1 - p_c:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def recompose(schedule):
    return math.prod(1 - q for q in schedule)


# -- q schedule -------------------------------------------------------------------


def test_schedule_full_palette():
    assert q_schedule(1.0, 5) == [0.5, 1.0, 1.0, 1.0, 1.0]


def test_schedule_two_rounds_exact():
    q1, q2 = q_schedule(0.5, 2)
    assert Fraction(q1) == Fraction(1, 4)
    assert q2 == pytest.approx(1 / 3, abs=1e-15)


def test_schedule_four_rounds():
    s = q_schedule(0.5, 4)
    assert s[0] == 0.25
    assert s[1] == s[2] == s[3] == pytest.approx(1 - (2 / 3) ** (1 / 3), abs=1e-14)
    assert s[1] == pytest.approx(bisect_q(0.5, 4), abs=1e-12)
    assert abs(recompose(s) - 0.5) <= 1e-12


def test_schedule_single_round():
    assert q_schedule(0.3, 1) == [0.3]


@given(st.floats(1e-6, 1 - 1e-9), st.integers(1, 400))
@settings(max_examples=300, deadline=None)
def test_schedule_identity(p_c, l):
    s = q_schedule(p_c, l)
    assert len(s) == l
    assert all(0 <= q <= 1 for q in s)
    assert abs(recompose(s) - (1 - p_c)) <= 1e-12


def test_schedule_rejects():
    with pytest.raises(errors.BadProbability):
        q_schedule(0.0, 3)
    with pytest.raises(ValueError):
        q_schedule(0.5, 0)


def test_default_rounds():
    assert default_rounds(2) == 1
    assert default_rounds(1024) == math.ceil(32 * 10 * math.log2(10))
    assert SearchParams().rounds_for(1024) == 64
    assert SearchParams(rounds=7).rounds_for(1024) == 7


def test_params_validation():
    with pytest.raises(errors.BadProbability):
        SearchParams(p_c=0)
    for bad in ({"rounds": 0}, {"max_len": 0}, {"retries": -1}, {"lam": 0}):
        with pytest.raises(ValueError):
            SearchParams(**bad)


# -- reach ------------------------------------------------------------------------


def test_reach_star_full_palette():
    r = reach(STAR, 0, EMPTY, SearchParams(p_c=1.0, rounds=4, seed=3))
    assert len(r) == 5
    for leaf in range(1, 6):
        assert r.path_to(leaf).vertices == (0, leaf)
        # round 1 offers each color with probability 1/2, round 2 offers the rest
        assert r.round_of[leaf] in (1, 2)
    assert r.round_of[0] == 0


def test_reach_all_neighbors_forbidden():
    r = reach(STAR, 0, ForbiddenSet(range(1, 6)), SearchParams(p_c=1.0))
    assert len(r) == 0
    assert r.paths == {}


def test_reach_forbidden_origin():
    with pytest.raises(errors.ForbiddenOrigin):
        reach(STAR, 0, ForbiddenSet({0}))


@pytest.mark.parametrize("d", [4, 6, 8])
def test_reach_hypercube_paths_are_rainbow(d):
    g = hypercube(d)
    for seed in range(5):
        r = reach(g, seed % g.n, EMPTY, SearchParams(p_c=1.0, rounds=3 * d, seed=seed))
        assert len(r) >= 1
        for path in r.paths.values():
            assert verify_path(g, path).ok
            assert len(path.vertices) - 1 <= d


def test_reach_respects_forbidden_colors():
    g = random_colored(200, 20, seed=4)
    phi = ForbiddenSet(range(0, 100, 3), range(0, g.color_count, 2))
    r = reach(g, 1, phi, SearchParams(p_c=0.7, seed=2))
    for path in r.paths.values():
        assert verify_path(g, path, phi).ok


def test_reach_many_paths_verified():
    g = random_colored(500, 12, seed=8)
    checked = 0
    seed = 0
    while checked < 10_000:
        r = reach(g, seed % g.n, EMPTY, SearchParams(p_c=0.5, seed=seed))
        for path in r.paths.values():
            v = verify_path(g, path)
            assert v.ok, v.violations
            checked += 1
        seed += 1


# -- connect ----------------------------------------------------------------------


def test_connect_adjacent_pair():
    g = build(2, [(0, 1, 0)])
    found = []
    for seed in range(20):
        try:
            found.append(connect(g, 0, 1, EMPTY, SearchParams(p_c=1.0, seed=seed)))
        except errors.NoConnection:
            pass
    assert found
    assert all(p.vertices == (0, 1) and p.colors == (0,) for p in found)


def test_connect_disconnected():
    g = build(4, [(0, 1, 0), (2, 3, 0)])
    with pytest.raises(errors.NoConnection):
        connect(g, 0, 3, EMPTY, SearchParams(seed=1))


def test_connect_k16_pairs():
    g = complete(16)
    rng = np.random.default_rng(0)
    for k in range(20):
        u, v = (int(x) for x in rng.choice(16, 2, replace=False))
        path = connect(g, u, v, EMPTY, SearchParams(seed=k))
        assert (path.vertices[0], path.vertices[-1]) == (u, v)
        assert verify_path(g, path).ok


def test_connect_avoids_phi():
    g = complete(30)
    phi = ForbiddenSet(range(10, 20), range(0, 29, 2))
    for seed in range(10):
        path = connect(g, 0, 1, phi, SearchParams(seed=seed))
        assert verify_path(g, path, phi).ok


def test_connect_argument_errors():
    g = complete(5)
    with pytest.raises(ValueError):
        connect(g, 2, 2)
    with pytest.raises(errors.VertexOutOfRange):
        connect(g, 0, 9)
    with pytest.raises(errors.ForbiddenOrigin):
        connect(g, 0, 1, ForbiddenSet({1}))


# -- build_tkt / find_rainbow_cycle ------------------------------------------------


def test_tk2_on_rainbow_path():
    g = build(5, [(i, i + 1, i) for i in range(4)])
    cert = build_tkt(g, 2, SearchParams(p_c=1.0, extract=False, retries=20))
    assert set(cert.branch) <= set(range(5))
    (path,) = cert.paths.values()
    assert verify_subdivision(g, cert).ok
    assert path.vertices[0] == cert.branch[0] and path.vertices[-1] == cert.branch[1]


def test_tk3_is_a_cycle():
    g = complete(20)
    cert = build_tkt(g, 3, SearchParams(seed=5))
    assert sorted(cert.paths) == [(0, 1), (0, 2), (1, 2)]
    cycle = cert.to_cycle()
    assert verify_cycle(g, cycle).ok
    assert set(cert.branch) <= set(cycle.vertices)


def test_tk4_on_k64():
    g = complete(64)
    wins = 0
    for seed in range(20):
        try:
            cert = build_tkt(g, 4, SearchParams(seed=seed))
        except errors.PairFailed:
            continue
        wins += 1
        assert verify_subdivision(g, cert).ok
    assert wins >= 18


def test_tkt_deterministic():
    g = random_colored(300, 40, seed=1)
    a = build_tkt(g, 4, SearchParams(seed=11))
    b = build_tkt(g, 4, SearchParams(seed=11))
    assert a.to_json() == b.to_json()


def test_tkt_pair_failed_carries_partial():
    with pytest.raises(errors.PairFailed) as info:
        build_tkt(hypercube(4), 3, SearchParams(seed=0))
    partial = info.value.partial
    assert len(partial.paths) < 3
    assert verify_subdivision(hypercube(4), partial).codes() <= {"NotAPath"}


def test_tkt_too_few_vertices():
    with pytest.raises(errors.TooFewVertices):
        build_tkt(complete(3), 4)
    with pytest.raises(ValueError):
        build_tkt(complete(3), 1)


def test_phi_budget_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PhiBudgetWarning)
        build_tkt(complete(16), 4, SearchParams(seed=0))
    assert any(issubclass(w.category, PhiBudgetWarning) for w in caught)


def test_cycle_in_triangle():
    cycle = find_rainbow_cycle(TRIANGLE, SearchParams(seed=0, retries=10))
    assert sorted(cycle.vertices[:-1]) == [0, 1, 2]
    assert sorted(cycle.colors) == [0, 1, 2]


def test_tree_never_has_cycle():
    tree = build(7, [(0, 1, 0), (0, 2, 1), (1, 3, 1), (1, 4, 2), (2, 5, 0), (2, 6, 2)])
    for seed in range(10):
        with pytest.raises(errors.NoCycleFound):
            find_rainbow_cycle(tree, SearchParams(seed=seed))


def test_hypercube4_never_has_cycle():
    g = hypercube(4)
    for seed in range(50):
        with pytest.raises(errors.NoCycleFound):
            find_rainbow_cycle(g, SearchParams(seed=seed))


def test_cycle_small_inputs():
    with pytest.raises(errors.TooFewVertices):
        find_rainbow_cycle(build(2, [(0, 1, 0)]))
    with pytest.raises(errors.NoCycleFound):
        find_rainbow_cycle(build(4, [(0, 1, 0), (2, 3, 0)]))

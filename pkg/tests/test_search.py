"""Exhaustive sweep and stochastic local search."""

import json
import os

import pytest

from cyclecount.counting import count_oracle
from cyclecount.io import from_graph6
from cyclecount.search import (
    exhaustive_max,
    local_search_max,
    monotonicity_report,
)

# frozen after the first verified sweep of the full labeled space
FROZEN_MAX = {
    (4, 4): 1,
    (5, 4): 3,
    (6, 4): 9,
    (7, 4): 18,
    (5, 5): 1,
    (6, 5): 2,
    (7, 5): 4,
    (6, 6): 1,
    (7, 6): 2,
    (7, 7): 1,
}


@pytest.mark.parametrize("n,k", sorted(FROZEN_MAX))
def test_exhaustive_frozen_values(n, k):
    r = exhaustive_max(n, k)
    assert r.best_count == FROZEN_MAX[(n, k)]
    assert r.exhaustive
    assert r.explored == 1 << (n * (n - 1) // 2)


def test_exhaustive_witnesses_attain_best():
    r = exhaustive_max(6, 4)
    assert 1 <= len(r.witnesses) <= 10
    assert r.witnesses == sorted(r.witnesses)
    for g6 in r.witnesses:
        g = from_graph6(g6)
        assert count_oracle(g, 4).total == r.best_count
    # K_{3,3} attains the n=6 maximum of 9
    from cyclecount.constructions import complete_bipartite

    assert count_oracle(complete_bipartite(3, 3), 4).total == r.best_count


def test_exhaustive_refuses_large_n_without_override():
    with pytest.raises(ValueError):
        exhaustive_max(8, 4)
    with pytest.raises(ValueError):
        exhaustive_max(9, 4, allow_large=True)  # hard ceiling


def test_exhaustive_cache_round_trip(cache_dir):
    a = exhaustive_max(5, 4, cache_dir=cache_dir)
    path = os.path.join(cache_dir, "exhaustive_n5_k4.json")
    assert os.path.exists(path)
    with open(path) as fh:
        stored = json.load(fh)
    assert stored["best_count"] == 3
    b = exhaustive_max(5, 4, cache_dir=cache_dir)
    assert (a.best_count, a.witnesses) == (b.best_count, b.witnesses)


def test_exhaustive_dominates_constructed_candidates():
    # the sweep maximum can never sit below any feasible point we can build
    from cyclecount.constructions import (
        balanced_part_sizes,
        blow_up,
        complete_bipartite,
        cycle,
        random_graph,
    )
    from cyclecount.counting import count_fast

    for n, k in ((6, 4), (7, 4), (6, 5), (7, 5)):
        best = FROZEN_MAX[(n, k)]
        candidates = [
            blow_up(cycle(k), balanced_part_sizes(n, k)),
            complete_bipartite(n // 2, n - n // 2),
            random_graph(n, 0.5, 7),
        ]
        for g in candidates:
            assert count_fast(g, k).total <= best


def test_monotonicity_of_max_density():
    rep4 = monotonicity_report(4, 7)
    assert rep4.monotone, rep4.violations
    rep5 = monotonicity_report(5, 7)
    assert rep5.monotone, rep5.violations
    # every density sits at or above the balanced blow-up feasible point
    from fractions import Fraction
    from math import comb

    from cyclecount.constructions import balanced_part_sizes, blow_up, cycle
    from cyclecount.counting import count_fast

    for rep, k in ((rep4, 4), (rep5, 5)):
        for n, dens in rep.densities:
            feasible = count_fast(blow_up(cycle(k), balanced_part_sizes(n, k)), k)
            assert dens >= Fraction(feasible.total, comb(n, k))


def test_local_search_reaches_exhaustive_optimum():
    r = local_search_max(6, 4, budget=400, seed=2)
    assert r.best_count == 9
    assert not r.exhaustive


def test_local_search_at_n_equals_k():
    # the only way to score is to be a C_k: any decent run finds one
    for n in (5, 6):
        r = local_search_max(n, n, budget=300, seed=3)
        assert r.best_count == 1


def test_local_search_never_beats_exhaustive():
    for seed in range(3):
        r = local_search_max(7, 5, budget=200, seed=seed)
        assert r.best_count <= 4
        g = from_graph6(r.witnesses[0])
        assert count_oracle(g, 5).total == r.best_count


def test_local_search_seeded_at_iterated_blowup():
    # n = 25 starts from the depth-2 construction, so even a tiny budget
    # cannot fall below its exact count
    r = local_search_max(25, 5, budget=30, seed=0)
    assert r.best_count >= 3130


def test_local_search_is_deterministic_per_seed():
    a = local_search_max(8, 5, budget=120, seed=9)
    b = local_search_max(8, 5, budget=120, seed=9)
    assert a.best_count == b.best_count
    assert a.witnesses == b.witnesses


def test_local_search_validates_args():
    with pytest.raises(ValueError):
        local_search_max(5, 8)
    with pytest.raises(ValueError):
        local_search_max(6, 5, budget=0)


@pytest.mark.skipif(
    os.environ.get("CYCLECOUNT_RUN_SLOW") != "1",
    reason="full 2^28 sweep takes minutes; set CYCLECOUNT_RUN_SLOW=1",
)
def test_exhaustive_n8_k5_gated():
    r = exhaustive_max(8, 5, allow_large=True)
    assert r.exhaustive and r.explored == 1 << 28
    # density must not rise from the n=7 value
    prev = exhaustive_max(7, 5)
    from fractions import Fraction
    from math import comb

    assert Fraction(r.best_count, comb(8, 5)) <= Fraction(prev.best_count, comb(7, 5))


@pytest.mark.skipif(
    os.environ.get("CYCLECOUNT_RUN_SLOW") != "1",
    reason="full 2^28 sweep takes minutes; set CYCLECOUNT_RUN_SLOW=1",
)
def test_exhaustive_n8_k4_gated():
    from fractions import Fraction
    from math import comb

    r = exhaustive_max(8, 4, allow_large=True)
    assert r.exhaustive
    dens = Fraction(r.best_count, comb(8, 4))
    # squeeze: cannot rise from n=7, cannot dip under the limit 3/8
    assert Fraction(3, 8) <= dens <= Fraction(FROZEN_MAX[(7, 4)], comb(7, 4))

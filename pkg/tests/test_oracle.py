"""Exhaustive search oracle against independent brute force."""

import itertools
import random

import pytest

from divgrace import (InvalidParametersError, Labeling, NotBipartiteError,
                      SearchConfig, SimpleGraph, build_grid, check_alpha,
                      cross_validate, engine_accepts, search)

EDGE = SimpleGraph(2, ((0, 1),))
PATH3 = SimpleGraph(3, ((0, 1), (1, 2)))
C4 = SimpleGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
TRIANGLE = SimpleGraph(3, ((0, 1), (1, 2), (0, 2)))


def _brute_force(g, d):
    # ground truth by raw enumeration, no shared code with the oracle
    e = g.num_edges
    q = e // d
    n_labels = d * (q + 1)
    allowed = {x for x in range(1, n_labels + 1) if x % (q + 1) != 0}
    hits = set()
    for values in itertools.permutations(range(n_labels), g.num_vertices):
        diffs = [abs(values[u] - values[w]) for u, w in g.edges]
        if len(set(diffs)) == e and set(diffs) <= allowed:
            hits.add(values)
    return hits


def test_single_edge():
    res = search(EDGE, SearchConfig(d=1))
    assert res.count == 2
    assert res.exhaustive
    assert {lab.values for lab in res.labelings} == {(0, 1), (1, 0)}


def test_single_edge_symmetry_break():
    res = search(EDGE, SearchConfig(d=1, symmetry_break=True))
    assert res.count == 1
    assert res.labelings[0].values == (0, 1)


@pytest.mark.parametrize("g,d", [(PATH3, 1), (PATH3, 2), (C4, 1)])
def test_matches_brute_force(g, d):
    res = search(g, SearchConfig(d=d))
    expect = _brute_force(g, d)
    assert res.count == len(expect)
    assert {lab.values for lab in res.labelings} == expect


def test_c4_count_frozen():
    assert search(C4, SearchConfig(d=1)).count == 16


def test_symmetry_break_collapses_complements():
    full = {lab.values for lab in search(C4, SearchConfig(d=1)).labelings}
    res = search(C4, SearchConfig(d=1, symmetry_break=True))
    halved = {lab.values for lab in res.labelings}
    mirrored = {tuple(4 - x for x in vals) for vals in halved}
    assert halved | mirrored == full
    assert all(vals[0] <= 2 for vals in halved)


def test_deterministic_repeat():
    a = search(C4, SearchConfig(d=1))
    b = search(C4, SearchConfig(d=1))
    assert [lab.values for lab in a.labelings] == [lab.values for lab in b.labelings]


def test_reversed_order_same_space():
    fwd = search(C4, SearchConfig(d=1))
    rev = search(C4, SearchConfig(d=1, order="bfs-reversed"))
    assert rev.count == fwd.count
    assert ({lab.values for lab in rev.labelings}
            == {lab.values for lab in fwd.labelings})


def test_workers_match_serial():
    serial = search(C4, SearchConfig(d=1))
    pooled = search(C4, SearchConfig(d=1, workers=3))
    assert pooled.count == serial.count
    assert ([lab.values for lab in pooled.labelings]
            == [lab.values for lab in serial.labelings])


def test_max_results_truncates_in_order():
    full = search(C4, SearchConfig(d=1))
    part = search(C4, SearchConfig(d=1, max_results=5))
    assert part.count == 5
    assert not part.exhaustive
    assert ([lab.values for lab in part.labelings]
            == [lab.values for lab in full.labelings][:5])


def test_max_results_beyond_space_is_exhaustive():
    res = search(C4, SearchConfig(d=1, max_results=1000))
    assert res.count == 16
    assert res.exhaustive


def test_store_limit_zero_counts_only():
    res = search(C4, SearchConfig(d=1, store_limit=0))
    assert res.count == 16
    assert res.labelings == ()


def test_t8_alpha_count(t8):
    res = search(t8, SearchConfig(d=3, alpha_only=True, store_limit=0))
    assert res.count == 576
    assert res.exhaustive


def test_t8_full_count(t8):
    res = search(t8, SearchConfig(d=3, store_limit=2000))
    assert res.count == 1440
    alphas = sum(1 for lab in res.labelings
                 if check_alpha(t8, lab) is not None)
    assert alphas == 576


def test_t8_alpha_workers(t8):
    res = search(t8, SearchConfig(d=3, alpha_only=True, store_limit=0, workers=4))
    assert res.count == 576


def test_engine_accepts_valid(t8, t8_labeling):
    assert engine_accepts(t8, t8_labeling, SearchConfig(d=3))
    assert engine_accepts(t8, t8_labeling, SearchConfig(d=3, alpha_only=True))


def test_engine_rejects_boundary_violation(t8):
    # graceful but not alpha: the alpha-only engine must prune it
    res = search(t8, SearchConfig(d=3, store_limit=2000))
    plain = next(lab for lab in res.labelings if check_alpha(t8, lab) is None)
    assert engine_accepts(t8, plain, SearchConfig(d=3))
    assert not engine_accepts(t8, plain, SearchConfig(d=3, alpha_only=True))


def test_cross_validate_accepts(t8, t8_labeling):
    report = cross_validate(t8, t8_labeling, 3)
    assert report.ok
    assert report.reason == "agree-accept"


def test_cross_validate_rejects_perturbation(t8, t8_labeling):
    vals = list(t8_labeling.values)
    vals[2] = 13
    report = cross_validate(t8, Labeling(t8, tuple(vals)), 3)
    assert report.ok
    assert report.reason == "agree-reject"


def test_cross_validate_random_perturbations(t8, t8_labeling):
    rng = random.Random(7)
    for trial in range(200):
        vals = list(t8_labeling.values)
        x = rng.randrange(len(vals))
        vals[x] = rng.choice([c for c in range(15) if c != vals[x]])
        cfg = SearchConfig(d=3, alpha_only=trial % 2 == 0)
        report = cross_validate(t8, Labeling(t8, tuple(vals)), 3, cfg)
        assert report.ok, report.describe()
        assert report.reason.startswith("agree")


def test_cross_validate_d_mismatch(t8, t8_labeling):
    with pytest.raises(ValueError):
        cross_validate(t8, t8_labeling, 3, SearchConfig(d=1))


def test_search_rejects_bad_divisor(t8):
    with pytest.raises(InvalidParametersError):
        search(t8, SearchConfig(d=5))


def test_search_rejects_unknown_order():
    with pytest.raises(ValueError):
        search(C4, SearchConfig(d=1, order="dfs"))


def test_alpha_search_needs_bipartite():
    with pytest.raises(NotBipartiteError):
        search(TRIANGLE, SearchConfig(d=1, alpha_only=True))


def test_grid_search_finds_constructed_labelings():
    g = build_grid(1, 2)
    res = search(g, SearchConfig(d=3, alpha_only=True, store_limit=1000))
    values = {lab.values for lab in res.labelings}
    assert (7, 5, 9, 6, 0, 14, 1, 12) in values

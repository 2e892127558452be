"""Benchmark colorings, alignment, and sunflower extraction."""

import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from connramsey import (
    StringVertexMap,
    aligned,
    constant_coloring,
    decide_classical,
    delta_coloring,
    find_delta_subsystem,
    hub_coloring,
    kappa_connected_bruteforce,
    make_graph,
    random_coloring,
)


def test_string_vertex_map_round_trip():
    svm = StringVertexMap(3)
    for v in range(svm.n):
        assert svm.vertex_of(svm.string_of(v)) == v
    assert svm.string_of(5) == "101"
    with pytest.raises(ValueError):
        svm.string_of(8)
    with pytest.raises(ValueError):
        svm.vertex_of("10")


@given(st.integers(1, 6), st.data())
def test_string_order_matches_vertex_order(ell, data):
    svm = StringVertexMap(ell)
    u = data.draw(st.integers(0, svm.n - 1))
    v = data.draw(st.integers(0, svm.n - 1))
    assert (u < v) == (svm.string_of(u) < svm.string_of(v))


def test_delta_coloring_examples():
    d = delta_coloring(2)
    assert (d.n, d.lam) == (4, 2)
    assert d.color(0, 1) == 1  # 00 vs 01
    assert d.color(0, 2) == 0
    assert d.color(2, 3) == 1
    single = delta_coloring(1)
    assert (single.n, single.lam, single.colors) == (2, 1, (0,))
    with pytest.raises(ValueError):
        delta_coloring(0)


def test_delta_color_is_common_prefix_length():
    svm = StringVertexMap(3)
    d = delta_coloring(3)
    for u, v in combinations(range(8), 2):
        su, sv = svm.string_of(u), svm.string_of(v)
        expected = next(i for i in range(3) if su[i] != sv[i])
        assert d.color(u, v) == expected


def test_delta_injection_bound_exhaustive():
    for ell in (1, 2, 3):
        d = delta_coloring(ell)
        for size in range(1, d.n + 1):
            for xs in combinations(range(d.n), size):
                realized = {d.color(a, b) for a, b in combinations(xs, 2)}
                assert len(xs) <= 2 ** len(realized)


def test_constant_and_random():
    c = constant_coloring(4, 0, 2)
    assert set(c.colors) == {0}
    assert random_coloring(6, 3, seed=42) == random_coloring(6, 3, seed=42)
    assert random_coloring(6, 3, seed=1) != random_coloring(6, 3, seed=2)
    with pytest.raises(ValueError):
        constant_coloring(4, 2, 2)


def test_hub_2_2_structure():
    hub = hub_coloring(2, 2)
    assert (hub.n, hub.lam) == (4, 2)
    crossing = {(a, b) for a, b in combinations(range(4), 2) if hub.color(a, b) == 0}
    assert crossing == {(0, 1), (0, 3), (1, 2), (2, 3)}
    assert hub.color(0, 2) == 1 and hub.color(1, 3) == 1
    # the crossing edges form a 4-cycle, which is 2-connected
    g = make_graph(range(4), crossing)
    assert kappa_connected_bruteforce(g, 2)
    assert not decide_classical(hub, 3, 1).holds


def test_hub_1_1():
    hub = hub_coloring(1, 1)
    assert (hub.n, hub.lam, hub.colors) == (2, 1, (0,))


def test_hub_classes_interleaved():
    hub = hub_coloring(3, 2)
    assert hub.n == 5
    # positions 0,2 and 1,3 alternate; leftover class-0 vertex sits at 4
    crossing = {(a, b) for a, b in combinations(range(5), 2) if hub.color(a, b) == 0}
    assert (0, 1) in crossing and (1, 2) in crossing and (3, 4) in crossing
    assert (0, 2) not in crossing and (1, 3) not in crossing


def test_aligned_examples():
    assert aligned([1, 3, 5], [1, 3, 5])
    assert aligned([1, 3, 5], [2, 3, 9])
    assert not aligned([1, 3], [3, 5])
    assert not aligned([1, 2], [1, 2, 3])
    assert aligned([], [])


@given(st.lists(st.integers(0, 30), unique=True, max_size=8))
def test_aligned_reflexive(xs):
    xs = sorted(xs)
    assert aligned(xs, xs)


@given(
    st.lists(st.integers(0, 30), unique=True, max_size=8),
    st.lists(st.integers(0, 30), unique=True, max_size=8),
)
def test_aligned_symmetric(us, vs):
    us, vs = sorted(us), sorted(vs)
    assert aligned(us, vs) == aligned(vs, us)


@given(st.lists(st.integers(0, 30), unique=True, min_size=1, max_size=8), st.integers(1, 5))
def test_aligned_invariant_under_order_isomorphism(us, shift):
    us = sorted(us)
    vs = [x * 2 + shift for x in us]  # strictly increasing map applied to both
    assert aligned(us, us) == aligned(vs, vs)
    ws = sorted(set(us) | {max(us) + 1})[: len(us)]
    assert aligned(us, ws) == aligned([x * 2 + shift for x in us], [x * 2 + shift for x in ws])


def test_delta_subsystem_disjoint_family():
    fam = [{1, 2}, {3, 4}, {5, 6}]
    sub, root = find_delta_subsystem(fam, 3)
    assert len(sub) == 3 and root == frozenset()


def test_delta_subsystem_identical_family():
    fam = [{1, 2}, {1, 2}, {1, 2}, {1, 2}]
    sub, root = find_delta_subsystem(fam, 2)
    assert len(sub) == 4  # whole family
    assert root == frozenset({1, 2})


def test_delta_subsystem_mixed_family():
    fam = [{1, 2}, {1, 3}, {1, 4}, {2, 3}]
    sub, root = find_delta_subsystem(fam, 3)
    assert sub == (frozenset({1, 2}), frozenset({1, 3}), frozenset({1, 4}))
    assert root == frozenset({1})


def test_delta_subsystem_not_found():
    fam = [{1, 2}, {2, 3}, {3, 1}]
    assert find_delta_subsystem(fam, 3) is None


def test_delta_subsystem_validation():
    with pytest.raises(ValueError, match="same size"):
        find_delta_subsystem([{1}, {1, 2}], 2)
    with pytest.raises(ValueError, match="t >= 2"):
        find_delta_subsystem([{1}, {2}], 1)


def test_delta_subsystem_result_verifies():
    rng = random.Random(0)
    for _ in range(30):
        fam = [frozenset(rng.sample(range(8), 3)) for _ in range(7)]
        hit = find_delta_subsystem(fam, 3)
        if hit is None:
            continue
        sub, root = hit
        for a, b in combinations(sub, 2):
            assert a & b == root

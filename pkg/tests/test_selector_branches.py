"""Crafted instances steering the colour selectors into their rarely-hit
branches (random pools with a 3k universe almost always intersect, so the
disjoint and pigeonhole paths need deliberate inputs)."""

from __future__ import annotations

from incolour.constructive import (
    choose_halin_boundary,
    choose_ham_boundary,
    halin_boundary_valid,
    ham_boundary_valid,
)
from incolour.constructive.coronae import _choose_cd, _place_pair
from incolour.constructive.report import Painter
from incolour.families import gen_corona
from incolour.graphs import ListAssignment


def test_ham_pigeonhole_on_the_a_side():
    # pool_b lands entirely inside the outer guard: a must dodge it instead
    C = frozenset(range(1, 7))
    D = frozenset(range(7, 13))
    E = frozenset(range(13, 19))
    guard_outer = frozenset(range(20, 26))
    guard_inner = frozenset(range(40, 46))
    A = frozenset(range(30, 36))
    B = frozenset({7} | set(range(20, 25)))
    vals, case = choose_ham_boundary(C, D, E, A, B, guard_outer, guard_inner)
    assert ham_boundary_valid(vals, A, B, C, D, E, guard_outer, guard_inner)
    a, b, *_ = vals
    assert a not in guard_outer


def test_ham_spare_b_side():
    C = frozenset(range(1, 7))
    D = frozenset(range(7, 13))
    E = frozenset(range(13, 19))
    guard_outer = frozenset(range(20, 26))
    guard_inner = frozenset(range(40, 46))
    A = frozenset(range(30, 36))
    B = frozenset({7} | set(range(50, 55)))
    vals, _case = choose_ham_boundary(C, D, E, A, B, guard_outer, guard_inner)
    assert ham_boundary_valid(vals, A, B, C, D, E, guard_outer, guard_inner)
    assert vals[1] == 50


def test_halin_boundary_stage_rechecks():
    # c forced into both outer guards with disjoint a/b pools: the second
    # stage reuses or re-picks a and b against the far guard
    C = frozenset({5, 60, 61, 62, 63, 64})
    D = frozenset({5, 70, 71, 72, 73, 74})   # c = d = 5
    E = frozenset(range(80, 86))
    guard_inner = frozenset(range(90, 96))
    guard_first = frozenset({5} | set(range(1, 6)))     # contains c
    guard_last = frozenset({5} | set(range(10, 15)))    # contains c too
    A = frozenset(range(1, 7))     # nearly equals guard_first
    B = frozenset(range(10, 16))
    vals, _case = choose_halin_boundary(A, B, C, D, E, guard_last, guard_first, guard_inner)
    assert halin_boundary_valid(vals, A, B, C, D, E, guard_last, guard_first, guard_inner)


def test_halin_boundary_shared_pair():
    # a large A-B intersection: one shared colour serves both
    shared = set(range(30, 36))
    A = frozenset(shared)
    B = frozenset(shared)
    C = frozenset({1, 40, 41, 42, 43, 44})
    D = frozenset(range(50, 56))
    E = frozenset(range(60, 66))
    guard_inner = frozenset(range(70, 76))
    guard_first = frozenset({1} | set(range(90, 95)))   # contains c = 1
    guard_last = frozenset(range(100, 106))
    vals, _case = choose_halin_boundary(A, B, C, D, E, guard_last, guard_first, guard_inner)
    assert halin_boundary_valid(vals, A, B, C, D, E, guard_last, guard_first, guard_inner)
    a, b, *_ = vals
    assert a == b


def test_corona_cd_selector_branches():
    # shared colour across both cycle externals
    c, d = _choose_cd(frozenset({3, 9}), frozenset({3, 8}), frozenset({5, 6}), 1, 2)
    assert c == d == 3
    # b reused wherever it appears when both pre-colours sit in the guard
    c, d = _choose_cd(frozenset({2, 9, 30}), frozenset({8, 31, 40}),
                      frozenset({1, 2, 8, 9}), 1, 2)
    assert c == 2 and d == 31            # d from pool minus the guard
    # split choice: one side dodges the guard, the other is free
    c, d = _choose_cd(frozenset({30, 31}), frozenset({5, 6, 32}),
                      frozenset({5, 6, 7}), 1, 2)
    assert c == 30
    assert d in {5, 6, 32}


def test_place_pair_one_sided_modes():
    g, _ = gen_corona(3, 1)
    m = 2 * len(g.edges)
    painter = Painter(g, ListAssignment([range(1, 10)] * m))
    # ids 0 and 7 are non-adjacent, as are the pendant externals 10 and 11
    # disjoint pools, left side misses the guard: paint left only
    colour = _place_pair(painter, 0, 7, frozenset({4, 5}), frozenset({6, 7}),
                         frozenset({6, 7, 8}))
    assert colour in {4, 5} and painter.painted(0) and not painter.painted(7)
    # disjoint pools, only the right side can dodge the guard
    colour = _place_pair(painter, 10, 11, frozenset({6, 7}), frozenset({4, 5}),
                         frozenset({6, 7, 8}))
    assert colour in {4, 5} and painter.painted(11) and not painter.painted(10)

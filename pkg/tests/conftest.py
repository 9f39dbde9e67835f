from __future__ import annotations

import pytest

from incolour.graphs import Graph, validate_colouring


def assert_valid_report(g, lists, report, expect=None):
    """Full check of a constructive result: total/proper/list-respecting via
    the independent pairwise validator, plus trace replay."""
    verdict = validate_colouring(g, lists, report.colouring)
    assert verdict.ok, verdict.violation
    assert report.replay(g, lists) == report.colouring
    if expect:
        for i, c in expect.items():
            assert report.colouring[i] == c


@pytest.fixture
def k2():
    return Graph(2, [(0, 1)])

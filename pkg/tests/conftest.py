"""Session-wide graph suites shared by the module and acceptance tests."""

from __future__ import annotations

from math import gcd
from random import Random

import pytest

import support
from torusdimer import build_bnr, build_honeycomb, enumerate_matchings


@pytest.fixture(scope="session")
def bnr_suite():
    """All B(n, r) with gcd(r, n) = 1 and n <= 6, with base matchings."""
    out = []
    for n in range(1, 7):
        for r in range(n):
            if gcd(r, n) != 1 and not (n == 1 and r == 0):
                continue
            bnr = build_bnr(n, r)
            out.append((f"bnr-{n}-{r}", bnr.graph, bnr.base_matching))
    return out


@pytest.fixture(scope="session")
def honeycomb_suite():
    """Honeycomb quotients for every sublattice of index at most 8."""
    out = []
    for period in support.hnf_period_matrices(8):
        h = build_honeycomb(period)
        (p, q), (_, s) = period
        out.append((f"hc-{p}-{q}-{s}", h))
    return out


@pytest.fixture(scope="session")
def random_suite():
    """50 random embedded graphs with witness matchings, fixed seed."""
    rng = Random(20260818)
    return [
        (f"rand-{i}",) + support.random_embedded_graph(rng)
        for i in range(50)
    ]


@pytest.fixture(scope="session")
def suite1(bnr_suite, honeycomb_suite, random_suite):
    """(name, graph, base matching) for every suite-1 instance."""
    out = list(bnr_suite)
    out.extend(
        (name, h.graph, h.matching_of_type("z")) for name, h in honeycomb_suite
    )
    out.extend(random_suite)
    return out


@pytest.fixture(scope="session")
def suite1_matchings(suite1):
    """name -> full matching list, shared so each graph is enumerated once."""
    return {name: enumerate_matchings(g) for name, g, _ in suite1}

from math import gcd
from random import Random

import pytest

import support
from torusdimer import (
    BadParameters,
    NotVisible,
    OutsideTriangle,
    RealizationTriangle,
    SingularMatrix,
    VerificationFailure,
    bnr_full_support,
    build_bnr,
    build_honeycomb,
    compute_faces,
    constant_height_changes,
    convention_map_report,
    enumerate_matchings,
    height_change,
    homology_exponent,
    lozenge_convex_combination_check,
    realize_height_change,
    transition_cycles,
    validate_graph,
    validate_matching,
)
from torusdimer.families import REFERENCE_PERIOD, REFERENCE_TRIPLE


def test_build_bnr_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        build_bnr(0, 0)
    with pytest.raises(BadParameters):
        build_bnr(3, 3)


def test_bnr_cell():
    b = build_bnr(1, 0)
    assert b.graph.num_white == 1
    assert {e.offset for e in b.graph.edges} == {(0, 0), (1, 0), (0, 1)}
    assert compute_faces(b.graph).lengths() == (6,)


def test_bnr_b21_shape():
    g = build_bnr(2, 1).graph
    assert (g.num_white, g.num_black, len(g.edges)) == (2, 2, 6)
    assert len(enumerate_matchings(g)) == 5


@pytest.mark.parametrize("n", range(1, 7))
def test_bnr_always_cellular(n):
    for r in range(n):
        g = build_bnr(n, r).graph
        assert validate_graph(g).ok
        fs = compute_faces(g)
        assert fs.cellular and fs.closed
        assert fs.lengths() == (6,) * n


def test_bnr_named_matchings():
    for n in range(1, 7):
        for r in range(n):
            b = build_bnr(n, r)
            assert homology_exponent(b.graph, b.base_matching) == (0, 0)
            assert homology_exponent(b.graph, b.step_matching) == (1, 0)
            assert homology_exponent(b.graph, b.jump_matching) == (r, n)


def test_triangle_abelianization():
    tri = RealizationTriangle(5, 2)
    assert tri.vertices == ((0, 0), (1, 0), (2, 5))
    assert tri.abelianized((1, 1)) == (3, 1)
    assert tri.contains((1, 1))
    assert not tri.contains((3, 1))
    assert tri.points() == ((0, 0), (1, 0), (1, 1), (1, 2), (2, 5))


def test_triangle_needs_coprime_slope():
    with pytest.raises(BadParameters):
        RealizationTriangle(4, 2)


def test_realize_golden():
    assert realize_height_change(5, 2, (1, 1)) == (1, 4, 8, 9, 13)


def test_realize_vertices():
    b = build_bnr(5, 2)
    assert realize_height_change(5, 2, (0, 0)) == b.base_matching
    assert realize_height_change(5, 2, (1, 0)) == b.step_matching
    assert realize_height_change(5, 2, (2, 5)) == b.jump_matching


def test_realize_rejects_outside():
    with pytest.raises(OutsideTriangle):
        realize_height_change(5, 2, (3, 1))
    with pytest.raises(OutsideTriangle):
        realize_height_change(5, 2, (0, -1))


def test_realize_invisible_needs_search():
    # (2, 2) sits inside the (4, 3) triangle but is not primitive
    with pytest.raises(NotVisible):
        realize_height_change(4, 3, (2, 2))
    m = realize_height_change(4, 3, (2, 2), allow_search=True)
    g = build_bnr(4, 3).graph
    assert height_change(g, build_bnr(4, 3).base_matching, m) == (2, 2)


def test_realize_every_visible_point_single_circuit():
    for n in range(1, 7):
        for r in range(n):
            if gcd(r, n) != 1:
                continue
            b = build_bnr(n, r)
            for u in RealizationTriangle(n, r).points():
                if u == (0, 0):
                    continue
                ux, uy = u
                if gcd(ux, uy) != 1:
                    continue
                m = realize_height_change(n, r, u)
                validate_matching(b.graph, m)
                tc = transition_cycles(b.graph, b.base_matching, m)
                assert len(tc.circuits) == 1
                assert tc.circuits[0].homology == u


def test_bnr_full_support_goldens():
    rep = bnr_full_support(2, 1)
    assert rep.full_support
    assert dict(rep.realized) == {(0, 0): 1, (1, 0): 1, (1, 1): 2, (1, 2): 1}
    rep52 = bnr_full_support(5, 2)
    assert rep52.full_support
    assert rep52.lattice_points == ((0, 0), (1, 0), (1, 1), (1, 2), (2, 5))
    assert sum(c for _, c in rep52.realized) == 13


def test_bnr_full_support_matches_triangle():
    for n in range(1, 7):
        for r in range(n):
            if gcd(r, n) != 1:
                continue
            rep = bnr_full_support(n, r)
            assert rep.full_support
            assert rep.lattice_points == RealizationTriangle(n, r).points()


def test_build_honeycomb_identity_is_cell():
    h = build_honeycomb(((1, 0), (0, 1)))
    assert h.cells == 1
    assert compute_faces(h.graph).lengths() == (6,)


def test_build_honeycomb_rejects_singular():
    with pytest.raises(SingularMatrix):
        build_honeycomb(((2, 4), (1, 2)))


def test_honeycomb_reference_period():
    h = build_honeycomb(REFERENCE_PERIOD)
    assert h.cells == 32
    fs = compute_faces(h.graph)
    assert fs.cellular and fs.closed
    assert fs.lengths() == (6,) * 32


def test_honeycomb_negative_determinant():
    h = build_honeycomb(((0, 1), (1, 0)))
    assert h.determinant == -1
    assert h.cells == 1
    assert compute_faces(h.graph).cellular


@pytest.mark.parametrize("period", support.hnf_period_matrices(6))
def test_honeycomb_census_is_cellular_with_type_matchings(period):
    h = build_honeycomb(period)
    assert validate_graph(h.graph).ok
    fs = compute_faces(h.graph)
    assert fs.cellular and fs.closed
    for kind in ("x", "y", "z"):
        m = h.matching_of_type(kind)
        validate_matching(h.graph, m)
    for m in enumerate_matchings(h.graph):
        x, y, z = h.type_counts(m)
        assert x + y + z == h.cells


def test_constant_height_changes_small():
    h = build_honeycomb(((2, 0), (0, 1)))
    hx, hy = constant_height_changes(h)
    assert (hx, hy) == ((1, 0), (0, 2))


def test_constant_height_changes_reference():
    hx, hy = constant_height_changes(build_honeycomb(REFERENCE_PERIOD))
    assert (hx, hy) == ((4, -4), (5, 3))


def test_lozenge_combination_small():
    rep = lozenge_convex_combination_check(build_honeycomb(((2, 0), (0, 1))))
    assert rep.ok
    assert rep.matchings == 5
    assert rep.failures == ()


def test_lozenge_combination_census():
    for period in support.hnf_period_matrices(6):
        rep = lozenge_convex_combination_check(build_honeycomb(period))
        assert rep.ok, period


def test_honeycomb_full_support_census():
    for period in support.hnf_period_matrices(6):
        h = build_honeycomb(period)
        from torusdimer import full_support_report

        assert full_support_report(h.graph, h.matching_of_type("z")).full_support


def test_convention_map_report_shape():
    rep = convention_map_report()
    assert rep.period == REFERENCE_PERIOD
    assert rep.triple == REFERENCE_TRIPLE
    assert rep.found == bool(rep.matches)
    # whatever was found must genuinely satisfy the defining equations
    for matrix, roles in rep.matches:
        (m11, m12), (m21, m22) = matrix
        assert abs(m11 * m22 - m12 * m21) == 1
        rx, ry, rz = roles
        tx, tz = rep.triple[rx], rep.triple[rz]
        ty = rep.triple[ry]
        dx = (tx[0] - tz[0], tx[1] - tz[1])
        dy = (ty[0] - tz[0], ty[1] - tz[1])
        mapped_x = (m11 * dx[0] + m12 * dx[1], m21 * dx[0] + m22 * dx[1])
        mapped_y = (m11 * dy[0] + m12 * dy[1], m21 * dy[0] + m22 * dy[1])
        assert mapped_x == (3 * rep.h_x[0], 3 * rep.h_x[1])
        assert mapped_y == (3 * rep.h_y[0], 3 * rep.h_y[1])


def test_bnr_random_gauges_preserve_reports():
    rng = Random(19)
    for n, r in ((2, 1), (3, 2), (4, 1)):
        b = build_bnr(n, r)
        g2 = support.random_gauge(b.graph, rng)
        from torusdimer import full_support_report

        a = full_support_report(b.graph, b.base_matching)
        c = full_support_report(g2, b.base_matching)
        assert a.realized == c.realized

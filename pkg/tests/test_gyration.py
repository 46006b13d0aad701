import pytest
from hypothesis import given, settings, strategies as st

from asmlab import gyration as gy
from asmlab.fpl import (
    BLACK, MINUS, PLUS, WHITE, EdgeColoring, enumerate_fpls, link_pattern,
    psi_refined, tau_plus,
)
from asmlab.lattice import interior_plaquettes, plaquette, plaquettes, square

A11 = plaquette(3, 1, 1)


def coloring_with_eta(eta_colors, n=3, alpha=A11):
    base = EdgeColoring(square(n), (0,) * square(n).edge_count)
    return base.with_flipped([e for e, c in zip(alpha.eta, eta_colors) if c == BLACK])


def test_n_alpha_signs():
    assert gy.n_alpha(coloring_with_eta([WHITE, BLACK, WHITE, BLACK]), A11) == 1
    assert gy.n_alpha(coloring_with_eta([BLACK, WHITE, BLACK, WHITE]), A11) == -1
    assert gy.n_alpha(coloring_with_eta([BLACK, BLACK, WHITE, WHITE]), A11) == 0


def test_n_alpha_rejects_boundary():
    with pytest.raises(gy.BoundaryPlaquette):
        gy.n_alpha(coloring_with_eta([WHITE] * 4), plaquette(3, 0, 0))


def test_g_alpha_cases():
    plus = coloring_with_eta([WHITE, BLACK, WHITE, BLACK])
    flipped = gy.g_alpha(plus, A11)
    assert all(flipped[e] != plus[e] for e in A11.edges)
    assert gy.n_alpha(flipped, A11) == -1
    mixed = coloring_with_eta([BLACK, BLACK, WHITE, WHITE])
    assert gy.g_alpha(mixed, A11) == mixed
    edge = plaquette(3, 0, 1)
    assert gy.g_alpha(plus, edge) == plus


def test_n2_half_steps_and_gyration():
    a, b = enumerate_fpls(2, MINUS)
    for f in (a, b):
        assert gy.g_half(f, 1) == f
    assert gy.gyration(a) == b and gy.gyration(b) == a


def test_n1_reversal_and_h():
    (f,) = enumerate_fpls(1, MINUS)
    assert gy.c_half(f, 0).bits == f.inverted().bits
    h = gy.h_half(f, 1)
    assert all(h[e] != f[e] for e, _ in f.items())
    assert h.boundary_word() == tau_plus(1)


def test_h_half_checks_boundary():
    (f,) = enumerate_fpls(1, MINUS)
    with pytest.raises(ValueError):
        gy.h_half(f, 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_h_identities(n):
    for f in enumerate_fpls(n, MINUS):
        report = gy.h_identities(f)
        assert all(report.values()), report
        assert gy.pattern_rotation_holds(f) == (True, True)


def test_fixed_vertices_n2():
    for f in enumerate_fpls(2, MINUS):
        fixed = gy.fixed_vertices(f, 1)
        assert gy.fixed_vertices(gy.h_half(f, 1), 1) == fixed


def test_vertex_with_both_black_edges_in_one_odd_plaquette_not_fixed():
    f = next(iter(enumerate_fpls(3, MINUS)))
    fixed = gy.fixed_vertices(f, 1)
    for a in plaquettes(3, 1):
        for v in a.vertices:
            black_here = [e for e in a.edges if v in e.endpoints and f[e] == BLACK]
            if len(black_here) == 2:
                assert v not in fixed


@pytest.mark.parametrize("n,sizes", [(1, [1]), (2, [2])])
def test_orbit_sizes_small(n, sizes):
    assert [o.period for o in gy.orbits(enumerate_fpls(n, MINUS))] == sizes


def test_orbit_sizes_partition_three():
    orbs = gy.orbits(enumerate_fpls(3, MINUS))
    assert sum(o.period for o in orbs) == 7


def test_measured_periods():
    rep3, rep4 = gy.period_report(3), gy.period_report(4)
    assert rep3["all_divide_2n"] and rep4["all_divide_2n"]
    assert rep4["max_period"] == 8 and not rep4["all_within_n"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orbit_sums_vanish(n):
    for o in gy.orbits(enumerate_fpls(n, MINUS)):
        for a in interior_plaquettes(n):
            assert gy.orbit_nalpha_sum(o.base, a) == 0


def test_n2_values_across_orbit():
    a = interior_plaquettes(2)[0]
    assert sorted(gy.n_alpha(f, a) for f in enumerate_fpls(2, MINUS)) == [-1, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_refined_table_symmetry(n):
    rep = gy.wieland_check(n)
    assert rep["violations"] == []
    table = psi_refined(n)
    for (b, w, l), c in table.items():
        assert table.get((b.rotated(1), w.rotated(-1), l), 0) == c


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alpha_beta_sums(n):
    for f in enumerate_fpls(n, MINUS):
        for a, b in gy.adjacent_pairs(n):
            assert gy.alpha_beta_sum(f, a, b) == 0


@settings(max_examples=50)
@given(st.integers(1, 4), st.data())
def test_local_moves_are_involutions(n, data):
    spec = square(n)
    bits = data.draw(st.tuples(*[st.integers(0, 1)] * spec.edge_count))
    c = EdgeColoring(spec, bits)
    a = data.draw(st.sampled_from(plaquettes(n)))
    assert gy.g_alpha(gy.g_alpha(c, a), a) == c
    assert gy.c_alpha(gy.c_alpha(c, a), a).bits == c.bits
    assert gy.h_alpha(gy.h_alpha(c, a), a).bits == c.bits


@given(st.integers(1, 4), st.data())
def test_gyration_preserves_patterns_up_to_rotation(n, data):
    f = data.draw(st.sampled_from(list(enumerate_fpls(n, MINUS))))
    g = gy.gyration(f)
    assert link_pattern(g, BLACK, MINUS) == link_pattern(f, BLACK, MINUS).rotated(-1)
    assert gy.gyration_inverse(g) == f
    assert gy.h_half(gy.h_half(f, 1), 0) == g

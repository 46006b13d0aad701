import pytest
from hypothesis import given, strategies as st

from asmlab.lattice import (
    GridSpec, EdgeKey, H, V, LatticeError, boundary_edge_label, boundary_edges,
    boundary_label_map, cyclic_label, edge_partition_check, edge_set, incident_edges,
    interior_vertices, is_boundary_edge, parse_parity, plaquette, plaquettes, square,
)


def test_smallest_grid_edges():
    assert sorted(edge_set(square(1))) == sorted([H(1, 0), H(1, 1), V(0, 1), V(1, 1)])


@pytest.mark.parametrize("m,n,count", [(1, 1, 4), (3, 3, 24), (2, 3, 17)])
def test_edge_counts(m, n, count):
    spec = GridSpec(m, n)
    assert spec.edge_count == count == len(edge_set(spec))


def test_every_interior_vertex_has_four_edges():
    spec = GridSpec(3, 4)
    for v in interior_vertices(spec):
        assert len(incident_edges(spec, v)) == 4
        assert all(v in e.endpoints for e in incident_edges(spec, v))


@pytest.mark.parametrize("k,edge", [(1, V(0, 1)), (5, V(3, 1)), (12, V(0, 2))])
def test_boundary_labels_on_l3(k, edge):
    assert boundary_edge_label(3, k) == edge


@pytest.mark.parametrize("k", [0, 13, -1])
def test_boundary_label_out_of_range(k):
    with pytest.raises(LatticeError):
        boundary_edge_label(3, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_boundary_labels_biject(n):
    spec = square(n)
    edges = boundary_edges(n)
    everything = {e for e in edge_set(spec) if is_boundary_edge(spec, e)}
    assert len(edges) == 4 * n and set(edges) == everything
    assert all(boundary_label_map(n)[boundary_edge_label(n, k)] == k for k in range(1, 4 * n + 1))


def test_cyclic_label_wraps():
    assert cyclic_label(2, 0) == 8
    assert cyclic_label(2, 9) == 1


def test_edge_key_text_roundtrip():
    e = V(2, 3)
    assert str(e) == "V:2:3"
    assert EdgeKey.parse("V:2:3") == e
    with pytest.raises(LatticeError):
        EdgeKey.parse("D:1:1")


def test_plaquette_examples():
    a = plaquette(2, 1, 1)
    assert a.interior and not a.odd
    assert set(a.edges) == {H(1, 1), H(2, 1), V(1, 1), V(1, 2)}
    assert not plaquette(3, 0, 0).interior
    b = plaquette(4, 1, 2)
    assert b.interior and b.odd


def test_eta_order():
    assert plaquette(3, 1, 1).eta == (V(1, 1), H(2, 1), V(1, 2), H(1, 1))


@pytest.mark.parametrize("n,parity", [(1, "even"), (3, "odd"), (4, "even"), (2, 1), (5, 0)])
def test_plaquettes_partition_edges(n, parity):
    assert edge_partition_check(n, parity)


def test_parse_parity():
    assert parse_parity("odd") == 1 and parse_parity(0) == 0
    with pytest.raises(LatticeError):
        parse_parity("blue")


@given(st.integers(1, 6), st.data())
def test_each_edge_in_one_plaquette_per_parity(n, data):
    parity = data.draw(st.sampled_from([0, 1]))
    e = data.draw(st.sampled_from(edge_set(square(n))))
    assert sum(e in p.edges for p in plaquettes(n, parity)) == 1


def test_grid_spec_json_and_validation():
    assert GridSpec.from_json(GridSpec(2, 3).to_json()) == GridSpec(2, 3)
    with pytest.raises(LatticeError):
        GridSpec(0, 2)

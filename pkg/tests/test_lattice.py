from hypothesis import given, settings
from hypothesis import strategies as st

from fernhex.lattice import (TriRegion, balance, down_cell, dual_graph, neighbors,
                             rot120, rot180, triangle_down, triangle_up, up_cell)
from fernhex.regions import build_hexagon


def test_neighbors_up_origin():
    assert neighbors(up_cell(0, 0)) == [down_cell(0, 0), down_cell(0, -1), down_cell(-1, 0)]


def test_neighbors_down_origin():
    assert neighbors(down_cell(0, 0)) == [up_cell(0, 0), up_cell(0, 1), up_cell(1, 0)]


def test_neighbors_translation_invariance():
    assert neighbors(up_cell(2, 3)) == [down_cell(2, 3), down_cell(2, 2), down_cell(1, 3)]


def test_adjacency_is_symmetric():
    for cell in (up_cell(1, -2), down_cell(0, 5)):
        for nb in neighbors(cell):
            assert cell in neighbors(nb)


def test_balance_empty_and_single():
    assert balance(TriRegion.from_cells([])) == (0, 0)
    assert balance(TriRegion.from_cells([up_cell(0, 0)])) == (1, 0)


def test_balance_hexagon_222():
    assert balance(build_hexagon(2, 2, 2)) == (12, 12)


def test_dual_graph_empty():
    assert dual_graph(TriRegion.from_cells([])) == {}


def test_dual_graph_domino():
    region = TriRegion.from_cells([up_cell(0, 0), down_cell(0, 0)])
    graph = dual_graph(region)
    assert len(graph) == 2
    assert sum(len(v) for v in graph.values()) // 2 == 1


def test_dual_graph_unit_hexagon_is_six_cycle():
    graph = dual_graph(build_hexagon(1, 1, 1))
    assert len(graph) == 6
    assert all(len(v) == 2 for v in graph.values())


def test_dual_graph_bipartite_and_degree_bound():
    graph = dual_graph(build_hexagon(2, 3, 2))
    for cell, nbs in graph.items():
        assert len(nbs) <= 3
        assert all(nb.up != cell.up for nb in nbs)


@given(st.integers(-5, 5), st.integers(-5, 5))
@settings(max_examples=25, deadline=None)
def test_translation_preserves_balance_and_degrees(dr, dc):
    region = build_hexagon(2, 1, 2)
    moved = region.translated(dr, dc)
    assert balance(moved) == balance(region)
    degrees = sorted(len(v) for v in dual_graph(moved).values())
    assert degrees == sorted(len(v) for v in dual_graph(region).values())


def test_rotations_preserve_cell_counts():
    region = build_hexagon(1, 2, 3)
    assert len(region.rotated120()) == len(region)
    ups, downs = balance(region)
    assert balance(region.rotated180()) == (downs, ups)


def test_rotation_maps_are_consistent():
    cell = up_cell(2, -1)
    assert rot120(rot120(rot120(cell))) == cell
    assert rot180(rot180(cell)) == cell


def test_triangle_builders_cell_counts():
    for s in range(5):
        up = triangle_up(0, 0, s)
        down = triangle_down(0, 0, s)
        assert len(up) == s * s == len(down)
        assert sum(1 for c in up if c.up) == s * (s + 1) // 2
        assert sum(1 for c in down if not c.up) == s * (s + 1) // 2

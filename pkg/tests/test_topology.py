import pytest

from dispersim import topology as tp
from dispersim.envgen import rect
from dispersim.errors import NotSimplyConnected
from dispersim.grid import Region, from_ascii

L_TROMINO = from_ascii("S#\n..")
RING = Region({(x, y) for x in range(3) for y in range(3)} - {(1, 1)}, (0, 0))


def test_classify_dead_end():
    corridor = rect(3, 1, (0, 0))
    cls = tp.classify_cells(corridor.cells, (0, 0))
    assert cls.kind == tp.CORNER
    assert cls.diagonal is None
    assert tp.classify_cells(corridor.cells, (1, 0)).kind == tp.INTERIOR


def test_classify_corner_vs_hall():
    # 2x2 block: two blocked sides, diagonal inside the region: corner.
    sq = rect(2, 2, (0, 0))
    cls = tp.classify_cells(sq.cells, (0, 0))
    assert cls.kind == tp.CORNER
    assert cls.diagonal == (1, 1)
    # The tromino bend has the same neighbor shape, but its diagonal
    # is a wall: a hall.
    cls = tp.classify_cells(L_TROMINO.cells, (0, 0))
    assert cls.kind == tp.HALL
    assert cls.diagonal == (1, 1)
    ring_cls = tp.classify_cells(RING.cells, (0, 0))
    assert ring_cls.kind == tp.HALL


def test_square_has_four_corners():
    sq = rect(2, 2, (0, 0))
    for cell in sq.cells:
        assert tp.classify_cells(sq.cells, cell).kind == tp.CORNER


def test_simple_connectivity():
    assert tp.is_simply_connected(rect(5, 4, (0, 0)))
    assert not tp.is_simply_connected(RING)


def test_hall_tree_l_tromino():
    tree = tp.hall_tree(L_TROMINO)
    assert len(tree.components) == 2
    assert len(tree.edges) == 1
    root_cells = tree.components[tree.root]
    assert L_TROMINO.door in root_cells


def test_hall_tree_requires_simple_connectivity():
    with pytest.raises(NotSimplyConnected):
        tp.hall_tree(RING)


def test_rectangle_has_no_halls():
    r = rect(6, 5, (0, 0))
    assert all(tp.classify_cells(r.cells, c).kind != tp.HALL for c in r.cells)
    tree = tp.hall_tree(r)
    assert len(tree.components) == 1
    assert tree.edges == ()


def test_articulation_points_corridor():
    corridor = rect(5, 1, (0, 0))
    arts = tp.articulation_points(corridor)
    assert arts == {(1, 0), (2, 0), (3, 0)}


def test_bfs_distances_and_sum():
    r = rect(3, 3, (0, 0))
    d = tp.bfs_distances(r, (0, 0))
    assert d[(2, 2)] == 4
    assert tp.sum_distances(r, (0, 0)) == sum(x + y for x in range(3) for y in range(3))


def test_sum_distances_table_value():
    r = rect(30, 30, (13, 13))
    assert tp.sum_distances(r, (13, 13)) == 13620
    assert max(tp.bfs_distances(r, (13, 13)).values()) == 32


def test_geometric_median_of_square():
    r = rect(4, 4, (0, 0))
    assert tp.geometric_median(r) == {(1, 1), (1, 2), (2, 1), (2, 2)}


def test_distance_cache_consistency():
    r = rect(5, 7, (2, 3))
    cache = tp.DistanceCache(r)
    for a in [(0, 0), (4, 6), (2, 3)]:
        assert cache.distances_from(a) == tp.bfs_distances(r, a)
    assert cache.distance((0, 0), (4, 6)) == 10

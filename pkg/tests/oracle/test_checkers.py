import unittest
from fractions import Fraction

from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid
from pwpy.oracle.checkers import *


class TestCheckers(unittest.TestCase):

    def setUp(self):
        self.p4 = Graph(4, edges=[(1, 2), (2, 3), (3, 4)], vertex_weight={1: 3, 2: 1, 3: 1, 4: 5}, edge_weight={(2, 3): 7})
        self.k3 = Graph(3, edges=[(1, 2), (2, 3), (1, 3)], edge_penalty={(1, 2): 2, (1, 3): 4})

    def test_coloring(self):
        self.assertEqual(check_coloring(self.k3, {1: 1, 2: 2, 3: 3}, 3), (True, True))
        self.assertFalse(check_coloring(self.k3, {1: 1, 2: 2, 3: 1}, 3)[0])
        self.assertFalse(check_coloring(self.k3, {1: 1, 2: 2, 3: 4}, 3)[0])
        self.assertFalse(check_coloring(self.k3, {1: 1, 2: 2}, 3)[0])

    def test_penalty_coloring(self):
        colors = {1: 1, 2: 1, 3: 1}
        self.assertEqual(check_penalty_coloring(self.k3, colors, 1, 'sum'), (True, 7))
        self.assertEqual(check_penalty_coloring(self.k3, colors, 1, 'max'), (True, 4))
        self.assertEqual(check_penalty_coloring(self.k3, {1: 1, 2: 2, 3: 2}, 2, 'sum'), (True, 1))
        self.assertEqual(coloring_penalty(self.k3, {1: 1, 2: 2, 3: 3}, 'max'), 0)
        self.assertFalse(check_penalty_coloring(self.k3, {1: 1, 2: 2, 3: 3}, 2)[0])

    def test_covers(self):
        self.assertEqual(check_path_cover(self.p4, [(1, 2), (3, 4)]), (True, 2))
        self.assertEqual(check_path_cover(self.p4, []), (True, 4))
        self.assertFalse(check_path_cover(self.p4, [(1, 3)])[0])
        self.assertFalse(check_path_cover(self.p4, [(1, 2), (2, 1)])[0])

        self.assertEqual(check_cycle_cover(self.k3, [(1, 2), (2, 3), (3, 1)]), (True, 1))
        self.assertFalse(check_cycle_cover(self.k3, [(1, 2), (2, 3)])[0])
        self.assertFalse(check_cycle_cover(self.p4, [(1, 2), (2, 3), (3, 4)])[0])

    def test_selection(self):
        self.assertEqual(check_replica(self.k3, [1, 3], 2), (True, 6))
        self.assertFalse(check_replica(self.k3, [1], 2)[0])
        self.assertFalse(check_replica(self.k3, [1, 5], 2)[0])

        self.assertEqual(check_independent_set(self.p4, [1, 4]), (True, 8))
        self.assertFalse(check_independent_set(self.p4, [1, 2])[0])

    def test_spanning_tree(self):
        self.assertEqual(check_spanning_tree(self.p4, [(1, 2), (2, 3), (3, 4)]), (True, 8))
        self.assertFalse(check_spanning_tree(self.p4, [(1, 2), (3, 4)])[0])
        self.assertEqual(check_spanning_tree(self.k3, [(1, 2), (1, 3)]), (True, 2))

    def test_maximal_matching(self):
        self.assertEqual(check_maximal_matching(self.p4, [(2, 3)]), (True, 7))
        self.assertEqual(check_maximal_matching(self.p4, [(1, 2), (3, 4)]), (True, 2))
        self.assertFalse(check_maximal_matching(self.p4, [(1, 2)])[0])
        self.assertFalse(check_maximal_matching(self.p4, [(1, 2), (2, 3)])[0])

    def test_simple_path(self):
        self.assertEqual(check_simple_path(self.p4, [1, 2], [(1, 2)], 1, 4), (True, 2))
        self.assertEqual(check_simple_path(self.p4, [3, 4], [(3, 4)], 2, 2), (True, 3))
        self.assertEqual(check_simple_path(self.p4, [1, 2, 3], [(1, 2), (2, 3)], 1, 4), (True, Fraction(5, 3)))
        self.assertFalse(check_simple_path(self.p4, [1, 2, 3], [(1, 2), (2, 3)], 1, 2)[0])
        self.assertFalse(check_simple_path(self.p4, [1, 3], [(1, 3)], 1, 4)[0])
        self.assertFalse(check_simple_path(self.p4, [], [], 1, 4)[0])

    def test_placements(self):
        grid = PartialGrid([[True, True, True], [True, True, False]])
        pieces = [(1, 1), (2, 2)]

        self.assertEqual(check_placements(grid, pieces, [(1, 0, 0), (0, 0, 2)]), (True, 2))
        self.assertEqual(check_placements(grid, pieces, []), (True, 0))
        self.assertFalse(check_placements(grid, pieces, [(1, 0, 1)])[0])
        self.assertFalse(check_placements(grid, pieces, [(1, 0, 0), (0, 1, 1)])[0])
        self.assertFalse(check_placements(grid, pieces, [(2, 0, 0)])[0])


if __name__ == '__main__':
    unittest.main()

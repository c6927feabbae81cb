import unittest

from pwpy.decomposition.builders import exact_pathwidth_decomposition
from pwpy.decomposition.path_decomposition import PathDecomposition, nicify
from pwpy.graph.graph import Graph
from pwpy.problems.matching import *


def exact(g: Graph):
    return nicify(exact_pathwidth_decomposition(g), g)


class TestMinMaximalMatching(unittest.TestCase):

    def test_examples(self):
        g = Graph(2, edges=[(1, 2)], edge_weight={(1, 2): 5})
        result, edges = solve_min_maximal_matching(g, exact(g), reconstruct=True)
        self.assertEqual(result.objective, 5)
        self.assertEqual(edges, [(1, 2)])

        p3 = Graph(3, edges=[(1, 2), (2, 3)], edge_weight={(1, 2): 1, (2, 3): 2})
        result, edges = solve_min_maximal_matching(p3, exact(p3), reconstruct=True)
        self.assertEqual(result.objective, 1)
        self.assertEqual(edges, [(1, 2)])

        p4 = Graph(4, edges=[(1, 2), (2, 3), (3, 4)], edge_weight={(1, 2): 1, (2, 3): 5, (3, 4): 1})
        result, edges = solve_min_maximal_matching(p4, exact(p4), reconstruct=True)
        self.assertEqual(result.objective, 2)
        self.assertEqual(edges, [(1, 2), (3, 4)])

    def test_edgeless(self):
        g = Graph(3)
        result, edges = solve_min_maximal_matching(g, exact(g), reconstruct=True)
        self.assertEqual(result.objective, 0)
        self.assertEqual(edges, [])

    def test_partner_matched_after_forget(self):
        # vertex 1 is forgotten unmatched before its neighbour 2 gets matched to 3
        p3 = Graph(3, edges=[(1, 2), (2, 3)], edge_weight={(1, 2): 5, (2, 3): 1})
        npd = nicify(PathDecomposition([{1, 2}, {2, 3}]), p3)

        result, edges = solve_min_maximal_matching(p3, npd, reconstruct=True)
        self.assertEqual(result.objective, 1)
        self.assertEqual(edges, [(2, 3)])
        self.assertEqual(result.problem.check(edges), (True, 1))

    def test_owed_match_is_enforced(self):
        # forgetting 1 and 2 unmatched would leave the edge 1-2 addable
        g = Graph(3, edges=[(1, 2), (1, 3)], edge_weight={(1, 2): 1, (1, 3): 100})
        npd = nicify(PathDecomposition([{1, 2}, {1, 3}]), g)
        self.assertEqual(solve_min_maximal_matching(g, npd)[0].objective, 1)


if __name__ == '__main__':
    unittest.main()

import random
import unittest
from fractions import Fraction

from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid
from pwpy.oracle import checkers
from pwpy.oracle.brute_force import *
from pwpy.oracle.random_instances import random_graph


class TestOracle(unittest.TestCase):

    def test_examples(self):
        star = Graph(4, edges=[(1, 2), (1, 3), (1, 4)])
        result = oracle_solve('path-cover', star)
        self.assertEqual(result.objective, 2)
        self.assertEqual(checkers.check_path_cover(star, result.certificate), (True, 2))

        k3 = Graph(3, edges=[(1, 2), (2, 3), (1, 3)])
        self.assertFalse(oracle_solve('coloring', k3, C=2).feasible)
        self.assertTrue(oracle_solve('coloring-canonical', k3, C=3).feasible)

        result = oracle_solve('rect-cover', PartialGrid([[True] * 3] * 2), pieces=[(2, 2)])
        self.assertEqual(result.objective, 1)
        self.assertEqual(len(result.certificate), 1)

    def test_edgeless(self):
        g = Graph(4, vertex_weight={1: 1, 2: 2, 3: 3, 4: 4})
        self.assertEqual(oracle_solve('path-cover', g).objective, 4)
        self.assertEqual(oracle_solve('mwis', g).objective, 10)
        self.assertEqual(oracle_solve('min-maximal-matching', g).objective, 0)
        self.assertFalse(oracle_solve('cycle-cover', g).feasible)
        self.assertFalse(oracle_solve('max-leaf-tree', g).feasible)
        self.assertEqual(oracle_solve('avg-path', g, L=1, U=4).objective, 4)

    def test_values(self):
        k3 = Graph(3, edges=[(1, 2), (2, 3), (1, 3)], edge_penalty={(1, 2): 1, (2, 3): 2, (1, 3): 3})
        self.assertEqual(oracle_solve('penalty-coloring', k3, C=2, mode='sum').objective, 1)
        self.assertEqual(oracle_solve('penalty-coloring', k3, C=2, mode='max').objective, 1)
        self.assertEqual(oracle_solve('cycle-cover', k3).objective, 1)
        self.assertEqual(oracle_solve('max-leaf-tree', k3).objective, 2)

        p3 = Graph(3, edges=[(1, 2), (2, 3)], vertex_weight={2: 10}, edge_penalty={(1, 2): 10, (2, 3): 10})
        self.assertEqual(oracle_solve('k-replica', p3, k=2).objective, 2)
        self.assertEqual(oracle_solve('avg-path', p3, L=2, U=2).objective, Fraction(11, 2))
        self.assertEqual(oracle_solve('avg-path', p3, L=2, U=3, mode='min').objective, 4)

        p4 = Graph(4, edges=[(1, 2), (2, 3), (3, 4)], edge_weight={(1, 2): 1, (2, 3): 5, (3, 4): 1})
        self.assertEqual(oracle_solve('min-maximal-matching', p4).objective, 2)

    def test_certificates_rescore(self):
        for seed in range(20):
            g = random_graph(seed, 6, 0.5, connected=True, max_weight=5, max_edge_weight=5)

            result = oracle_solve('max-leaf-tree', g)
            self.assertEqual(checkers.check_spanning_tree(g, result.certificate), (True, result.objective))

            result = oracle_solve('min-maximal-matching', g)
            self.assertEqual(checkers.check_maximal_matching(g, result.certificate), (True, result.objective))

            result = oracle_solve('avg-path', g, L=2, U=4)
            self.assertEqual(checkers.check_simple_path(g, result.certificate['vertices'], result.certificate['edges'], 2, 4), (True, result.objective))

            result = oracle_solve('k-replica', g, k=3)
            self.assertEqual(checkers.check_replica(g, result.certificate, 3), (True, result.objective))

    def test_permutation_invariance(self):
        for seed in range(10):
            g = random_graph(seed, 6, 0.5, max_weight=5, max_edge_weight=5)
            rng = random.Random(seed)
            order = list(g.vertices)
            rng.shuffle(order)
            h = g.relabel(dict(zip(g.vertices, order)))

            for name, params in (('path-cover', {}), ('cycle-cover', {}), ('mwis', {}), ('k-replica', {'k': 2}),
                                 ('min-maximal-matching', {}), ('penalty-coloring', {'C': 2}), ('avg-path', {'L': 2, 'U': 3})):
                a, b = oracle_solve(name, g, **params), oracle_solve(name, h, **params)
                self.assertEqual((a.feasible, a.objective), (b.feasible, b.objective))

    def test_size_limit(self):
        self.assertRaises(SizeLimitExceededError, oracle_solve, 'mwis', Graph(ORACLE_LIMIT + 1))
        self.assertRaises(SizeLimitExceededError, oracle_solve, 'rect-cover', PartialGrid([[True] * 5] * 3), pieces=[(1, 1)])
        self.assertRaises(ValueError, oracle_solve, 'vertex-cover', Graph(2))


if __name__ == '__main__':
    unittest.main()

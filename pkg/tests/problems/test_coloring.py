import itertools
import unittest

from pyevents.events import SyncListeners

from pwpy.decomposition.builders import exact_pathwidth_decomposition
from pwpy.decomposition.path_decomposition import nicify
from pwpy.dp.engine import run_dp
from pwpy.dp.states import partition_count
from pwpy.graph.graph import Graph
from pwpy.oracle.random_instances import random_graph
from pwpy.problems.coloring import *


def exact(g: Graph):
    return nicify(exact_pathwidth_decomposition(g), g)


def k3(penalties: dict = None):
    return Graph(3, edges=[(1, 2), (2, 3), (1, 3)], edge_penalty=penalties)


def petersen():
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph(10, edges=outer + spokes + inner)


class TestColoring(unittest.TestCase):

    def test_triangle(self):
        g = k3()
        for canonical in (False, True):
            result, colors = solve_coloring(g, exact(g), 3, canonical=canonical, reconstruct=True)
            self.assertTrue(result.feasible)
            self.assertEqual(len(set(colors.values())), 3)

            result, colors = solve_coloring(g, exact(g), 2, canonical=canonical, reconstruct=True)
            self.assertFalse(result.feasible)
            self.assertIsNone(colors)

    def test_petersen(self):
        g = petersen()
        self.assertEqual(g.m, 15)

        npd = exact(g)
        for canonical in (False, True):
            result, colors = solve_coloring(g, npd, 3, canonical=canonical, reconstruct=True)
            self.assertTrue(result.feasible)
            self.assertEqual(result.problem.check(colors), (True, True))

            self.assertFalse(solve_coloring(g, npd, 2, canonical=canonical)[0].feasible)

    def test_chromatic_number(self):
        edgeless = Graph(4)
        self.assertEqual(chromatic_number(edgeless, exact(edgeless)), 1)

        k4 = Graph(4, edges=list(itertools.combinations(range(1, 5), 2)))
        c5 = Graph(5, edges=[(i, i % 5 + 1) for i in range(1, 6)])
        for search in ('linear', 'binary'):
            self.assertEqual(chromatic_number(k4, exact(k4), search=search), 4)
            self.assertEqual(chromatic_number(c5, exact(c5), search=search), 3)
            self.assertEqual(chromatic_number(c5, exact(c5), search=search, canonical=False), 3)

        self.assertRaises(ParameterError, chromatic_number, c5, exact(c5), search='golden')

    def test_variants_agree(self):
        for seed in range(40):
            g = random_graph(seed, 6 + seed % 3, 0.5)
            npd = exact(g)

            feasible = [solve_coloring(g, npd, c)[0].feasible for c in range(1, 5)]
            self.assertEqual(feasible, [solve_coloring(g, npd, c, canonical=True)[0].feasible for c in range(1, 5)])

            # feasible at C implies feasible at C + 1
            self.assertEqual(feasible, sorted(feasible))

    def test_canonical_state_counts(self):
        g = random_graph(5, 8, 0.5)
        npd = exact(g)

        counts = dict()
        listeners = SyncListeners()
        listeners += lambda event: counts.update({len(event['data']['node'].bag): len(event['data']['index'])}) if event['type'] == 'dp_node' else None

        run_dp(CanonicalColoringProblem(3), g, npd, listeners=listeners)
        for nv, count in counts.items():
            self.assertEqual(count, partition_count(nv, 3))

    def test_parameters(self):
        self.assertRaises(ParameterError, ColoringProblem, 0)
        self.assertRaises(ParameterError, PenaltyColoringProblem, 2, 'avg')


class TestPenaltyColoring(unittest.TestCase):

    def test_triangle(self):
        g = k3({(1, 2): 1, (2, 3): 2, (1, 3): 3})
        npd = exact(g)

        result, colors = solve_penalty_coloring(g, npd, 2, mode='sum', reconstruct=True)
        self.assertEqual(result.objective, 1)
        self.assertEqual(result.problem.check(colors), (True, 1))

        result, colors = solve_penalty_coloring(g, npd, 2, mode='max', reconstruct=True)
        self.assertEqual(result.objective, 1)
        self.assertEqual(result.problem.check(colors), (True, 1))

        self.assertEqual(solve_penalty_coloring(g, npd, 1, mode='sum')[0].objective, 6)
        self.assertEqual(solve_penalty_coloring(g, npd, 1, mode='max')[0].objective, 3)

    def test_enough_colors(self):
        for seed in range(20):
            g = random_graph(seed, 7, 0.4, max_edge_weight=9)
            npd = exact(g)
            c = chromatic_number(g, npd)

            for mode in ('sum', 'max'):
                self.assertEqual(solve_penalty_coloring(g, npd, c, mode=mode)[0].objective, 0)
                self.assertEqual(solve_penalty_coloring(g, npd, c + 1, mode=mode)[0].objective, 0)


if __name__ == '__main__':
    unittest.main()

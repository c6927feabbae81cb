import logging
import time
import unittest
from unittest import mock

import numpy as np
from pyevents.events import SyncListeners

import pwpy.dp.engine as engine
from pwpy.decomposition.builders import exact_pathwidth_decomposition, grid_sweep_decomposition
from pwpy.decomposition.path_decomposition import DecompositionError, PathDecomposition, nicify
from pwpy.dp.engine import *
from pwpy.dp.states import CapacityError
from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid, grid_to_graph
from pwpy.oracle.random_instances import random_graph, random_grid, random_pieces
from pwpy.problems.coloring import ColoringProblem
from pwpy.problems.independent_set import IndependentSetProblem
from pwpy.problems.k_replica import ReplicaProblem
from pwpy.problems.path_cover import PathCoverProblem
from pwpy.problems.registry import create_problem, problem_names
from pwpy.problems.spanning_tree import MaxLeafTreeProblem

THREAD_PARAMETERS = {'coloring': {'C': 3}, 'coloring-canonical': {'C': 3}, 'penalty-coloring': {'C': 2, 'mode': 'max'}, 'k-replica': {'k': 3},
                     'avg-path': {'L': 2, 'U': 5, 'mode': 'min'}}


def path_graph(n: int):
    return Graph(n, edges=[(i, i + 1) for i in range(1, n)])


def path_decomposition(n: int):
    return nicify(PathDecomposition([{i, i + 1} for i in range(1, n)] if n > 1 else [{1}]))


def k3():
    return Graph(3, edges=[(1, 2), (2, 3), (1, 3)])


class BrokenProblem(IndependentSetProblem):
    """Produces a component outside of the declared domain"""

    name = 'broken'

    def expand_state(self, state: tuple, node, action, value):
        state, value, ok = super().expand_state(state, node, action, value)
        return (state[:-1] + (5,) if state and node.kind == 'introduce' else state), value, ok


class TestEngine(unittest.TestCase):

    def setUp(self):
        logging.basicConfig(level=logging.INFO)

    def test_coloring(self):
        g = k3()
        npd = nicify(PathDecomposition([{1, 2, 3}]), g)

        result = run_dp(ColoringProblem(3), g, npd)
        self.assertTrue(result.feasible)
        self.assertTrue(result.objective)

        result = run_dp(ColoringProblem(2), g, npd)
        self.assertFalse(result.feasible)
        self.assertIsNone(result.objective)

    def test_path_cover(self):
        result = run_dp(PathCoverProblem(), path_graph(4), path_decomposition(4))
        self.assertEqual(result.objective, 1)

    def test_stats(self):
        g = path_graph(5)
        npd = path_decomposition(5)
        result = run_dp(IndependentSetProblem(), g, npd)

        self.assertEqual(result.objective, 3)
        self.assertEqual(list(result.stats.columns), ['node', 'kind', 'vertex', 'bag_size', 'states', 'entries'])
        self.assertEqual(len(result.stats), len(npd))
        self.assertEqual(result.stats['bag_size'].max(), 2)
        self.assertTrue((result.stats['entries'] <= result.stats['states']).all())
        self.assertIsNone(result.tables)

    def test_deterministic(self):
        g = random_graph(11, 8, 0.4, max_weight=5, max_edge_weight=5)
        npd = nicify(exact_pathwidth_decomposition(g), g)

        a = run_dp(ReplicaProblem(3), g, npd, retain_tables=True)
        b = run_dp(ReplicaProblem(3), g, npd, retain_tables=True)
        self.assertEqual(a.objective, b.objective)
        self.assertEqual(a.tables, b.tables)

    def test_reconstruct(self):
        g = k3()
        npd = nicify(PathDecomposition([{1, 2, 3}]), g)
        problem = ColoringProblem(3)
        result, colors = solve(problem, g, npd, reconstruct=True)
        self.assertEqual(problem.check(colors), (True, True))

        g = Graph(2, edges=[(1, 2)], edge_penalty={(1, 2): 5})
        result, selected = solve(ReplicaProblem(2), g, path_decomposition(2), reconstruct=True)
        self.assertEqual(result.objective, 7)
        self.assertEqual(selected, [1, 2])

        result, edges = solve(PathCoverProblem(), path_graph(4), path_decomposition(4), reconstruct=True)
        self.assertEqual(result.objective, 1)
        self.assertEqual(edges, [(1, 2), (2, 3), (3, 4)])

    def test_reconstruct_unavailable(self):
        g = path_graph(3)
        npd = path_decomposition(3)

        result = run_dp(IndependentSetProblem(), g, npd)
        self.assertRaises(ReconstructionUnavailableError, reconstruct_solution, result.problem, result)

        result = run_dp(ColoringProblem(1), g, npd, retain_tables=True)
        self.assertFalse(result.feasible)
        self.assertRaises(ReconstructionUnavailableError, reconstruct_solution, result.problem, result)

        result, certificate = solve(ColoringProblem(1), g, npd, reconstruct=True)
        self.assertIsNone(certificate)

    def test_listeners(self):
        g = path_graph(4)
        npd = path_decomposition(4)

        events = list()
        listeners = SyncListeners()
        listeners += lambda event: events.append(event) if event['type'] == 'dp_node' else None

        result = run_dp(PathCoverProblem(), g, npd, listeners=listeners)

        self.assertEqual(len(events), len(npd))
        self.assertEqual([e['data']['node'].index for e in events], list(range(len(npd))))
        self.assertEqual([len(e['data']['table']) for e in events], list(result.stats['entries']))
        self.assertEqual(len(events[-1]['data']['index']), 1)

    def test_plugin_inconsistency(self):
        self.assertRaises(PluginInconsistencyError, run_dp, BrokenProblem(), path_graph(3), path_decomposition(3))

    def test_capacity(self):
        self.assertRaises(CapacityError, run_dp, IndependentSetProblem(), path_graph(3), path_decomposition(3), capacity=1)

    def test_invalid_decomposition(self):
        self.assertRaises(DecompositionError, run_dp, IndependentSetProblem(), path_graph(4), path_decomposition(3))

    def test_threads(self):
        grid = PartialGrid([[True] * 4] * 4)
        g = grid_to_graph(grid)
        npd = grid_sweep_decomposition(grid)

        a = run_dp(MaxLeafTreeProblem(), g, npd, retain_tables=True)
        b = run_dp(MaxLeafTreeProblem(), g, npd, retain_tables=True, threads=4)
        self.assertEqual(a.objective, b.objective)
        self.assertEqual(a.tables, b.tables)

    def test_threads_small_tables(self):
        with mock.patch.object(engine, 'PARALLEL_MIN_STATES', 1):
            for seed in range(5):
                g = random_graph(seed, 8, 0.4, max_weight=5, max_edge_weight=5)
                npd = nicify(exact_pathwidth_decomposition(g), g)

                a, ca = solve(ReplicaProblem(3), g, npd, reconstruct=True)
                b, cb = solve(ReplicaProblem(3), g, npd, reconstruct=True, threads=4)
                self.assertEqual(a.objective, b.objective)
                self.assertEqual(a.tables, b.tables)
                self.assertEqual(ca, cb)

    def test_linear_scaling(self):
        def elapsed(g, npd):
            now = time.perf_counter()
            run_dp(ColoringProblem(3), g, npd)
            return time.perf_counter() - now

        small, large = (path_graph(10 ** 4), path_decomposition(10 ** 4)), (path_graph(10 ** 5), path_decomposition(10 ** 5))
        elapsed(*small)

        ratio = np.median([elapsed(*large) for _ in range(5)]) / np.median([elapsed(*small) for _ in range(5)])
        self.assertGreaterEqual(ratio, 5)
        self.assertLessEqual(ratio, 20)

    def test_threads_all_problems(self):
        with mock.patch.object(engine, 'PARALLEL_MIN_STATES', 1):
            for name in problem_names():
                for seed in range(4):
                    if name == 'rect-cover':
                        grid = random_grid(seed, 3, 3)
                        g = grid_to_graph(grid)
                        npd = grid_sweep_decomposition(grid, widen=True)
                        params = {'grid': grid, 'pieces': random_pieces(seed, 2, 3, 3)}
                    else:
                        g = random_graph(seed, 7, 0.45, connected=True, max_weight=5, max_edge_weight=5)
                        npd = nicify(exact_pathwidth_decomposition(g), g)
                        params = THREAD_PARAMETERS.get(name, dict())

                    problem = create_problem(name, **params)
                    a, ca = solve(problem, g, npd, reconstruct=True)
                    b, cb = solve(problem, g, npd, reconstruct=True, threads=4)

                    msg = name + " seed " + str(seed)
                    self.assertEqual((a.feasible, a.objective), (b.feasible, b.objective), msg)
                    self.assertEqual(a.tables, b.tables, msg)
                    self.assertEqual(ca, cb, msg)
                    if a.feasible:
                        self.assertEqual(problem.check(ca), problem.check(cb), msg)

    def test_tie_keeps_first_origin(self):
        # both vertices of K2 have weight 1: selecting either one is optimal, the first expanded predecessor wins
        g = Graph(2, edges=[(1, 2)])
        for _ in range(3):
            result, selected = solve(IndependentSetProblem(), g, path_decomposition(2), reconstruct=True)
            self.assertEqual(selected, [1])


if __name__ == '__main__':
    unittest.main()

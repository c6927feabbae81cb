import unittest

from pwpy.decomposition.builders import grid_sweep_decomposition
from pwpy.dp.engine import run_dp
from pwpy.graph.grid import grid_to_graph
from pwpy.oracle.random_instances import random_grid
from pwpy.problems.path_cover import CycleCoverProblem, PathCoverProblem


class TestCatalanPruning(unittest.TestCase):

    def test_same_optimum(self):
        smaller = 0
        for seed in range(60):
            grid = random_grid(seed, 4, 4 + seed % 2, p_missing=0.15, p_removed=0.1)
            g = grid_to_graph(grid)
            npd = grid_sweep_decomposition(grid)

            for problem in (PathCoverProblem(), CycleCoverProblem()):
                full = run_dp(problem, g, npd)
                pruned = run_dp(problem, g, npd, prune_catalan=True)

                self.assertEqual((full.feasible, full.objective), (pruned.feasible, pruned.objective), str(seed))
                self.assertTrue((pruned.stats['states'] <= full.stats['states']).all())

                if pruned.stats['states'].max() < full.stats['states'].max():
                    smaller += 1

        self.assertGreater(smaller, 0)

    def test_reconstruct_with_pruning(self):
        grid = random_grid(3, 4, 4, p_missing=0, p_removed=0)
        g = grid_to_graph(grid)
        npd = grid_sweep_decomposition(grid)

        for problem, objective in ((PathCoverProblem(), 1), (CycleCoverProblem(), 1)):
            result = run_dp(problem, g, npd, prune_catalan=True, retain_tables=True)
            self.assertEqual(result.objective, objective)

    def test_threads_with_pruning(self):
        grid = random_grid(5, 4, 4, p_missing=0.1, p_removed=0)
        g = grid_to_graph(grid)
        npd = grid_sweep_decomposition(grid)

        a = run_dp(PathCoverProblem(), g, npd, prune_catalan=True)
        b = run_dp(PathCoverProblem(), g, npd, prune_catalan=True, threads=2)
        self.assertEqual(a.objective, b.objective)


if __name__ == '__main__':
    unittest.main()

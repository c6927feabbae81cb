import unittest

from pwpy.decomposition.builders import grid_sweep_decomposition
from pwpy.dp.engine import run_dp
from pwpy.dp.states import NotApplicableError
from pwpy.graph.grid import PartialGrid, grid_to_graph
from pwpy.oracle.checkers import check_placements
from pwpy.problems.rect_cover import *


def full_grid(rows: int, cols: int):
    return PartialGrid([[True] * cols] * rows)


class TestRectCover(unittest.TestCase):

    def test_unit_pieces(self):
        result, placements = solve_rect_cover(full_grid(2, 2), [(1, 1)], reconstruct=True)
        self.assertEqual(result.objective, 4)
        self.assertEqual(placements, [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)])

    def test_overlapping_anchors(self):
        for transpose in (None, False, True):
            result, placements = solve_rect_cover(full_grid(2, 3), [(2, 2)], reconstruct=True, transpose=transpose)
            self.assertEqual(result.objective, 1)
            self.assertEqual(check_placements(full_grid(2, 3), [(2, 2)], placements), (True, 1))

    def test_flat_pieces_on_wide_grid(self):
        # a transposed sweep turns flat pieces into tall ones
        for transpose in (None, False, True):
            result, placements = solve_rect_cover(full_grid(2, 3), [(1, 2)], reconstruct=True, transpose=transpose)
            self.assertEqual(result.objective, 2)
            self.assertEqual(check_placements(full_grid(2, 3), [(1, 2)], placements), (True, 2))

            result, placements = solve_rect_cover(full_grid(2, 4), [(1, 3)], reconstruct=True, transpose=transpose)
            self.assertEqual(result.objective, 2)
            self.assertEqual(result.problem.check(placements), (True, 2))

            self.assertEqual(solve_rect_cover(full_grid(1, 4), [(1, 4)], transpose=transpose)[0].objective, 1)

    def test_missing_cell(self):
        grid = PartialGrid([[True, True], [True, False]])
        result, placements = solve_rect_cover(grid, [(2, 2)], reconstruct=True)
        self.assertTrue(result.feasible)
        self.assertEqual(result.objective, 0)
        self.assertEqual(placements, [])

    def test_mixed_pieces(self):
        # dominoes tile a 3x4 board, two per row
        grid = full_grid(3, 4)
        for transpose in (False, True):
            result, placements = solve_rect_cover(grid, ['2x2', '1x2'], reconstruct=True, transpose=transpose)
            self.assertEqual(result.objective, 6)
            self.assertEqual(result.problem.check(placements), (True, 6))

        result, placements = solve_rect_cover(grid, [(1, 3), (3, 1)], reconstruct=True)
        self.assertEqual(result.objective, 4)
        self.assertEqual(result.problem.check(placements), (True, 4))

    def test_no_rotation(self):
        grid = full_grid(3, 1)
        self.assertEqual(solve_rect_cover(grid, [(3, 1)])[0].objective, 1)
        self.assertRaises(PieceError, solve_rect_cover, grid, [(1, 3)])

    def test_removed_edges_do_not_split_cells(self):
        grid = PartialGrid([[True, True], [True, True]], removed_edges=[((0, 0), (0, 1)), ((0, 0), (1, 0))])
        self.assertEqual(solve_rect_cover(grid, [(2, 2)])[0].objective, 1)

    def test_pieces(self):
        self.assertEqual(parse_pieces(['1x2', '3X1', (2, 2)]), [(1, 2), (3, 1), (2, 2)])
        self.assertRaises(PieceError, parse_pieces, ['2by2'])
        self.assertRaises(PieceError, RectCoverProblem, full_grid(2, 2), [])
        self.assertRaises(PieceError, RectCoverProblem, full_grid(2, 2), [(0, 1)])
        self.assertRaises(PieceError, RectCoverProblem, full_grid(2, 2), [(1, 3)])

    def test_needs_widened_sweep(self):
        grid = full_grid(2, 2)
        self.assertRaises(NotApplicableError, run_dp, RectCoverProblem(grid, [(1, 1)]), grid_to_graph(grid), grid_sweep_decomposition(grid))


if __name__ == '__main__':
    unittest.main()

import typing

from pwpy.decomposition.builders import grid_sweep_decomposition
from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import NotApplicableError, product_states
from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid, grid_to_graph
from pwpy.oracle.checkers import check_placements

"""
Maximum number of non-overlapping rectangular pieces (no rotation) on the present cells of a partial grid.
Every bag cell holds h, the number of free present cells above and including it, capped at the tallest
piece. A piece is placed with its lower right corner at the introduced cell.
"""

NOOP = 'noop'


class PieceError(Exception):
    pass


def parse_pieces(pieces: typing.Iterable):
    """
    :param pieces: (rows, cols) pairs or 'RxC' strings
    :return list of (rows, cols)
    """
    result = list()
    for p in pieces:
        if isinstance(p, str):
            try:
                r, c = (int(x) for x in p.lower().split('x'))
            except ValueError:
                raise PieceError("Piece '" + p + "' is not of the form RxC")
        else:
            r, c = p

        result.append((r, c))

    return result


class RectCoverProblem(ProblemDefinition):

    name = 'rect-cover'
    certificate_kind = 'placements'

    def __init__(self, grid: PartialGrid, pieces: typing.Sequence):
        super().__init__()

        pieces = parse_pieces(pieces)
        if not pieces:
            raise PieceError("At least one piece type is required")

        for r, c in pieces:
            if r < 1 or c < 1:
                raise PieceError("Piece " + str((r, c)) + " must have positive dimensions")

            if r > grid.rows or c > grid.cols:
                raise PieceError("Piece " + str((r, c)) + " does not fit a " + str(grid.rows) + "x" + str(grid.cols) + " grid")

        self.grid = grid
        self.pieces = pieces
        # tallest piece in the sweep orientation, the unswept one until prepare
        self.R = max(r for r, _ in pieces)

        self._swept = None
        self._context = None

    def prepare(self, g: Graph, npd: NicePathDecomposition):
        if npd.grid is None or not npd.grid.widen:
            raise NotApplicableError("Rectangle covering needs a widened grid sweep decomposition")

        super().prepare(g, npd)

        # piece dimensions in the swept orientation
        self._swept = [(c, r) if npd.grid.transposed else (r, c) for r, c in self.pieces]
        self.R = max(r for r, _ in self._swept)

        cells = {cell: v for v, cell in npd.grid.coordinates.items()}
        self._context = dict()
        for node in npd.nodes(g):
            if node.kind != INTRODUCE:
                continue

            a, b = npd.grid.coordinates[node.vertex]
            positions = {u: j for j, u in enumerate(node.prev_bag)}

            above = None
            if (a - 1, b) in cells:
                if cells[(a - 1, b)] not in positions:
                    raise NotApplicableError("The cell above " + str((a, b)) + " is not in the bag")

                above = positions[cells[(a - 1, b)]]

            placements = list()
            for p, (r, c) in enumerate(self._swept):
                row = [(a, y) for y in range(b - c + 1, b)]
                if b - c + 1 < 0 or a - r + 1 < 0 or any(cell not in cells for cell in row):
                    continue

                upper = [positions[cells[(a - 1, y)]] for y in range(b - c + 1, b + 1) if r >= 2 and (a - 1, y) in cells and cells[(a - 1, y)] in positions]
                placements.append((p, [positions[cells[cell]] for cell in row], upper))

            self._context[node.index] = (above, placements)

    def digits(self, nv: int):
        return [(0, self.R + 1)] * nv

    def enumerate_states(self, nv: int):
        return product_states(self.digits(nv))

    def state_signature(self):
        return self.name, self.R

    def set_of_actions(self, node: Node):
        if node.kind != INTRODUCE:
            return [None]

        return [NOOP] + [p for p, _, _ in self._context[node.index][1]]

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind != INTRODUCE:
            return state[:node.position] + state[node.position + 1:], value, True

        above, placements = self._context[node.index]
        h = min(self.R, state[above] + 1) if above is not None else 1

        if action == NOOP:
            return state + (h,), value, True

        r, _ = self._swept[action]
        _, row, upper = next(x for x in placements if x[0] == action)
        if h < r or any(state[j] < r for j in row):
            return None, None, False

        s = list(state)
        for j in row + upper:
            s[j] = 0

        return tuple(s) + (0,), value + 1, True

    def better(self, a, b):
        return a > b

    def certificate(self, steps: list):
        """(piece type, top row, left col) of every placed piece, 0-based in the orientation of the grid"""
        transposed = self.npd.grid.transposed
        result = list()
        for node, _, action, _ in steps:
            if node.kind != INTRODUCE or action == NOOP:
                continue

            a, b = self.npd.grid.coordinates[node.vertex]
            r, c = self._swept[action]
            top, left = a - r + 1, b - c + 1
            result.append((action, left, top) if transposed else (action, top, left))

        return sorted(result)

    def check(self, certificate):
        return check_placements(self.grid, self.pieces, certificate)


def solve_rect_cover(grid: PartialGrid, pieces: typing.Sequence, reconstruct: bool = False, transpose: bool = None, **kwargs):
    """
    :param grid: partial grid
    :param pieces: (rows, cols) of every piece type
    :param transpose: sweep orientation, chosen automatically if None
    :return (DpResult, placements or None)
    """
    problem = RectCoverProblem(grid, pieces)
    g = grid_to_graph(grid)
    npd = grid_sweep_decomposition(grid, widen=True, transpose=transpose)

    return solve(problem, g, npd, reconstruct=reconstruct, **kwargs)

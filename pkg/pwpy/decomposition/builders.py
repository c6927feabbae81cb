import functools
import logging

from pwpy.decomposition.path_decomposition import DecompositionError, Event, FORGET, GridSweep, INTRODUCE, NicePathDecomposition, PathDecomposition
from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid, grid_to_graph

EXACT_LIMIT = 12


def grid_sweep_decomposition(grid: PartialGrid, widen: bool = False, transpose: bool = None):
    """
    Row-major sweep over the present cells of a partial grid. Vertex ids are those of grid_to_graph(grid).
    Without widen, a cell is forgotten right after its last later grid neighbour is introduced (bag size <= width + 1).
    With widen, a cell is kept until the cell width + 1 row-major positions after it has been introduced
    (bag size <= width + 2), so the cell above every introduced cell is still in the bag.
    :param grid: partial grid
    :param widen: extend the retention window by one cell
    :param transpose: sweep the transposed grid. None picks the orientation with the smaller row width
    :return NicePathDecomposition with GridSweep metadata
    """
    if transpose is None:
        transpose = grid.cols > grid.rows

    swept = grid.transpose() if transpose else grid
    width = swept.cols

    logging.getLogger(__name__).debug("Grid sweep over " + str(swept.rows) + "x" + str(width) + (" (transposed)" if transpose else "") + (" widened" if widen else ""))

    ids = {cell: v for v, cell in grid_to_graph(grid).coordinates.items()}
    if transpose:
        ids = {(c, r): v for (r, c), v in ids.items()}

    cells = swept.cells()
    order = {cell: i for i, cell in enumerate(cells)}

    # index (in the introduce order) of the cell after whose introduction each cell is forgotten
    trigger = dict()
    for (r, c), i in order.items():
        if widen:
            limit = (r * width + c) + width + 1
            last = i
            for j in range(i + 1, len(cells)):
                rj, cj = cells[j]
                if rj * width + cj > limit:
                    break

                last = j
        else:
            later = [order[x] for x in ((r, c + 1), (r + 1, c)) if x in order and swept.has_edge((r, c), x)]
            last = max(later, default=i)

        trigger[(r, c)] = last

    forgets = dict()
    for cell in cells:
        forgets.setdefault(trigger[cell], list()).append(cell)

    events = list()
    for i, cell in enumerate(cells):
        events.append(Event(INTRODUCE, ids[cell]))
        events += [Event(FORGET, ids[x]) for x in forgets.get(i, list())]

    metadata = GridSweep(coordinates={v: cell for cell, v in ids.items()}, rows=swept.rows, cols=width, transposed=transpose, widen=widen)
    result = NicePathDecomposition(events, grid=metadata)

    logging.getLogger(__name__).info("Grid sweep decomposition of width " + str(result.width))

    return result


def order_decomposition(g: Graph, order: list):
    """
    Path decomposition induced by a vertex order: the bag of the i-th vertex holds it together with every
    earlier vertex that still has a neighbour not yet placed
    :param g: graph
    :param order: permutation of the vertices
    :return PathDecomposition
    """
    bags = list()
    placed = set()
    for v in order:
        boundary = {u for u in placed if any(x not in placed for x in g.neighbors(u))}
        bags.append(boundary | {v})
        placed.add(v)

    return PathDecomposition(bags)


def exact_pathwidth_decomposition(g: Graph, limit: int = EXACT_LIMIT):
    """
    Minimum width path decomposition by exhaustive search over introduce orders, memoized on the set of
    already placed vertices. Among optimal orders the lexicographically smallest is used.
    :param g: graph with at most limit vertices
    :param limit: largest accepted vertex count
    :return PathDecomposition
    """
    if g.n > limit:
        raise DecompositionError('size-limit-exceeded', g.n)

    full = (1 << g.n) - 1
    neighbors = [0] * (g.n + 1)
    for u, v in g.edges:
        neighbors[u] |= 1 << (v - 1)
        neighbors[v] |= 1 << (u - 1)

    def boundary(placed):
        return sum(1 for v in g.vertices if placed >> (v - 1) & 1 and neighbors[v] & ~placed & full)

    @functools.lru_cache(maxsize=None)
    def max_bag(placed):
        if placed == full:
            return 0

        return max(1 + boundary(placed), min(max_bag(placed | 1 << (v - 1)) for v in g.vertices if not placed >> (v - 1) & 1))

    best = max_bag(0)

    order = list()
    placed = 0
    while placed != full:
        v = next(v for v in g.vertices if not placed >> (v - 1) & 1 and max_bag(placed | 1 << (v - 1)) <= best)
        order.append(v)
        placed |= 1 << (v - 1)

    logging.getLogger(__name__).debug("Exact pathwidth " + str(best - 1) + " for " + str(g))

    return order_decomposition(g, order)

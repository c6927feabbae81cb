import typing

import numpy as np

from pwpy.graph.graph import Graph, GraphError, GraphFormatError, _tokens, _ints, parse_graph


class PartialGrid(object):
    """
    m x n grid in which some cells and some edges between orthogonally adjacent cells may be missing.
    Cells are addressed 0-based internally; the file format and the certificates use 1-based rows and columns.
    """

    def __init__(self, present: np.ndarray, removed_edges: typing.Iterable = ()):
        """
        :param present: boolean array of shape (rows, cols)
        :param removed_edges: pairs of 0-based cells ((r1, c1), (r2, c2)) whose edge is missing
        """
        present = np.array(present, dtype=np.bool_)
        if present.ndim != 2 or present.size == 0:
            raise GraphError("Grid must be a non-empty two dimensional array")

        if not present.any():
            raise GraphError("Grid must have at least one present cell")

        present.setflags(write=False)
        self._present = present

        removed = set()
        for a, b in removed_edges:
            a, b = tuple(a), tuple(b)
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
                raise GraphError("Removed edge " + str((a, b)) + " does not join orthogonally adjacent cells")

            if not self.is_present(*a) or not self.is_present(*b):
                raise GraphError("Removed edge " + str((a, b)) + " touches a missing cell")

            removed.add((a, b) if a < b else (b, a))

        self._removed = frozenset(removed)

    @property
    def rows(self):
        return self._present.shape[0]

    @property
    def cols(self):
        return self._present.shape[1]

    @property
    def present(self):
        return self._present

    @property
    def removed_edges(self):
        return sorted(self._removed)

    def is_present(self, r: int, c: int):
        return 0 <= r < self.rows and 0 <= c < self.cols and bool(self._present[r, c])

    def has_edge(self, a: tuple, b: tuple):
        key = (a, b) if a < b else (b, a)
        return self.is_present(*a) and self.is_present(*b) and abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1 and key not in self._removed

    def cells(self):
        """Present cells in row-major order"""
        return [(int(r), int(c)) for r, c in np.argwhere(self._present)]

    def transpose(self):
        return PartialGrid(self._present.T, removed_edges=[((a[1], a[0]), (b[1], b[0])) for a, b in self._removed])

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return np.array_equal(self._present, other._present) and self._removed == other._removed

        return NotImplemented

    def __hash__(self):
        return hash((self._present.tobytes(), self._present.shape, self._removed))

    def __str__(self):
        return "PartialGrid(" + str(self.rows) + "x" + str(self.cols) + ", cells=" + str(int(self._present.sum())) + ")"


def grid_to_graph(g: PartialGrid):
    """
    Induced graph of a partial grid. Vertices are numbered 1..n row-major over the present cells
    :param g: partial grid
    :return Graph with 0-based (row, col) coordinates
    """
    cells = g.cells()
    ids = {cell: i for i, cell in enumerate(cells, 1)}

    edges = list()
    for (r, c), v in ids.items():
        for other in ((r, c + 1), (r + 1, c)):
            if other in ids and g.has_edge((r, c), other):
                edges.append((v, ids[other]))

    return Graph(len(cells), edges=edges, coordinates={v: cell for cell, v in ids.items()})


def parse_grid(text: str):
    """
    Parse a grid file: header 'grid <m> <n>', m lines of n characters ('.' present, 'X' missing)
    and optional 'removeedge <r1> <c1> <r2> <c2>' lines with 1-based coordinates
    :param text: file contents
    :return PartialGrid
    """
    lines = _tokens(text)

    try:
        header_line, header = next(lines)
    except StopIteration:
        raise GraphFormatError(1, "empty grid")

    if header[0] != 'grid':
        raise GraphFormatError(header_line, "expected header 'grid <m> <n>'")

    rows, cols = _ints(header_line, header, 3)
    if rows < 1 or cols < 1:
        raise GraphFormatError(header_line, "grid dimensions must be positive")

    present = np.zeros((rows, cols), dtype=np.bool_)
    removed = list()
    row = 0

    for line_number, tokens in lines:
        if tokens[0] == 'removeedge':
            r1, c1, r2, c2 = _ints(line_number, tokens, 5)
            a, b = (r1 - 1, c1 - 1), (r2 - 1, c2 - 1)
            if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
                raise GraphFormatError(line_number, "removed edge does not join orthogonally adjacent cells")

            for cell in (a, b):
                if not (0 <= cell[0] < rows and 0 <= cell[1] < cols):
                    raise GraphFormatError(line_number, "cell " + str((cell[0] + 1, cell[1] + 1)) + " out of range")

            removed.append((line_number, a, b))
        else:
            if row >= rows:
                raise GraphFormatError(line_number, "more than " + str(rows) + " grid rows")

            cells = ''.join(tokens)
            if len(cells) != cols or set(cells) - {'.', 'X'}:
                raise GraphFormatError(line_number, "expected " + str(cols) + " characters of '.' or 'X'")

            present[row] = [ch == '.' for ch in cells]
            row += 1

    if row != rows:
        raise GraphFormatError(header_line, "header declares " + str(rows) + " rows, found " + str(row))

    for line_number, a, b in removed:
        if not present[a] or not present[b]:
            raise GraphFormatError(line_number, "removed edge touches a missing cell")

    if not present.any():
        raise GraphFormatError(header_line, "grid has no present cell")

    return PartialGrid(present, removed_edges=[(a, b) for _, a, b in removed])


def serialize_grid(g: PartialGrid):
    result = ['grid ' + str(g.rows) + ' ' + str(g.cols)]
    result += [''.join('.' if p else 'X' for p in row) for row in g.present]
    result += ['removeedge ' + ' '.join(str(x + 1) for x in (a[0], a[1], b[0], b[1])) for a, b in g.removed_edges]

    return '\n'.join(result) + '\n'


def read_instance(path: str):
    """
    Read either a graph or a grid file, depending on its header
    :param path: file path
    :return Graph or PartialGrid
    """
    with open(path, 'r') as f:
        text = f.read()

    for _, tokens in _tokens(text):
        return parse_grid(text) if tokens[0] == 'grid' else parse_graph(text)

    raise GraphFormatError(1, "empty instance")

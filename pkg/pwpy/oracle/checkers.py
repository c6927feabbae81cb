import typing
from fractions import Fraction

import networkx as nx

from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid

"""
Certificate checkers. Each one verifies a solution directly on the instance and re-scores it;
they return (ok, objective) and never raise on a bad certificate
"""


def _edge_graph(g: Graph, edges: typing.Iterable):
    """Spanning subgraph with the given edges, or None if an edge is not in g or repeated"""
    result = nx.Graph()
    result.add_nodes_from(g.vertices)
    for u, v in edges:
        if u == v or not g.adjacent(u, v) or result.has_edge(u, v):
            return None

        result.add_edge(u, v)

    return result


def check_coloring(g: Graph, colors: dict, num_colors: int):
    """Proper coloring with colors 1..num_colors"""
    ok = set(colors) == set(g.vertices) \
        and all(1 <= c <= num_colors for c in colors.values()) \
        and all(colors[u] != colors[v] for u, v in g.edges)

    return ok, ok


def coloring_penalty(g: Graph, colors: dict, mode: str = 'sum'):
    """Total (mode sum) or largest (mode max) penalty over monochromatic edges, 0 if there are none"""
    paid = [g.penalty(u, v) for u, v in g.edges if colors[u] == colors[v]]
    if mode == 'max':
        return max(paid, default=0)

    return sum(paid)


def check_penalty_coloring(g: Graph, colors: dict, num_colors: int, mode: str = 'sum'):
    ok = set(colors) == set(g.vertices) and all(1 <= c <= num_colors for c in colors.values())
    return ok, coloring_penalty(g, colors, mode) if ok else None


def check_path_cover(g: Graph, edges: typing.Iterable):
    """Edges forming vertex-disjoint paths that cover every vertex. Objective is the number of paths"""
    h = _edge_graph(g, edges)
    if h is None or any(d > 2 for _, d in h.degree()) or not nx.is_forest(h):
        return False, None

    return True, nx.number_connected_components(h)


def check_cycle_cover(g: Graph, edges: typing.Iterable):
    """Edges forming vertex-disjoint cycles (of length at least 3) that cover every vertex. Objective is the number of cycles"""
    h = _edge_graph(g, edges)
    if h is None or any(d != 2 for _, d in h.degree()):
        return False, None

    return True, nx.number_connected_components(h)


def check_replica(g: Graph, selected: typing.Iterable, k: int):
    """k distinct vertices. Objective is the selection cost plus the penalties of the edges inside the selection"""
    selected = set(selected)
    if len(selected) != k or not selected <= set(g.vertices):
        return False, None

    return True, sum(g.cost(v) for v in selected) + sum(g.penalty(u, v) for u, v in g.edges if u in selected and v in selected)


def check_spanning_tree(g: Graph, edges: typing.Iterable):
    """Spanning tree. Objective is the total weight of its leaves"""
    h = _edge_graph(g, edges)
    if h is None or not nx.is_tree(h):
        return False, None

    return True, sum(g.weight(v) for v, d in h.degree() if d == 1)


def check_maximal_matching(g: Graph, edges: typing.Iterable):
    """Maximal matching. Objective is its total edge weight"""
    edges = [tuple(e) for e in edges]
    h = _edge_graph(g, edges)
    if h is None or not nx.is_maximal_matching(g.to_networkx(), set(edges)):
        return False, None

    return True, sum(g.edge_weight(u, v) for u, v in edges)


def check_simple_path(g: Graph, vertices: typing.Iterable, edges: typing.Iterable, min_length: int, max_length: int):
    """Simple path with min_length..max_length vertices. Objective is its average vertex weight as a Fraction"""
    vertices = set(vertices)
    edges = [tuple(e) for e in edges]
    if not vertices or not min_length <= len(vertices) <= max_length or not vertices <= set(g.vertices):
        return False, None

    h = nx.Graph()
    h.add_nodes_from(vertices)
    for u, v in edges:
        if u not in vertices or v not in vertices or not g.adjacent(u, v):
            return False, None

        h.add_edge(u, v)

    if len(edges) != len(vertices) - 1 or not nx.is_tree(h) or any(d > 2 for _, d in h.degree()):
        return False, None

    return True, Fraction(sum(g.weight(v) for v in vertices), len(vertices))


def check_independent_set(g: Graph, selected: typing.Iterable):
    """Independent set. Objective is its total vertex weight"""
    selected = set(selected)
    if not selected <= set(g.vertices) or any(u in selected and v in selected for u, v in g.edges):
        return False, None

    return True, sum(g.weight(v) for v in selected)


def check_placements(grid: PartialGrid, pieces: typing.Sequence[typing.Tuple[int, int]], placements: typing.Iterable):
    """
    Non-overlapping pieces on present cells
    :param grid: partial grid
    :param pieces: (rows, cols) of every piece type
    :param placements: (piece type, top row, left col), all 0-based
    :return (ok, number of pieces)
    """
    covered = set()
    count = 0
    for t, top, left in placements:
        if not 0 <= t < len(pieces):
            return False, None

        r, c = pieces[t]
        cells = {(top + i, left + j) for i in range(r) for j in range(c)}
        if any(not grid.is_present(*cell) for cell in cells) or cells & covered:
            return False, None

        covered |= cells
        count += 1

    return True, count

import random

import networkx as nx
import numpy as np

from pwpy.decomposition.builders import order_decomposition
from pwpy.decomposition.path_decomposition import PathDecomposition
from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid

"""
Seeded random instances for the equivalence and property tests
"""


def random_graph(seed: int, n: int, p: float, connected: bool = False, max_weight: int = 0, max_edge_weight: int = 0):
    """
    Erdos-Renyi graph on vertices 1..n
    :param seed: random seed
    :param n: number of vertices
    :param p: edge probability
    :param connected: resample (with derived seeds) until the graph is connected
    :param max_weight: if positive, vertex weights and selection costs are drawn from 1..max_weight
    :param max_edge_weight: if positive, edge weights and penalties are drawn from 1..max_edge_weight
    :return Graph
    """
    rng = random.Random(seed)

    while True:
        h = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
        if not connected or nx.is_connected(h):
            break

    edges = [(u + 1, v + 1) for u, v in h.edges()]

    vertex_weight = {v: rng.randint(1, max_weight) for v in range(1, n + 1)} if max_weight > 0 else None
    selection_cost = {v: rng.randint(1, max_weight) for v in range(1, n + 1)} if max_weight > 0 else None
    edge_weight = {e: rng.randint(1, max_edge_weight) for e in edges} if max_edge_weight > 0 else None
    edge_penalty = {e: rng.randint(1, max_edge_weight) for e in edges} if max_edge_weight > 0 else None

    return Graph(n, edges=edges, vertex_weight=vertex_weight, selection_cost=selection_cost, edge_weight=edge_weight, edge_penalty=edge_penalty)


def random_grid(seed: int, rows: int, cols: int, p_missing: float = 0.2, p_removed: float = 0.1):
    """
    Partial grid with randomly missing cells and randomly removed edges. At least one cell stays present
    """
    rng = np.random.RandomState(seed)

    present = rng.random_sample((rows, cols)) >= p_missing
    if not present.any():
        present[rng.randint(rows), rng.randint(cols)] = True

    removed = list()
    for r in range(rows):
        for c in range(cols):
            for other in ((r, c + 1), (r + 1, c)):
                if other[0] < rows and other[1] < cols and present[r, c] and present[other] and rng.random_sample() < p_removed:
                    removed.append(((r, c), other))

    return PartialGrid(present, removed_edges=removed)


def random_decomposition(g: Graph, seed: int, merge: float = 0.3):
    """
    Valid path decomposition from a random vertex order, with random runs of consecutive bags merged
    :param g: graph
    :param seed: random seed
    :param merge: probability to merge a bag into its predecessor
    :return PathDecomposition
    """
    rng = random.Random(seed)
    order = list(g.vertices)
    rng.shuffle(order)

    bags = list()
    for bag in order_decomposition(g, order).bags:
        if bags and rng.random() < merge:
            bags[-1] = bags[-1] | bag
        else:
            bags.append(bag)

    return PathDecomposition(bags)


def random_pieces(seed: int, count: int, max_rows: int, max_cols: int):
    """Distinct piece types (rows, cols)"""
    rng = random.Random(seed)
    pieces = set()
    while len(pieces) < min(count, max_rows * max_cols):
        pieces.add((rng.randint(1, max_rows), rng.randint(1, max_cols)))

    return sorted(pieces)

import functools
import itertools
import logging
import typing
from collections import namedtuple
from fractions import Fraction

from pwpy.graph.graph import Graph
from pwpy.graph.grid import PartialGrid
from pwpy.oracle import checkers

"""
Exhaustive solvers for every problem. They only share the instance model and the checkers with the rest of
the package and are meant for instances of at most ORACLE_LIMIT vertices
"""

ORACLE_LIMIT = 12

OracleResult = namedtuple('OracleResult', ['feasible', 'objective', 'certificate'])

_INFEASIBLE = OracleResult(False, None, None)


class SizeLimitExceededError(Exception):
    pass


def _subsets(items: typing.Sequence, sizes: typing.Iterable = None):
    for size in (range(len(items) + 1) if sizes is None else sizes):
        yield from itertools.combinations(items, size)


def _colorings(g: Graph, num_colors: int):
    return (dict(zip(g.vertices, colors)) for colors in itertools.product(range(1, num_colors + 1), repeat=g.n))


def oracle_coloring(g: Graph, C: int):
    for colors in _colorings(g, C):
        if checkers.check_coloring(g, colors, C)[0]:
            return OracleResult(True, True, colors)

    return _INFEASIBLE


def oracle_penalty_coloring(g: Graph, C: int, mode: str = 'sum'):
    best = None
    for colors in _colorings(g, C):
        paid = checkers.coloring_penalty(g, colors, mode)
        if best is None or paid < best.objective:
            best = OracleResult(True, paid, colors)

    return best


def _simple_paths(g: Graph):
    """Every simple path as (vertex tuple, edge list), each path once"""
    result = list()

    def walk(path):
        if path[0] <= path[-1]:
            result.append((tuple(path), [tuple(sorted(e)) for e in zip(path, path[1:])]))

        for u in sorted(g.neighbors(path[-1])):
            if u not in path:
                walk(path + [u])

    for v in g.vertices:
        walk([v])

    return result


def _simple_cycles(g: Graph):
    """Every cycle of length at least 3 as (vertex set, edge list), each cycle once"""
    result = dict()
    for path, edges in _simple_paths(g):
        if len(path) >= 3 and g.adjacent(path[0], path[-1]):
            key = frozenset(edges + [tuple(sorted((path[0], path[-1])))])
            result.setdefault(key, (frozenset(path), sorted(key)))

    return list(result.values())


def _exact_cover(n: int, pieces: list):
    """
    Minimum number of pieces (vertex set, edges) covering 1..n exactly
    :return (count, edge list) of an optimal cover or None
    """
    full = frozenset(range(1, n + 1))

    @functools.lru_cache(maxsize=None)
    def cover(remaining):
        if not remaining:
            return 0, ()

        first = min(remaining)
        best = None
        for i, (vertices, _) in enumerate(pieces):
            if first in vertices and vertices <= remaining:
                sub = cover(remaining - vertices)
                if sub is not None and (best is None or sub[0] + 1 < best[0]):
                    best = (sub[0] + 1, (i,) + sub[1])

        return best

    result = cover(full)
    if result is None:
        return None

    return result[0], sorted(e for i in result[1] for e in pieces[i][1])


def oracle_path_cover(g: Graph):
    paths = [(frozenset(p), e) for p, e in _simple_paths(g)]
    count, edges = _exact_cover(g.n, paths)
    return OracleResult(True, count, edges)


def oracle_cycle_cover(g: Graph):
    result = _exact_cover(g.n, _simple_cycles(g))
    return OracleResult(True, result[0], result[1]) if result is not None else _INFEASIBLE


def oracle_k_replica(g: Graph, k: int):
    best = None
    for selected in itertools.combinations(g.vertices, k):
        cost = checkers.check_replica(g, selected, k)[1]
        if best is None or cost < best.objective:
            best = OracleResult(True, cost, sorted(selected))

    return best or _INFEASIBLE


def oracle_max_leaf_tree(g: Graph):
    """Enumerate the spanning trees edge by edge, keeping the components of the chosen edges"""
    best = None
    edges = g.edges

    def extend(i, components, chosen):
        nonlocal best
        if len(chosen) == g.n - 1:
            degrees = {v: 0 for v in g.vertices}
            for u, v in chosen:
                degrees[u] += 1
                degrees[v] += 1

            leaves = sum(g.weight(v) for v, d in degrees.items() if d == 1)
            if best is None or leaves > best.objective:
                best = OracleResult(True, leaves, sorted(chosen))
            return

        if len(chosen) + len(edges) - i < g.n - 1:
            return

        u, v = edges[i]
        if components[u] != components[v]:
            merged = tuple(components[u] if c == components[v] else c for c in components)
            extend(i + 1, merged, chosen + [(u, v)])

        extend(i + 1, components, chosen)

    extend(0, tuple(range(g.n + 1)), list())

    return best or _INFEASIBLE


def oracle_min_maximal_matching(g: Graph):
    best = None
    edges = g.edges

    def extend(i, matched, chosen):
        nonlocal best
        if i == len(edges):
            ok, weight = checkers.check_maximal_matching(g, chosen)
            if ok and (best is None or weight < best.objective):
                best = OracleResult(True, weight, sorted(chosen))
            return

        u, v = edges[i]
        if u not in matched and v not in matched:
            extend(i + 1, matched | {u, v}, chosen + [(u, v)])

        extend(i + 1, matched, chosen)

    extend(0, frozenset(), list())

    return best


def oracle_avg_path(g: Graph, L: int, U: int, mode: str = 'max'):
    best = None
    for path, edges in _simple_paths(g):
        if L <= len(path) <= U:
            average = Fraction(sum(g.weight(v) for v in path), len(path))
            if best is None or (average > best.objective if mode == 'max' else average < best.objective):
                best = OracleResult(True, average, {'vertices': sorted(path), 'edges': sorted(edges)})

    return best or _INFEASIBLE


def oracle_mwis(g: Graph):
    best = None
    for selected in _subsets(list(g.vertices)):
        ok, weight = checkers.check_independent_set(g, selected)
        if ok and (best is None or weight > best.objective):
            best = OracleResult(True, weight, sorted(selected))

    return best


def oracle_rect_cover(grid: PartialGrid, pieces: typing.Sequence):
    """Try, cell by cell in row-major order, to leave it free or to put a piece with its top left corner there"""
    cells = grid.cells()

    @functools.lru_cache(maxsize=None)
    def place(i, covered):
        if i == len(cells):
            return 0, ()

        best = place(i + 1, covered)
        top, left = cells[i]
        for t, (r, c) in enumerate(pieces):
            area = frozenset((top + x, left + y) for x in range(r) for y in range(c))
            if not area & covered and all(grid.is_present(*cell) for cell in area):
                sub = place(i + 1, covered | area)
                if sub[0] + 1 > best[0]:
                    best = (sub[0] + 1, ((t, top, left),) + sub[1])

        return best

    count, placements = place(0, frozenset())

    return OracleResult(True, count, sorted(placements))


def oracle_solve(name: str, instance: typing.Union[Graph, PartialGrid], limit: int = ORACLE_LIMIT, **params):
    """
    Solve a problem by exhaustive enumeration
    :param name: problem name, as in the plugin registry
    :param instance: Graph, or PartialGrid for rect-cover
    :param limit: largest accepted vertex (or present cell) count
    :param params: problem parameters
    :return OracleResult
    """
    size = instance.n if isinstance(instance, Graph) else len(instance.cells())
    if size > limit:
        raise SizeLimitExceededError("Oracle instances are limited to " + str(limit) + " vertices, got " + str(size))

    logging.getLogger(__name__).debug("Oracle " + name + " on " + str(instance))

    if name in ('coloring', 'coloring-canonical'):
        return oracle_coloring(instance, params['C'])
    elif name == 'penalty-coloring':
        return oracle_penalty_coloring(instance, params['C'], params.get('mode') or 'sum')
    elif name == 'path-cover':
        return oracle_path_cover(instance)
    elif name == 'cycle-cover':
        return oracle_cycle_cover(instance)
    elif name == 'k-replica':
        return oracle_k_replica(instance, params['k'])
    elif name == 'max-leaf-tree':
        return oracle_max_leaf_tree(instance)
    elif name == 'min-maximal-matching':
        return oracle_min_maximal_matching(instance)
    elif name == 'avg-path':
        return oracle_avg_path(instance, params['L'], params['U'], params.get('mode') or 'max')
    elif name == 'mwis':
        return oracle_mwis(instance)
    elif name == 'rect-cover':
        return oracle_rect_cover(instance, params['pieces'])

    raise ValueError("Unknown problem '" + name + "'")

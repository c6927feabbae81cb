import logging

from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import run_dp, solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import normalize_partition, partition_count, product_states, restricted_growth_strings
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_coloring, check_penalty_coloring
from pwpy.problems.registry import ParameterError

"""
C-coloring with one color per bag vertex, its canonical (set partition) variant and the penalty coloring
"""


class ColoringProblem(ProblemDefinition):
    """Feasibility of a proper coloring with C colors. The state holds the color of every bag vertex"""

    name = 'coloring'
    certificate_kind = 'coloring'

    def __init__(self, C: int):
        super().__init__()

        if C < 1:
            raise ParameterError("The number of colors must be positive")

        self.C = C

    def digits(self, nv: int):
        return [(1, self.C)] * nv

    def enumerate_states(self, nv: int):
        return product_states(self.digits(nv))

    def state_signature(self):
        return self.name, self.C

    def set_of_actions(self, node: Node):
        return list(range(1, self.C + 1)) if node.kind == INTRODUCE else [None]

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind == INTRODUCE:
            if any(state[j] == action for j in node.neighbor_positions):
                return None, None, False

            return state + (action,), value, True

        return state[:node.position] + state[node.position + 1:], value, True

    def better(self, a, b):
        return a < b

    def objective(self, state: tuple, value):
        return True

    def certificate(self, steps: list):
        """Color of every vertex, as chosen by the introduce actions"""
        return {node.vertex: action for node, _, action, _ in steps if node.kind == INTRODUCE}

    def check(self, certificate):
        return check_coloring(self.graph, certificate, self.C)


class CanonicalColoringProblem(ColoringProblem):
    """
    Coloring over set partition states: only which bag vertices share a color matters, so a state is the
    restricted growth string of the color classes (c_1 = 1, c_j <= 1 + max(c_1..c_{j-1}))
    """

    name = 'coloring-canonical'

    def enumerate_states(self, nv: int):
        return restricted_growth_strings(nv, self.C)

    def partition_columns(self, nv: int):
        return list(range(nv))

    def estimate_states(self, nv: int):
        return partition_count(nv, self.C)

    def normalize(self, state: tuple):
        return normalize_partition(state)

    def certificate(self, steps: list):
        """
        Map the local labels to global colors: vertices with distinct labels in a bag always get distinct
        global colors, a new label takes the smallest color not used in the bag
        """
        colors = dict()
        for node, state, action, _ in steps:
            if node.kind != INTRODUCE:
                continue

            bag = node.prev_bag
            shared = [bag[j] for j, s in enumerate(state) if s == action]
            if shared:
                colors[node.vertex] = colors[shared[0]]
            else:
                used = {colors[u] for u in bag}
                colors[node.vertex] = min(c for c in range(1, self.C + 1) if c not in used)

        return colors


class PenaltyColoringProblem(CanonicalColoringProblem):
    """
    Coloring with C colors minimizing the penalties of the monochromatic edges: their sum (mode sum) or the
    largest one (mode max)
    """

    name = 'penalty-coloring'

    def __init__(self, C: int, mode: str = 'sum'):
        super().__init__(C)

        if mode not in ('sum', 'max'):
            raise ParameterError("Penalty coloring mode must be 'sum' or 'max'")

        self.mode = mode

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind == INTRODUCE:
            paid = [self.graph.penalty(node.vertex, node.prev_bag[j]) for j in node.neighbor_positions if state[j] == action]
            if self.mode == 'sum':
                value = value + sum(paid)
            else:
                value = max([value] + paid)

            return state + (action,), value, True

        return state[:node.position] + state[node.position + 1:], value, True

    def objective(self, state: tuple, value):
        return value

    def check(self, certificate):
        return check_penalty_coloring(self.graph, certificate, self.C, self.mode)


def solve_coloring(g: Graph, npd: NicePathDecomposition, C: int, canonical: bool = False, reconstruct: bool = False, **kwargs):
    """
    :return (DpResult, coloring or None)
    """
    problem = CanonicalColoringProblem(C) if canonical else ColoringProblem(C)
    return solve(problem, g, npd, reconstruct=reconstruct, **kwargs)


def chromatic_number(g: Graph, npd: NicePathDecomposition, search: str = 'linear', canonical: bool = True, **kwargs):
    """
    Smallest number of colors with a proper coloring
    :param g: graph
    :param npd: nice path decomposition
    :param search: 'linear' (ascending from 1) or 'binary' (over 1..n)
    :param canonical: use the canonical coloring states
    :return chromatic number
    """
    def feasible(c):
        result = run_dp(CanonicalColoringProblem(c) if canonical else ColoringProblem(c), g, npd, **kwargs)
        logging.getLogger(__name__).debug(str(c) + " colors: " + ("feasible" if result.feasible else "infeasible"))
        return result.feasible

    if search == 'linear':
        return next(c for c in range(1, g.n + 1) if feasible(c))
    elif search == 'binary':
        lo, hi = 1, g.n
        while lo < hi:
            mid = (lo + hi) // 2
            if feasible(mid):
                hi = mid
            else:
                lo = mid + 1

        return lo

    raise ParameterError("Unknown search '" + str(search) + "'")


def solve_penalty_coloring(g: Graph, npd: NicePathDecomposition, C: int, mode: str = 'sum', reconstruct: bool = False, **kwargs):
    return solve(PenaltyColoringProblem(C, mode=mode), g, npd, reconstruct=reconstruct, **kwargs)

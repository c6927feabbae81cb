from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import product_states
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_maximal_matching

UNMATCHED = 0
MATCHED = 1
# unmatched, but an unmatched neighbour has already been forgotten, so the vertex must still be matched
OWES = 2

SKIP = 'skip'


class MinMaximalMatchingProblem(ProblemDefinition):
    """
    Minimum weight maximal matching. Edges are added when their second endpoint is introduced. A vertex can
    only be forgotten unmatched if its unmatched bag neighbours are matched later on, which they owe from then on
    """

    name = 'min-maximal-matching'
    certificate_kind = 'edges'

    def digits(self, nv: int):
        return [(0, 3)] * nv

    def enumerate_states(self, nv: int):
        return product_states(self.digits(nv))

    def set_of_actions(self, node: Node):
        if node.kind != INTRODUCE:
            return [None]

        return [SKIP] + list(node.neighbor_positions)

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind != INTRODUCE:
            j = node.position
            if state[j] == OWES:
                return None, None, False

            s = list(state)
            if state[j] == UNMATCHED:
                for k in node.neighbor_positions:
                    if s[k] == UNMATCHED:
                        s[k] = OWES

            return tuple(s[:j] + s[j + 1:]), value, True

        if action == SKIP:
            return state + (UNMATCHED,), value, True

        if state[action] == MATCHED:
            return None, None, False

        s = list(state)
        s[action] = MATCHED

        return tuple(s) + (MATCHED,), value + self.graph.edge_weight(node.vertex, node.prev_bag[action]), True

    def better(self, a, b):
        return a < b

    def certificate(self, steps: list):
        return sorted(tuple(sorted((node.vertex, node.prev_bag[action]))) for node, _, action, _ in steps if node.kind == INTRODUCE and action != SKIP)

    def check(self, certificate):
        return check_maximal_matching(self.graph, certificate)


def solve_min_maximal_matching(g: Graph, npd: NicePathDecomposition, reconstruct: bool = False, **kwargs):
    return solve(MinMaximalMatchingProblem(), g, npd, reconstruct=reconstruct, **kwargs)

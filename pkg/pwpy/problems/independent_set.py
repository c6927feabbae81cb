from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import product_states
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_independent_set


class IndependentSetProblem(ProblemDefinition):
    """Maximum weight independent set. s_j = 1 if the bag vertex is selected"""

    name = 'mwis'
    certificate_kind = 'vertices'

    def digits(self, nv: int):
        return [(0, 2)] * nv

    def enumerate_states(self, nv: int):
        return product_states(self.digits(nv))

    def set_of_actions(self, node: Node):
        return [0, 1] if node.kind == INTRODUCE else [None]

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind != INTRODUCE:
            return state[:node.position] + state[node.position + 1:], value, True

        if action == 1:
            if any(state[j] == 1 for j in node.neighbor_positions):
                return None, None, False

            value = value + self.graph.weight(node.vertex)

        return state + (action,), value, True

    def better(self, a, b):
        return a > b

    def certificate(self, steps: list):
        return sorted(node.vertex for node, _, action, _ in steps if node.kind == INTRODUCE and action == 1)

    def check(self, certificate):
        return check_independent_set(self.graph, certificate)


def solve_max_weight_independent_set(g: Graph, npd: NicePathDecomposition, reconstruct: bool = False, **kwargs):
    return solve(IndependentSetProblem(), g, npd, reconstruct=reconstruct, **kwargs)

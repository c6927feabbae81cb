from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import product_states
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_replica
from pwpy.problems.registry import ParameterError


class ReplicaProblem(ProblemDefinition):
    """
    Place k replicas on distinct vertices at minimum cost: the selection cost of every chosen vertex plus the
    penalty of every edge with both ends chosen. The state is s_j in {0, 1} per bag vertex followed by the
    number x of vertices selected so far
    """

    name = 'k-replica'
    certificate_kind = 'vertices'

    def __init__(self, k: int):
        super().__init__()

        if k < 1:
            raise ParameterError("k must be positive")

        self.k = k

    def prepare(self, g: Graph, npd: NicePathDecomposition):
        if self.k > g.n:
            raise ParameterError("k=" + str(self.k) + " exceeds the number of vertices " + str(g.n))

        super().prepare(g, npd)

    def digits(self, nv: int):
        return [(0, 2)] * nv + [(0, self.k + 1)]

    def enumerate_states(self, nv: int):
        return product_states(self.digits(nv))

    def state_signature(self):
        return self.name, self.k

    def root_state(self):
        return 0,

    def set_of_actions(self, node: Node):
        return [0, 1] if node.kind == INTRODUCE else [None]

    def expand_state(self, state: tuple, node: Node, action, value):
        x = state[-1]
        if node.kind != INTRODUCE:
            return state[:node.position] + state[node.position + 1:], value, True

        if action == 0:
            return state[:-1] + (0, x), value, True

        if x == self.k:
            return None, None, False

        v = node.vertex
        cost = self.graph.cost(v) + sum(self.graph.penalty(v, node.prev_bag[j]) for j in node.neighbor_positions if state[j] == 1)

        return state[:-1] + (1, x + 1), value + cost, True

    def better(self, a, b):
        return a < b

    def is_valid_final(self, state: tuple):
        return state[-1] == self.k

    def certificate(self, steps: list):
        return sorted(node.vertex for node, _, action, _ in steps if node.kind == INTRODUCE and action == 1)

    def check(self, certificate):
        return check_replica(self.graph, certificate, self.k)

    def format_state(self, state: tuple):
        return ' '.join(str(s) for s in state[:-1]) + ' x ' + str(state[-1])


def solve_k_replica(g: Graph, npd: NicePathDecomposition, k: int, reconstruct: bool = False, **kwargs):
    return solve(ReplicaProblem(k), g, npd, reconstruct=reconstruct, **kwargs)

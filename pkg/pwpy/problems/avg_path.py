import itertools
from fractions import Fraction

from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import append_digit, normalize_partition, path_labeling_count, path_labelings
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_simple_path
from pwpy.problems.registry import ParameterError

"""
Simple path with L..U vertices of maximum (or minimum) average vertex weight. The path is grown as path
fragments (labels as in the path cover, with 0 also for unselected vertices) that are joined through later
vertices; the fragment whose last endpoint leaves the bag completes the path, which is only allowed when no
other fragment is left. The table value is the weight sum, the number x of selected vertices is part of the state.
"""

SKIP = 'skip'
START = 'start'
EXTEND = 'extend'
CONNECT = 'connect'

_FROZEN = (-1, 0)


class AveragePathProblem(ProblemDefinition):

    name = 'avg-path'
    certificate_kind = 'path'

    def __init__(self, L: int, U: int, mode: str = 'max'):
        super().__init__()

        if not 1 <= L <= U:
            raise ParameterError("Path length bounds must satisfy 1 <= L <= U")

        if mode not in ('max', 'min'):
            raise ParameterError("Average path mode must be 'max' or 'min'")

        self.L, self.U, self.mode = L, U, mode

    def prepare(self, g: Graph, npd: NicePathDecomposition):
        if self.U > g.n:
            raise ParameterError("U=" + str(self.U) + " exceeds the number of vertices " + str(g.n))

        super().prepare(g, npd)

    def digits(self, nv: int):
        return [(-1, nv + 2)] * nv + [(0, self.U + 1)]

    def enumerate_states(self, nv: int):
        return append_digit(path_labelings(nv), 0, self.U + 1)

    def partition_columns(self, nv: int):
        return list(range(nv))

    def estimate_states(self, nv: int):
        return path_labeling_count(nv) * (self.U + 1)

    def state_signature(self):
        return self.name, self.U

    def root_state(self):
        return 0,

    def normalize(self, state: tuple):
        return normalize_partition(state[:-1], frozen=_FROZEN) + state[-1:]

    def set_of_actions(self, node: Node):
        if node.kind != INTRODUCE:
            return [None]

        neighbors = node.neighbor_positions
        return [(SKIP,), (START,)] + [(EXTEND, j) for j in neighbors] + [(CONNECT, j, k) for j, k in itertools.combinations(neighbors, 2)]

    def expand_state(self, state: tuple, node: Node, action, value):
        s, x = list(state[:-1]), state[-1]

        if node.kind != INTRODUCE:
            j = node.position
            completes = s[j] == -1 or (s[j] > 0 and s.count(s[j]) == 1)
            del s[j]
            if completes and any(c != 0 for c in s):
                return None, None, False

            return tuple(s) + (x,), value, True

        if action[0] == SKIP:
            return tuple(s) + (0, x), value, True

        # nothing can be selected after the path has been completed
        if x == self.U or (x > 0 and all(c == 0 for c in s)):
            return None, None, False

        value = value + self.graph.weight(node.vertex)

        if action[0] == START:
            return tuple(s) + (-1, x + 1), value, True

        if action[0] == EXTEND:
            j = action[1]
            if s[j] == 0:
                return None, None, False

            if s[j] == -1:
                s[j] = len(s) + 1
                return tuple(s) + (len(s) + 1, x + 1), value, True

            label, s[j] = s[j], 0
            return tuple(s) + (label, x + 1), value, True

        j, k = action[1], action[2]
        sj, sk = s[j], s[k]
        if sj == 0 or sk == 0 or (sj == sk and sj > 0):
            return None, None, False

        if sj == -1 and sk == -1:
            s[j] = s[k] = len(s) + 1
        elif sj == -1:
            s[j], s[k] = sk, 0
        elif sk == -1:
            s[k], s[j] = sj, 0
        else:
            partner_j = next((p for p, c in enumerate(s) if p != j and c == sj), None)
            partner_k = next((p for p, c in enumerate(s) if p != k and c == sk), None)
            if partner_k is not None:
                s[partner_k] = sj

            s[j] = s[k] = 0

            # both far ends are gone: the merged fragment is the complete path
            if partner_j is None and partner_k is None and any(c != 0 for c in s):
                return None, None, False

        return tuple(s) + (0, x + 1), value, True

    def better(self, a, b):
        return a > b if self.mode == 'max' else a < b

    def is_valid_final(self, state: tuple):
        return self.L <= state[-1] <= self.U

    def final_better(self, a_state: tuple, a_value, b_state: tuple, b_value):
        # a / xa against b / xb, with positive counts
        a, b = a_value * b_state[-1], b_value * a_state[-1]
        return a > b if self.mode == 'max' else a < b

    def objective(self, state: tuple, value):
        return Fraction(value, state[-1])

    def certificate(self, steps: list):
        """Selected vertices and the path edges between them"""
        vertices, edges = list(), list()
        for node, _, action, _ in steps:
            if node.kind == INTRODUCE and action[0] != SKIP:
                vertices.append(node.vertex)
                edges += [tuple(sorted((node.vertex, node.prev_bag[j]))) for j in action[1:]]

        return {'vertices': sorted(vertices), 'edges': sorted(edges)}

    def check(self, certificate):
        return check_simple_path(self.graph, certificate['vertices'], certificate['edges'], self.L, self.U)

    def format_state(self, state: tuple):
        return ' '.join(str(s) for s in state[:-1]) + ' x ' + str(state[-1])


def solve_avg_path(g: Graph, npd: NicePathDecomposition, L: int, U: int, mode: str = 'max', reconstruct: bool = False, **kwargs):
    return solve(AveragePathProblem(L, U, mode=mode), g, npd, reconstruct=reconstruct, **kwargs)

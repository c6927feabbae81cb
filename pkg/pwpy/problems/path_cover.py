import itertools

from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import normalize_partition, path_labeling_count, path_labelings
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_cycle_cover, check_path_cover

"""
Path and cycle covers. Every bag vertex is labeled -1 (alone on its path so far), 0 (no free edge end:
inner vertex of a path) or with the id of the path fragment it is an endpoint of. An id occurs twice when
both endpoints of the fragment are in the bag.
"""

NEW = 'new'
EXTEND = 'extend'
CONNECT = 'connect'

_FROZEN = (-1, 0)


def _partner(state: tuple, j: int):
    """Position of the other endpoint of the fragment ending at j, or None"""
    return next((k for k, s in enumerate(state) if k != j and s == state[j]), None)


class PathFragmentProblem(ProblemDefinition):
    """Fragment bookkeeping shared by the path and cycle covers"""

    certificate_kind = 'edges'
    supports_catalan = True

    # every positive id must occur exactly twice
    paired = False

    def digits(self, nv: int):
        return [(-1, nv + 2)] * nv

    def enumerate_states(self, nv: int):
        return path_labelings(nv, paired=self.paired)

    def partition_columns(self, nv: int):
        return list(range(nv))

    def estimate_states(self, nv: int):
        return path_labeling_count(nv, paired=self.paired)

    def normalize(self, state: tuple):
        return normalize_partition(state, frozen=_FROZEN)

    def set_of_actions(self, node: Node):
        if node.kind != INTRODUCE:
            return [None]

        neighbors = node.neighbor_positions
        return [(NEW,)] + [(EXTEND, j) for j in neighbors] + [(CONNECT, j, k) for j, k in itertools.combinations(neighbors, 2)]

    def _extend(self, state: tuple, j: int):
        """The introduced vertex takes an edge to the endpoint j. Returns the new bag labels or None"""
        s = list(state)
        if s[j] == 0:
            return None

        if s[j] == -1:
            s[j] = len(s) + 1
            return s + [len(s) + 1]

        label = s[j]
        s[j] = 0
        return s + [label]

    def _connect(self, state: tuple, j: int, k: int):
        """The introduced vertex joins the fragments of j and k and becomes an inner vertex"""
        s = list(state)
        sj, sk = s[j], s[k]
        if sj == 0 or sk == 0 or (sj == sk and sj > 0):
            return None

        if sj == -1 and sk == -1:
            s[j] = s[k] = len(s) + 1
        elif sj == -1:
            s[j], s[k] = sk, 0
        elif sk == -1:
            s[k], s[j] = sj, 0
        else:
            partner = _partner(state, k)
            if partner is not None:
                s[partner] = sj

            s[j] = s[k] = 0

        return s + [0]

    def better(self, a, b):
        return a < b

    def certificate(self, steps: list):
        """Edges of the cover, as taken by the extend / connect actions"""
        edges = list()
        for node, _, action, _ in steps:
            if node.kind == INTRODUCE and action[0] != NEW:
                edges += [tuple(sorted((node.vertex, node.prev_bag[j]))) for j in action[1:]]

        return sorted(edges)


class PathCoverProblem(PathFragmentProblem):
    """Minimum number of vertex-disjoint paths covering every vertex. The value counts the paths so far"""

    name = 'path-cover'

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind != INTRODUCE:
            return state[:node.position] + state[node.position + 1:], value, True

        if action[0] == NEW:
            return state + (-1,), value + 1, True
        elif action[0] == EXTEND:
            s = self._extend(state, action[1])
            return (tuple(s), value, True) if s is not None else (None, None, False)
        else:
            s = self._connect(state, action[1], action[2])
            return (tuple(s), value - 1, True) if s is not None else (None, None, False)

    def check(self, certificate):
        return check_path_cover(self.graph, certificate)


class CycleCoverProblem(PathFragmentProblem):
    """
    Minimum number of vertex-disjoint cycles covering every vertex. Open cycles are fragments with both
    endpoints in the bag; a cycle is closed by a vertex joining both endpoints of the same fragment
    """

    name = 'cycle-cover'
    paired = True

    def expand_state(self, state: tuple, node: Node, action, value):
        if node.kind != INTRODUCE:
            if state[node.position] != 0:
                return None, None, False

            return state[:node.position] + state[node.position + 1:], value, True

        if action[0] == NEW:
            return state + (-1,), value, True
        elif action[0] == EXTEND:
            s = self._extend(state, action[1])
            return (tuple(s), value, True) if s is not None else (None, None, False)

        j, k = action[1], action[2]
        if state[j] > 0 and state[j] == state[k]:
            s = list(state)
            s[j] = s[k] = 0
            return tuple(s) + (0,), value + 1, True

        s = self._connect(state, j, k)
        return (tuple(s), value, True) if s is not None else (None, None, False)

    def check(self, certificate):
        return check_cycle_cover(self.graph, certificate)


def solve_path_cover(g: Graph, npd: NicePathDecomposition, reconstruct: bool = False, **kwargs):
    return solve(PathCoverProblem(), g, npd, reconstruct=reconstruct, **kwargs)


def solve_cycle_cover(g: Graph, npd: NicePathDecomposition, reconstruct: bool = False, **kwargs):
    return solve(CycleCoverProblem(), g, npd, reconstruct=reconstruct, **kwargs)

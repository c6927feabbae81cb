import itertools

import numpy as np

from pwpy.decomposition.path_decomposition import INTRODUCE, NicePathDecomposition, Node
from pwpy.dp.engine import solve
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import normalize_partition, product_states, restricted_growth_strings
from pwpy.graph.graph import Graph
from pwpy.oracle.checkers import check_spanning_tree
from pwpy.problems.registry import ParameterError

"""
Maximum leaf weight spanning tree. Every bag vertex carries the canonical id of its tree component and its
degree in the forest built so far, saturated at 2. The value is the weight of the vertices of degree at most 1
"""

NEW_COMPONENT = 'new'
ADD_AS_LEAF = 'leaf'
CONNECT_COMPONENTS = 'connect'


def tree_state_count(nv: int):
    """Number of (partition, degrees) states: singleton classes take degree 0..2, the others 1..2"""
    # counts[(blocks, singletons)] over the prefixes of the restricted growth strings
    counts = {(0, 0): 1}
    for _ in range(nv):
        following = dict()
        for (b, s), c in counts.items():
            for key, ways in (((b + 1, s + 1), 1), ((b, s - 1), s), ((b, s), b - s)):
                if ways:
                    following[key] = following.get(key, 0) + c * ways

        counts = following

    return sum(c * 3 ** s * 2 ** (nv - s) for (_, s), c in counts.items())


class MaxLeafTreeProblem(ProblemDefinition):

    name = 'max-leaf-tree'
    certificate_kind = 'edges'

    def prepare(self, g: Graph, npd: NicePathDecomposition):
        if g.n < 2:
            raise ParameterError("The spanning tree problem needs at least 2 vertices")

        super().prepare(g, npd)

    def digits(self, nv: int):
        return [(1, max(nv, 1)), (0, 3)] * nv

    def enumerate_states(self, nv: int):
        result = list()
        for labels in restricted_growth_strings(nv, nv):
            sizes = np.bincount(labels)
            degrees = product_states([(0, 3) if sizes[c] == 1 else (1, 2) for c in labels])

            rows = np.empty((degrees.shape[0], 2 * nv), dtype=np.int64)
            rows[:, 0::2] = labels
            rows[:, 1::2] = degrees
            result.append(rows)

        return np.concatenate(result) if result else np.zeros((0, 2 * nv), dtype=np.int64)

    def partition_columns(self, nv: int):
        return list(range(0, 2 * nv, 2))

    def estimate_states(self, nv: int):
        return tree_state_count(nv)

    def normalize(self, state: tuple):
        labels = normalize_partition(state[0::2])
        return tuple(itertools.chain.from_iterable(zip(labels, state[1::2])))

    def set_of_actions(self, node: Node):
        if node.kind != INTRODUCE:
            return [None]

        neighbors = node.neighbor_positions
        result = [(NEW_COMPONENT,)] + [(ADD_AS_LEAF, j) for j in neighbors]
        for size in range(2, len(neighbors) + 1):
            result += [(CONNECT_COMPONENTS,) + sv for sv in itertools.combinations(neighbors, size)]

        return result

    def expand_state(self, state: tuple, node: Node, action, value):
        g = self.graph
        cids, degrees = list(state[0::2]), list(state[1::2])

        if node.kind != INTRODUCE:
            j = node.position
            cid = cids.pop(j)
            degrees.pop(j)
            if cid not in cids and (cids or not node.is_last):
                return None, None, False

            return tuple(itertools.chain.from_iterable(zip(cids, degrees))), value, True

        v = node.vertex
        if action[0] == NEW_COMPONENT:
            cids.append(len(cids) + 1)
            degrees.append(0)
            value = value + g.weight(v)
        elif action[0] == ADD_AS_LEAF:
            j = action[1]
            if degrees[j] == 1:
                value = value - g.weight(node.prev_bag[j])

            degrees[j] = min(2, degrees[j] + 1)
            cids.append(cids[j])
            degrees.append(1)
            value = value + g.weight(v)
        else:
            members = action[1:]
            merged = {cids[j] for j in members}
            if len(merged) != len(members):
                return None, None, False

            new_cid = max(merged)
            for j in members:
                if degrees[j] == 1:
                    value = value - g.weight(node.prev_bag[j])

                degrees[j] = min(2, degrees[j] + 1)

            cids = [new_cid if c in merged else c for c in cids]
            cids.append(new_cid)
            degrees.append(2)

        return tuple(itertools.chain.from_iterable(zip(cids, degrees))), value, True

    def better(self, a, b):
        return a > b

    def certificate(self, steps: list):
        edges = list()
        for node, _, action, _ in steps:
            if node.kind == INTRODUCE and action[0] != NEW_COMPONENT:
                edges += [tuple(sorted((node.vertex, node.prev_bag[j]))) for j in action[1:]]

        return sorted(edges)

    def check(self, certificate):
        return check_spanning_tree(self.graph, certificate)

    def format_state(self, state: tuple):
        return ' '.join(str(c) + ':' + str(d) for c, d in zip(state[0::2], state[1::2]))


def solve_max_leaf_tree(g: Graph, npd: NicePathDecomposition, reconstruct: bool = False, **kwargs):
    return solve(MaxLeafTreeProblem(), g, npd, reconstruct=reconstruct, **kwargs)

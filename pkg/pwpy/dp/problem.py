from abc import ABCMeta, abstractmethod

import numpy as np

from pwpy.decomposition.path_decomposition import NicePathDecomposition, Node
from pwpy.graph.graph import Graph

"""
Interface between the generic dynamic programming engine and the problem plugins
"""


class ProblemDefinition(object, metaclass=ABCMeta):
    """
    Problem plugin. A state of a bag with nv vertices is a flat tuple of small integers: the per-vertex
    components in bag order followed by the optional extra digits. Plugins are stateless between calls
    except for the instance they are prepared with.
    """

    name = None

    # one of 'coloring', 'edges', 'vertices', 'placements'
    certificate_kind = None

    # path labelings on row-major grid sweeps are noncrossing
    supports_catalan = False

    def __init__(self):
        self.graph = None
        self.npd = None

    def prepare(self, g: Graph, npd: NicePathDecomposition):
        """Bind the instance. Called by the engine before the first node"""
        self.graph = g
        self.npd = npd

    @abstractmethod
    def digits(self, nv: int):
        """(lo, size) domain of every state component for a bag of size nv"""
        return

    @abstractmethod
    def enumerate_states(self, nv: int):
        """Valid canonical states of a bag of size nv as an integer array"""
        return

    def partition_columns(self, nv: int):
        """Columns holding first-occurrence canonical labels (checked when the enumeration is built)"""
        return None

    def estimate_states(self, nv: int):
        """Upper bound of the number of states of a bag of size nv, evaluated before the enumeration"""
        return int(np.prod([size for _, size in self.digits(nv)], dtype=object))

    def state_signature(self):
        """Everything that shapes the state space. Indexes are shared between problems with equal signatures"""
        return (self.name,)

    def root_state(self):
        """State of the empty bag before the first node"""
        return tuple()

    def root_value(self):
        return 0

    def initial_table(self, node: Node):
        """
        Entries of the first table as (state, value, action index) triples. By default the root state is
        expanded with every action of the first node
        """
        result = list()
        for a, action in enumerate(self.set_of_actions(node)):
            state, value, ok = self.expand_state(self.root_state(), node, action, self.root_value())
            if ok:
                result.append((self.normalize(state), value, a))

        return result

    @abstractmethod
    def set_of_actions(self, node: Node):
        """Actions of a node. Must be the same list on every call"""
        return

    @abstractmethod
    def expand_state(self, state: tuple, node: Node, action, value):
        """
        Successor of state under action
        :return (new state, new value, ok)
        """
        return

    def normalize(self, state: tuple):
        return state

    @abstractmethod
    def better(self, a, b):
        """Strict comparison: True if value a is better than value b"""
        return

    def is_valid_final(self, state: tuple):
        return True

    def final_better(self, a_state: tuple, a_value, b_state: tuple, b_value):
        return self.better(a_value, b_value)

    def objective(self, state: tuple, value):
        """Objective reported for a valid final state"""
        return value

    @abstractmethod
    def certificate(self, steps: list):
        """
        Build a certificate from the replayed optimal run
        :param steps: list of (node, state before, action, state after) for every node
        """
        return

    @abstractmethod
    def check(self, certificate):
        """
        Verify a certificate independently of the tables
        :return (ok, objective)
        """
        return

    def format_state(self, state: tuple):
        return ' '.join(str(s) for s in state)

    def __str__(self):
        return self.name

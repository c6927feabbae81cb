import typing

import networkx as nx

"""
Undirected graph model with vertex and edge attributes, and the line-oriented instance file format
"""


class GraphError(Exception):
    """Invariant violation while building a graph"""
    pass


class GraphFormatError(GraphError):
    """Malformed instance file. Carries the 1-based line number of the offending line"""

    def __init__(self, line_number: int, message: str):
        super().__init__("line " + str(line_number) + ": " + message)
        self.line_number = line_number
        self.message = message


def _edge(u: int, v: int):
    return (u, v) if u < v else (v, u)


class Graph(object):
    """
    Immutable undirected graph with vertices 1..n. Attributes which are not given explicitly default to 1.
    """

    def __init__(self, n: int, edges: typing.Iterable[typing.Tuple[int, int]] = (), vertex_weight: dict = None, selection_cost: dict = None,
                 edge_weight: dict = None, edge_penalty: dict = None, coordinates: dict = None):
        """
        :param n: number of vertices
        :param edges: iterable of vertex pairs
        :param vertex_weight: w(v) for some (or all) vertices
        :param selection_cost: c_sel(v) for some (or all) vertices
        :param edge_weight: w(u, v) for some (or all) edges, keyed by vertex pair in any order
        :param edge_penalty: pen(u, v) for some (or all) edges, keyed by vertex pair in any order
        :param coordinates: optional 0-based (row, column) position of each vertex in a grid
        """
        if n < 1:
            raise GraphError("Graph must have at least one vertex")

        self._n = n

        edge_set = set()
        adjacency = {v: set() for v in range(1, n + 1)}
        for u, v in edges:
            self._check_vertex(u)
            self._check_vertex(v)

            if u == v:
                raise GraphError("Self-loop at vertex " + str(u))

            e = _edge(u, v)
            if e in edge_set:
                raise GraphError("Duplicate edge " + str(e))

            edge_set.add(e)
            adjacency[u].add(v)
            adjacency[v].add(u)

        self._edges = frozenset(edge_set)
        self._adjacency = {v: frozenset(a) for v, a in adjacency.items()}

        self._vertex_weight = self._vertex_attribute(vertex_weight, 'vertex weight')
        self._selection_cost = self._vertex_attribute(selection_cost, 'selection cost')
        self._edge_weight = self._edge_attribute(edge_weight, 'edge weight')
        self._edge_penalty = self._edge_attribute(edge_penalty, 'edge penalty')

        self._coordinates = dict(coordinates) if coordinates is not None else None
        if self._coordinates is not None and set(self._coordinates) != set(self.vertices):
            raise GraphError("Coordinates must be given for every vertex")

    def _check_vertex(self, v):
        if not isinstance(v, int) or v < 1 or v > self._n:
            raise GraphError("Vertex " + str(v) + " out of range 1.." + str(self._n))

    def _vertex_attribute(self, values, name):
        result = dict()
        for v, value in (values or dict()).items():
            self._check_vertex(v)
            if not isinstance(value, int):
                raise GraphError("Non-integer " + name + " for vertex " + str(v))

            result[v] = value

        return result

    def _edge_attribute(self, values, name):
        result = dict()
        for (u, v), value in (values or dict()).items():
            e = _edge(u, v)
            if e not in self._edges:
                raise GraphError(name + " given for missing edge " + str(e))

            if not isinstance(value, int):
                raise GraphError("Non-integer " + name + " for edge " + str(e))

            result[e] = value

        return result

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return len(self._edges)

    @property
    def vertices(self):
        return range(1, self._n + 1)

    @property
    def edges(self):
        """Edges as sorted (u, v) pairs with u < v"""
        return sorted(self._edges)

    @property
    def coordinates(self):
        return self._coordinates

    def adjacent(self, u: int, v: int):
        return v in self._adjacency[u]

    def neighbors(self, v: int):
        return self._adjacency[v]

    def degree(self, v: int):
        return len(self._adjacency[v])

    def weight(self, v: int):
        return self._vertex_weight.get(v, 1)

    def cost(self, v: int):
        return self._selection_cost.get(v, 1)

    def edge_weight(self, u: int, v: int):
        return self._edge_weight.get(_edge(u, v), 1)

    def penalty(self, u: int, v: int):
        return self._edge_penalty.get(_edge(u, v), 1)

    def explicit_attributes(self):
        """Attributes given at construction (without the defaults)"""
        return {'vw': dict(self._vertex_weight), 'sc': dict(self._selection_cost), 'ew': dict(self._edge_weight), 'pen': dict(self._edge_penalty)}

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def to_networkx(self):
        result = nx.Graph()
        for v in self.vertices:
            result.add_node(v, weight=self.weight(v), cost=self.cost(v))

        for u, v in self.edges:
            result.add_edge(u, v, weight=self.edge_weight(u, v), penalty=self.penalty(u, v))

        return result

    def relabel(self, permutation: dict):
        """
        Copy of the graph with every vertex v renamed to permutation[v]
        :param permutation: bijection of 1..n onto itself
        :return relabeled graph
        """
        attributes = self.explicit_attributes()
        return Graph(self._n,
                     edges=[(permutation[u], permutation[v]) for u, v in self.edges],
                     vertex_weight={permutation[v]: w for v, w in attributes['vw'].items()},
                     selection_cost={permutation[v]: c for v, c in attributes['sc'].items()},
                     edge_weight={(permutation[u], permutation[v]): w for (u, v), w in attributes['ew'].items()},
                     edge_penalty={(permutation[u], permutation[v]): p for (u, v), p in attributes['pen'].items()})

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self._n == other._n and self._edges == other._edges \
                   and self.explicit_attributes() == other.explicit_attributes() \
                   and self._coordinates == other._coordinates

        return NotImplemented

    def __hash__(self):
        return hash((self._n, self._edges))

    def __str__(self):
        return "Graph(n=" + str(self._n) + ", m=" + str(self.m) + ")"


def _tokens(text: str):
    """Yield (line_number, tokens) for each non-empty line, with comments removed"""
    for line_number, line in enumerate(text.splitlines(), 1):
        pos = line.find('#')
        if pos >= 0:
            line = line[:pos]

        tokens = line.split()
        if tokens:
            yield line_number, tokens


def _ints(line_number, tokens, count):
    if len(tokens) != count:
        raise GraphFormatError(line_number, "expected " + str(count) + " values after '" + tokens[0] + "', got " + str(len(tokens) - 1))

    try:
        return [int(t) for t in tokens[1:]]
    except ValueError:
        raise GraphFormatError(line_number, "non-integer value in '" + ' '.join(tokens) + "'")


def parse_graph(text: str):
    """
    Parse a graph instance file: header 'graph <n> <m>', m lines 'e <u> <v>' and
    the optional attribute lines 'vw <v> <w>', 'sc <v> <c>', 'ew <u> <v> <w>', 'pen <u> <v> <p>'
    :param text: file contents
    :return Graph
    """
    lines = _tokens(text)

    try:
        header_line, header = next(lines)
    except StopIteration:
        raise GraphFormatError(1, "empty instance")

    if header[0] != 'graph':
        raise GraphFormatError(header_line, "expected header 'graph <n> <m>'")

    n, m = _ints(header_line, header, 3)
    if n < 1:
        raise GraphFormatError(header_line, "a graph has at least one vertex")

    def vertex(line_number, v):
        if v < 1 or v > n:
            raise GraphFormatError(line_number, "vertex " + str(v) + " out of range 1.." + str(n))

        return v

    edges = dict()
    attributes = {'vw': dict(), 'sc': dict(), 'ew': dict(), 'pen': dict()}
    pending = list()

    for line_number, tokens in lines:
        kind = tokens[0]
        if kind == 'e':
            u, v = (vertex(line_number, x) for x in _ints(line_number, tokens, 3))
            if u == v:
                raise GraphFormatError(line_number, "self-loop at vertex " + str(u))

            e = _edge(u, v)
            if e in edges:
                raise GraphFormatError(line_number, "duplicate edge " + str(u) + " " + str(v))

            edges[e] = line_number
        elif kind in ('vw', 'sc'):
            v, value = _ints(line_number, tokens, 3)
            v = vertex(line_number, v)
            if v in attributes[kind]:
                raise GraphFormatError(line_number, "duplicate '" + kind + "' for vertex " + str(v))

            attributes[kind][v] = value
        elif kind in ('ew', 'pen'):
            u, v, value = _ints(line_number, tokens, 4)
            e = _edge(vertex(line_number, u), vertex(line_number, v))
            if e in attributes[kind]:
                raise GraphFormatError(line_number, "duplicate '" + kind + "' for edge " + str(u) + " " + str(v))

            attributes[kind][e] = value
            pending.append((line_number, kind, e))
        else:
            raise GraphFormatError(line_number, "unknown line type '" + kind + "'")

    for line_number, kind, e in pending:
        if e not in edges:
            raise GraphFormatError(line_number, "'" + kind + "' given for missing edge " + str(e[0]) + " " + str(e[1]))

    if len(edges) != m:
        raise GraphFormatError(header_line, "header declares " + str(m) + " edges, found " + str(len(edges)))

    return Graph(n, edges=edges.keys(), vertex_weight=attributes['vw'], selection_cost=attributes['sc'],
                 edge_weight=attributes['ew'], edge_penalty=attributes['pen'])


def serialize_graph(g: Graph):
    """
    Inverse of parse_graph. Only explicitly given attributes are written
    :param g: graph
    :return instance file contents
    """
    result = ['graph ' + str(g.n) + ' ' + str(g.m)]
    result += ['e ' + str(u) + ' ' + str(v) for u, v in g.edges]

    attributes = g.explicit_attributes()
    for kind in ('vw', 'sc'):
        result += [kind + ' ' + str(v) + ' ' + str(value) for v, value in sorted(attributes[kind].items())]

    for kind in ('ew', 'pen'):
        result += [kind + ' ' + str(u) + ' ' + str(v) + ' ' + str(value) for (u, v), value in sorted(attributes[kind].items())]

    return '\n'.join(result) + '\n'


def read_graph(path: str):
    with open(path, 'r') as f:
        return parse_graph(f.read())

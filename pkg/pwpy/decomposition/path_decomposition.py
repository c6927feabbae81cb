import typing
from collections import namedtuple

from pwpy.graph.graph import Graph

INTRODUCE = 'introduce'
FORGET = 'forget'

Event = namedtuple('Event', ['kind', 'vertex'])

# One node of a nice path decomposition, as seen by the problem plugins.
# bag / prev_bag are the ordered bags after / before the event; position is the index of the event vertex
# in bag (introduce, always the last one) or in prev_bag (forget); neighbor_positions are the positions in
# prev_bag of the graph neighbours of the event vertex.
Node = namedtuple('Node', ['index', 'kind', 'vertex', 'bag', 'prev_bag', 'position', 'neighbor_positions', 'is_last'])

# Orientation of a grid sweep: coordinates are 0-based (row, col) of each vertex in the swept orientation
GridSweep = namedtuple('GridSweep', ['coordinates', 'rows', 'cols', 'transposed', 'widen'])


class DecompositionError(Exception):
    """Violated path decomposition property. kind is one of the KINDS below"""

    KINDS = ('uncovered-edge', 'non-contiguous-vertex', 'missing-vertex', 'unknown-vertex', 'not-nice', 'size-limit-exceeded')

    def __init__(self, kind: str, *items):
        super().__init__(kind + (" " + str(items[0] if len(items) == 1 else items) if items else ""))
        self.kind = kind
        self.items = items


class DecompositionFormatError(Exception):

    def __init__(self, line_number: int, message: str):
        super().__init__("line " + str(line_number) + ": " + message)
        self.line_number = line_number


class PathDecomposition(object):
    """Sequence of bags D_1..D_p"""

    def __init__(self, bags: typing.Iterable[typing.Iterable[int]]):
        self._bags = tuple(frozenset(b) for b in bags)

    @property
    def bags(self):
        return self._bags

    @property
    def max_bag_size(self):
        return max((len(b) for b in self._bags), default=0)

    @property
    def width(self):
        return self.max_bag_size - 1

    def __len__(self):
        return len(self._bags)

    def __iter__(self):
        return iter(self._bags)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self._bags == other._bags

        return NotImplemented

    def __hash__(self):
        return hash(self._bags)

    def __str__(self):
        return "PathDecomposition(bags=" + str(len(self._bags)) + ", width=" + str(self.width) + ")"


def validate(decomp: PathDecomposition, g: Graph):
    """
    Check the three path decomposition properties: every vertex is in some bag, the bags of each vertex
    are contiguous and every edge is inside some bag
    :param decomp: path decomposition
    :param g: graph
    :return width (max bag size - 1)
    """
    intervals = dict()
    for i, bag in enumerate(decomp.bags):
        for v in bag:
            if not isinstance(v, int) or v < 1 or v > g.n:
                raise DecompositionError('unknown-vertex', v)

            intervals.setdefault(v, list()).append(i)

    for v in g.vertices:
        if v not in intervals:
            raise DecompositionError('missing-vertex', v)

    for v in sorted(intervals):
        occurrences = intervals[v]
        if occurrences[-1] - occurrences[0] + 1 != len(occurrences):
            raise DecompositionError('non-contiguous-vertex', v)

    for u, v in g.edges:
        lo, hi = max(intervals[u][0], intervals[v][0]), min(intervals[u][-1], intervals[v][-1])
        if lo > hi:
            raise DecompositionError('uncovered-edge', u, v)

    return decomp.width


class NicePathDecomposition(object):
    """
    Nice path decomposition: a sequence of Introduce / Forget events. The bag after each event is kept in
    the order the vertices were introduced (BagVertexOrder), so the introduced vertex is always last and
    surviving vertices keep their relative order.
    """

    def __init__(self, events: typing.Iterable, grid: GridSweep = None):
        """
        :param events: sequence of Event (or (kind, vertex) pairs)
        :param grid: orientation metadata when the decomposition comes from a grid sweep
        """
        self._events = tuple(Event(*e) for e in events)
        self._grid = grid

        bags = list()
        bag = list()
        for kind, v in self._events:
            if kind == INTRODUCE:
                if v in bag:
                    raise DecompositionError('not-nice', "vertex " + str(v) + " introduced twice")

                bag = bag + [v]
            elif kind == FORGET:
                if v not in bag:
                    raise DecompositionError('not-nice', "vertex " + str(v) + " forgotten before being introduced")

                bag = [u for u in bag if u != v]
            else:
                raise DecompositionError('not-nice', "unknown event " + str(kind))

            bags.append(tuple(bag))

        self._bags = tuple(bags)

    @property
    def events(self):
        return self._events

    @property
    def bags(self):
        """BagVertexOrder: the ordered bag after every event"""
        return self._bags

    @property
    def grid(self):
        return self._grid

    @property
    def max_bag_size(self):
        return max((len(b) for b in self._bags), default=0)

    @property
    def width(self):
        return self.max_bag_size - 1

    def __len__(self):
        return len(self._events)

    def to_path_decomposition(self):
        return PathDecomposition(self._bags)

    def validate(self, g: Graph):
        """
        Check the nice decomposition invariants and that the underlying bag sequence is a path decomposition of g
        :param g: graph
        :return width
        """
        if not self._events or self._events[0].kind != INTRODUCE:
            raise DecompositionError('not-nice', "the first event must be an introduce event")

        if self._bags[-1]:
            raise DecompositionError('not-nice', "the last bag must be empty")

        introduced = [e.vertex for e in self._events if e.kind == INTRODUCE]
        if len(self._events) != 2 * g.n or sorted(introduced) != list(g.vertices):
            raise DecompositionError('not-nice', "every vertex must be introduced and forgotten exactly once")

        return validate(self.to_path_decomposition(), g)

    def nodes(self, g: Graph):
        """
        Plugin view of every node
        :param g: graph
        :return list of Node
        """
        result = list()
        prev_bag = tuple()
        last = len(self._events) - 1
        for i, ((kind, v), bag) in enumerate(zip(self._events, self._bags)):
            if kind == INTRODUCE:
                position = len(bag) - 1
                neighbors = tuple(j for j, u in enumerate(prev_bag) if g.adjacent(u, v))
            else:
                position = prev_bag.index(v)
                neighbors = tuple(j for j, u in enumerate(prev_bag) if j != position and g.adjacent(u, v))

            result.append(Node(i, kind, v, bag, prev_bag, position, neighbors, i == last))
            prev_bag = bag

        return result

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self._events == other._events

        return NotImplemented

    def __hash__(self):
        return hash(self._events)

    def __str__(self):
        return "NicePathDecomposition(events=" + str(len(self._events)) + ", width=" + str(self.width) + ")"


def nicify(decomp: PathDecomposition, g: Graph = None):
    """
    Turn a path decomposition into a nice one: introduce D_1, then between D_i and D_{i+1} forget D_i - D_{i+1}
    and introduce D_{i+1} - D_i, then forget D_p. Vertices inside one group are handled in increasing order.
    :param decomp: path decomposition
    :param g: if given, decomp is validated against g first
    :return NicePathDecomposition
    """
    if g is not None:
        validate(decomp, g)

    events = list()
    previous = frozenset()
    for bag in list(decomp.bags) + [frozenset()]:
        events += [Event(FORGET, v) for v in sorted(previous - bag)]
        events += [Event(INTRODUCE, v) for v in sorted(bag - previous)]
        previous = bag

    return NicePathDecomposition(events)


def parse_decomposition(text: str):
    """
    Parse a decomposition file: header 'pd <p>' followed by p lines 'bag <v1> <v2> ...'
    :param text: file contents
    :return PathDecomposition
    """
    lines = list()
    for line_number, line in enumerate(text.splitlines(), 1):
        pos = line.find('#')
        tokens = (line[:pos] if pos >= 0 else line).split()
        if tokens:
            lines.append((line_number, tokens))

    if not lines or lines[0][1][0] != 'pd' or len(lines[0][1]) != 2:
        raise DecompositionFormatError(lines[0][0] if lines else 1, "expected header 'pd <p>'")

    try:
        p = int(lines[0][1][1])
    except ValueError:
        raise DecompositionFormatError(lines[0][0], "non-integer bag count")

    bags = list()
    for line_number, tokens in lines[1:]:
        if tokens[0] != 'bag':
            raise DecompositionFormatError(line_number, "expected 'bag <v1> <v2> ...'")

        try:
            bag = [int(t) for t in tokens[1:]]
        except ValueError:
            raise DecompositionFormatError(line_number, "non-integer vertex")

        if len(set(bag)) != len(bag):
            raise DecompositionFormatError(line_number, "repeated vertex in bag")

        bags.append(bag)

    if len(bags) != p:
        raise DecompositionFormatError(lines[0][0], "header declares " + str(p) + " bags, found " + str(len(bags)))

    return PathDecomposition(bags)


def serialize_decomposition(decomp: PathDecomposition):
    result = ['pd ' + str(len(decomp))]
    result += [' '.join(['bag'] + [str(v) for v in sorted(bag)]) for bag in decomp.bags]

    return '\n'.join(result) + '\n'


def serialize_nice_decomposition(npd: NicePathDecomposition):
    result = ['npd ' + str(len(npd))]
    result += [e.kind + ' ' + str(e.vertex) for e in npd.events]

    return '\n'.join(result) + '\n'


def read_decomposition(path: str):
    with open(path, 'r') as f:
        return parse_decomposition(f.read())

import logging
import time
from collections import namedtuple
from multiprocessing import Pool, cpu_count

import numpy as np
import pandas as pd

from pwpy.decomposition.path_decomposition import NicePathDecomposition
from pwpy.dp.problem import ProblemDefinition
from pwpy.dp.states import DEFAULT_CAPACITY, EnumerationError, UnknownStateError, catalan_prune, generate_states
from pwpy.graph.graph import Graph

"""
Generic dynamic programming over a nice path decomposition. For every node the table of the previous node
is expanded with every action of the current node; a slot is written when it is still uninitialized or when
the new value is strictly better, so ties keep the first written origin.
"""

# nodes with fewer predecessor states than this are expanded in the main process even in parallel mode
PARALLEL_MIN_STATES = 256

DpResult = namedtuple('DpResult', ['problem', 'feasible', 'objective', 'value', 'final_state', 'final_position', 'stats', 'tables', 'nodes', 'elapsed'])


class PluginInconsistencyError(Exception):
    """A plugin produced a state outside of its declared state space"""
    pass


class ReconstructionUnavailableError(Exception):
    pass


def _state_index(problem: ProblemDefinition, nv: int, capacity: int, prune_catalan: bool):
    idx = generate_states(problem, nv, capacity=capacity)
    return catalan_prune(idx, problem, problem.npd) if prune_catalan else idx


def _expand(problem: ProblemDefinition, node, next_idx, entries):
    """
    Expand predecessor entries under every action of node
    :param entries: (predecessor position, predecessor state, value) in ascending position order
    :return dict position -> (value, predecessor position, action index)
    """
    actions = problem.set_of_actions(node)
    result = dict()
    for pred, state, value in entries:
        for a, action in enumerate(actions):
            new_state, new_value, ok = problem.expand_state(state, node, action, value)
            if not ok:
                continue

            new_state = problem.normalize(new_state)
            try:
                pos = next_idx.lookup(new_state)
            except UnknownStateError as e:
                raise PluginInconsistencyError(problem.name + " produced " + str(new_state) + " at node " + str(node.index) + ": " + str(e))

            if pos < 0:
                continue

            current = result.get(pos)
            if current is None or problem.better(new_value, current[0]):
                result[pos] = (new_value, pred, a)

    return result


def _merge(problem: ProblemDefinition, target: dict, candidates: dict):
    for pos, candidate in candidates.items():
        current = target.get(pos)
        if current is None or problem.better(candidate[0], current[0]):
            target[pos] = candidate


_worker = dict()


def _init_worker(problem: ProblemDefinition, nodes: list, capacity: int, prune_catalan: bool):
    _worker['problem'] = problem
    _worker['nodes'] = nodes
    _worker['capacity'] = capacity
    _worker['prune_catalan'] = prune_catalan


def _expand_chunk(task):
    i, chunk = task
    problem, node = _worker['problem'], _worker['nodes'][i]
    prev_idx = _state_index(problem, len(node.prev_bag), _worker['capacity'], _worker['prune_catalan'])
    next_idx = _state_index(problem, len(node.bag), _worker['capacity'], _worker['prune_catalan'])

    return _expand(problem, node, next_idx, [(pos, prev_idx.state(pos), value) for pos, value in chunk])


def run_dp(problem: ProblemDefinition, g: Graph, npd: NicePathDecomposition, retain_tables: bool = False, threads: int = 1,
           capacity: int = DEFAULT_CAPACITY, prune_catalan: bool = False, listeners=None):
    """
    Run the dynamic programming algorithm
    :param problem: problem plugin
    :param g: graph
    :param npd: nice path decomposition of g
    :param retain_tables: keep the tables of every node (needed for reconstruct_solution)
    :param threads: number of worker processes for the expansion of large tables
    :param capacity: maximum number of states of a bag
    :param prune_catalan: use Catalan-pruned state spaces (path labelings on grid sweeps only)
    :param listeners: pyevents listeners, notified with a 'dp_node' event after each node
    :return DpResult
    """
    now = time.time()

    npd.validate(g)
    problem.prepare(g, npd)
    nodes = npd.nodes(g)

    logging.getLogger(__name__).info("Running " + problem.name + " on " + str(g) + " over " + str(len(nodes)) + " nodes of width " + str(npd.width))

    if threads > cpu_count():
        logging.getLogger(__name__).warning("Requested " + str(threads) + " threads, but only " + str(cpu_count()) + " cpus are available")

    pool = Pool(threads, initializer=_init_worker, initargs=(problem, nodes, capacity, prune_catalan)) if threads > 1 else None

    tables = list() if retain_tables else None
    stats = list()
    table, idx = None, None

    try:
        for node in nodes:
            try:
                next_idx = _state_index(problem, len(node.bag), capacity, prune_catalan)
            except EnumerationError as e:
                raise PluginInconsistencyError(str(e))

            if table is None:
                candidates = dict()
                for state, value, a in problem.initial_table(node):
                    try:
                        pos = next_idx.lookup(state)
                    except UnknownStateError as e:
                        raise PluginInconsistencyError(problem.name + " produced initial state " + str(state) + ": " + str(e))

                    if pos >= 0:
                        _merge(problem, candidates, {pos: (value, -1, a)})
            elif pool is not None and len(table) >= PARALLEL_MIN_STATES:
                entries = sorted(table.items())
                chunks = [c.tolist() for c in np.array_split(np.arange(len(entries)), threads * 4) if c.size]

                candidates = dict()
                for result in pool.map(_expand_chunk, [(node.index, [entries[j] for j in c]) for c in chunks]):
                    _merge(problem, candidates, result)
            else:
                candidates = _expand(problem, node, next_idx, [(pos, idx.state(pos), value) for pos, value in sorted(table.items())])

            table = {pos: c[0] for pos, c in candidates.items()}
            idx = next_idx

            if tables is not None:
                tables.append((table, {pos: (c[1], c[2]) for pos, c in candidates.items()}))

            stats.append({'node': node.index, 'kind': node.kind, 'vertex': node.vertex, 'bag_size': len(node.bag), 'states': len(idx), 'entries': len(table)})

            logging.getLogger(__name__).debug("Node " + str(node.index) + " " + node.kind + " " + str(node.vertex) + ": " + str(len(table)) + " of " + str(len(idx)) + " states")

            if listeners is not None:
                listeners({'type': 'dp_node', 'data': {'problem': problem, 'node': node, 'index': idx, 'table': table}})
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    best = None
    for pos in sorted(table):
        state = idx.state(pos)
        if problem.is_valid_final(state):
            if best is None or problem.final_better(state, table[pos], idx.state(best), table[best]):
                best = pos

    stats = pd.DataFrame(stats, columns=['node', 'kind', 'vertex', 'bag_size', 'states', 'entries'])
    elapsed = time.time() - now

    if best is None:
        logging.getLogger(__name__).info(problem.name + ": infeasible (" + str(round(elapsed, 3)) + "s)")
        return DpResult(problem, False, None, None, None, None, stats, tables, nodes, elapsed)

    final_state = idx.state(best)
    objective = problem.objective(final_state, table[best])

    logging.getLogger(__name__).info(problem.name + ": objective " + str(objective) + " (" + str(round(elapsed, 3)) + "s)")

    return DpResult(problem, True, objective, table[best], final_state, best, stats, tables, nodes, elapsed)


def reconstruct_solution(problem: ProblemDefinition, result: DpResult):
    """
    Walk the origin links from the optimal final state back to the first node and replay the chosen actions
    :param problem: the problem the tables were computed with
    :param result: result of run_dp with retained tables
    :return certificate of the problem
    """
    if result.tables is None:
        raise ReconstructionUnavailableError("Tables were not retained")

    if not result.feasible:
        raise ReconstructionUnavailableError("Infeasible instances have no certificate")

    chosen = list()
    pos = result.final_position
    for i in range(len(result.nodes) - 1, -1, -1):
        pos, a = result.tables[i][1][pos]
        chosen.append(a)

    chosen.reverse()

    steps = list()
    state, value = problem.root_state(), problem.root_value()
    for node, a in zip(result.nodes, chosen):
        action = problem.set_of_actions(node)[a]
        new_state, value, ok = problem.expand_state(state, node, action, value)
        if not ok:
            raise PluginInconsistencyError("Replayed action " + str(action) + " at node " + str(node.index) + " is rejected")

        new_state = problem.normalize(new_state)
        steps.append((node, state, action, new_state))
        state = new_state

    return problem.certificate(steps)


def solve(problem: ProblemDefinition, g: Graph, npd: NicePathDecomposition, reconstruct: bool = False, **kwargs):
    """
    run_dp followed (on request) by reconstruct_solution
    :return (DpResult, certificate or None)
    """
    result = run_dp(problem, g, npd, retain_tables=reconstruct, **kwargs)
    certificate = reconstruct_solution(problem, result) if reconstruct and result.feasible else None

    return result, certificate

import argparse
import logging
import os
import sys
import time
from collections import namedtuple
from fractions import Fraction

from pyevents.events import SyncListeners

from pwpy.decomposition.builders import EXACT_LIMIT, exact_pathwidth_decomposition, grid_sweep_decomposition
from pwpy.decomposition.path_decomposition import DecompositionError, DecompositionFormatError, nicify, read_decomposition, serialize_nice_decomposition, validate
from pwpy.dp.engine import PluginInconsistencyError, ReconstructionUnavailableError, solve
from pwpy.dp.states import DEFAULT_CAPACITY, CapacityError, EnumerationError, NotApplicableError, UnknownStateError, generate_states
from pwpy.graph.graph import Graph, GraphError
from pwpy.graph.grid import PartialGrid, grid_to_graph, read_instance
from pwpy.oracle.brute_force import SizeLimitExceededError, oracle_solve
from pwpy.problems.rect_cover import PieceError, parse_pieces
from pwpy.problems.registry import ParameterError, create_problem, problem_names

"""
Command line front end: solve a problem on an instance, cross-check with the oracle, and inspect decompositions
and state spaces
"""

EXIT_FEASIBLE = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2

ERRORS = (GraphError, DecompositionError, DecompositionFormatError, CapacityError, UnknownStateError, EnumerationError, NotApplicableError,
          PluginInconsistencyError, ReconstructionUnavailableError, PieceError, ParameterError, SizeLimitExceededError, OSError)

RunConfig = namedtuple('RunConfig', ['command', 'problem', 'instance', 'decomp', 'params', 'reconstruct', 'prune_catalan', 'threads', 'capacity',
                                     'dump_tables', 'transpose', 'bag_sizes'])


def _env_int(name: str, default: int):
    return int(os.environ[name]) if name in os.environ else default


def format_objective(value):
    if value is True:
        return 'true'

    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value) + " (" + str(float(value)) + ")"

    return str(value)


def format_certificate(kind: str, certificate):
    """Checker-readable certificate lines"""
    if kind == 'coloring':
        return ['color ' + str(v) + ' ' + str(c) for v, c in sorted(certificate.items())]
    elif kind == 'edges':
        return ['edge ' + str(u) + ' ' + str(v) for u, v in certificate]
    elif kind == 'vertices':
        return ['select ' + str(v) for v in certificate]
    elif kind == 'path':
        return ['select ' + str(v) for v in certificate['vertices']] + ['edge ' + str(u) + ' ' + str(v) for u, v in certificate['edges']]
    elif kind == 'placements':
        return ['place ' + str(t + 1) + ' ' + str(r + 1) + ' ' + str(c + 1) for t, r, c in certificate]

    raise ValueError("Unknown certificate kind " + str(kind))


def _problem_params(config: RunConfig, instance):
    params = dict(config.params)
    if config.problem == 'rect-cover':
        if not isinstance(instance, PartialGrid):
            raise ParameterError("rect-cover needs a grid instance")

        params['grid'] = instance
        params['pieces'] = parse_pieces(params.get('pieces') or list())
    else:
        params.pop('pieces', None)

    return params


def _graph(instance):
    return grid_to_graph(instance) if isinstance(instance, PartialGrid) else instance


def _decomposition(config: RunConfig, instance, g: Graph):
    """Nice path decomposition chosen by the --decomp flag"""
    widen = config.problem == 'rect-cover'
    source = config.decomp

    if widen and source not in ('auto', 'grid-sweep'):
        raise ParameterError("rect-cover uses the widened grid sweep decomposition")

    if source == 'auto':
        if isinstance(instance, PartialGrid):
            source = 'grid-sweep'
        elif g.n <= EXACT_LIMIT:
            logging.getLogger(__name__).warning("No decomposition given, using the exact builder for " + str(g.n) + " vertices")
            source = 'exact-tiny'
        else:
            raise ParameterError("Graphs with more than " + str(EXACT_LIMIT) + " vertices need a decomposition file")

    if source == 'grid-sweep':
        if not isinstance(instance, PartialGrid):
            raise ParameterError("The grid sweep needs a grid instance")

        return grid_sweep_decomposition(instance, widen=widen, transpose=config.transpose)
    elif source in ('exact-tiny', 'exact'):
        return nicify(exact_pathwidth_decomposition(g), g)

    return nicify(read_decomposition(source), g)


def _dump_listener(problem, out):
    def listener(event):
        if event['type'] == 'dp_node':
            data = event['data']
            node, idx, table = data['node'], data['index'], data['table']
            print("node " + str(node.index) + " " + node.kind + " " + str(node.vertex) + " states " + str(len(idx)) + " entries " + str(len(table)), file=out)
            for pos in sorted(table):
                print("state " + problem.format_state(idx.state(pos)) + " value " + str(table[pos]), file=out)

    return listener


def _solve(config: RunConfig, out, err):
    instance = read_instance(config.instance)
    g = _graph(instance)
    problem = create_problem(config.problem, **_problem_params(config, instance))
    npd = _decomposition(config, instance, g)

    listeners = None
    if config.dump_tables:
        listeners = SyncListeners()
        listeners += _dump_listener(problem, out)

    result, certificate = solve(problem, g, npd, reconstruct=config.reconstruct, threads=config.threads, capacity=config.capacity,
                                prune_catalan=config.prune_catalan, listeners=listeners)

    if not result.feasible:
        print("infeasible", file=out)
    else:
        print("objective " + format_objective(result.objective), file=out)

        if certificate is not None:
            ok, score = problem.check(certificate)
            if not ok or score != result.objective:
                raise PluginInconsistencyError("The reconstructed certificate does not re-score to the objective")

            print("certificate", file=out)
            for line in format_certificate(problem.certificate_kind, certificate):
                print(line, file=out)

    print("nodes " + str(len(result.nodes)) + " width " + str(npd.width) + " max_states " + str(int(result.stats['states'].max())) +
          " max_entries " + str(int(result.stats['entries'].max())), file=out)
    print("time " + str(round(result.elapsed, 3)) + "s", file=err)

    return EXIT_FEASIBLE if result.feasible else EXIT_INFEASIBLE


def _oracle(config: RunConfig, out, err):
    instance = read_instance(config.instance)
    params = _problem_params(config, instance)
    problem = create_problem(config.problem, **params)

    now = time.time()
    result = oracle_solve(config.problem, instance if config.problem == 'rect-cover' else _graph(instance), **params)

    if not result.feasible:
        print("infeasible", file=out)
    else:
        print("objective " + format_objective(result.objective), file=out)
        if config.reconstruct:
            print("certificate", file=out)
            for line in format_certificate(problem.certificate_kind, result.certificate):
                print(line, file=out)

    print("time " + str(round(time.time() - now, 3)) + "s", file=err)

    return EXIT_FEASIBLE if result.feasible else EXIT_INFEASIBLE


def _validate_decomp(config: RunConfig, out, err):
    g = _graph(read_instance(config.instance))
    print("width " + str(validate(read_decomposition(config.decomp), g)), file=out)

    return EXIT_FEASIBLE


def _nicify(config: RunConfig, out, err):
    g = _graph(read_instance(config.instance)) if config.instance is not None else None
    print(serialize_nice_decomposition(nicify(read_decomposition(config.decomp), g)), end='', file=out)

    return EXIT_FEASIBLE


def _states(config: RunConfig, out, err):
    params = dict(config.params)
    if config.problem == 'rect-cover':
        pieces = parse_pieces(params.get('pieces') or list())
        width = max([c for _, c in pieces] + [1])
        params['grid'] = PartialGrid([[True] * width] * max([r for r, _ in pieces] + [1]))
        params['pieces'] = pieces
    else:
        params.pop('pieces', None)

    problem = create_problem(config.problem, **params)
    for nv in config.bag_sizes:
        print("bag_size " + str(nv) + " states " + str(len(generate_states(problem, nv, capacity=config.capacity))), file=out)

    return EXIT_FEASIBLE


COMMANDS = {'solve': _solve, 'oracle': _oracle, 'validate-decomp': _validate_decomp, 'nicify': _nicify, 'states': _states}


def run(config: RunConfig, out=None, err=None):
    """
    Execute one command
    :param config: run configuration
    :param out: report stream (standard output by default)
    :param err: diagnostics stream (standard error by default)
    :return exit status: 0 feasible, 2 infeasible, 1 error
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr

    try:
        return COMMANDS[config.command](config, out, err)
    except ERRORS as e:
        print("error: " + str(e), file=err)
        return EXIT_ERROR


def _parser():
    parser = argparse.ArgumentParser(prog='pwpy', description="Dynamic programming on nice path decompositions")
    parser.add_argument('--verbose', action='store_true', help="Debug logging")
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    def problem_arguments(p):
        p.add_argument('problem', choices=problem_names(), help="Problem name")
        p.add_argument('-C', type=int, default=None, help="Number of colors")
        p.add_argument('-k', type=int, default=None, help="Number of replicas")
        p.add_argument('-L', type=int, default=None, help="Minimum path length (vertices)")
        p.add_argument('-U', type=int, default=None, help="Maximum path length (vertices)")
        p.add_argument('--mode', type=str, default=None, help="sum|max for penalty-coloring, max|min for avg-path")
        p.add_argument('--pieces', type=str, nargs='+', default=None, help="Piece types as RxC")

    for name in ('solve', 'oracle'):
        p = commands.add_parser(name)
        problem_arguments(p)
        p.add_argument('--graph', type=str, required=True, help="Graph or grid instance file")
        p.add_argument('--reconstruct', action='store_true', help="Print a certificate")

        if name == 'solve':
            p.add_argument('--decomp', type=str, default='auto', help="Decomposition file, or auto | grid-sweep | exact-tiny")
            p.add_argument('--prune-catalan', action='store_true', help="Catalan pruning of path states (grid sweeps only)")
            p.add_argument('--threads', type=int, default=_env_int('PWPY_THREADS', 1), help="Worker processes")
            p.add_argument('--capacity', type=int, default=_env_int('PWPY_CAPACITY', DEFAULT_CAPACITY), help="Maximum number of states per bag")
            p.add_argument('--dump-tables', action='store_true', help="Print every table")
            p.add_argument('--transpose', choices=['auto', 'yes', 'no'], default='auto', help="Orientation of the grid sweep")

    p = commands.add_parser('validate-decomp')
    p.add_argument('--graph', type=str, required=True, help="Graph or grid instance file")
    p.add_argument('--decomp', type=str, required=True, help="Decomposition file")

    p = commands.add_parser('nicify')
    p.add_argument('--graph', type=str, default=None, help="Validate against this instance")
    p.add_argument('--decomp', type=str, required=True, help="Decomposition file")

    p = commands.add_parser('states')
    problem_arguments(p)
    p.add_argument('--bag-size', type=int, nargs='+', required=True, help="Bag sizes")
    p.add_argument('--capacity', type=int, default=_env_int('PWPY_CAPACITY', DEFAULT_CAPACITY), help="Maximum number of states per bag")

    return parser


def parse_config(argv=None):
    """
    :param argv: command line arguments (without the program name)
    :return (RunConfig, verbose flag)
    """
    args = _parser().parse_args(argv)

    params = {k: getattr(args, k, None) for k in ('C', 'k', 'L', 'U', 'mode', 'pieces')}
    transpose = {'auto': None, 'yes': True, 'no': False}[getattr(args, 'transpose', 'auto')]

    config = RunConfig(command=args.command,
                       problem=getattr(args, 'problem', None),
                       instance=getattr(args, 'graph', None),
                       decomp=getattr(args, 'decomp', None),
                       params={k: v for k, v in params.items() if v is not None},
                       reconstruct=getattr(args, 'reconstruct', False),
                       prune_catalan=getattr(args, 'prune_catalan', False),
                       threads=getattr(args, 'threads', 1),
                       capacity=getattr(args, 'capacity', DEFAULT_CAPACITY),
                       dump_tables=getattr(args, 'dump_tables', False),
                       transpose=transpose,
                       bag_sizes=getattr(args, 'bag_size', None))

    return config, args.verbose


def main(argv=None, out=None, err=None):
    config, verbose = parse_config(argv)
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO)

    return run(config, out=out, err=err)


if __name__ == "__main__":
    sys.exit(main())

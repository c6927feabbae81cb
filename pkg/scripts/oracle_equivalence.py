#!/bin/python3
"""
Script that cross-checks the dynamic programs against the exhaustive oracle on seeded random instances
"""

import argparse
import logging

from pwpy.decomposition.builders import exact_pathwidth_decomposition, grid_sweep_decomposition
from pwpy.decomposition.path_decomposition import nicify
from pwpy.dp.engine import solve
from pwpy.graph.grid import grid_to_graph
from pwpy.oracle.brute_force import oracle_solve
from pwpy.oracle.random_instances import random_graph, random_grid, random_pieces
from pwpy.problems.registry import create_problem, problem_names

if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)

    parser = argparse.ArgumentParser(description="DP against oracle on random instances")

    parser.add_argument('-problem', type=str, default=None, choices=problem_names(), help="Problem name (all problems if omitted)")
    parser.add_argument('-seeds', type=int, default=200, help="Number of random instances per problem")
    parser.add_argument('-n', type=int, default=7, help="Number of vertices of the random graphs")
    parser.add_argument('-p', type=float, default=0.35, help="Edge probability")
    parser.add_argument('-threads', type=int, default=1, help="Worker processes of the dynamic program")

    args = parser.parse_args()

    parameters = {'coloring': {'C': 3}, 'coloring-canonical': {'C': 3}, 'penalty-coloring': {'C': 2, 'mode': 'sum'}, 'k-replica': {'k': 2},
                  'avg-path': {'L': 2, 'U': 4, 'mode': 'max'}}

    mismatches = 0
    for name in [args.problem] if args.problem is not None else problem_names():
        for seed in range(args.seeds):
            if name == 'rect-cover':
                grid = random_grid(seed, 3, 3)
                params = {'pieces': random_pieces(seed, 2, 2, 2)}
                instance, g = grid, grid_to_graph(grid)
                npd = grid_sweep_decomposition(grid, widen=True)
                problem = create_problem(name, grid=grid, **params)
            else:
                params = parameters.get(name, dict())
                g = random_graph(seed, args.n, args.p, connected=name == 'max-leaf-tree', max_weight=5, max_edge_weight=3)
                instance = g
                npd = nicify(exact_pathwidth_decomposition(g), g)
                problem = create_problem(name, **params)

            result, _ = solve(problem, g, npd, threads=args.threads)
            expected = oracle_solve(name, instance, **params)

            if result.feasible != expected.feasible or (result.feasible and result.objective != expected.objective):
                mismatches += 1
                logging.getLogger(__name__).error(name + " seed " + str(seed) + ": dp " + str(result.objective) + ", oracle " + str(expected.objective))

        logging.getLogger(__name__).info(name + ": " + str(args.seeds) + " instances checked")

    logging.getLogger(__name__).info(str(mismatches) + " mismatches")

import importlib

"""
Names and parameter schemas of the problem plugins
"""


class ParameterError(Exception):
    """Missing, unknown or out of range plugin parameter"""
    pass


# name -> (module, class, {parameter: (type, required, default)})
PROBLEMS = {
    'coloring': ('pwpy.problems.coloring', 'ColoringProblem', {'C': (int, True, None)}),
    'coloring-canonical': ('pwpy.problems.coloring', 'CanonicalColoringProblem', {'C': (int, True, None)}),
    'penalty-coloring': ('pwpy.problems.coloring', 'PenaltyColoringProblem', {'C': (int, True, None), 'mode': (str, False, 'sum')}),
    'path-cover': ('pwpy.problems.path_cover', 'PathCoverProblem', {}),
    'cycle-cover': ('pwpy.problems.path_cover', 'CycleCoverProblem', {}),
    'k-replica': ('pwpy.problems.k_replica', 'ReplicaProblem', {'k': (int, True, None)}),
    'max-leaf-tree': ('pwpy.problems.spanning_tree', 'MaxLeafTreeProblem', {}),
    'min-maximal-matching': ('pwpy.problems.matching', 'MinMaximalMatchingProblem', {}),
    'avg-path': ('pwpy.problems.avg_path', 'AveragePathProblem', {'L': (int, True, None), 'U': (int, True, None), 'mode': (str, False, 'max')}),
    'rect-cover': ('pwpy.problems.rect_cover', 'RectCoverProblem', {'grid': (object, True, None), 'pieces': (list, True, None)}),
    'mwis': ('pwpy.problems.independent_set', 'IndependentSetProblem', {}),
}


def problem_names():
    return sorted(PROBLEMS)


def parameter_schema(name: str):
    if name not in PROBLEMS:
        raise ParameterError("Unknown problem '" + name + "'. Available: " + ", ".join(problem_names()))

    return PROBLEMS[name][2]


def create_problem(name: str, **params):
    """
    Instantiate a plugin by name
    :param name: plugin name
    :param params: plugin parameters. None values are treated as absent
    :return ProblemDefinition
    """
    schema = parameter_schema(name)
    params = {k: v for k, v in params.items() if v is not None}

    unknown = set(params) - set(schema)
    if unknown:
        raise ParameterError(name + " does not take " + ", ".join(sorted(unknown)))

    kwargs = dict()
    for p, (kind, required, default) in schema.items():
        if p in params:
            if kind is not object and not isinstance(params[p], kind):
                raise ParameterError(name + ": parameter " + p + " must be of type " + kind.__name__)

            kwargs[p] = params[p]
        elif required:
            raise ParameterError(name + " requires parameter " + p)
        else:
            kwargs[p] = default

    module, cls, _ = PROBLEMS[name]
    return getattr(importlib.import_module(module), cls)(**kwargs)

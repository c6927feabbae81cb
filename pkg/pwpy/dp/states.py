import logging
import time
import typing

import numba
import numpy as np

"""
State spaces of the dynamic programming tables: enumeration of the valid states of one bag size,
collision-free mixed-radix keys, position lookup and the Catalan pruning of path states on grid sweeps
"""

DEFAULT_CAPACITY = 50000000

# indexes with more states than this use binary search over the sorted keys instead of a dict
_DICT_LOOKUP_LIMIT = 1 << 20

# largest product of digit sizes which still fits a signed 64 bit key
_KEY_SPACE_LIMIT = 1 << 62

# upper bound of the memory an enumeration may allocate, the product enumeration holds two copies of the state array
MAX_ENUMERATION_BYTES = 1 << 30


class CapacityError(Exception):
    """The state space of a bag exceeds the configured limit"""

    def __init__(self, nv: int, count: int, capacity: int):
        super().__init__("State space for bag size " + str(nv) + " has " + str(count) + " states, capacity is " + str(capacity))
        self.nv = nv
        self.count = count
        self.capacity = capacity


class UnknownStateError(Exception):
    """The state is not in the enumeration (non-canonical, out of domain or pruned)"""
    pass


class EnumerationError(Exception):
    """An enumeration contains duplicate or out of domain states"""
    pass


class NotApplicableError(Exception):
    """Operation is not applicable to the given problem or decomposition"""
    pass


class StateIndex(object):
    """
    Enumerated states of one bag size, sorted by their mixed-radix key. Every digit d has a domain
    lo_d .. lo_d + size_d - 1 and the key is sum((s_d - lo_d) * stride_d), which is injective over the domain.
    """

    def __init__(self, states: np.ndarray, digits: typing.Sequence[typing.Tuple[int, int]], pruned: np.ndarray = None):
        """
        :param states: integer array of shape (count, len(digits))
        :param digits: (lo, size) of every state component
        :param pruned: states removed from the enumeration. Looking them up returns -1 instead of failing
        """
        self._digits = tuple((int(lo), int(size)) for lo, size in digits)

        space = 1
        strides = list()
        for _, size in reversed(self._digits):
            strides.append(space)
            space *= size

        if space >= _KEY_SPACE_LIMIT:
            raise CapacityError(len(self._digits), space, _KEY_SPACE_LIMIT)

        self._strides = tuple(reversed(strides))
        self._lo = np.array([lo for lo, _ in self._digits], dtype=np.int64)
        self._hi = np.array([lo + size for lo, size in self._digits], dtype=np.int64)

        states = np.asarray(states, dtype=np.int64)
        if states.ndim != 2 or states.shape[1] != len(self._digits):
            raise EnumerationError("Expected a state array of " + str(len(self._digits)) + " columns, got shape " + str(states.shape))

        keys = self._keys(states)

        order = np.argsort(keys, kind='stable')
        self._states = states[order]
        self._keys_array = keys[order]
        self._states.setflags(write=False)

        if self._keys_array.size > 1 and (self._keys_array[1:] == self._keys_array[:-1]).any():
            raise EnumerationError("Duplicate states in the enumeration of " + str(len(self._digits)) + " digits")

        self._pruned = np.sort(self._keys(np.asarray(pruned, dtype=np.int64))) if pruned is not None else np.empty(0, dtype=np.int64)

        self._rows = None
        self._positions = None

    def _keys(self, states: np.ndarray):
        if states.size and ((states < self._lo).any() or (states >= self._hi).any()):
            raise EnumerationError("State component out of its declared domain")

        return (states - self._lo) @ np.array(self._strides, dtype=np.int64) if len(self._digits) else np.zeros(states.shape[0], dtype=np.int64)

    @property
    def digits(self):
        return self._digits

    @property
    def states(self):
        return self._states

    @property
    def keys(self):
        return self._keys_array

    @property
    def pruned_count(self):
        return self._pruned.size

    def key(self, state: typing.Sequence[int]):
        if len(state) != len(self._digits):
            raise UnknownStateError("State " + str(tuple(state)) + " has " + str(len(state)) + " components, expected " + str(len(self._digits)))

        result = 0
        for s, (lo, size), stride in zip(state, self._digits, self._strides):
            if s < lo or s >= lo + size:
                raise UnknownStateError("State " + str(tuple(state)) + " is out of domain")

            result += (s - lo) * stride

        return result

    def lookup(self, state: typing.Sequence[int]):
        """
        :param state: state tuple
        :return position of the state, or -1 if the state was pruned
        """
        k = self.key(state)

        if self._positions is None and len(self) <= _DICT_LOOKUP_LIMIT:
            self._positions = dict(zip(self._keys_array.tolist(), range(len(self))))

        if self._positions is not None:
            pos = self._positions.get(k)
            if pos is not None:
                return pos
        else:
            pos = int(self._keys_array.searchsorted(k))
            if pos < self._keys_array.size and self._keys_array[pos] == k:
                return pos

        if self._pruned.size:
            pos = int(self._pruned.searchsorted(k))
            if pos < self._pruned.size and self._pruned[pos] == k:
                return -1

        raise UnknownStateError("State " + str(tuple(state)) + " is not a valid state")

    def state(self, pos: int):
        if self._rows is None:
            self._rows = [tuple(r) for r in self._states.tolist()]

        return self._rows[pos]

    def __len__(self):
        return self._states.shape[0]

    def __iter__(self):
        return (self.state(i) for i in range(len(self)))

    def __str__(self):
        return "StateIndex(states=" + str(len(self)) + ", digits=" + str(len(self._digits)) + ", pruned=" + str(self.pruned_count) + ")"


def get_state_index(state: typing.Sequence[int], idx: StateIndex):
    """
    Position of a canonical state in an index
    :param state: state tuple
    :param idx: state index
    :return 0-based position
    """
    pos = idx.lookup(state)
    if pos < 0:
        raise UnknownStateError("State " + str(tuple(state)) + " was pruned")

    return pos


_cache = dict()


def clear_cache():
    _cache.clear()


def enumeration_limit(width: int):
    """Largest number of states of the given width which fits MAX_ENUMERATION_BYTES"""
    return MAX_ENUMERATION_BYTES // (2 * 8 * max(width, 1))


def generate_states(problem, nv: int, capacity: int = DEFAULT_CAPACITY):
    """
    Enumerate (or fetch from the cache) the valid states of a bag of size nv. Indexes are shared by every
    problem with an equal state signature
    :param problem: ProblemDefinition
    :param nv: bag size
    :param capacity: maximum number of states
    :return StateIndex
    """
    cache_key = (problem.state_signature(), nv)
    if cache_key in _cache:
        result = _cache[cache_key]
        if len(result) > capacity:
            raise CapacityError(nv, len(result), capacity)

        return result

    estimate = problem.estimate_states(nv)
    capacity = min(capacity, enumeration_limit(len(problem.digits(nv))))
    if estimate > capacity:
        raise CapacityError(nv, estimate, capacity)

    now = time.time()

    states = np.asarray(problem.enumerate_states(nv), dtype=np.int64)
    if states.shape[0] > capacity:
        raise CapacityError(nv, states.shape[0], capacity)

    columns = problem.partition_columns(nv)
    if columns:
        labels = np.ascontiguousarray(states[:, columns])
        if labels.size and not np.array_equal(normalize_rows(labels), labels):
            raise EnumerationError("Non-canonical labels in the enumeration of " + problem.name + " for bag size " + str(nv))

    result = StateIndex(states, problem.digits(nv))
    _cache[cache_key] = result

    logging.getLogger(__name__).debug("Generated " + str(len(result)) + " " + problem.name + " states for bag size " + str(nv) + " in " + str(round(time.time() - now, 3)) + "s")

    return result


def catalan_prune(idx: StateIndex, problem, npd):
    """
    Remove the states in which the endpoint pairs (a, b) and (c, d) of two open paths cross, i.e. satisfy none of
    b < c, d < a, (a < c and d < b), (c < a and b < d). Only sound for row-major grid sweeps
    :param idx: state index of path labels
    :param problem: path cover or cycle cover problem
    :param npd: the decomposition the index is used with
    :return pruned StateIndex
    """
    if not getattr(problem, 'supports_catalan', False):
        raise NotApplicableError("Catalan pruning does not apply to " + problem.name)

    if npd.grid is None or npd.grid.widen:
        raise NotApplicableError("Catalan pruning needs a row-major grid sweep decomposition")

    nv = len(idx.digits)
    cache_key = (problem.state_signature(), nv, 'catalan')
    if cache_key in _cache:
        return _cache[cache_key]

    states = idx.states
    labels = np.ascontiguousarray(states[:, problem.partition_columns(nv)])
    mask = _noncrossing_mask(labels) if labels.size else np.ones(states.shape[0], dtype=np.bool_)

    result = StateIndex(states[mask], idx.digits, pruned=states[~mask])
    _cache[cache_key] = result

    logging.getLogger(__name__).debug("Catalan pruning for bag size " + str(nv) + ": " + str(len(idx)) + " -> " + str(len(result)) + " states")

    return result


@numba.jit(nopython=True)
def _noncrossing_mask(labels: np.array):
    count, nv = labels.shape
    result = np.ones(count, dtype=np.bool_)
    first = np.empty(nv + 1, dtype=np.int64)
    second = np.empty(nv + 1, dtype=np.int64)

    for i in range(count):
        first[:] = -1
        second[:] = -1
        for j in range(nv):
            s = labels[i, j]
            if s > 0:
                if first[s] < 0:
                    first[s] = j
                else:
                    second[s] = j

        for s in range(1, nv + 1):
            if second[s] < 0:
                continue

            a, b = first[s], second[s]
            for t in range(s + 1, nv + 1):
                if second[t] < 0:
                    continue

                c, d = first[t], second[t]
                if not (b < c or d < a or (a < c and d < b) or (c < a and b < d)):
                    result[i] = False

    return result


def normalize_partition(labels: typing.Sequence[int], frozen: typing.Collection[int] = ()):
    """
    Relabel a label sequence by first occurrence, starting from 1. Labels in frozen are left unchanged
    :param labels: label sequence
    :param frozen: exempt values
    :return canonical tuple
    """
    mapping = dict()
    result = list()
    for s in labels:
        if s in frozen:
            result.append(s)
        else:
            if s not in mapping:
                mapping[s] = len(mapping) + 1

            result.append(mapping[s])

    return tuple(result)


def normalize_rows(rows: np.ndarray, frozen_below: int = 1):
    """
    Row-wise normalize_partition over an integer array. Values smaller than frozen_below are left unchanged
    :param rows: array of shape (count, length)
    :param frozen_below: smallest relabeled value
    :return normalized copy
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    result = rows.copy()
    if rows.size:
        __normalize_rows_jit(rows, result, frozen_below, int(rows.max()) + 1)

    return result


@numba.jit(nopython=True)
def __normalize_rows_jit(rows: np.array, result: np.array, frozen_below: int, top: int):
    mapping = np.zeros(max(top - frozen_below, 0) + 1, dtype=np.int64)
    for i in range(rows.shape[0]):
        mapping[:] = 0
        counter = 0
        for j in range(rows.shape[1]):
            s = rows[i, j]
            if s >= frozen_below:
                if mapping[s - frozen_below] == 0:
                    counter += 1
                    mapping[s - frozen_below] = counter

                result[i, j] = mapping[s - frozen_below]


def product_states(digits: typing.Sequence[typing.Tuple[int, int]]):
    """All combinations of the digit domains, in lexicographic order"""
    if not digits:
        return np.zeros((1, 0), dtype=np.int64)

    grids = np.meshgrid(*[np.arange(lo, lo + size, dtype=np.int64) for lo, size in digits], indexing='ij')
    return np.stack(grids, axis=-1).reshape(-1, len(digits))


def append_digit(states: np.ndarray, lo: int, size: int):
    """Cartesian product of an enumeration with one more digit lo..lo+size-1 appended"""
    states = np.asarray(states, dtype=np.int64)
    extra = np.arange(lo, lo + size, dtype=np.int64)
    return np.column_stack([np.repeat(states, size, axis=0), np.tile(extra, states.shape[0])])


def restricted_growth_strings(nv: int, max_blocks: int):
    """
    Canonical labelings of the partitions of nv elements into at most max_blocks parts
    :return array of shape (count, nv)
    """
    result = list()

    def grow(prefix, blocks):
        if len(prefix) == nv:
            result.append(list(prefix))
            return

        for c in range(1, min(blocks + 1, max_blocks) + 1):
            prefix.append(c)
            grow(prefix, max(blocks, c))
            prefix.pop()

    grow(list(), 0)

    return np.array(result, dtype=np.int64).reshape(len(result), nv)


def partition_count(nv: int, max_blocks: int):
    """Number of partitions of nv elements into at most max_blocks parts"""
    # stirling[k] = partitions of the first i elements into exactly k parts
    stirling = [1] + [0] * max_blocks
    for _ in range(nv):
        stirling = [0] + [k * stirling[k] + stirling[k - 1] for k in range(1, max_blocks + 1)]

    return sum(stirling)


def path_labelings(nv: int, paired: bool = False):
    """
    Canonical path fragment labelings: every component is -1, 0 or a positive id, each id appears at most
    twice (exactly twice if paired) and ids are numbered by first occurrence
    :return array of shape (count, nv)
    """
    result = list()
    counts = [0] * (nv + 2)

    def grow(prefix, ids):
        remaining = nv - len(prefix)
        if paired and sum(1 for i in range(1, ids + 1) if counts[i] == 1) > remaining:
            return

        if remaining == 0:
            result.append(list(prefix))
            return

        for s in [-1, 0] + list(range(1, ids + 2)):
            if s > 0 and counts[s] >= 2:
                continue

            prefix.append(s)
            if s > 0:
                counts[s] += 1

            grow(prefix, max(ids, s))

            if s > 0:
                counts[s] -= 1

            prefix.pop()

    grow(list(), 0)

    return np.array(result, dtype=np.int64).reshape(len(result), nv)


def path_labeling_count(nv: int, paired: bool = False):
    """Number of labelings produced by path_labelings(nv, paired)"""
    # open[k] = prefixes with k ids seen exactly once
    open_ids = [1] + [0] * nv
    for _ in range(nv):
        counts = [0] * (nv + 1)
        for k, c in enumerate(open_ids):
            if c:
                counts[k] += 2 * c
                if k < nv:
                    counts[k + 1] += c
                if k > 0:
                    counts[k - 1] += k * c

        open_ids = counts

    return open_ids[0] if paired else sum(open_ids)

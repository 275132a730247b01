"""Finite-trace satisfaction and bounded semantic equivalence."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from mltl.syntax import (
    And,
    FalseLit,
    Formula,
    Future,
    Global,
    Not,
    Or,
    Prop,
    Release,
    TrueLit,
    Until,
    alphabet,
    as_trace,
    intervals_welldef,
)
from mltl.errors import BudgetExceeded, IllFormedInterval


@dataclass(frozen=True)
class EquivBudget:
    """Limits on exhaustive trace enumeration.

    ``max_traces`` caps the total number of traces (all lengths together) the
    table evaluator may materialise; it is the pre-flight cost estimate that
    lets large budgets fail fast instead of hanging.
    """

    max_alphabet: int = 4
    max_length: int = 12
    max_traces: int = 1 << 22

    def __post_init__(self):
        if self.max_alphabet < 1 or self.max_length < 1:
            raise ValueError("EquivBudget limits must be >= 1")


DEFAULT_BUDGET = EquivBudget()


def suffix(t: Sequence, i: int) -> tuple:
    """Drop the first ``i`` states."""
    return as_trace(t)[i:]


def prefix(t: Sequence, k: int) -> tuple:
    """The first ``k`` states."""
    return as_trace(t)[:k]


def evaluate(t: Sequence, f: Formula) -> bool:
    """Decide ``t |= f``.

    Raises ``IllFormedInterval`` if some temporal operator has ``lo > hi``.
    """
    if not intervals_welldef(f):
        raise IllFormedInterval(f)
    trace = as_trace(t)
    n = len(trace)
    memo: dict[tuple[int, int], bool] = {}

    # i is the start of the suffix under consideration, clamped to n (empty)
    def sat(g: Formula, i: int) -> bool:
        if i > n:
            i = n
        key = (id(g), i)
        hit = memo.get(key)
        if hit is not None:
            return hit
        length = n - i
        if isinstance(g, TrueLit):
            r = True
        elif isinstance(g, FalseLit):
            r = False
        elif isinstance(g, Prop):
            r = length > 0 and g.name in trace[i]
        elif isinstance(g, Not):
            r = not sat(g.child, i)
        elif isinstance(g, And):
            r = sat(g.left, i) and sat(g.right, i)
        elif isinstance(g, Or):
            r = sat(g.left, i) or sat(g.right, i)
        else:
            a, b = g.iv.lo, g.iv.hi
            if isinstance(g, Future):
                r = length > a and any(sat(g.child, i + k) for k in range(a, b + 1))
            elif isinstance(g, Global):
                r = length <= a or all(sat(g.child, i + k) for k in range(a, b + 1))
            elif isinstance(g, Until):
                r = length > a and any(
                    sat(g.right, i + k) and all(sat(g.left, i + j) for j in range(a, k))
                    for k in range(a, b + 1)
                )
            elif isinstance(g, Release):
                r = (
                    length <= a
                    or all(sat(g.right, i + k) for k in range(a, b + 1))
                    or any(
                        sat(g.left, i + j) and all(sat(g.right, i + k) for k in range(a, j + 1))
                        for j in range(a, b + 1)
                    )
                )
            else:
                raise TypeError(f"not an MLTL formula: {g!r}")
        memo[key] = r
        return r

    return sat(f, 0)


def _check_enum_budget(n_props: int, length: int, budget: EquivBudget) -> None:
    if n_props > budget.max_alphabet:
        raise BudgetExceeded(f"alphabet of size {n_props} exceeds max_alphabet={budget.max_alphabet}")
    if length > budget.max_length:
        raise BudgetExceeded(f"trace length {length} exceeds max_length={budget.max_length}")


def _states(props: Sequence[str]) -> list[frozenset[str]]:
    # bit j of the index <-> props[j]
    return [
        frozenset(p for j, p in enumerate(props) if mask >> j & 1) for mask in range(1 << len(props))
    ]


def enumerate_traces(
    props: Iterable[str], length: int, budget: EquivBudget = DEFAULT_BUDGET
) -> Iterator[tuple]:
    """Yield every trace of exactly ``length`` states over ``props``.

    States are ordered by subset bitmask over the sorted alphabet; traces are
    lexicographic with position 0 varying slowest.
    """
    props = sorted(set(props))
    _check_enum_budget(len(props), length, budget)
    states = _states(props)
    return iter(itertools.product(states, repeat=length))


def enumeration_cost(n_props: int, max_len: int) -> int:
    """Number of traces of lengths ``0..max_len`` over ``n_props`` propositions."""
    width = 1 << n_props
    return sum(width**k for k in range(max_len + 1))


class _TraceTable:
    """Truth tables of formulas over every trace up to a fixed length.

    A trace of length ``l`` over ``n`` propositions is the integer
    ``sum(s_i << (n * i))``; its suffix from ``i`` is then ``code >> (n * i)``,
    so each temporal operator reduces to shifted gathers over shorter tables.
    """

    def __init__(self, props: Sequence[str], max_len: int):
        self.props = list(props)
        self.n = len(self.props)
        self.max_len = max_len
        self.codes = [np.arange(1 << (self.n * k), dtype=np.int64) for k in range(max_len + 1)]
        self._cache: dict[Formula, list[np.ndarray]] = {}

    def _shifted(self, tables: list[np.ndarray], length: int, i: int) -> np.ndarray:
        """Values of a subformula on ``suffix(t, i)`` for every trace t of ``length``."""
        if i >= length:
            return np.broadcast_to(tables[0][0], self.codes[length].shape)
        return tables[length - i][self.codes[length] >> (self.n * i)]

    def table(self, f: Formula) -> list[np.ndarray]:
        hit = self._cache.get(f)
        if hit is not None:
            return hit
        out: list[np.ndarray] = []
        for length in range(self.max_len + 1):
            size = self.codes[length].shape[0]
            if isinstance(f, TrueLit):
                v = np.ones(size, dtype=bool)
            elif isinstance(f, FalseLit):
                v = np.zeros(size, dtype=bool)
            elif isinstance(f, Prop):
                if length == 0 or f.name not in self.props:
                    v = np.zeros(size, dtype=bool)
                else:
                    bit = self.props.index(f.name)
                    v = (self.codes[length] >> bit & 1).astype(bool)
            elif isinstance(f, Not):
                v = ~self.table(f.child)[length]
            elif isinstance(f, And):
                v = self.table(f.left)[length] & self.table(f.right)[length]
            elif isinstance(f, Or):
                v = self.table(f.left)[length] | self.table(f.right)[length]
            else:
                v = self._temporal(f, length, size)
            out.append(v)
        self._cache[f] = out
        return out

    def _temporal(self, f: Formula, length: int, size: int) -> np.ndarray:
        a, b = f.iv.lo, f.iv.hi
        short = length <= a
        if isinstance(f, Future):
            if short:
                return np.zeros(size, dtype=bool)
            g = self.table(f.child)
            v = np.zeros(size, dtype=bool)
            for k in range(a, b + 1):
                v |= self._shifted(g, length, k)
            return v
        if isinstance(f, Global):
            if short:
                return np.ones(size, dtype=bool)
            g = self.table(f.child)
            v = np.ones(size, dtype=bool)
            for k in range(a, b + 1):
                v &= self._shifted(g, length, k)
            return v
        lt, rt = self.table(f.left), self.table(f.right)
        if isinstance(f, Until):
            if short:
                return np.zeros(size, dtype=bool)
            v = np.zeros(size, dtype=bool)
            left_so_far = np.ones(size, dtype=bool)  # forall j in [a, k-1]: left
            for k in range(a, b + 1):
                v |= left_so_far & self._shifted(rt, length, k)
                left_so_far &= self._shifted(lt, length, k)
            return v
        if isinstance(f, Release):
            if short:
                return np.ones(size, dtype=bool)
            v = np.zeros(size, dtype=bool)
            right_so_far = np.ones(size, dtype=bool)  # forall k in [a, j]: right
            for j in range(a, b + 1):
                right_so_far &= self._shifted(rt, length, j)
                v |= self._shifted(lt, length, j) & right_so_far
            return v | right_so_far
        raise TypeError(f"not an MLTL formula: {f!r}")

    def decode(self, length: int, code: int) -> tuple:
        return tuple(
            frozenset(p for j, p in enumerate(self.props) if (code >> (self.n * i + j)) & 1)
            for i in range(length)
        )


def equiv_horizon(f: Formula, g: Formula) -> int:
    """Longest trace length the equivalence check must look at."""
    from mltl.transforms import complen

    return max(complen(f), complen(g))


def find_counterexample(
    f: Formula,
    g: Formula,
    budget: EquivBudget = DEFAULT_BUDGET,
    props: Iterable[str] | None = None,
) -> tuple | None:
    """Shortest trace on which ``f`` and ``g`` disagree, or None if equivalent.

    Traces of every length ``0..max(complen(f), complen(g))`` over
    ``alphabet(f) | alphabet(g)`` are covered; longer traces cannot separate
    the two formulas. ``props`` widens the enumeration alphabet.
    """
    for h in (f, g):
        if not intervals_welldef(h):
            raise IllFormedInterval(h)
    names = set(alphabet(f) | alphabet(g))
    if props is not None:
        names |= set(props)
    names = sorted(names)
    horizon = equiv_horizon(f, g)
    _check_enum_budget(len(names), horizon, budget)
    cost = enumeration_cost(len(names), horizon)
    if cost > budget.max_traces:
        raise BudgetExceeded(
            f"{cost} traces (alphabet {len(names)}, length {horizon}) exceeds max_traces={budget.max_traces}"
        )
    table = _TraceTable(names, horizon)
    tf, tg = table.table(f), table.table(g)
    for length in range(horizon + 1):
        diff = np.flatnonzero(tf[length] != tg[length])
        if diff.size:
            return table.decode(length, int(diff[0]))
    return None


def semantic_equiv(
    f: Formula,
    g: Formula,
    budget: EquivBudget = DEFAULT_BUDGET,
    props: Iterable[str] | None = None,
) -> bool:
    """True iff ``f`` and ``g`` are satisfied by exactly the same traces."""
    return find_counterexample(f, g, budget, props) is None

"""Hypothesis strategies and a brute-force equivalence oracle for the test suite."""

import itertools

import hypothesis.strategies as st

from mltl.syntax import (
    And,
    FalseLit,
    Future,
    Global,
    Interval,
    Not,
    Or,
    Prop,
    Release,
    TrueLit,
    Until,
    alphabet,
)
from mltl.semantics import evaluate
from mltl.transforms import complen

PROPS = ("p", "q")


def intervals(max_bound=3, welldef=True):
    ordered = st.integers(0, max_bound).flatmap(lambda lo: st.integers(lo, max_bound).map(lambda hi: Interval(lo, hi)))
    if welldef:
        return ordered
    return st.builds(Interval, st.integers(0, max_bound), st.integers(0, max_bound))


def formulas(max_bound=3, props=PROPS, max_leaves=6, welldef=True):
    atoms = st.one_of(st.just(TrueLit()), st.just(FalseLit()), st.sampled_from(props).map(Prop))
    ivs = intervals(max_bound, welldef)

    def extend(sub):
        return st.one_of(
            sub.map(Not),
            st.builds(And, sub, sub),
            st.builds(Or, sub, sub),
            st.builds(Future, sub, ivs),
            st.builds(Global, sub, ivs),
            st.builds(Until, sub, sub, ivs),
            st.builds(Release, sub, sub, ivs),
        )

    return st.recursive(atoms, extend, max_leaves=max_leaves)


def states(props=PROPS):
    return st.frozensets(st.sampled_from(props))


def traces(props=PROPS, max_len=6, min_len=0):
    return st.lists(states(props), min_size=min_len, max_size=max_len).map(tuple)


def all_traces(props, length):
    """Every trace of the given length, built without the library's enumerator."""
    subsets = [frozenset(c) for r in range(len(props) + 1) for c in itertools.combinations(sorted(props), r)]
    return itertools.product(subsets, repeat=length)


def brute_equiv(f, g, extra_props=()):
    """Direct double enumeration of ``evaluate`` over lengths 0..max complen."""
    props = sorted(alphabet(f) | alphabet(g) | set(extra_props))
    for length in range(max(complen(f), complen(g)) + 1):
        for t in all_traces(props, length):
            if evaluate(t, f) != evaluate(t, g):
                return False
    return True


ACCEPTANCE_LINES = []


def report(number, title, ok, detail=""):
    """Record one acceptance line for the terminal summary, then assert it."""
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    assert ok, line

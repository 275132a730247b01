"""Formula progression: rewrite a formula against consumed trace states."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from mltl.errors import DichotomyViolation, IllFormedInterval, PreconditionViolated
from mltl.semantics import DEFAULT_BUDGET, EquivBudget, prefix, semantic_equiv, suffix
from mltl.syntax import (
    FALSE,
    TRUE,
    And,
    FalseLit,
    Formula,
    Future,
    Global,
    Interval,
    Not,
    Or,
    Prop,
    Release,
    TrueLit,
    Until,
    as_trace,
    intervals_welldef,
)
from mltl.transforms import complen


def progress_step(f: Formula, s: Iterable[str]) -> Formula:
    """Progress ``f`` through a single state ``s``."""
    if not intervals_welldef(f):
        raise IllFormedInterval(f)
    return _step(f, s if isinstance(s, frozenset) else frozenset(s))


def _step(f: Formula, s: frozenset) -> Formula:
    match f:
        case TrueLit() | FalseLit():
            return f
        case Prop(name):
            return TRUE if name in s else FALSE
        case Not(child):
            return Not(_step(child, s))
        case And(left, right):
            return And(_step(left, s), _step(right, s))
        case Or(left, right):
            return Or(_step(left, s), _step(right, s))
        case Until(left, right, Interval(a, b)):
            if a > 0:
                return Until(left, right, Interval(a - 1, b - 1))
            if b > 0:
                return Or(_step(right, s), And(_step(left, s), Until(left, right, Interval(0, b - 1))))
            return _step(right, s)
        case Future(child, Interval(a, b)):
            if a > 0:
                return Future(child, Interval(a - 1, b - 1))
            if b > 0:
                return Or(_step(child, s), Future(child, Interval(0, b - 1)))
            return _step(child, s)
        case Release(left, right, iv):
            return Not(_step(Until(Not(left), Not(right), iv), s))
        case Global(child, iv):
            return Not(_step(Future(Not(child), iv), s))
    raise TypeError(f"not an MLTL formula: {f!r}")


def progress_steps(f: Formula, t: Sequence) -> Iterator[Formula]:
    """Yield the residual after each consumed state of ``t``."""
    if not intervals_welldef(f):
        raise IllFormedInterval(f)
    for state in as_trace(t):
        f = _step(f, state)
        yield f


def progress(f: Formula, t: Sequence) -> Formula:
    """Progress ``f`` through the whole trace; the empty trace leaves ``f`` unchanged."""
    if not intervals_welldef(f):
        raise IllFormedInterval(f)
    for state in as_trace(t):
        f = _step(f, state)
    return f


class VerdictKind(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    RESIDUAL = "RESIDUAL"


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`classify`; ``residual`` is always the raw progressed formula."""

    kind: VerdictKind
    residual: Formula

    @property
    def resolved(self) -> bool:
        return self.kind is not VerdictKind.RESIDUAL


def classify(f: Formula, t: Sequence, budget: EquivBudget = DEFAULT_BUDGET) -> Verdict:
    """Progress ``f`` over ``t`` and decide whether the residual is a constant.

    Once ``len(t) >= complen(f)`` the residual must be equivalent to exactly one
    constant; anything else raises ``DichotomyViolation``.
    """
    t = as_trace(t)
    r = progress(f, t)
    is_true = semantic_equiv(r, TRUE, budget)
    is_false = semantic_equiv(r, FALSE, budget)
    if len(t) >= complen(f) and is_true == is_false:
        raise DichotomyViolation(
            f"residual {r} of {f} on a trace of length {len(t)} >= complen "
            f"is equivalent to {'both constants' if is_true else 'neither constant'}"
        )
    if is_true:
        return Verdict(VerdictKind.TRUE, r)
    if is_false:
        return Verdict(VerdictKind.FALSE, r)
    return Verdict(VerdictKind.RESIDUAL, r)


def check_decomposition(f: Formula, t: Sequence, k: int) -> bool:
    """Does progressing over ``t`` equal progressing over its prefix, then its suffix?"""
    t = as_trace(t)
    if not 1 <= k <= len(t):
        raise PreconditionViolated(f"k={k} must satisfy 1 <= k <= {len(t)}")
    return progress(f, t) == progress(progress(f, prefix(t, k)), suffix(t, k))

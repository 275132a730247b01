"""Negation normal form and computation length."""

from __future__ import annotations

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
    intervals_welldef,
    iter_nodes,
)
from mltl.errors import IllFormedInterval


def convert_nnf(f: Formula) -> Formula:
    """Push every negation down onto a proposition using the operator dualities.

    No other simplification is performed.
    """
    if not intervals_welldef(f):
        raise IllFormedInterval(f)
    return _nnf(f)


def _nnf(f: Formula) -> Formula:
    match f:
        case TrueLit() | FalseLit() | Prop():
            return f
        case Not(child=g):
            return _negate(g)
        case And(left, right):
            return And(_nnf(left), _nnf(right))
        case Or(left, right):
            return Or(_nnf(left), _nnf(right))
        case Future(child, iv):
            return Future(_nnf(child), iv)
        case Global(child, iv):
            return Global(_nnf(child), iv)
        case Until(left, right, iv):
            return Until(_nnf(left), _nnf(right), iv)
        case Release(left, right, iv):
            return Release(_nnf(left), _nnf(right), iv)
    raise TypeError(f"not an MLTL formula: {f!r}")


def _negate(g: Formula) -> Formula:
    """NNF of ``Not(g)``."""
    match g:
        case TrueLit():
            return FalseLit()
        case FalseLit():
            return TrueLit()
        case Prop():
            return Not(g)
        case Not(child=h):
            return _nnf(h)
        case And(left, right):
            return Or(_negate(left), _negate(right))
        case Or(left, right):
            return And(_negate(left), _negate(right))
        case Future(child, iv):
            return Global(_negate(child), iv)
        case Global(child, iv):
            return Future(_negate(child), iv)
        case Until(left, right, iv):
            return Release(_negate(left), _negate(right), iv)
        case Release(left, right, iv):
            return Until(_negate(left), _negate(right), iv)
    raise TypeError(f"not an MLTL formula: {g!r}")


def is_nnf(f: Formula) -> bool:
    """True iff every ``Not`` sits directly above a ``Prop``."""
    return all(isinstance(n.child, Prop) for n in iter_nodes(f) if isinstance(n, Not))


def complen(f: Formula) -> int:
    """Computation length: trace length after which extra states cannot change satisfaction."""
    match f:
        case TrueLit() | FalseLit() | Prop():
            return 1
        case Not(child):
            return complen(child)
        case And(left, right) | Or(left, right):
            return max(complen(left), complen(right))
        case Future(child, iv) | Global(child, iv):
            return iv.hi + complen(child)
        case Until(left, right, iv) | Release(left, right, iv):
            return iv.hi + max(complen(left) - 1, complen(right))
    raise TypeError(f"not an MLTL formula: {f!r}")

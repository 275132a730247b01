"""MLTL abstract syntax: formulas, intervals, states and traces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

State = frozenset
Trace = tuple


@dataclass(frozen=True)
class Interval:
    """Closed integer time bound ``[lo, hi]``.

    ``lo > hi`` is representable on purpose; see :func:`intervals_welldef`.
    """

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0 or self.hi < 0:
            raise ValueError(f"interval bounds must be natural numbers, got [{self.lo},{self.hi}]")

    @property
    def welldef(self) -> bool:
        return self.lo <= self.hi


class Formula:
    """Base class of every MLTL formula node."""

    __slots__ = ()

    def __str__(self) -> str:
        from mltl.parser import print_formula

        return print_formula(self)


@dataclass(frozen=True, repr=False)
class TrueLit(Formula):
    def __repr__(self):
        return "TrueLit()"


@dataclass(frozen=True, repr=False)
class FalseLit(Formula):
    def __repr__(self):
        return "FalseLit()"


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Future(Formula):
    child: Formula
    iv: Interval


@dataclass(frozen=True)
class Global(Formula):
    child: Formula
    iv: Interval


@dataclass(frozen=True)
class Until(Formula):
    left: Formula
    right: Formula
    iv: Interval


@dataclass(frozen=True)
class Release(Formula):
    left: Formula
    right: Formula
    iv: Interval


Atom = Union[TrueLit, FalseLit, Prop]
ATOMS = (TrueLit, FalseLit, Prop)
UNARY_TEMPORAL = (Future, Global)
BINARY_TEMPORAL = (Until, Release)
TEMPORAL = (Future, Global, Until, Release)
CONSTRUCTORS = (TrueLit, FalseLit, Prop, Not, And, Or, Future, Global, Until, Release)


def children(f: Formula) -> tuple[Formula, ...]:
    """Immediate subformulas, left to right."""
    if isinstance(f, ATOMS):
        return ()
    if isinstance(f, (Not, Future, Global)):
        return (f.child,)
    return (f.left, f.right)


def iter_nodes(f: Formula) -> Iterator[Formula]:
    """Pre-order walk over every node (with repetition)."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def node_count(f: Formula) -> int:
    return sum(1 for _ in iter_nodes(f))


def is_atom(f: Formula) -> bool:
    return isinstance(f, ATOMS)


def intervals_welldef(f: Formula) -> bool:
    """True iff every temporal operator in ``f`` has ``lo <= hi``."""
    return all(n.iv.welldef for n in iter_nodes(f) if isinstance(n, TEMPORAL))


def depth(f: Formula) -> int:
    """Atoms have depth 0; any other node is one more than its deepest child."""
    if isinstance(f, ATOMS):
        return 0
    return 1 + max(depth(c) for c in children(f))


def subformulas(f: Formula) -> frozenset[Formula]:
    """The set holding ``f`` and, recursively, every subformula of its children."""
    return frozenset(iter_nodes(f))


def alphabet(f: Formula) -> frozenset[str]:
    """Names of all propositions occurring in ``f``."""
    return frozenset(n.name for n in iter_nodes(f) if isinstance(n, Prop))


def make_state(props: Iterable[str] = ()) -> frozenset[str]:
    return frozenset(props)


def make_trace(states: Iterable[Iterable[str]] = ()) -> tuple[frozenset[str], ...]:
    """Normalise any iterable of iterables of names into a hashable trace."""
    return tuple(frozenset(s) for s in states)


def as_trace(t: Sequence) -> tuple[frozenset[str], ...]:
    if isinstance(t, tuple) and all(isinstance(s, frozenset) for s in t):
        return t
    return make_trace(t)


TRUE = TrueLit()
FALSE = FalseLit()

"""Random well-formed formulas and traces, and doubly-validated benchmark records.

Every case is generated from its own Philox stream keyed by ``(seed, index)``,
so output is identical however the work is split across workers.
"""

from __future__ import annotations

import json
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterator, Sequence

import numpy as np

from mltl.errors import BudgetExceeded, CrossCheckFailed, DichotomyViolation
from mltl.parser import print_formula, trace_to_json
from mltl.progression import VerdictKind, classify
from mltl.semantics import EquivBudget, evaluate
from mltl.syntax import (
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
)
from mltl.transforms import complen

log = logging.getLogger(__name__)

_ATOM_KINDS = ("true", "false", "prop")
_KINDS = ("true", "false", "prop", "not", "and", "or", "future", "global", "until", "release")


@dataclass(frozen=True)
class TraceLenPolicy:
    """How long a generated trace is relative to its formula's ``complen``.

    ``kind`` is one of ``"at"``, ``"above"`` (``extra`` states past complen) or
    ``"below"`` (uniformly shorter than complen).
    """

    kind: str = "at"
    extra: int = 0

    def __post_init__(self):
        if self.kind not in ("at", "above", "below"):
            raise ValueError(f"unknown trace length policy {self.kind!r}")
        if self.extra < 0:
            raise ValueError("extra must be >= 0")

    @classmethod
    def parse(cls, text: str) -> "TraceLenPolicy":
        """Accepts ``at-complen``, ``above-complen:N`` and ``below-complen``."""
        m = re.fullmatch(r"(at|above|below)(?:-complen)?(?::(\d+))?", text.strip().lower())
        if m is None:
            raise ValueError(f"bad policy {text!r}; use at-complen, above-complen:N or below-complen")
        kind, extra = m.group(1), m.group(2)
        if kind == "above":
            return cls("above", int(extra) if extra is not None else 1)
        if extra is not None:
            raise ValueError(f"policy {kind!r} takes no count")
        return cls(kind)

    def __str__(self):
        return f"above-complen:{self.extra}" if self.kind == "above" else f"{self.kind}-complen"


AT_COMPLEN = TraceLenPolicy("at")
BELOW_COMPLEN = TraceLenPolicy("below")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_depth: int = 3
    max_bound: int = 3
    num_props: int = 2
    num_cases: int = 100
    trace_len_policy: TraceLenPolicy = field(default_factory=TraceLenPolicy)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.num_props < 1:
            raise ValueError("num_props must be >= 1")
        if self.num_cases < 1:
            raise ValueError("num_cases must be >= 1")
        if self.max_bound < 0 or self.max_depth < 0:
            raise ValueError("max_bound and max_depth must be >= 0")

    @property
    def props(self) -> list[str]:
        return [f"p{i}" for i in range(self.num_props)]


def case_rng(seed: int, index: int) -> np.random.Generator:
    """Independent counter-based stream for case ``index`` of a run seeded with ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def random_formula(
    rng: np.random.Generator, max_depth: int, max_bound: int, props: Sequence[str]
) -> Formula:
    """Draw a formula with ``lo <= hi <= max_bound`` on every interval and depth <= max_depth."""
    kinds = _ATOM_KINDS if max_depth == 0 else _KINDS
    kind = kinds[rng.integers(len(kinds))]
    if kind == "true":
        return TrueLit()
    if kind == "false":
        return FalseLit()
    if kind == "prop":
        return Prop(props[rng.integers(len(props))])

    def sub() -> Formula:
        return random_formula(rng, max_depth - 1, max_bound, props)

    if kind == "not":
        return Not(sub())
    if kind in ("and", "or"):
        left, right = sub(), sub()
        return And(left, right) if kind == "and" else Or(left, right)
    lo = int(rng.integers(max_bound + 1))
    iv = Interval(lo, int(rng.integers(lo, max_bound + 1)))
    if kind == "future":
        return Future(sub(), iv)
    if kind == "global":
        return Global(sub(), iv)
    left, right = sub(), sub()
    return Until(left, right, iv) if kind == "until" else Release(left, right, iv)


def random_trace(rng: np.random.Generator, props: Sequence[str], length: int) -> tuple:
    bits = rng.integers(2, size=(length, len(props)))
    return tuple(frozenset(p for p, on in zip(props, row) if on) for row in bits)


def gen_formula(cfg: GenConfig, rng: np.random.Generator) -> Formula:
    return random_formula(rng, cfg.max_depth, cfg.max_bound, cfg.props)


@dataclass(frozen=True)
class BenchmarkRecord:
    formula: Formula
    trace: tuple
    label: bool
    complen: int
    trace_len: int
    seed_path: str
    crosschecked: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "formula": print_formula(self.formula),
                "trace": trace_to_json(self.trace),
                "label": self.label,
                "complen": self.complen,
                "trace_len": self.trace_len,
                "seed_path": self.seed_path,
                "crosschecked": self.crosschecked,
            }
        )


def _trace_length(policy: TraceLenPolicy, cl: int, rng: np.random.Generator) -> int:
    if policy.kind == "at":
        return cl
    if policy.kind == "above":
        return cl + policy.extra
    return int(rng.integers(cl))


def crosscheck(f: Formula, t: tuple, label: bool, num_props: int) -> None:
    """Confirm a direct-semantics label against the progression verdict.

    Only meaningful when ``len(t) >= complen(f)``. Raises ``CrossCheckFailed``.
    """
    budget = EquivBudget(max_alphabet=max(1, num_props), max_length=max(1, complen(f)))
    try:
        verdict = classify(f, t, budget)
    except (DichotomyViolation, BudgetExceeded) as exc:
        raise CrossCheckFailed(f"progression check failed for {f} on {trace_to_json(t)}: {exc}") from exc
    if verdict.kind is not (VerdictKind.TRUE if label else VerdictKind.FALSE):
        raise CrossCheckFailed(
            f"label {label} for {f} on {trace_to_json(t)} disagrees with progression "
            f"verdict {verdict.kind.value} (residual {verdict.residual})"
        )


def gen_labeled_case(cfg: GenConfig, index: int) -> BenchmarkRecord:
    """Generate, label and validate case ``index`` of the run described by ``cfg``."""
    rng = case_rng(cfg.seed, index)
    f = gen_formula(cfg, rng)
    cl = complen(f)
    t = random_trace(rng, cfg.props, _trace_length(cfg.trace_len_policy, cl, rng))
    label = evaluate(t, f)
    checked = len(t) >= cl
    if checked:
        crosscheck(f, t, label, cfg.num_props)
    return BenchmarkRecord(f, t, label, cl, len(t), f"seed={cfg.seed}/case={index}", checked)


def _case_line(args: tuple[GenConfig, int]) -> str:
    return gen_labeled_case(*args).to_json()


def generate(cfg: GenConfig, jobs: int = 1) -> Iterator[str]:
    """JSON lines for every case, in index order regardless of ``jobs``."""
    work = ((cfg, i) for i in range(cfg.num_cases))
    if jobs <= 1:
        yield from map(_case_line, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_case_line, work, chunksize=max(1, cfg.num_cases // (4 * jobs)))


def write_benchmarks(cfg: GenConfig, out: IO[str], jobs: int = 1) -> int:
    count = 0
    for line in generate(cfg, jobs):
        out.write(line + "\n")
        count += 1
    log.info("wrote %d records (seed=%d)", count, cfg.seed)
    return count

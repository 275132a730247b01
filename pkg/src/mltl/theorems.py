"""Randomised checks of the progression correctness properties.

Each suite draws its own cases from ``case_rng(seed, index)`` so runs are
reproducible and suites are independent of one another.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from mltl.benchgen import case_rng, random_formula, random_trace
from mltl.progression import progress, progress_step
from mltl.semantics import EquivBudget, evaluate, prefix, semantic_equiv, suffix
from mltl.syntax import FALSE, TRUE, Global, Interval, Prop, make_trace
from mltl.transforms import complen

PROPS = ("p0", "p1", "p2")
BUDGET = EquivBudget(max_alphabet=3, max_length=12)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, outcome: bool | None, describe: Callable[[], str]) -> None:
        if outcome is None:
            self.vacuous += 1
        elif outcome:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(describe())

    def __str__(self):
        line = f"{self.name}: {self.passed} passed, {self.failed} failed"
        if self.vacuous:
            line += f", {self.vacuous} vacuous"
        return line


def _formula(rng: np.random.Generator, depth: int = 4, bound: int = 4):
    return random_formula(rng, depth, bound, PROPS)


def check_decomposition_case(rng):
    from mltl.progression import check_decomposition

    f = _formula(rng)
    t = random_trace(rng, PROPS, int(rng.integers(1, 9)))
    k = int(rng.integers(1, len(t) + 1))
    return check_decomposition(f, t, k), lambda: f"f={f} t={t} k={k}"


def check_progression_semantics_case(rng):
    f = _formula(rng)
    t = random_trace(rng, PROPS, int(rng.integers(2, 9)))
    k = int(rng.integers(1, len(t)))
    ok = evaluate(t, f) == evaluate(suffix(t, k), progress(f, prefix(t, k)))
    return ok, lambda: f"f={f} t={t} k={k}"


def check_progression_verdict_case(rng, extra: int):
    """Residual equivalent to True iff satisfied, to False iff not, never both."""
    f = _formula(rng, depth=3, bound=3)
    t = random_trace(rng, PROPS, complen(f) + extra)
    r = progress(f, t)
    sat = evaluate(t, f)
    is_true = semantic_equiv(r, TRUE, BUDGET)
    is_false = semantic_equiv(r, FALSE, BUDGET)
    ok = sat == is_true and (not sat) == is_false and is_true != is_false
    return ok, lambda: f"f={f} t={t} residual={r}"


def check_extension_case(rng):
    f = _formula(rng)
    t = random_trace(rng, PROPS, complen(f) + int(rng.integers(0, 3)))
    z = random_trace(rng, PROPS, int(rng.integers(0, 5)))
    return evaluate(t, f) == evaluate(t + z, f), lambda: f"f={f} t={t} z={z}"


def _low_complen_formula(rng):
    bound = int(rng.integers(0, 3))
    return random_formula(rng, int(rng.integers(0, 4)), bound, PROPS)


def check_complen_one_case(rng):
    f = _low_complen_formula(rng)
    if complen(f) != 1:
        return None, lambda: ""
    s = random_trace(rng, PROPS, 1)[0]
    g = progress_step(f, s)
    return complen(g) == 1, lambda: f"f={f} s={set(s)} step={g}"


def check_complen_decrease_case(rng):
    f = _formula(rng)
    t = random_trace(rng, PROPS, int(rng.integers(1, 9)))
    cf, cr = complen(f), complen(progress(f, t))
    ok = cf == 1 or cr == 1 or cr <= cf - len(t)
    return ok, lambda: f"f={f} t={t} complen {cf} -> {cr}"


def check_complen_bounded_case(rng):
    f = _low_complen_formula(rng)
    if complen(f) > 1:
        return None, lambda: ""
    s = random_trace(rng, PROPS, 1)[0]
    g = progress_step(f, s)
    ok = semantic_equiv(g, TRUE, BUDGET) or semantic_equiv(g, FALSE, BUDGET)
    return ok, lambda: f"f={f} s={set(s)} step={g}"


CHECKS: dict[str, Callable] = {
    "decomposition": check_decomposition_case,
    "progression_semantics": check_progression_semantics_case,
    "verdict_at_complen": lambda rng: check_progression_verdict_case(rng, 0),
    "verdict_above_complen": lambda rng: check_progression_verdict_case(rng, 2),
    "extension_invariance": check_extension_case,
    "complen_one_preserved": check_complen_one_case,
    "complen_decreases": check_complen_decrease_case,
    "complen_one_resolves": check_complen_bounded_case,
}


def run_suite(name: str, cases: int, seed: int) -> SuiteResult:
    check = CHECKS[name]
    result = SuiteResult(name)
    # mix the suite name into the stream key so suites draw different cases
    salt = sum(ord(c) << (i % 24) for i, c in enumerate(name))
    for index in range(cases):
        outcome, describe = check(case_rng(seed ^ salt, index))
        result.record(outcome, describe)
    return result


def known_counterexamples() -> Iterator[tuple[str, bool]]:
    """The fixed witnesses that show why the length hypotheses are needed."""
    p = Prop("p")
    for b in (1, 2, 3):
        f = Global(p, Interval(0, b))
        t = make_trace([{"p"}])
        yield (
            f"length-1 boundary, G[0,{b}] p",
            evaluate(t, f) is False and evaluate((), progress(f, t)) is True,
        )
    f = Global(FALSE, Interval(1, 3))
    short = make_trace([{"2"}])
    longer = make_trace([{"2"}, {"3"}, {"4"}, {"2", "3"}])
    yield (
        "extension below complen, G[1,3] false",
        complen(f) == 4 and evaluate(short, f) is True and evaluate(longer, f) is False,
    )


def run_all(cases: int, seed: int) -> list[SuiteResult]:
    results = [run_suite(name, cases, seed) for name in CHECKS]
    fixed = SuiteResult("counterexamples")
    for label, ok in known_counterexamples():
        fixed.record(ok, lambda label=label: label)
    results.append(fixed)
    return results

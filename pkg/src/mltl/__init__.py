"""Mission-time Linear Temporal Logic: semantics, progression and benchmarks."""

from mltl.errors import (
    BudgetExceeded,
    CrossCheckFailed,
    DichotomyViolation,
    IllFormedInterval,
    MLTLError,
    ParseError,
    PreconditionViolated,
)
from mltl.parser import SourceSpan, parse_formula, parse_trace, print_formula, print_trace
from mltl.progression import (
    Verdict,
    VerdictKind,
    check_decomposition,
    classify,
    progress,
    progress_step,
    progress_steps,
)
from mltl.semantics import (
    EquivBudget,
    enumerate_traces,
    evaluate,
    find_counterexample,
    prefix,
    semantic_equiv,
    suffix,
)
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
    alphabet,
    depth,
    intervals_welldef,
    make_trace,
    subformulas,
)
from mltl.transforms import complen, convert_nnf, is_nnf

__all__ = [
    "BudgetExceeded",
    "CrossCheckFailed",
    "DichotomyViolation",
    "IllFormedInterval",
    "MLTLError",
    "ParseError",
    "PreconditionViolated",
    "SourceSpan",
    "parse_formula",
    "parse_trace",
    "print_formula",
    "print_trace",
    "Verdict",
    "VerdictKind",
    "check_decomposition",
    "classify",
    "progress",
    "progress_step",
    "progress_steps",
    "EquivBudget",
    "enumerate_traces",
    "evaluate",
    "find_counterexample",
    "prefix",
    "semantic_equiv",
    "suffix",
    "FALSE",
    "TRUE",
    "And",
    "FalseLit",
    "Formula",
    "Future",
    "Global",
    "Interval",
    "Not",
    "Or",
    "Prop",
    "Release",
    "TrueLit",
    "Until",
    "alphabet",
    "depth",
    "intervals_welldef",
    "make_trace",
    "subformulas",
    "complen",
    "convert_nnf",
    "is_nnf",
]

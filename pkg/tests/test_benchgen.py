import collections
import io
import json

import pytest

from mltl.benchgen import (
    AT_COMPLEN,
    BELOW_COMPLEN,
    GenConfig,
    TraceLenPolicy,
    case_rng,
    crosscheck,
    gen_formula,
    gen_labeled_case,
    generate,
    random_trace,
    write_benchmarks,
)
from mltl.errors import CrossCheckFailed
from mltl.parser import parse_formula
from mltl.semantics import evaluate
from mltl.syntax import (
    CONSTRUCTORS,
    Future,
    Interval,
    Prop,
    alphabet,
    depth,
    intervals_welldef,
    is_atom,
    iter_nodes,
    make_trace,
)
from mltl.transforms import complen


def test_depth_zero_gives_atom():
    cfg = GenConfig(max_depth=0)
    for i in range(50):
        assert is_atom(gen_formula(cfg, case_rng(3, i)))


def test_deterministic():
    cfg = GenConfig(seed=42, max_depth=4)
    assert gen_formula(cfg, case_rng(42, 0)) == gen_formula(cfg, case_rng(42, 0))
    assert gen_labeled_case(cfg, 17) == gen_labeled_case(cfg, 17)


def test_generated_formulas_respect_config():
    cfg = GenConfig(max_depth=3, max_bound=2, num_props=3)
    for i in range(300):
        f = gen_formula(cfg, case_rng(5, i))
        assert intervals_welldef(f)
        assert depth(f) <= 3
        assert alphabet(f) <= {"p0", "p1", "p2"}
        for node in iter_nodes(f):
            if hasattr(node, "iv"):
                assert node.iv.hi <= 2


def test_constructor_histogram_covers_grammar():
    cfg = GenConfig(max_depth=3, num_cases=200)
    seen = collections.Counter()
    for i in range(cfg.num_cases):
        seen.update(type(n) for n in iter_nodes(gen_formula(cfg, case_rng(0, i))))
    assert set(seen) == set(CONSTRUCTORS)


def test_policies():
    for i in range(30):
        rec = gen_labeled_case(GenConfig(seed=1, trace_len_policy=AT_COMPLEN), i)
        assert rec.trace_len == rec.complen and rec.crosschecked
        rec = gen_labeled_case(GenConfig(seed=1, trace_len_policy=TraceLenPolicy("above", 3)), i)
        assert rec.trace_len == rec.complen + 3 and rec.crosschecked
        rec = gen_labeled_case(GenConfig(seed=1, trace_len_policy=BELOW_COMPLEN), i)
        assert rec.trace_len < rec.complen and not rec.crosschecked


def test_labels_match_semantics():
    cfg = GenConfig(seed=9, max_depth=4, num_props=3)
    for i in range(200):
        rec = gen_labeled_case(cfg, i)
        assert rec.label == evaluate(rec.trace, rec.formula)


def test_label_example():
    f = Future(Prop("p0"), Interval(0, 2))
    t = make_trace([set(), set(), {"p0"}])
    assert complen(f) == 3 and evaluate(t, f)
    crosscheck(f, t, True, 1)


def test_crosscheck_rejects_wrong_label():
    f = Future(Prop("p0"), Interval(0, 2))
    with pytest.raises(CrossCheckFailed):
        crosscheck(f, make_trace([set(), set(), {"p0"}]), False, 1)


def test_json_record_shape():
    line = gen_labeled_case(GenConfig(seed=2, max_depth=2), 0).to_json()
    obj = json.loads(line)
    assert list(obj) == ["formula", "trace", "label", "complen", "trace_len", "seed_path", "crosschecked"]
    assert obj["seed_path"] == "seed=2/case=0"
    assert len(obj["trace"]) == obj["trace_len"]
    f = parse_formula(obj["formula"])
    assert evaluate(make_trace(obj["trace"]), f) == obj["label"]


def test_output_independent_of_workers():
    cfg = GenConfig(seed=123, num_cases=60, max_depth=3)
    assert list(generate(cfg, jobs=1)) == list(generate(cfg, jobs=2))


def test_write_benchmarks():
    buf = io.StringIO()
    assert write_benchmarks(GenConfig(num_cases=5), buf) == 5
    assert buf.getvalue().count("\n") == 5 and buf.getvalue().endswith("\n")


def test_random_trace_shape():
    t = random_trace(case_rng(0, 0), ["a", "b"], 5)
    assert len(t) == 5 and all(s <= {"a", "b"} for s in t)


@pytest.mark.parametrize(
    "text, policy",
    [
        ("at-complen", TraceLenPolicy("at")),
        ("above-complen:2", TraceLenPolicy("above", 2)),
        ("above", TraceLenPolicy("above", 1)),
        ("below-complen", TraceLenPolicy("below")),
    ],
)
def test_policy_parse(text, policy):
    assert TraceLenPolicy.parse(text) == policy
    assert TraceLenPolicy.parse(str(policy)) == policy


@pytest.mark.parametrize("text", ["sideways", "at:3", "above-complen:x"])
def test_policy_parse_rejects(text):
    with pytest.raises(ValueError):
        TraceLenPolicy.parse(text)


@pytest.mark.parametrize(
    "kwargs", [{"num_props": 0}, {"num_cases": 0}, {"seed": -1}, {"seed": 2**64}, {"max_bound": -1}]
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        GenConfig(**kwargs)

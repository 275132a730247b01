import pytest
from hypothesis import given

from helpers import formulas, traces
from mltl.errors import ParseError
from mltl.parser import SourceSpan, parse_formula, parse_trace, print_formula, print_trace
from mltl.syntax import (
    FALSE,
    TRUE,
    And,
    Future,
    Global,
    Interval,
    Not,
    Or,
    Prop,
    Release,
    Until,
    make_trace,
)

p, q, r = Prop("p"), Prop("q"), Prop("r")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("G[0,2] p", Global(p, Interval(0, 2))),
        ("p U[1,3] q & r", And(Until(p, q, Interval(1, 3)), r)),
        ("p | q & r", Or(p, And(q, r))),
        ("p & q & r", And(And(p, q), r)),
        ("p | q | r", Or(Or(p, q), r)),
        ("p U[0,1] q R[2,3] r", Until(p, Release(q, r, Interval(2, 3)), Interval(0, 1))),
        ("!p U[0,1] q", Until(Not(p), q, Interval(0, 1))),
        ("F[0,1] p U[2,2] q", Until(Future(p, Interval(0, 1)), q, Interval(2, 2))),
        ("!!p", Not(Not(p))),
        ("G [ 1 , 4 ]  ( p|q )", Global(Or(p, q), Interval(1, 4))),
        ("true & !false", And(TRUE, Not(FALSE))),
        ("F[5,3] true", Future(TRUE, Interval(5, 3))),
        ("Fx & G_1", And(Prop("Fx"), Prop("G_1"))),
        ("G[0,2]p", Global(p, Interval(0, 2))),
    ],
)
def test_parse(text, expected):
    assert parse_formula(text) == expected


def test_precedence_example_round_trips():
    f = parse_formula("p U[1,3] q & r")
    assert print_formula(f) == "((p U[1,3] q) & r)"
    assert parse_formula(print_formula(f)) == f


@pytest.mark.parametrize(
    "text, span",
    [
        ("!(", SourceSpan(2, 2)),
        ("p q", SourceSpan(2, 3)),
        ("G[0 p", SourceSpan(4, 5)),
        ("p U q", SourceSpan(4, 5)),
        ("", SourceSpan(0, 0)),
        ("p & ", SourceSpan(4, 4)),
        ("U", SourceSpan(0, 1)),
        ("p $ q", SourceSpan(2, 3)),
        ("é p", SourceSpan(0, 2)),
        ("(p", SourceSpan(2, 2)),
    ],
)
def test_parse_errors(text, span):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert info.value.span == span
    assert "expected" in info.value.message or "unexpected" in info.value.message


@pytest.mark.parametrize(
    "f, text",
    [
        (Global(p, Interval(0, 2)), "(G[0,2] p)"),
        (Not(TRUE), "(! true)"),
        (Until(p, q, Interval(0, 0)), "(p U[0,0] q)"),
        (Release(p, FALSE, Interval(1, 2)), "(p R[1,2] false)"),
        (Or(p, And(q, r)), "(p | (q & r))"),
    ],
)
def test_print(f, text):
    assert print_formula(f) == text
    assert str(f) == text


@given(formulas(welldef=False, max_leaves=12))
def test_round_trip(f):
    assert parse_formula(print_formula(f)) == f


class TestTraces:
    def test_fig2(self):
        assert parse_trace("a\na,b\nb\na") == make_trace([{"a"}, {"a", "b"}, {"b"}, {"a"}])

    def test_fig4(self):
        assert parse_trace("p\np\n-") == make_trace([{"p"}, {"p"}, set()])

    def test_empty(self):
        assert parse_trace("") == ()

    def test_line_endings_and_blanks(self):
        assert parse_trace("a\r\n\r\n b , a,a \n") == make_trace([{"a"}, set(), {"a", "b"}])
        assert parse_trace("\n") == make_trace([set()])
        assert parse_trace("-\n-\n") == make_trace([set(), set()])

    def test_numeric_names(self):
        assert parse_trace("2\n3\n4\n2,3") == make_trace([{"2"}, {"3"}, {"4"}, {"2", "3"}])

    @pytest.mark.parametrize("text", ["a,,b", "a b", "p-q", "a\n-x", ","])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_trace(text)

    def test_error_span_points_at_name(self):
        with pytest.raises(ParseError) as info:
            parse_trace("a\nb, c-d\n")
        assert info.value.span == SourceSpan(5, 8)

    def test_print(self):
        assert print_trace(make_trace([{"b", "a"}, set()])) == "a,b\n-\n"
        assert print_trace(()) == ""

    @given(traces(props=("p", "q", "x_1")))
    def test_round_trip(self, t):
        assert parse_trace(print_trace(t)) == t

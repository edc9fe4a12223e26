import pytest
from hypothesis import given

from rec8.errors import (
    DanglingCompound,
    RecSyntaxError,
    ReservedLetter,
    TableError,
    UnbalancedParens,
    UnknownToken,
)
from rec8.syntax import (
    COLON,
    DEFAULT_TABLE,
    LAMBDA,
    PERIOD,
    SEMICOLON,
    Group,
    RecExpr,
    Symbol,
    SymbolTable,
    parse,
    parse_ctss,
    pretty_print,
)

from .strategies import FIXTURES, TEST_TABLE, rec_exprs, depth


def G(*items):
    return Group(tuple(items))


R, W, Q = Symbol("R"), Symbol("W"), Symbol("Q")


def test_double_space_parse_gives_quote_a_blank_parameter():
    expr = parse('(R=!;W" W:)')
    assert expr == RecExpr((G(R, Symbol("=", "!"), SEMICOLON, W, Symbol('"', " "), W, COLON),))


def test_empty_group():
    assert parse("()") == RecExpr((G(),))


@pytest.mark.parametrize("text", ["(", ")", "(()", "())", "(R=!;"])
def test_unbalanced(text):
    with pytest.raises(UnbalancedParens):
        parse(text)


@pytest.mark.parametrize("text", ["(R=", '"', "(A)="])
def test_dangling_compound(text):
    with pytest.raises(DanglingCompound):
        parse(text)


def test_backslash_must_introduce_lambda():
    assert parse(r"(\l)") == parse("(λ)") == RecExpr((G(LAMBDA),))
    with pytest.raises(ReservedLetter):
        parse(r"(\x)")


def test_period_aliases_and_whitespace():
    assert parse("( . A ; B ; )") == parse("(∘A;B;)") == RecExpr(
        (G(PERIOD, Symbol("A"), SEMICOLON, Symbol("B"), SEMICOLON),))


def test_compound_parameter_can_be_a_sign():
    assert parse("(=(=:=))") == RecExpr((G(Symbol("=", "("), Symbol("=", ":"), Symbol("=", ")")),))


def test_table_rejects_reserved_letters():
    for bad in "():;.∘λ\\":
        with pytest.raises(ReservedLetter):
            SymbolTable(operators=frozenset(bad))
    with pytest.raises(ReservedLetter):
        SymbolTable(predicates=frozenset(" "))


def test_table_sets_are_disjoint():
    with pytest.raises(TableError):
        SymbolTable(operators=frozenset("RQ"))


def test_default_table_classes():
    t = DEFAULT_TABLE
    assert t.operators == {"R", "W"} and t.predicates == {"Q"}
    assert t.compound_predicates == {"="} and t.compound_operators == {'"'}
    assert t.kind("Z") == "operator"


def test_table_file_round_trip():
    loaded = SymbolTable.load(FIXTURES / "default.table")
    assert loaded == DEFAULT_TABLE
    assert SymbolTable.from_text(DEFAULT_TABLE.to_text()) == DEFAULT_TABLE
    assert SymbolTable.from_text(TEST_TABLE.to_text()) == TEST_TABLE


def test_table_file_errors():
    with pytest.raises(TableError):
        SymbolTable.from_text("verbs: R\n")
    with pytest.raises(TableError):
        SymbolTable.from_text("operators: RW\n")


def test_unlisted_letters_are_operators_in_every_position():
    expr = parse("(Zz9)")
    assert all(DEFAULT_TABLE.kind(s.name) == "operator" for s in expr.symbols())
    for s in parse('(RWQ=x"yZ)').symbols():
        kinds = [s.name in getattr(DEFAULT_TABLE, k) for k in
                 ("operators", "predicates", "compound_operators", "compound_predicates")]
        assert sum(kinds) <= 1


def test_pretty_print_examples():
    assert pretty_print(RecExpr((G(R, Symbol("=", "!"), SEMICOLON),))) == "(R=!;)"
    assert pretty_print(RecExpr((G(),))) == "()"
    e = RecExpr((G(PERIOD, Symbol("A"), SEMICOLON, Symbol("B"), SEMICOLON),))
    assert pretty_print(e) == "(.A;B;)"
    assert parse(pretty_print(e)) == e
    assert pretty_print(e, unicode=True) == "(∘A;B;)"
    assert pretty_print(RecExpr((LAMBDA,))) == r"\l"


@given(rec_exprs())
def test_round_trip(expr):
    assert depth(expr) <= 6  # the expression level plus five group levels
    assert parse(pretty_print(expr), TEST_TABLE) == expr
    assert parse(pretty_print(expr, unicode=True), TEST_TABLE) == expr


def test_ctss_worked_example():
    expr = parse_ctss("(r (eq =) co (eq :) sc w r q w r q w r q w)")
    body = [R, Symbol("=", "="), COLON, Symbol("=", ":"), SEMICOLON] + [W, R, Q] * 3 + [W]
    assert expr == RecExpr((G(*body),))
    assert expr == parse("(R== : =: ; WRQWRQWRQW)")


def test_ctss_accepts_loose_spacing_and_case():
    assert parse_ctss("(R (EQ =) CO (eq :)SC W)") == parse("(R==:=:;W)")


def test_ctss_small_forms():
    assert parse_ctss("(sc)") == RecExpr((G(SEMICOLON),))
    assert parse_ctss("(pd a sc (qu x))") == parse('(.A;"x)')
    assert parse_ctss("((r))") == parse("((R))")


@pytest.mark.parametrize("text", ["(eq)", "(eq a b)", "(eq ab)", "(rw)", "(=)", "(r :)"])
def test_ctss_unknown_tokens(text):
    with pytest.raises(UnknownToken):
        parse_ctss(text)


@pytest.mark.parametrize("text", ["(r", "r)", "((eq x)"])
def test_ctss_unbalanced(text):
    with pytest.raises(UnbalancedParens):
        parse_ctss(text)


@pytest.mark.parametrize("text", ["(", ")(", "(R=", r"\q", "((((", "(eq)", "())("])
def test_malformed_inputs_raise_syntax_errors_only(text):
    for parser in (parse, parse_ctss):
        try:
            parser(text)
        except RecSyntaxError:
            pass

import pytest
from hypothesis import given

from rec8.codegen import (
    Call,
    EntryCell,
    IncrementSkip,
    IndirectJump,
    Jump,
    Label,
    ParamWord,
    compile,
    emit_text,
    parse_text,
    wrap_subroutine,
)
from rec8.errors import AsmSyntaxError, NameCollision
from rec8.examples import LISTING_CTSS
from rec8.syntax import parse, parse_ctss

from .strategies import FIXTURES, TEST_TABLE, rec_programs


def test_compound_predicate_then_semicolon():
    p = compile(parse("(=!;)"))
    assert p.items == (
        Label("G0001"), Call("EQ"), ParamWord("!"), Jump("G0003"), Jump("G0002"),
        Label("G0003"), Jump("FA"), Label("G0004"), Label("G0002"))


def test_empty_group_hits_only_the_end_of_list_rule():
    assert compile(parse("()")).items == (Label("G0001"), Jump("FA"), Label("G0003"), Label("G0002"))


def test_rules_per_letter_class():
    p = compile(parse('(RQ"x.)'))
    assert p.items[1:7] == (Call("R"), Call("Q"), Jump("G0003"), Call("QU"), ParamWord("x"),
                            Jump("G0003"))


def test_nested_group_false_exit_is_the_enclosing_segment():
    p = compile(parse("((Q);R)"))
    # inner group: HE G0004, TR G0005, FA G0006; its OF is the outer FA G0003
    assert Jump("G0003") in p.items
    inner_end = p.items.index(Label("G0006"))
    assert p.items[inner_end - 1] == Jump("G0003")


def test_wrap_layout():
    w = wrap_subroutine(compile(parse("(;)")), "P1")
    assert w.entry == "P1" and w.items[0] == EntryCell("P1")
    assert w.items[-4:] == (IncrementSkip("P1"), IndirectJump("P1"), Label("FA"), IndirectJump("P1"))


@pytest.mark.parametrize("name", ["G0001", "FA", "R", "EQ", "", "A B", "X,"])
def test_wrap_name_collisions(name):
    with pytest.raises(NameCollision):
        wrap_subroutine(compile(parse("(R=x;)")), name)


def test_listing_example_golden_text():
    program = wrap_subroutine(compile(parse_ctss(LISTING_CTSS)), "REC")
    assert emit_text(program) == (FIXTURES / "listing.asm").read_text()


def test_emit_text_formats():
    assert emit_text(compile(parse("(R)"))).splitlines()[:2] == ["G0001,", "\tJMS R"]
    w = wrap_subroutine(compile(parse("(=\n;)")), "S")
    text = emit_text(w)
    assert "\t#012\n" in text and "\tJMP I S\n" in text and "\tISZ S\n" in text
    assert parse_text(text) == w


def test_parse_text_errors():
    for bad in ["\tJMS\n", "G1 junk\n", "\tJMP I\n", "G1, 5\n", "\tLDA X\n"]:
        with pytest.raises(AsmSyntaxError):
            parse_text(bad)


@given(rec_programs())
def test_text_round_trip(program):
    w = wrap_subroutine(compile(program, TEST_TABLE), "SUB")
    assert parse_text(emit_text(w)) == w


@given(rec_programs())
def test_label_discipline(program):
    w = wrap_subroutine(compile(program, TEST_TABLE), "SUB")
    defined = [i.name for i in w.items if isinstance(i, (Label, EntryCell))]
    assert len(defined) == len(set(defined))
    targets = {i.target for i in w.items if isinstance(i, Jump)}
    assert targets <= set(defined)
    gensyms = sorted(n for n in defined if n.startswith("G"))
    assert gensyms == [f"G{k:04d}" for k in range(1, len(gensyms) + 1)]
    for k, item in enumerate(w.items):
        if isinstance(item, ParamWord):
            prev = w.items[k - 1]
            assert isinstance(prev, Call) and prev.name in ("EQ", "QU")

import itertools
import random

import pydot
import pytest
from hypothesis import given

from rec8.automata import (
    EPSILON,
    Nfa,
    counterexample,
    determinize,
    epsilon_closure,
    from_json,
    group_nfa,
    is_empty,
    language_equiv,
    rec_to_nfa,
    to_dot,
    to_json,
    transcribe,
)
from rec8.corpus import ProgramCorpusConfig, RegexCorpusConfig, program_corpus, regex_corpus
from rec8.regex import thompson_nfa
from rec8.syntax import Colon, Group, Lambda, Period, Semicolon, Symbol, parse

from .oracles import accepted, words
from .strategies import TEST_TABLE, rec_exprs


def nfa(text, table=None):
    return rec_to_nfa(parse(text)) if table is None else rec_to_nfa(parse(text, table), table)


def test_lambda():
    n = nfa(r"\l")
    assert accepted(n, "A", 3) == {()}
    # I, T and the state after λ
    assert n.edges == ((0, EPSILON, 2),) and n.accepting == {2}
    assert epsilon_closure(n, {n.initial}) == {0, 2}


def test_empty_group_has_empty_language():
    n = nfa("()")
    assert is_empty(n)
    assert determinize(n).accepting == frozenset()
    t = transcribe(parse("()"))
    assert n.accepting == {t.groups[0][1]}


def test_flat_union_brute_force():
    n = nfa("(.A;B;)")
    assert accepted(n, "AB", 3) == {("A",), ("B",)}
    assert accepted(determinize(n), "AB", 3) == {("A",), ("B",)}


def test_moderately_complex_expression_transcribes():
    t = transcribe(parse("(RP.;Q.(RQ.;):W:)"))
    assert t.nfa.alphabet == {"R", "P", "Q", "W"}
    assert len(t.groups) == 2
    assert t.nfa.accepts(("R", "P"))
    assert not t.nfa.accepts(("W",))


def test_closure_of_nothing():
    assert epsilon_closure(nfa("(.a:;)"), set()) == frozenset()


def test_closure_idempotent_on_every_subset():
    n = nfa("(.a:;)")
    assert len(n.states) <= 8
    for k in range(len(n.states) + 1):
        for subset in itertools.combinations(n.states, k):
            once = epsilon_closure(n, subset)
            assert once >= set(subset)
            assert epsilon_closure(n, once) == once


def test_determinize_single_letter():
    d = determinize(nfa("A"))
    assert len(d.states) == 3
    assert frozenset() in d.subsets
    assert accepted(d, "A", 2) == {("A",)}


def test_determinize_is_total():
    d = determinize(nfa("(.A;B;)"), alphabet="ABC")
    assert all((s, x) in d.delta for s in d.states for x in "ABC")
    assert not d.accepts(("C",))


def test_determinize_preserves_membership_on_corpus():
    rng = random.Random(11)
    nfas = [rec_to_nfa(p, TEST_TABLE) for p in program_corpus(ProgramCorpusConfig(seed=5, count=25))]
    nfas += [thompson_nfa(r) for r in regex_corpus(RegexCorpusConfig(seed=5, count=25))]
    assert len(nfas) == 50
    for n in nfas:
        alphabet = sorted(n.alphabet) or ["a"]
        d = determinize(n, alphabet)
        sample = list(words(alphabet, 4 if len(alphabet) <= 4 else 2))
        rng.shuffle(sample)
        for w in sample[:300]:
            assert d.accepts(w) == n.accepts(w)


def test_union_regroupings_from_the_text():
    nested_left = nfa("(.(.A;B;);C;)")
    nested_right = nfa("(.A;(.B;C;);)")
    flat = nfa("(.A;.B;C;)")
    assert language_equiv(nested_left, nested_right)
    assert language_equiv(nested_left, flat)
    assert accepted(flat, "ABC", 2) == {("A",), ("B",), ("C",)}


def test_single_period_flat_union_drops_the_third_alternative():
    flat = nfa("(.A;B;C;)")
    assert accepted(flat, "ABC", 3) == {("A",), ("B",)}
    assert counterexample(nfa("(.A;.B;C;)"), flat) == ("C",)


def test_empty_versus_lambda():
    assert not language_equiv(nfa("()"), nfa(r"\l"))
    assert counterexample(nfa("()"), nfa(r"\l")) == ()


def test_dot_lambda():
    dot = to_dot(nfa(r"\l"))
    graph, = pydot.graph_from_dot_data(dot)
    nodes = [n.get_name() for n in graph.get_nodes() if n.get_name() not in ("__start", "node")]
    edges = [e for e in graph.get_edges() if e.get_source() != "__start"]
    assert len(nodes) == 2 and len(edges) == 1
    assert edges[0].get_label().strip('"') == "ε"


def test_dot_union_letter_edges():
    graph, = pydot.graph_from_dot_data(to_dot(nfa("(.A;B;)")))
    labels = [e.get_label().strip('"') for e in graph.get_edges() if e.get_label()]
    assert sorted(l for l in labels if l != "ε") == ["A", "B"]


def test_dot_marks_initial_and_accepting():
    dot = to_dot(nfa('(=";)'))
    graph, = pydot.graph_from_dot_data(dot)
    shapes = {n.get_name(): n.get_shape() for n in graph.get_nodes()}
    assert "doublecircle" in shapes.values()
    assert any(e.get_source() == "__start" for e in graph.get_edges())
    assert '"=\\""' in dot


def test_json_round_trip():
    n = nfa('(R=!;W" W:)')
    assert from_json(to_json(n)) == n
    assert '"schema_version": 1' in to_json(n)


def test_nfa_validation():
    with pytest.raises(ValueError):
        Nfa((0,), frozenset(), (), 1, frozenset())
    with pytest.raises(ValueError):
        Nfa((0, 1), frozenset(), ((0, "a", 1),), 0, frozenset())


def _count(items, kinds):
    total = 0
    for item in items:
        if isinstance(item, kinds):
            total += 1
        if isinstance(item, Group):
            total += _count(item.items, kinds)
    return total


def _predicates(items):
    total = 0
    for item in items:
        if isinstance(item, Symbol) and TEST_TABLE.is_predicate(item.name):
            total += 1
        if isinstance(item, Group):
            total += _predicates(item.items)
    return total


@given(rec_exprs())
def test_skip_edge_count(expr):
    t = transcribe(expr, TEST_TABLE)
    assert t.skip_edges == _count(expr.items, (Period, Group)) + _predicates(expr.items)


@given(rec_exprs())
def test_only_lambdas_letters_and_delimiters_make_states(expr):
    t = transcribe(expr, TEST_TABLE)
    groups = _count(expr.items, Group)
    fresh = _count(expr.items, (Lambda, Symbol, Colon, Semicolon))
    assert len(t.nfa.states) == 2 + 2 * groups + fresh
    assert len(t.groups) == groups


def test_group_nfa_accepts_at_interior_terminal():
    expr = parse("(A;B)")
    g = group_nfa(expr)
    assert g.accepts(("A",)) and not g.accepts(("A", "B"))
    with pytest.raises(ValueError):
        group_nfa(parse("AB"))

"""Hypothesis strategies and shared test data."""

from pathlib import Path

from hypothesis import strategies as st

from rec8 import regex
from rec8.syntax import COLON, LAMBDA, PERIOD, SEMICOLON, Group, RecExpr, Symbol, SymbolTable

FIXTURES = Path(__file__).parent / "fixtures"

# A, B operators; P, Q predicates; = and " compound
TEST_TABLE = SymbolTable(operators=frozenset("AB"), predicates=frozenset("PQ"),
                         compound_operators=frozenset('"'), compound_predicates=frozenset("="))


def rec_items(max_depth=5, params=st.sampled_from("xy !(:")):
    """Items whose group nesting is at most ``max_depth``."""
    leaves = st.one_of(
        st.sampled_from([LAMBDA, COLON, SEMICOLON, PERIOD]),
        st.sampled_from("ABPQ").map(Symbol),
        st.builds(Symbol, st.sampled_from('="'), params),
    )
    if max_depth == 0:
        return leaves
    groups = st.lists(rec_items(max_depth - 1, params), max_size=4).map(
        lambda xs: Group(tuple(xs)))
    return st.one_of(leaves, groups)


def rec_exprs(max_depth=5):
    return st.lists(rec_items(max_depth), max_size=5).map(lambda xs: RecExpr(tuple(xs)))


def rec_programs():
    """Single-group programs."""
    body = st.lists(rec_items(3), max_size=6)
    return body.map(lambda xs: RecExpr((Group(tuple(xs)),)))


def regexes(alphabet="ab"):
    leaves = st.one_of(
        st.just(regex.Phi()), st.just(regex.Lambda()), st.sampled_from(alphabet).map(regex.Sym))
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.lists(kids, min_size=2, max_size=3).map(lambda ps: regex.concat(*ps)),
            st.lists(kids, min_size=2, max_size=3).map(lambda ps: regex.union(*ps)),
            kids.map(regex.Star),
        ),
        max_leaves=10,
    )


def depth(item) -> int:
    if isinstance(item, (Group, RecExpr)):
        return 1 + max((depth(i) for i in item.items), default=0)
    return 0

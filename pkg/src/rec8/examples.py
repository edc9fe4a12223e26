"""Worked examples: the teletype programs, the compiled listing, and the
checks ``rec selftest`` runs over them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .automata import language_equiv, rec_to_nfa
from .codegen import Call, Jump, Label, ParamWord, Program, compile, parse_text
from .emulator import differential_check
from .regex import parse_regex, regex_to_rec, thompson_nfa
from .syntax import parse, parse_ctss
from .vm import TeletypeEnv, eval_predicate_forms, run

DOUBLE_SPACE = '(R=!;W" W:)'
STAR_STRIPPER = "(R=!;=*(R=*;:):W:)"
LISTING_CTSS = "(r (eq =) co (eq :) sc w r q w r q w r q w)"

# The published listing, one word per line, with the commentary dropped.
# "FA" is the compiled program's false exit.
PUBLISHED_LISTING = """\
GO3163,
\tJMS R
\tJMS EQ
\t=
\tJMP GO3165
GO3165,
\tJMS EQ
\t:
\tJMP GO3166
\tJMP GO3164
GO3166,
\tJMS W
\tJMS R
\tJMS Q
\tJMP GO3167
\tJMS W
\tJMS R
\tJMS Q
\tJMP GO3167
\tJMS W
\tJMS R
\tJMS Q
\tJMP GO3167
\tJMS W
\tJMP FA
GO3167,
GO3164,
"""


def item_kind(item) -> str:
    return type(item).__name__


def _operand(item):
    if isinstance(item, Label):
        return item.name
    if isinstance(item, Jump):
        return item.target
    if isinstance(item, Call):
        return item.name
    if isinstance(item, ParamWord):
        return item.char
    return None


def renaming(ours: list, published: list) -> dict[str, str] | None:
    """One-to-one label renaming taking ``published`` to ``ours``, if the
    two listings agree word for word otherwise."""
    if len(ours) != len(published):
        return None
    forward: dict[str, str] = {}
    backward: dict[str, str] = {}
    for old, new in zip(published, ours):
        if item_kind(old) != item_kind(new):
            return None
        x, y = _operand(old), _operand(new)
        if isinstance(old, (Label, Jump)):
            if forward.setdefault(x, y) != y or backward.setdefault(y, x) != x:
                return None
        elif x != y:
            return None
    return forward


@dataclass
class ListingComparison:
    exact: bool
    insertions: list[int]
    renaming: dict[str, str] | None


def compare_listing(ours: Program, published: Program) -> ListingComparison:
    """Exact match up to renaming, or else every position whose single
    inserted word explains the whole difference."""
    a, b = list(ours.items), list(published.items)
    exact = renaming(a, b)
    if exact is not None:
        return ListingComparison(True, [], exact)
    hits, found = [], None
    for j in range(len(a)):
        m = renaming(a[:j] + a[j + 1:], b)
        if m is not None:
            hits.append(j)
            found = found or m
    return ListingComparison(False, hits, found)


def compile_listing_example() -> tuple[Program, ListingComparison]:
    ours = compile(parse_ctss(LISTING_CTSS))
    return ours, compare_listing(ours, parse_text(PUBLISHED_LISTING))


def double_space_oracle(text: str) -> str:
    out = []
    for c in text:
        if c == "!":
            break
        out.append(c + " ")
    return "".join(out)


def star_stripper_oracle(text: str) -> str:
    out, inside = [], False
    for c in text:
        if inside:
            inside = c != "*"
        elif c == "!":
            break
        elif c == "*":
            inside = True
        else:
            out.append(c)
    return "".join(out)


# -- selftest ---------------------------------------------------------------

def _teletype(program: str, text: str, expected: str) -> bool:
    env = TeletypeEnv(text)
    truth, _ = run(parse(program), env)
    return truth and env.output == expected and bool(differential_check(parse(program), input=text))


def _equiv(*texts: str) -> bool:
    nfas = [rec_to_nfa(parse(t)) for t in texts]
    return all(language_equiv(nfas[0], n) for n in nfas[1:])


def _table(expr: str, fn: Callable[..., bool]) -> bool:
    rows = eval_predicate_forms(parse(expr))
    return all(r.truth == fn(*(v for _, v in r.assignment)) for r in rows)


def _listing() -> bool:
    ours, cmp = compile_listing_example()
    if len(cmp.insertions) != 1:
        return False
    inserted = ours.items[cmp.insertions[0]]
    return isinstance(inserted, Jump) and inserted.target == ours.items[0].name


def _regex_rows() -> bool:
    rows = ["%", "^", "a", "ab", "a|b", "a*", "[a|b]|c", "a|[b|c]", "a|b|c"]
    return all(language_equiv(thompson_nfa(parse_regex(r)), rec_to_nfa(regex_to_rec(parse_regex(r))))
               for r in rows)


SELFTEST: tuple[tuple[str, Callable[[], bool]], ...] = (
    ("double-space program on 'AB!'", lambda: _teletype(DOUBLE_SPACE, "AB!", "A B ")),
    ("star-stripper on 'ab*cd*ef!'", lambda: _teletype(STAR_STRIPPER, "ab*cd*ef!", "abef")),
    ("regex transcription rows", _regex_rows),
    ("union regroupings (.(.A;B;);C;) (.A;(.B;C;);) (.A;.B;C;)",
     lambda: _equiv("(.(.A;B;);C;)", "(.A;(.B;C;);)", "(.A;.B;C;)")),
    ("AND (ab;)", lambda: _table("(ab;)", lambda a, b: a and b)),
    ("OR (a;b;)", lambda: _table("(a;b;)", lambda a, b: a or b)),
    ("NOT (x)", lambda: _table("(x)", lambda x: not x)),
    ("((x)) = x", lambda: _table("((x))", lambda x: x)),
    ("(a;) = a", lambda: _table("(a;)", lambda a: a)),
    ("() is false", lambda: _table("()", lambda: False)),
    ("(;) is true", lambda: _table("(;)", lambda: True)),
    ("compiled listing", _listing),
    ("wrapped listing runs", lambda: bool(differential_check(parse_ctss(LISTING_CTSS), seed=3))),
)


def selftest(report: Callable[[str], None] = print) -> bool:
    ok = True
    for name, check in SELFTEST:
        try:
            passed = check()
        except Exception as exc:  # a crash is a failure, reported like one
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok &= passed
        report(f"{'PASS' if passed else 'FAIL'}  {name}")
    return ok

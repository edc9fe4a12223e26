"""Classical regular expressions and their transcription into REC.

Text grammar (square brackets group, since parentheses mean something
else in REC)::

    %        the empty set
    ^        the empty word
    a        a letter
    ab       concatenation
    a|b      union
    a*       iteration
    [a|b]*   grouping
"""

from __future__ import annotations

from dataclasses import dataclass
import typing

from .automata import EPSILON, Nfa
from .errors import EmptyOperand, ReservedLetter, UnbalancedBrackets
from .syntax import (
    COLON,
    LAMBDA,
    PERIOD,
    RESERVED,
    SEMICOLON,
    Group,
    RecExpr,
    RecItem,
    Symbol,
)


@dataclass(frozen=True)
class Phi:
    pass


@dataclass(frozen=True)
class Lambda:
    """The empty word."""


@dataclass(frozen=True)
class Sym:
    letter: str


@dataclass(frozen=True)
class Concat:
    parts: tuple["Regex", ...]


@dataclass(frozen=True)
class Union:
    parts: tuple["Regex", ...]


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = typing.Union[Phi, "Lambda", Sym, Concat, "Union", Star]


def concat(*parts: Regex) -> Regex:
    flat: list[Regex] = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Concat) else (p,))
    if not flat:
        return Lambda()
    return flat[0] if len(flat) == 1 else Concat(tuple(flat))


def union(*parts: Regex) -> Regex:
    flat: list[Regex] = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Union) else (p,))
    if not flat:
        return Phi()
    return flat[0] if len(flat) == 1 else Union(tuple(flat))


# -- text -------------------------------------------------------------------

def parse_regex(text: str) -> Regex:
    chars = [c for c in text if not c.isspace()]
    pos = 0

    def peek():
        return chars[pos] if pos < len(chars) else None

    def alternation() -> Regex:
        nonlocal pos
        parts = [sequence()]
        while peek() == "|":
            pos += 1
            parts.append(sequence())
        return union(*parts)

    def sequence() -> Regex:
        parts = []
        while peek() is not None and peek() not in "|]":
            parts.append(postfix())
        if not parts:
            raise EmptyOperand(f"missing operand at offset {pos}")
        return concat(*parts)

    def postfix() -> Regex:
        nonlocal pos
        r = atom()
        while peek() == "*":
            pos += 1
            r = Star(r)
        return r

    def atom() -> Regex:
        nonlocal pos
        c = peek()
        pos += 1
        if c == "%":
            return Phi()
        if c == "^":
            return Lambda()
        if c == "[":
            inner = alternation()
            if peek() != "]":
                raise UnbalancedBrackets("'[' left open")
            pos += 1
            return inner
        if c == "*":
            raise EmptyOperand(f"'*' with nothing to iterate at offset {pos - 1}")
        if c in RESERVED:
            raise ReservedLetter(f"{c!r} is reserved and cannot be a letter")
        return Sym(c)

    r = alternation()
    if pos < len(chars):
        raise UnbalancedBrackets(f"unexpected {chars[pos]!r} at offset {pos}")
    return r


def regex_to_text(r: Regex) -> str:
    def go(r: Regex, prec: int) -> str:
        if isinstance(r, Phi):
            return "%"
        if isinstance(r, Lambda):
            return "^"
        if isinstance(r, Sym):
            return r.letter
        if isinstance(r, Star):
            return go(r.inner, 3) + "*"
        if isinstance(r, Concat):
            s, own = "".join(go(p, 2) for p in r.parts), 2
        else:
            s, own = "|".join(go(p, 1) for p in r.parts), 1
        return f"[{s}]" if own < prec else s
    return go(r, 0)


# -- transcription ----------------------------------------------------------

def _rec_items(r: Regex) -> list[RecItem]:
    if isinstance(r, Phi):
        return [Group()]
    if isinstance(r, Lambda):
        return [LAMBDA]
    if isinstance(r, Sym):
        return [Symbol(r.letter)]
    if isinstance(r, Concat):
        return [item for p in r.parts for item in _rec_items(p)]
    if isinstance(r, Union):
        # every alternative but the last needs its own period, otherwise the
        # segments after the second one can never be reached
        body: list[RecItem] = []
        for p in r.parts[:-1]:
            body += [PERIOD, *_rec_items(p), SEMICOLON]
        return [Group((*body, *_rec_items(r.parts[-1]), SEMICOLON))]
    if isinstance(r, Star):
        return [Group((PERIOD, *_rec_items(r.inner), COLON, SEMICOLON))]
    raise TypeError(f"not a regex: {r!r}")


def eliminate_phi(r: Regex) -> Regex:
    """Remove every nested empty set; the result is either ``Phi()`` itself
    or contains no ``Phi`` at all."""
    if isinstance(r, Concat):
        parts = [eliminate_phi(p) for p in r.parts]
        return Phi() if any(isinstance(p, Phi) for p in parts) else concat(*parts)
    if isinstance(r, Union):
        return union(*(p for p in map(eliminate_phi, r.parts) if not isinstance(p, Phi)))
    if isinstance(r, Star):
        inner = eliminate_phi(r.inner)
        return Lambda() if isinstance(inner, Phi) else Star(inner)
    return r


def regex_to_rec(r: Regex, literal: bool = False) -> RecExpr:
    """Transcribe ``r`` row by row.

    ``()`` is a predicate that fails, so inside a larger expression its
    false exit still reaches the next delimiter and words leak into the
    language.  Unless ``literal`` is set the empty set is first removed
    by ``eliminate_phi``, which leaves ``()`` only as a whole expression.
    """
    if not literal:
        r = eliminate_phi(r)
    return RecExpr(tuple(_rec_items(r)))


def thompson_nfa(r: Regex) -> Nfa:
    """Reference automaton by the textbook structural construction."""
    edges = []
    letters = set()
    count = 0

    def fresh():
        nonlocal count
        count += 1
        return count - 1

    def build(r: Regex) -> tuple[int, int]:
        s, f = fresh(), fresh()
        if isinstance(r, Lambda):
            edges.append((s, EPSILON, f))
        elif isinstance(r, Sym):
            letters.add(r.letter)
            edges.append((s, r.letter, f))
        elif isinstance(r, Concat):
            prev = s
            for p in r.parts:
                ps, pf = build(p)
                edges.append((prev, EPSILON, ps))
                prev = pf
            edges.append((prev, EPSILON, f))
        elif isinstance(r, Union):
            for p in r.parts:
                ps, pf = build(p)
                edges.append((s, EPSILON, ps))
                edges.append((pf, EPSILON, f))
        elif isinstance(r, Star):
            ps, pf = build(r.inner)
            edges.extend([(s, EPSILON, f), (s, EPSILON, ps),
                          (pf, EPSILON, ps), (pf, EPSILON, f)])
        elif not isinstance(r, Phi):
            raise TypeError(f"not a regex: {r!r}")
        return s, f

    start, accept = build(r)
    return Nfa(tuple(range(count)), frozenset(letters), tuple(edges), start,
               frozenset({accept}))

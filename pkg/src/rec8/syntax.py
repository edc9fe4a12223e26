"""REC abstract syntax, symbol classification, and the two orthographies.

Native orthography::

    (R=!;W" W:)

Parentheses delimit groups, ``:`` and ``;`` are the delimiters, ``.`` (or
``∘``) is the large period and ``λ`` (or ``\\l``) is lambda.  Every other
non-blank character is an alphabet letter.  A compound letter takes the
very next character, blanks included, as its parameter.

CTSS orthography is the list form the original LISP reader could accept::

    (r (eq =) co (eq :) sc w r q w r q w r q w)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import (
    DanglingCompound,
    ReservedLetter,
    TableError,
    UnbalancedParens,
    UnknownToken,
)

PERIOD_GLYPHS = ".∘"
LAMBDA_GLYPH = "λ"
LAMBDA_ESCAPE = "\\l"
RESERVED = frozenset("():;.∘λ\\")

# Subroutine names used for compound letters in CTSS text and in assembly.
SUBROUTINE_NAMES = {"=": "EQ", '"': "QU"}


# -- items ------------------------------------------------------------------

@dataclass(frozen=True)
class Lambda:
    def __repr__(self):
        return "Lambda"


@dataclass(frozen=True)
class Colon:
    def __repr__(self):
        return "':'"


@dataclass(frozen=True)
class Semicolon:
    def __repr__(self):
        return "';'"


@dataclass(frozen=True)
class Period:
    def __repr__(self):
        return "Period"


@dataclass(frozen=True)
class Symbol:
    name: str
    param: str | None = None

    @property
    def label(self) -> str:
        """Transition label: the letter followed by its parameter, if any."""
        return self.name + (self.param or "")

    def __repr__(self):
        if self.param is None:
            return self.name
        return f"{self.name}({self.param!r})"


@dataclass(frozen=True)
class Group:
    items: tuple["RecItem", ...] = ()

    def __repr__(self):
        return "Group[" + ", ".join(map(repr, self.items)) + "]"


RecItem = Union[Lambda, Colon, Semicolon, Period, Symbol, Group]

LAMBDA = Lambda()
COLON = Colon()
SEMICOLON = Semicolon()
PERIOD = Period()
DELIMITERS = (Colon, Semicolon)


@dataclass(frozen=True)
class RecExpr:
    items: tuple[RecItem, ...] = ()

    def __iter__(self) -> Iterator[RecItem]:
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    @property
    def single_group(self) -> Group | None:
        """The sole top-level group, or None if the expression is not one."""
        if len(self.items) == 1 and isinstance(self.items[0], Group):
            return self.items[0]
        return None

    def symbols(self) -> Iterator[Symbol]:
        return iter_symbols(self.items)

    def __repr__(self):
        return "RecExpr(" + ", ".join(map(repr, self.items)) + ")"


def iter_symbols(items: Iterable[RecItem]) -> Iterator[Symbol]:
    for item in items:
        if isinstance(item, Symbol):
            yield item
        elif isinstance(item, Group):
            yield from iter_symbols(item.items)


# -- symbol table -----------------------------------------------------------

OPERATOR = "operator"
PREDICATE = "predicate"
COMPOUND_OPERATOR = "compound_operator"
COMPOUND_PREDICATE = "compound_predicate"
KINDS = (OPERATOR, PREDICATE, COMPOUND_OPERATOR, COMPOUND_PREDICATE)


@dataclass(frozen=True)
class SymbolTable:
    """Classification of alphabet letters.

    Letters not listed anywhere are treated as plain operators.
    """

    operators: frozenset[str] = frozenset("RW")
    predicates: frozenset[str] = frozenset("Q")
    compound_operators: frozenset[str] = frozenset('"')
    compound_predicates: frozenset[str] = frozenset("=")

    def __post_init__(self):
        for name in KINDS:
            letters = frozenset(getattr(self, name + "s"))
            object.__setattr__(self, name + "s", letters)
            for letter in letters:
                if len(letter) != 1:
                    raise TableError(f"letter {letter!r} is not a single character")
                if letter in RESERVED or letter.isspace():
                    raise ReservedLetter(f"{letter!r} cannot be an alphabet letter")
        sets = [getattr(self, k + "s") for k in KINDS]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                common = sets[i] & sets[j]
                if common:
                    raise TableError(
                        f"{sorted(common)} listed as both {KINDS[i]} and {KINDS[j]}")

    def kind(self, letter: str) -> str:
        if letter in self.predicates:
            return PREDICATE
        if letter in self.compound_predicates:
            return COMPOUND_PREDICATE
        if letter in self.compound_operators:
            return COMPOUND_OPERATOR
        return OPERATOR

    def is_compound(self, letter: str) -> bool:
        return letter in self.compound_operators or letter in self.compound_predicates

    def is_predicate(self, letter: str) -> bool:
        return letter in self.predicates or letter in self.compound_predicates

    def to_text(self) -> str:
        return "".join(
            f"{k}s: {' '.join(sorted(getattr(self, k + 's')))}\n" for k in KINDS)

    @classmethod
    def from_text(cls, text: str) -> "SymbolTable":
        """Read the ``class: letters...`` line format.

        Classes not mentioned are left empty, so a file fully replaces the
        default table.  Lines starting with ``#`` are comments.
        """
        classes = {k + "s": set() for k in KINDS}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            key, sep, rest = line.partition(":")
            key = key.strip()
            if not sep or key not in classes:
                raise TableError(f"line {lineno}: expected '<class>: letters', got {line!r}")
            classes[key].update(rest.split())
        return cls(**{k: frozenset(v) for k, v in classes.items()})

    @classmethod
    def load(cls, path: str | Path) -> "SymbolTable":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


DEFAULT_TABLE = SymbolTable()


# -- native orthography -----------------------------------------------------

def parse(text: str, table: SymbolTable = DEFAULT_TABLE) -> RecExpr:
    stack: list[list[RecItem]] = [[]]
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        i += 1
        if c.isspace():
            continue
        if c == "(":
            stack.append([])
        elif c == ")":
            if len(stack) == 1:
                raise UnbalancedParens(f"unmatched ')' at offset {i - 1}")
            body = stack.pop()
            stack[-1].append(Group(tuple(body)))
        elif c == ":":
            stack[-1].append(COLON)
        elif c == ";":
            stack[-1].append(SEMICOLON)
        elif c in PERIOD_GLYPHS:
            stack[-1].append(PERIOD)
        elif c == LAMBDA_GLYPH:
            stack[-1].append(LAMBDA)
        elif c == "\\":
            if text[i:i + 1] != "l":
                raise ReservedLetter(f"'\\' at offset {i - 1} must introduce '\\l'")
            i += 1
            stack[-1].append(LAMBDA)
        elif table.is_compound(c):
            if i >= n:
                raise DanglingCompound(f"compound letter {c!r} has no parameter")
            stack[-1].append(Symbol(c, text[i]))
            i += 1
        else:
            stack[-1].append(Symbol(c))
    if len(stack) != 1:
        raise UnbalancedParens(f"{len(stack) - 1} group(s) left open")
    return RecExpr(tuple(stack[0]))


def pretty_print(expr: RecExpr | RecItem, unicode: bool = False) -> str:
    if isinstance(expr, RecExpr):
        return "".join(pretty_print(item, unicode) for item in expr.items)
    if isinstance(expr, Group):
        return "(" + "".join(pretty_print(item, unicode) for item in expr.items) + ")"
    if isinstance(expr, Symbol):
        return expr.name + (expr.param or "")
    if isinstance(expr, Colon):
        return ":"
    if isinstance(expr, Semicolon):
        return ";"
    if isinstance(expr, Period):
        return "∘" if unicode else "."
    if isinstance(expr, Lambda):
        return LAMBDA_GLYPH if unicode else LAMBDA_ESCAPE
    raise TypeError(f"not a REC item: {expr!r}")


# -- CTSS orthography -------------------------------------------------------

_CTSS_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_CTSS_WORDS = {"SC": SEMICOLON, "CO": COLON, "PD": PERIOD}


def _ctss_tokens(text: str) -> list[str]:
    return _CTSS_TOKEN.findall(text)


def parse_ctss(list_text: str, table: SymbolTable = DEFAULT_TABLE) -> RecExpr:
    compounds = {name: letter for letter, name in SUBROUTINE_NAMES.items()
                 if table.is_compound(letter)}
    tokens = _ctss_tokens(list_text)
    pos = 0

    def item_list(closing: bool) -> list[RecItem]:
        nonlocal pos
        items: list[RecItem] = []
        while pos < len(tokens):
            tok = tokens[pos]
            pos += 1
            if tok == ")":
                if not closing:
                    raise UnbalancedParens("unmatched ')'")
                return items
            if tok == "(":
                head = tokens[pos].upper() if pos < len(tokens) else ""
                if head in compounds or head in SUBROUTINE_NAMES.values():
                    items.append(compound_form())
                else:
                    items.append(Group(tuple(item_list(True))))
                continue
            items.append(bare(tok))
        if closing:
            raise UnbalancedParens("list left open")
        return items

    def compound_form() -> Symbol:
        nonlocal pos
        head = tokens[pos]
        pos += 1
        if head.upper() not in compounds:
            raise UnknownToken(f"{head} is not a compound letter in this table")
        args = []
        while pos < len(tokens) and tokens[pos] != ")":
            args.append(tokens[pos])
            pos += 1
        if pos >= len(tokens):
            raise UnbalancedParens(f"({head} ... left open")
        pos += 1
        if len(args) != 1 or len(args[0]) != 1:
            raise UnknownToken(f"({head} ...) takes exactly one one-character parameter")
        return Symbol(compounds[head.upper()], args[0])

    def bare(tok: str) -> RecItem:
        word = tok.upper()
        if word in _CTSS_WORDS:
            return _CTSS_WORDS[word]
        if len(word) != 1 or word in RESERVED:
            raise UnknownToken(f"unknown token {tok!r}")
        if table.is_compound(word):
            raise UnknownToken(f"compound letter {tok!r} must be written as a list")
        return Symbol(word)

    return RecExpr(tuple(item_list(False)))

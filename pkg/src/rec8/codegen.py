"""Compile REC groups to symbolic PDP-8 subroutine-call code.

Each letter becomes a ``JMS`` to a subroutine of that name.  A predicate
subroutine returns to the word after its calling sequence when false and
skips one further word when true, so the word after the call is the jump
taken on the false branch::

        JMS EQ
        !           parameter word, compound letters only
        JMP G0003   false
                    true continues here

A group is laid out as ``HE, body, TR,`` where ``HE`` is the target of
``:``, ``TR`` the target of ``;`` and each segment's false jumps land on a
label ``FA`` placed just past the delimiter that ends the segment.  At the
end of the body control jumps to ``OF``, the false exit of whatever
encloses the group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import AsmSyntaxError, NameCollision
from .syntax import (
    COMPOUND_OPERATOR,
    COMPOUND_PREDICATE,
    DEFAULT_TABLE,
    PREDICATE,
    SUBROUTINE_NAMES,
    Colon,
    Group,
    Lambda,
    Period,
    RecExpr,
    Semicolon,
    Symbol,
    SymbolTable,
)

FALSE_EXIT = "FA"
GENSYM_FORMAT = "G{:04d}"


@dataclass(frozen=True)
class Label:
    name: str


@dataclass(frozen=True)
class Call:
    name: str


@dataclass(frozen=True)
class ParamWord:
    char: str


@dataclass(frozen=True)
class Jump:
    target: str


@dataclass(frozen=True)
class EntryCell:
    name: str


@dataclass(frozen=True)
class IncrementSkip:
    cell: str


@dataclass(frozen=True)
class IndirectJump:
    cell: str


AsmItem = Union[Label, Call, ParamWord, Jump, EntryCell, IncrementSkip, IndirectJump]


@dataclass(frozen=True)
class Program:
    items: tuple[AsmItem, ...]
    entry: str | None = None
    false_exit: str = FALSE_EXIT

    def labels(self) -> dict[str, int]:
        """Map each label (and the entry cell) to its item index."""
        out = {}
        for i, item in enumerate(self.items):
            if isinstance(item, (Label, EntryCell)):
                if item.name in out:
                    raise NameCollision(f"label {item.name} defined twice")
                out[item.name] = i
        return out

    def called(self) -> set[str]:
        return {item.name for item in self.items if isinstance(item, Call)}

    def __iter__(self) -> Iterator[AsmItem]:
        return iter(self.items)


def subroutine_name(letter: str) -> str:
    return SUBROUTINE_NAMES.get(letter, letter)


def letter_for(name: str) -> str:
    for letter, sub in SUBROUTINE_NAMES.items():
        if sub == name:
            return letter
    return name


# -- compilation ------------------------------------------------------------

class _Compiler:
    def __init__(self, table: SymbolTable):
        self.table = table
        self.counter = itertools.count(1)
        self.out: list[AsmItem] = []

    def gensym(self) -> str:
        return GENSYM_FORMAT.format(next(self.counter))

    def group(self, group: Group, outer_false: str):
        head, true = self.gensym(), self.gensym()
        fa = self.gensym()
        emit = self.out.append
        emit(Label(head))
        for item in group.items:
            if isinstance(item, Symbol):
                kind = self.table.kind(item.name)
                emit(Call(subroutine_name(item.name)))
                if kind in (COMPOUND_OPERATOR, COMPOUND_PREDICATE):
                    emit(ParamWord(item.param))
                if kind in (PREDICATE, COMPOUND_PREDICATE):
                    emit(Jump(fa))
            elif isinstance(item, (Colon, Semicolon)):
                emit(Jump(head if isinstance(item, Colon) else true))
                emit(Label(fa))
                fa = self.gensym()
            elif isinstance(item, Period):
                emit(Jump(fa))
            elif isinstance(item, Group):
                self.group(item, fa)
            elif not isinstance(item, Lambda):
                raise TypeError(f"not a REC item: {item!r}")
        emit(Jump(outer_false))
        emit(Label(fa))
        emit(Label(true))


def compile(expr: RecExpr, table: SymbolTable = DEFAULT_TABLE,
            false_exit: str = FALSE_EXIT) -> Program:
    """Body code for a single-group program.

    The top-level false exit is left as a jump to ``false_exit``;
    ``wrap_subroutine`` supplies the label.
    """
    top = expr.single_group
    if top is None:
        raise ValueError("a program must be a single parenthesized group")
    c = _Compiler(table)
    c.group(top, false_exit)
    return Program(tuple(c.out), None, false_exit)


def wrap_subroutine(body: Program, name: str = "REC") -> Program:
    """Finish a compiled body as a predicate subroutine.

    True returns skip one word (``ISZ`` then ``JMP I``), false returns
    come back to the word after the caller's ``JMS``.
    """
    if not name or any(c.isspace() or c == "," for c in name):
        raise NameCollision(f"{name!r} is not a usable label")
    taken = set(body.labels()) | body.called() | {body.false_exit}
    if name in taken:
        raise NameCollision(f"entry name {name!r} is already used in the program")
    items = (
        EntryCell(name),
        *body.items,
        IncrementSkip(name),
        IndirectJump(name),
        Label(body.false_exit),
        IndirectJump(name),
    )
    return Program(items, name, body.false_exit)


# -- text form --------------------------------------------------------------

def _param_text(c: str) -> str:
    if len(c) == 1 and (c.isprintable() or c == " "):
        return c
    return "#{:03o}".format(ord(c))


def emit_text(p: Program) -> str:
    lines = []
    for item in p.items:
        if isinstance(item, Label):
            lines.append(f"{item.name},")
        elif isinstance(item, EntryCell):
            lines.append(f"{item.name},\t0")
        elif isinstance(item, Call):
            lines.append(f"\tJMS {item.name}")
        elif isinstance(item, ParamWord):
            lines.append("\t" + _param_text(item.char))
        elif isinstance(item, Jump):
            lines.append(f"\tJMP {item.target}")
        elif isinstance(item, IncrementSkip):
            lines.append(f"\tISZ {item.cell}")
        elif isinstance(item, IndirectJump):
            lines.append(f"\tJMP I {item.cell}")
        else:
            raise TypeError(f"not an assembly item: {item!r}")
    return "\n".join(lines) + "\n"


def parse_text(text: str, false_exit: str = FALSE_EXIT) -> Program:
    """Inverse of ``emit_text``.  The entry cell, if present, names the
    subroutine."""
    items: list[AsmItem] = []
    entry = None
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line:
            continue
        if not line.startswith("\t"):
            name, sep, rest = line.partition(",")
            if not sep or not name:
                raise AsmSyntaxError(f"line {lineno}: expected a label, got {line!r}")
            if rest == "":
                items.append(Label(name))
            elif rest.strip() == "0":
                items.append(EntryCell(name))
                entry = entry or name
            else:
                raise AsmSyntaxError(f"line {lineno}: junk after label: {rest!r}")
            continue
        word = line[1:]
        if len(word) == 1:
            items.append(ParamWord(word))
            continue
        if word.startswith("#") and len(word) > 1 and word[1:].isdigit():
            items.append(ParamWord(chr(int(word[1:], 8))))
            continue
        parts = word.split()
        if len(parts) == 2 and parts[0] == "JMS":
            items.append(Call(parts[1]))
        elif len(parts) == 2 and parts[0] == "JMP" and parts[1] != "I":
            items.append(Jump(parts[1]))
        elif len(parts) == 2 and parts[0] == "ISZ":
            items.append(IncrementSkip(parts[1]))
        elif len(parts) == 3 and parts[:2] == ["JMP", "I"]:
            items.append(IndirectJump(parts[2]))
        else:
            raise AsmSyntaxError(f"line {lineno}: cannot read {word!r}")
    return Program(tuple(items), entry, false_exit)

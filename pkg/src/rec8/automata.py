"""Transition systems for REC expressions.

``rec_to_nfa`` follows the left-to-right transcription of a REC expression
into a transition system with spontaneous (ε) moves.  The rest of the module
is the classical machinery needed to compare the languages of two such
systems: ε-closure, subset construction and a product walk.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .syntax import (
    DEFAULT_TABLE,
    Colon,
    Group,
    Lambda,
    Period,
    RecExpr,
    RecItem,
    Semicolon,
    Symbol,
    SymbolTable,
)

EPSILON = None
JSON_SCHEMA_VERSION = 1

Edge = tuple[int, "str | None", int]
Word = Sequence[str]


@dataclass(frozen=True)
class Nfa:
    """A transition system; ``None`` labels are spontaneous transitions."""

    states: tuple[int, ...]
    alphabet: frozenset[str]
    edges: tuple[Edge, ...]
    initial: int
    accepting: frozenset[int]

    def __post_init__(self):
        known = set(self.states)
        if self.initial not in known:
            raise ValueError(f"initial state {self.initial} not among states")
        if not set(self.accepting) <= known:
            raise ValueError("accepting states must be states")
        for src, label, dst in self.edges:
            if src not in known or dst not in known:
                raise ValueError(f"edge {src}->{dst} leaves the state set")
            if label is not EPSILON and label not in self.alphabet:
                raise ValueError(f"label {label!r} not in alphabet")

    @cached_property
    def _moves(self) -> dict[int, dict[str | None, frozenset[int]]]:
        table: dict[int, dict[str | None, set[int]]] = {s: {} for s in self.states}
        for src, label, dst in self.edges:
            table[src].setdefault(label, set()).add(dst)
        return {s: {k: frozenset(v) for k, v in m.items()} for s, m in table.items()}

    def successors(self, state: int, label: str | None) -> frozenset[int]:
        return self._moves[state].get(label, frozenset())

    def with_accepting(self, accepting: Iterable[int]) -> "Nfa":
        return Nfa(self.states, self.alphabet, self.edges, self.initial,
                   frozenset(accepting))

    def accepts(self, word: Word) -> bool:
        """Direct simulation, independent of ``determinize``."""
        current = epsilon_closure(self, {self.initial})
        for letter in word:
            step = set()
            for s in current:
                step |= self.successors(s, letter)
            current = epsilon_closure(self, step)
            if not current:
                return False
        return bool(current & self.accepting)


@dataclass(frozen=True)
class Dfa:
    states: tuple[int, ...]
    alphabet: frozenset[str]
    delta: dict[tuple[int, str], int] = field(hash=False)
    initial: int
    accepting: frozenset[int]
    subsets: tuple[frozenset[int], ...] = field(default=(), hash=False)

    def __post_init__(self):
        for s in self.states:
            for a in self.alphabet:
                if (s, a) not in self.delta:
                    raise ValueError(f"transition function undefined at ({s}, {a!r})")

    def accepts(self, word: Word) -> bool:
        state = self.initial
        for letter in word:
            if letter not in self.alphabet:
                return False
            state = self.delta[state, letter]
        return state in self.accepting


# -- REC transcription ------------------------------------------------------

@dataclass
class Transcription:
    """An ``Nfa`` together with bookkeeping from its construction.

    ``groups`` lists ``(initial, terminal)`` for every parenthesized
    subexpression in the order they were opened; ``skip_edges`` counts
    the forward ε-edges awaiting the next delimiter.
    """

    nfa: Nfa
    initial: int
    terminal: int
    groups: list[tuple[int, int]]
    skip_edges: int


class _Builder:
    def __init__(self, table: SymbolTable):
        self.table = table
        self.count = 0
        self.edges: list[Edge] = []
        self.alphabet: set[str] = set()
        self.groups: list[tuple[int, int]] = []
        self.skip_edges = 0

    def fresh(self) -> int:
        self.count += 1
        return self.count - 1

    def edge(self, src: int, label: str | None, dst: int):
        self.edges.append((src, label, dst))

    def level(self, items: Sequence[RecItem], initial: int, terminal: int) -> int:
        """Transcribe one expression level; returns its final last state."""
        last = initial
        pending: list[int] = []

        def skip_from(state: int):
            pending.append(state)
            self.skip_edges += 1

        def resolve(target: int):
            for src in pending:
                self.edge(src, EPSILON, target)
            pending.clear()

        for item in items:
            if isinstance(item, Lambda):
                nxt = self.fresh()
                self.edge(last, EPSILON, nxt)
                last = nxt
            elif isinstance(item, Symbol):
                nxt = self.fresh()
                self.alphabet.add(item.label)
                self.edge(last, item.label, nxt)
                last = nxt
                # a predicate is its letter with an implicit period after it
                if self.table.is_predicate(item.name):
                    skip_from(last)
            elif isinstance(item, (Colon, Semicolon)):
                self.edge(last, EPSILON, initial if isinstance(item, Colon) else terminal)
                last = self.fresh()
                resolve(last)
            elif isinstance(item, Period):
                skip_from(last)
            elif isinstance(item, Group):
                inner_i, inner_t = self.fresh(), self.fresh()
                self.groups.append((inner_i, inner_t))
                inner_last = self.level(item.items, inner_i, inner_t)
                self.edge(last, EPSILON, inner_i)
                skip_from(inner_last)
                last = inner_t
            else:
                raise TypeError(f"not a REC item: {item!r}")
        resolve(terminal)
        return last


def transcribe(expr: RecExpr, table: SymbolTable = DEFAULT_TABLE) -> Transcription:
    b = _Builder(table)
    initial, terminal = b.fresh(), b.fresh()
    last = b.level(expr.items, initial, terminal)
    nfa = Nfa(tuple(range(b.count)), frozenset(b.alphabet), tuple(b.edges),
              initial, frozenset({last}))
    return Transcription(nfa, initial, terminal, b.groups, b.skip_edges)


def rec_to_nfa(expr: RecExpr, table: SymbolTable = DEFAULT_TABLE) -> Nfa:
    return transcribe(expr, table).nfa


def group_nfa(expr: RecExpr, table: SymbolTable = DEFAULT_TABLE) -> Nfa:
    """Transition system that accepts at the terminal state of the sole
    top-level group, i.e. on the words of a run that returns true."""
    if expr.single_group is None:
        raise ValueError("expression is not a single parenthesized group")
    t = transcribe(expr, table)
    return t.nfa.with_accepting({t.groups[0][1]})


# -- analysis ---------------------------------------------------------------

def epsilon_closure(n: Nfa, states: Iterable[int]) -> frozenset[int]:
    seen = set(states)
    stack = list(seen)
    while stack:
        s = stack.pop()
        for t in n.successors(s, EPSILON):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def determinize(n: Nfa, alphabet: Iterable[str] | None = None) -> Dfa:
    """Subset construction over reachable subsets.

    ``alphabet`` may widen the input alphabet (letters the Nfa never reads
    lead to the dead subset).
    """
    letters = frozenset(n.alphabet if alphabet is None else alphabet) | n.alphabet
    ordered = sorted(letters)
    start = epsilon_closure(n, {n.initial})
    index = {start: 0}
    subsets = [start]
    delta: dict[tuple[int, str], int] = {}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for a in ordered:
            step: set[int] = set()
            for s in current:
                step |= n.successors(s, a)
            target = epsilon_closure(n, step)
            if target not in index:
                index[target] = len(subsets)
                subsets.append(target)
                queue.append(target)
            delta[index[current], a] = index[target]
    accepting = frozenset(i for i, sub in enumerate(subsets) if sub & n.accepting)
    return Dfa(tuple(range(len(subsets))), letters, delta, 0, accepting, tuple(subsets))


def counterexample(a: Nfa, b: Nfa) -> tuple[str, ...] | None:
    """Shortest word accepted by exactly one of ``a`` and ``b``, if any."""
    letters = a.alphabet | b.alphabet
    da, db = determinize(a, letters), determinize(b, letters)
    ordered = sorted(letters)
    start = (da.initial, db.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        x, y = pair
        if (x in da.accepting) != (y in db.accepting):
            word = []
            while parent[pair] is not None:
                pair, letter = parent[pair]
                word.append(letter)
            return tuple(reversed(word))
        for letter in ordered:
            nxt = (da.delta[x, letter], db.delta[y, letter])
            if nxt not in parent:
                parent[nxt] = (pair, letter)
                queue.append(nxt)
    return None


def language_equiv(a: Nfa, b: Nfa) -> bool:
    return counterexample(a, b) is None


def is_empty(n: Nfa) -> bool:
    return not determinize(n).accepting


# -- export -----------------------------------------------------------------

def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(n: Nfa, name: str = "nfa") -> str:
    """Graphviz digraph.  States with no edges are omitted unless they are
    initial or accepting."""
    shown = {n.initial} | set(n.accepting)
    for src, _, dst in n.edges:
        shown.update((src, dst))
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;",
             '  __start [shape=point, label=""];']
    for s in sorted(shown):
        shape = "doublecircle" if s in n.accepting else "circle"
        lines.append(f"  {s} [shape={shape}];")
    lines.append(f"  __start -> {n.initial};")
    for src, label, dst in n.edges:
        text = "ε" if label is EPSILON else label
        lines.append(f"  {src} -> {dst} [label={_dot_quote(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(n: Nfa) -> dict:
    return {
        "schema_version": JSON_SCHEMA_VERSION,
        "states": list(n.states),
        "alphabet": sorted(n.alphabet),
        "edges": [{"src": s, "label": l, "dst": d} for s, l, d in n.edges],
        "initial": n.initial,
        "accepting": sorted(n.accepting),
    }


def to_json(n: Nfa) -> str:
    return json.dumps(to_json_dict(n), ensure_ascii=False, indent=2)


def from_json(text: str) -> Nfa:
    data = json.loads(text)
    return Nfa(tuple(data["states"]), frozenset(data["alphabet"]),
               tuple((e["src"], e["label"], e["dst"]) for e in data["edges"]),
               data["initial"], frozenset(data["accepting"]))

"""Direct execution of REC programs.

A program is a single parenthesized group.  Control moves left to right
through the body of a group:

* an operator performs its effect and control continues;
* a predicate performs its effect; when false, control passes beyond the
  next ``:`` or ``;`` of the same group, or, if there is none, the group
  returns true;
* ``;`` returns true from the group, ``:`` restarts its body;
* ``.`` acts as a predicate that is always false, ``λ`` does nothing;
* a nested group runs to completion and its result is used as a predicate;
* running off the end of a body returns false.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import (
    EmptyWorkspace,
    InputExhausted,
    RecRuntimeError,
    ScriptExhausted,
    StepBudgetExceeded,
    UnboundSymbol,
)
from .syntax import (
    COMPOUND_OPERATOR,
    COMPOUND_PREDICATE,
    DEFAULT_TABLE,
    OPERATOR,
    PREDICATE,
    Colon,
    Group,
    Lambda,
    Period,
    RecExpr,
    Semicolon,
    Symbol,
    SymbolTable,
    iter_symbols,
)

DEFAULT_BUDGET = 1_000_000


# -- traces -----------------------------------------------------------------

@dataclass(frozen=True)
class SymbolExecuted:
    letter: str
    param: str | None = None
    outcome: bool | None = None

    @property
    def label(self) -> str:
        return self.letter + (self.param or "")


@dataclass(frozen=True)
class GroupEntered:
    pass


@dataclass(frozen=True)
class GroupExited:
    truth: bool


@dataclass(frozen=True)
class Looped:
    pass


Event = Union[SymbolExecuted, GroupEntered, GroupExited, Looped]


@dataclass
class Trace:
    events: list[Event] = field(default_factory=list)
    steps: int = 0

    def calls(self) -> list[SymbolExecuted]:
        return [e for e in self.events if isinstance(e, SymbolExecuted)]

    def word(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.calls())


# -- environments -----------------------------------------------------------

Operator = Callable[[Union[str, None]], None]
Predicate = Callable[[Union[str, None]], bool]

_PREDICATE_KINDS = (PREDICATE, COMPOUND_PREDICATE)


class Env:
    """Letter bindings.  Operators return nothing, predicates a truth value;
    both receive the parameter character (``None`` for simple letters)."""

    def __init__(self):
        self._operators: dict[str, Operator] = {}
        self._predicates: dict[str, Predicate] = {}

    def bind_operator(self, letter: str, fn: Operator):
        self._operators[letter] = fn
        return self

    def bind_predicate(self, letter: str, fn: Predicate):
        self._predicates[letter] = fn
        return self

    def is_bound(self, letter: str, kind: str) -> bool:
        if kind in _PREDICATE_KINDS:
            return letter in self._predicates
        return letter in self._operators

    def call(self, letter: str, param: str | None, kind: str) -> bool | None:
        if not self.is_bound(letter, kind):
            raise UnboundSymbol(f"no {kind} binding for {letter!r}")
        if kind in _PREDICATE_KINDS:
            return bool(self._predicates[letter](param))
        self._operators[letter](param)
        return None

    @property
    def output(self) -> str:
        return ""


class TeletypeEnv(Env):
    """Single-character workspace between a reader and a teletype.

    ``R`` reads a character into the workspace, ``W`` types the workspace,
    ``"x`` loads ``x`` and ``=x`` tests the workspace against ``x``.
    """

    def __init__(self, input: str = ""):
        super().__init__()
        self.input = input
        self.cursor = 0
        self.workspace: str | None = None
        self._out: list[str] = []
        self.bind_operator("R", self._read)
        self.bind_operator("W", self._write)
        self.bind_operator('"', self._load)
        self.bind_predicate("=", self._equals)

    def _read(self, _):
        if self.cursor >= len(self.input):
            raise InputExhausted(f"R after {self.cursor} characters of input")
        self.workspace = self.input[self.cursor]
        self.cursor += 1

    def _write(self, _):
        if self.workspace is None:
            raise EmptyWorkspace("W before anything was placed in the workspace")
        self._out.append(self.workspace)

    def _load(self, x):
        self.workspace = x

    def _equals(self, x):
        return self.workspace == x

    @property
    def output(self) -> str:
        return "".join(self._out)


def make_teletype_env(input: str = "") -> TeletypeEnv:
    return TeletypeEnv(input)


class ScriptedEnv(Env):
    """Every letter is bound; predicates answer from a script.

    ``outcomes`` is either a sequence consumed in order by all predicate
    calls, or a mapping from letter to a fixed answer.  Operators only
    record themselves in ``log``.
    """

    def __init__(self, outcomes: Sequence[bool] | Mapping[str, bool] = ()):
        super().__init__()
        if isinstance(outcomes, Mapping):
            self.assignment: dict[str, bool] | None = dict(outcomes)
            self.script: list[bool] = []
        else:
            self.assignment = None
            self.script = list(outcomes)
        self.position = 0
        self.log: list[tuple[str, str | None, bool | None]] = []

    @classmethod
    def from_seed(cls, seed: int, length: int = 256, p_true: float = 0.5) -> "ScriptedEnv":
        rng = random.Random(seed)
        return cls([rng.random() < p_true for _ in range(length)])

    def is_bound(self, letter: str, kind: str) -> bool:
        if self.assignment is not None and kind in _PREDICATE_KINDS:
            return letter in self.assignment
        return True

    def call(self, letter, param, kind):
        if kind not in _PREDICATE_KINDS:
            self.log.append((letter, param, None))
            return None
        if self.assignment is not None:
            if letter not in self.assignment:
                raise UnboundSymbol(f"no scripted answer for {letter!r}")
            answer = self.assignment[letter]
        else:
            if self.position >= len(self.script):
                raise ScriptExhausted(f"predicate {letter!r} after {self.position} answers")
            answer = self.script[self.position]
            self.position += 1
        self.log.append((letter, param, answer))
        return answer


# -- interpreter ------------------------------------------------------------

def check_bindings(expr: RecExpr, env: Env, table: SymbolTable):
    for sym in iter_symbols(expr.items):
        kind = table.kind(sym.name)
        if not env.is_bound(sym.name, kind):
            raise UnboundSymbol(f"no {kind} binding for {sym.name!r}")


class _Run:
    def __init__(self, env: Env, budget: int, table: SymbolTable):
        self.env = env
        self.budget = budget
        self.table = table
        self.trace = Trace()
        self._after_delimiter: dict[int, list[int | None]] = {}

    def step(self):
        self.trace.steps += 1
        if self.trace.steps > self.budget:
            raise StepBudgetExceeded(f"more than {self.budget} steps")

    def skips(self, group: Group) -> list[int | None]:
        """For each position, the index just past the next delimiter."""
        key = id(group)
        if key not in self._after_delimiter:
            out: list[int | None] = [None] * len(group.items)
            target = None
            for i in range(len(group.items) - 1, -1, -1):
                out[i] = target
                if isinstance(group.items[i], (Colon, Semicolon)):
                    target = i + 1
            self._after_delimiter[key] = out
        return self._after_delimiter[key]

    def group(self, group: Group) -> bool:
        events = self.trace.events
        events.append(GroupEntered())
        items = group.items
        skips = self.skips(group)
        i = 0
        result = False
        while i < len(items):
            self.step()
            item = items[i]
            if isinstance(item, Symbol):
                kind = self.table.kind(item.name)
                outcome = self.env.call(item.name, item.param, kind)
                events.append(SymbolExecuted(item.name, item.param, outcome))
                if outcome is None:
                    outcome = True
            elif isinstance(item, Semicolon):
                result = True
                break
            elif isinstance(item, Colon):
                events.append(Looped())
                i = 0
                continue
            elif isinstance(item, Group):
                outcome = self.group(item)
            elif isinstance(item, Period):
                outcome = False
            elif isinstance(item, Lambda):
                outcome = True
            else:
                raise TypeError(f"not a REC item: {item!r}")
            if outcome:
                i += 1
            elif skips[i] is None:
                result = True
                break
            else:
                i = skips[i]
        events.append(GroupExited(result))
        return result


def run(program: RecExpr, env: Env, budget: int = DEFAULT_BUDGET,
        table: SymbolTable = DEFAULT_TABLE) -> tuple[bool, Trace]:
    top = program.single_group
    if top is None:
        raise ValueError("a program must be a single parenthesized group")
    check_bindings(program, env, table)
    r = _Run(env, budget, table)
    try:
        r.step()
        truth = r.group(top)
    except RecRuntimeError as exc:
        exc.trace = r.trace
        raise
    return truth, r.trace


# -- predicate calculus harness ---------------------------------------------

@dataclass(frozen=True)
class TruthRow:
    assignment: tuple[tuple[str, bool], ...]
    truth: bool
    executed: tuple[str, ...]

    def value(self, letter: str) -> bool:
        return dict(self.assignment)[letter]


def eval_predicate_forms(expr: RecExpr, letters: Iterable[str] | None = None,
                         table: SymbolTable | None = None,
                         budget: int = DEFAULT_BUDGET) -> list[TruthRow]:
    """Run ``expr`` under every assignment of truth values to its letters.

    By default every letter in the expression is taken as an effect-free
    predicate.
    """
    if letters is None:
        letters = list(dict.fromkeys(s.name for s in iter_symbols(expr.items)))
    letters = list(letters)
    if table is None:
        table = SymbolTable(operators=frozenset(), predicates=frozenset(letters),
                            compound_operators=frozenset(), compound_predicates=frozenset())
    rows = []
    for values in itertools.product((False, True), repeat=len(letters)):
        assignment = tuple(zip(letters, values))
        env = ScriptedEnv(dict(assignment))
        truth, trace = run(expr, env, budget, table)
        rows.append(TruthRow(assignment, truth, tuple(e.letter for e in trace.calls())))
    return rows

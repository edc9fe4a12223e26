"""A symbolic machine for wrapped programs, and the VM/emulator comparison.

Addresses are item indices.  Calling a subroutine stores the index just
after the call in the subroutine's entry cell; ``JMP I`` returns through
it and ``ISZ`` bumps it past one more word.  External subroutines (the
letters) are dispatched to an ``Env`` and return to the word after their
parameter words, or one word further when a predicate answers true.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .codegen import (
    Call,
    EntryCell,
    IncrementSkip,
    IndirectJump,
    Jump,
    Label,
    ParamWord,
    Program,
    compile,
    letter_for,
    wrap_subroutine,
)
from .errors import (
    MachineFault,
    RecRuntimeError,
    StepBudgetExceeded,
    UnboundSymbol,
    UndefinedLabel,
)
from .syntax import (
    COMPOUND_OPERATOR,
    COMPOUND_PREDICATE,
    DEFAULT_TABLE,
    PREDICATE,
    RecExpr,
    SymbolTable,
)
from .vm import DEFAULT_BUDGET, Env, ScriptedEnv, SymbolExecuted, TeletypeEnv, Trace, run


@dataclass
class Machine:
    program: Program
    env: Env
    budget: int = DEFAULT_BUDGET
    table: SymbolTable = DEFAULT_TABLE
    pc: int = 0
    cells: dict[str, int] = field(default_factory=dict)
    trace: Trace = field(default_factory=Trace)

    def __post_init__(self):
        self.labels = self.program.labels()
        self.size = len(self.program.items)
        for item in self.program.items:
            if isinstance(item, EntryCell):
                self.cells[item.name] = 0
        for name in sorted(self.program.called()):
            letter = letter_for(name)
            kind = self.table.kind(letter)
            if not self.env.is_bound(letter, kind):
                raise UnboundSymbol(f"no {kind} binding for {letter!r}")

    def target(self, name: str) -> int:
        if name not in self.labels:
            raise UndefinedLabel(f"no label {name}")
        return self.labels[name]

    def cell(self, name: str) -> str:
        if name not in self.cells:
            raise UndefinedLabel(f"no entry cell {name}")
        return name

    def call_entry(self) -> bool:
        """Act as an external ``JMS`` placed just past the program."""
        entry = self.program.entry
        if entry is None:
            raise MachineFault("program has no entry cell; wrap it first")
        caller = self.size
        self.cells[self.cell(entry)] = caller + 1
        self.pc = self.target(entry) + 1
        while True:
            if self.pc == caller + 1:
                return False
            if self.pc == caller + 2:
                return True
            if not 0 <= self.pc < self.size:
                raise MachineFault(f"control left the program at {self.pc}")
            self.execute(self.program.items[self.pc])

    def execute(self, item):
        if isinstance(item, Label):
            self.pc += 1
            return
        if isinstance(item, (ParamWord, EntryCell)):
            raise MachineFault(f"executed a data word {item!r} at {self.pc}")
        self.trace.steps += 1
        if self.trace.steps > self.budget:
            raise StepBudgetExceeded(f"more than {self.budget} instructions")
        if isinstance(item, Call):
            self.external(item.name)
        elif isinstance(item, Jump):
            self.pc = self.target(item.target)
        elif isinstance(item, IncrementSkip):
            name = self.cell(item.cell)
            self.cells[name] += 1
            self.pc += 2 if self.cells[name] == 0 else 1
        elif isinstance(item, IndirectJump):
            self.pc = self.cells[self.cell(item.cell)]
        else:
            raise MachineFault(f"unknown item {item!r}")

    def external(self, name: str):
        letter = letter_for(name)
        kind = self.table.kind(letter)
        ret = self.pc + 1
        param = None
        if kind in (COMPOUND_OPERATOR, COMPOUND_PREDICATE):
            word = self.program.items[ret] if ret < self.size else None
            if not isinstance(word, ParamWord):
                raise MachineFault(f"JMS {name} at {self.pc} has no parameter word")
            param = word.char
            ret += 1
        outcome = self.env.call(letter, param, kind)
        self.trace.events.append(SymbolExecuted(letter, param, outcome))
        if kind in (PREDICATE, COMPOUND_PREDICATE) and outcome:
            ret += 1
        self.pc = ret


def emulate(p: Program, env: Env, budget: int = DEFAULT_BUDGET,
            table: SymbolTable = DEFAULT_TABLE) -> tuple[bool, Trace]:
    m = Machine(p, env, budget, table)
    try:
        truth = m.call_entry()
    except RecRuntimeError as exc:
        exc.trace = m.trace
        raise
    return truth, m.trace


# -- differential check -----------------------------------------------------

@dataclass(frozen=True)
class Outcome:
    truth: bool | None
    error: str | None
    output: str
    calls: tuple[SymbolExecuted, ...]


def _observe(execute: Callable[[Env], tuple[bool, Trace]], env: Env) -> Outcome:
    try:
        truth, trace = execute(env)
        error = None
    except RecRuntimeError as exc:
        truth, trace, error = None, exc.trace or Trace(), type(exc).__name__
    return Outcome(truth, error, env.output, tuple(trace.calls()))


@dataclass(frozen=True)
class Verdict:
    equal: bool
    vm: Outcome
    emulator: Outcome

    def __bool__(self):
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return "Equal"
        parts = []
        for field_name in ("truth", "error", "output", "calls"):
            a, b = getattr(self.vm, field_name), getattr(self.emulator, field_name)
            if a != b:
                parts.append(f"{field_name}: vm={a!r} emulator={b!r}")
        return "Mismatch (" + "; ".join(parts) + ")"


def differential_check(expr: RecExpr, seed: int | None = 0, input: str | None = None,
                       table: SymbolTable = DEFAULT_TABLE,
                       budget: int = DEFAULT_BUDGET, script_length: int = 256,
                       name: str = "REC") -> Verdict:
    """Run ``expr`` in the VM and, compiled, on the machine.

    With ``input`` both sides get a fresh ``TeletypeEnv``; otherwise each
    gets a ``ScriptedEnv`` built from ``seed``.
    """
    def make_env() -> Env:
        if input is not None:
            return TeletypeEnv(input)
        return ScriptedEnv.from_seed(seed or 0, script_length)

    program = wrap_subroutine(compile(expr, table), name)
    a = _observe(lambda env: run(expr, env, budget, table), make_env())
    b = _observe(lambda env: emulate(program, env, budget, table), make_env())
    both_over = a.error == b.error == StepBudgetExceeded.__name__
    return Verdict(both_over or a == b, a, b)

"""REC: regular-expression control structures, their transition systems,
an interpreter, and a PDP-8 style subroutine-call compiler."""

from .automata import (
    Dfa,
    Nfa,
    counterexample,
    determinize,
    epsilon_closure,
    language_equiv,
    rec_to_nfa,
    to_dot,
)
from .codegen import Program, compile, emit_text, parse_text, wrap_subroutine
from .emulator import differential_check, emulate
from .regex import parse_regex, regex_to_rec, thompson_nfa
from .syntax import DEFAULT_TABLE, RecExpr, SymbolTable, parse, parse_ctss, pretty_print
from .vm import ScriptedEnv, TeletypeEnv, Trace, eval_predicate_forms, make_teletype_env, run

__version__ = "0.1.0"

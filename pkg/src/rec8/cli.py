"""``rec`` command line.

Exit status: 0 success or true, 1 false or inequivalent, 2 usage or syntax
error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import automata, codegen, corpus, emulator, examples, regex, syntax, vm
from .errors import RecRuntimeError, RecSyntaxError
from .syntax import (
    Colon,
    Group,
    Lambda,
    Period,
    RecExpr,
    Semicolon,
    Symbol,
    SymbolTable,
)

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2, 3
JSON_SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# -- plumbing ---------------------------------------------------------------

def _to_bytes(text: str) -> bytes:
    return b"".join(c.encode("latin-1") if ord(c) < 256 else c.encode("utf-8") for c in text)


def _write(args, data: str | bytes):
    if isinstance(data, str):
        data = data.encode("utf-8")
    if args.output:
        with open(args.output, "wb") as f:
            f.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _read_input(args) -> str:
    if getattr(args, "input", None):
        with open(args.input, "rb") as f:
            return f.read().decode("latin-1")
    return sys.stdin.buffer.read().decode("latin-1")


def _table(args) -> SymbolTable:
    return SymbolTable.load(args.table) if args.table else syntax.DEFAULT_TABLE


def _source(args, value: str | None) -> str:
    if args.file:
        with open(args.file, encoding="utf-8") as f:
            return f.read()
    if value is None:
        raise UsageError("an expression is required (argument or --file)")
    return value


def _expr(args, value: str | None = None) -> RecExpr:
    text = _source(args, value if value is not None else args.expr)
    table = _table(args)
    return syntax.parse_ctss(text, table) if args.ctss else syntax.parse(text, table)


def _show(args, expr: RecExpr) -> str:
    return syntax.pretty_print(expr, unicode=args.unicode)


def _item_json(item) -> dict:
    if isinstance(item, Group):
        return {"kind": "group", "items": [_item_json(i) for i in item.items]}
    if isinstance(item, Symbol):
        return {"kind": "symbol", "name": item.name, "param": item.param}
    names = {Colon: "colon", Semicolon: "semicolon", Period: "period", Lambda: "lambda"}
    return {"kind": names[type(item)]}


def expr_to_json(expr: RecExpr) -> dict:
    return {"schema_version": JSON_SCHEMA_VERSION, "items": [_item_json(i) for i in expr.items]}


# -- subcommands ------------------------------------------------------------

def cmd_parse(args) -> int:
    expr = _expr(args)
    if args.json:
        _write(args, json.dumps(expr_to_json(expr), ensure_ascii=False, indent=2) + "\n")
    else:
        _write(args, _show(args, expr) + "\n")
    return EXIT_TRUE


def cmd_from_regex(args) -> int:
    r = regex.parse_regex(_source(args, args.regex))
    _write(args, _show(args, regex.regex_to_rec(r, literal=args.literal)) + "\n")
    return EXIT_TRUE


def cmd_nfa(args) -> int:
    nfa = automata.rec_to_nfa(_expr(args), _table(args))
    _write(args, automata.to_json(nfa) + "\n" if args.json else automata.to_dot(nfa))
    return EXIT_TRUE


def _equiv_operand(args, text: str, is_regex: bool) -> automata.Nfa:
    if is_regex:
        return regex.thompson_nfa(regex.parse_regex(text))
    table = _table(args)
    expr = syntax.parse_ctss(text, table) if args.ctss else syntax.parse(text, table)
    return automata.rec_to_nfa(expr, table)


def cmd_equiv(args) -> int:
    a = _equiv_operand(args, args.left, args.regex or args.left_regex)
    b = _equiv_operand(args, args.right, args.regex or args.right_regex)
    word = automata.counterexample(a, b)
    if word is None:
        _write(args, "equivalent\n")
        return EXIT_TRUE
    shown = " ".join(word) if word else "λ"
    _write(args, f"inequivalent: {shown}\n")
    return EXIT_FALSE


def cmd_run(args) -> int:
    expr = _expr(args)
    env = vm.TeletypeEnv(_read_input(args))
    try:
        truth, _ = vm.run(expr, env, args.budget, _table(args))
    finally:
        _write(args, _to_bytes(env.output))
    return EXIT_TRUE if truth else EXIT_FALSE


def _assembled(args) -> codegen.Program:
    if args.asm:
        with open(args.asm, encoding="utf-8") as f:
            return codegen.parse_text(f.read())
    return codegen.wrap_subroutine(codegen.compile(_expr(args), _table(args)), args.name)


def cmd_compile(args) -> int:
    body = codegen.compile(_expr(args), _table(args))
    program = body if args.body_only else codegen.wrap_subroutine(body, args.name)
    _write(args, codegen.emit_text(program))
    return EXIT_TRUE


def cmd_emulate(args) -> int:
    program = _assembled(args)
    env = vm.TeletypeEnv(_read_input(args))
    try:
        truth, _ = emulator.emulate(program, env, args.budget, _table(args))
    finally:
        _write(args, _to_bytes(env.output))
    return EXIT_TRUE if truth else EXIT_FALSE


def cmd_diff(args) -> int:
    if args.corpus:
        cfg = corpus.ProgramCorpusConfig(seed=args.seed, count=args.corpus)
        cases = [(p, i, None) for i, p in enumerate(corpus.program_corpus(cfg))]
        table, budget, length = cfg.table(), min(args.budget, cfg.budget), cfg.script_length
    else:
        text = _read_input(args) if (args.stdin or args.input) else None
        cases = [(_expr(args), args.seed, text)]
        table, budget, length = _table(args), args.budget, 256
    lines, mismatches = [], 0
    for expr, seed, text in cases:
        verdict = emulator.differential_check(expr, seed, text, table, budget, length, args.name)
        mismatches += not verdict.equal
        lines.append(f"{_show(args, expr)}\t{verdict.describe()}\n")
    lines.append(f"{len(cases) - mismatches}/{len(cases)} equal\n")
    _write(args, "".join(lines))
    return EXIT_TRUE if mismatches == 0 else EXIT_FALSE


def cmd_selftest(args) -> int:
    lines = []
    ok = examples.selftest(lines.append)
    _write(args, "\n".join(lines) + "\n")
    return EXIT_TRUE if ok else EXIT_FALSE


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", metavar="FILE", help="symbol table file")
    common.add_argument("--budget", type=int, default=vm.DEFAULT_BUDGET, metavar="N")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--ctss", action="store_true", help="expressions use the CTSS list form")
    common.add_argument("--unicode", action="store_true", help="print ∘ and λ instead of . and \\l")
    common.add_argument("-f", "--file", metavar="FILE", help="read the expression from FILE")
    common.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")
    common.add_argument("--name", default="REC", help="subroutine entry name")

    parser = argparse.ArgumentParser(prog="rec", description="REC expression toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("parse", cmd_parse, "print the canonical form or the syntax tree")
    p.add_argument("expr", nargs="?")
    p.add_argument("--json", action="store_true")

    p = add("from-regex", cmd_from_regex, "transcribe a regular expression into REC")
    p.add_argument("regex", nargs="?")
    p.add_argument("--literal", action="store_true", help="keep nested empty sets as ()")

    p = add("nfa", cmd_nfa, "transition system as DOT or JSON")
    p.add_argument("expr", nargs="?")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="(default)")
    fmt.add_argument("--json", action="store_true")

    p = add("equiv", cmd_equiv, "compare the languages of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--regex", action="store_true", help="both operands are regular expressions")
    p.add_argument("--left-regex", action="store_true")
    p.add_argument("--right-regex", action="store_true")

    p = add("run", cmd_run, "execute against the teletype, reading stdin")
    p.add_argument("expr", nargs="?")
    p.add_argument("--input", metavar="FILE")

    p = add("compile", cmd_compile, "emit assembly text")
    p.add_argument("expr", nargs="?")
    p.add_argument("--body-only", action="store_true", help="omit the subroutine entry and returns")

    p = add("emulate", cmd_emulate, "compile (or load --asm) and run on the emulator")
    p.add_argument("expr", nargs="?")
    p.add_argument("--asm", metavar="FILE", help="assembly text to load instead of compiling")
    p.add_argument("--input", metavar="FILE")

    p = add("diff", cmd_diff, "compare the interpreter and the compiled code")
    p.add_argument("expr", nargs="?")
    p.add_argument("--input", metavar="FILE", help="teletype input (default: scripted predicates)")
    p.add_argument("--stdin", action="store_true", help="teletype input from stdin")
    p.add_argument("--corpus", type=int, metavar="N", help="check N generated programs instead")

    add("selftest", cmd_selftest, "run the worked examples")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, RecSyntaxError, ValueError) as exc:
        print(f"rec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RecRuntimeError as exc:
        print(f"rec: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"rec: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

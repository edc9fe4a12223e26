"""Seeded generators for regexes and REC programs used by the checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .regex import Concat, Lambda as Empty, Phi, Regex, Star, Sym, concat, union
from .syntax import (
    COLON,
    LAMBDA,
    PERIOD,
    SEMICOLON,
    Group,
    RecExpr,
    RecItem,
    Symbol,
    SymbolTable,
)

# the six rows of the regex → REC transcription table
BASE_REGEXES: tuple[Regex, ...] = (
    Phi(),
    Empty(),
    Sym("a"),
    Concat((Sym("a"), Sym("b"))),
    union(Sym("a"), Sym("b")),
    Star(Sym("a")),
)


@dataclass(frozen=True)
class RegexCorpusConfig:
    seed: int = 0
    count: int = 200
    depth: int = 4
    alphabet: str = "ab"


def random_regex(rng: random.Random, depth: int, alphabet: str = "ab") -> Regex:
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.08:
            return Phi()
        if r < 0.18:
            return Empty()
        return Sym(rng.choice(alphabet))
    kind = rng.choice(("concat", "union", "star"))
    if kind == "star":
        return Star(random_regex(rng, depth - 1, alphabet))
    parts = [random_regex(rng, depth - 1, alphabet) for _ in range(rng.randint(2, 3))]
    return concat(*parts) if kind == "concat" else union(*parts)


def regex_corpus(cfg: RegexCorpusConfig = RegexCorpusConfig()) -> list[Regex]:
    rng = random.Random(cfg.seed)
    return [random_regex(rng, cfg.depth, cfg.alphabet) for _ in range(cfg.count)]


@dataclass(frozen=True)
class ProgramCorpusConfig:
    seed: int = 0
    count: int = 100
    depth: int = 3
    max_items: int = 6
    operators: str = "AB"
    predicates: str = "PQ"
    compound_operators: str = '"'
    compound_predicates: str = "="
    params: str = "xy"
    # run settings; the budget comfortably exceeds any run that can
    # terminate before the script of predicate answers is used up
    script_length: int = 64
    budget: int = 100_000

    def table(self) -> SymbolTable:
        return SymbolTable(
            operators=frozenset(self.operators),
            predicates=frozenset(self.predicates),
            compound_operators=frozenset(self.compound_operators),
            compound_predicates=frozenset(self.compound_predicates),
        )


def random_items(rng: random.Random, cfg: ProgramCorpusConfig, depth: int) -> tuple[RecItem, ...]:
    items: list[RecItem] = []
    for _ in range(rng.randint(0, cfg.max_items)):
        r = rng.random()
        if r < 0.22:
            items.append(Symbol(rng.choice(cfg.operators)))
        elif r < 0.44:
            items.append(Symbol(rng.choice(cfg.predicates)))
        elif r < 0.50 and cfg.compound_predicates:
            items.append(Symbol(rng.choice(cfg.compound_predicates), rng.choice(cfg.params)))
        elif r < 0.54 and cfg.compound_operators:
            items.append(Symbol(rng.choice(cfg.compound_operators), rng.choice(cfg.params)))
        elif r < 0.64:
            items.append(SEMICOLON)
        elif r < 0.72:
            items.append(COLON)
        elif r < 0.77:
            items.append(PERIOD)
        elif r < 0.80:
            items.append(LAMBDA)
        elif depth > 0:
            items.append(Group(random_items(rng, cfg, depth - 1)))
    return tuple(items)


def random_program(rng: random.Random, cfg: ProgramCorpusConfig = ProgramCorpusConfig()) -> RecExpr:
    return RecExpr((Group(random_items(rng, cfg, cfg.depth)),))


def program_corpus(cfg: ProgramCorpusConfig = ProgramCorpusConfig()) -> list[RecExpr]:
    rng = random.Random(cfg.seed)
    return [random_program(rng, cfg) for _ in range(cfg.count)]

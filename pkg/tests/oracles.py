"""Independent reference semantics, used only as ground truth in tests."""

import itertools

from rec8 import regex


def regex_words(r, n):
    """All words of length <= n in L(r), by set algebra on the syntax."""
    if isinstance(r, regex.Phi):
        return set()
    if isinstance(r, regex.Lambda):
        return {()}
    if isinstance(r, regex.Sym):
        return {(r.letter,)} if n >= 1 else set()
    if isinstance(r, regex.Union):
        return set().union(*(regex_words(p, n) for p in r.parts))
    if isinstance(r, regex.Concat):
        acc = {()}
        for p in r.parts:
            acc = {u + v for u in acc for v in regex_words(p, n) if len(u) + len(v) <= n}
        return acc
    if isinstance(r, regex.Star):
        inner = regex_words(r.inner, n) - {()}
        acc = {()}
        frontier = {()}
        while frontier:
            frontier = {u + v for u in frontier for v in inner if len(u) + len(v) <= n} - acc
            acc |= frontier
        return acc
    raise TypeError(r)


def words(alphabet, n):
    letters = sorted(alphabet)
    for k in range(n + 1):
        yield from itertools.product(letters, repeat=k)


def accepted(automaton, alphabet, n):
    return {w for w in words(alphabet, n) if automaton.accepts(w)}

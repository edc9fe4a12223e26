"""Check regex -> REC transcription over a seeded corpus of random regexes.

    python scripts/regex_equivalence_sweep.py --count 1000 --depth 5
"""

import argparse
import time
from dataclasses import dataclass, fields

from rec8.automata import counterexample, rec_to_nfa
from rec8.corpus import BASE_REGEXES, RegexCorpusConfig, regex_corpus
from rec8.regex import regex_to_rec, regex_to_text, thompson_nfa
from rec8.syntax import pretty_print


@dataclass(frozen=True)
class SweepConfig(RegexCorpusConfig):
    literal: bool = False  # keep nested empty sets as ()
    show: int = 5          # counterexamples to print


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        flag = "--" + f.name.replace("_", "-")
        if isinstance(f.default, bool):
            ap.add_argument(flag, action="store_true")
        else:
            ap.add_argument(flag, type=type(f.default), default=f.default)
    a = ap.parse_args()
    cfg = SweepConfig(**{f.name: getattr(a, f.name) for f in fields(SweepConfig)})
    cases = list(BASE_REGEXES) + regex_corpus(cfg)
    start = time.perf_counter()
    bad = []
    for r in cases:
        rec = regex_to_rec(r, literal=cfg.literal)
        word = counterexample(thompson_nfa(r), rec_to_nfa(rec))
        if word is not None:
            bad.append((r, rec, word))
    elapsed = time.perf_counter() - start
    print(f"{len(cases) - len(bad)}/{len(cases)} equivalent in {elapsed:.2f}s {cfg}")
    for r, rec, word in bad[:cfg.show]:
        print(f"  {regex_to_text(r)}  ->  {pretty_print(rec)}  differ on {''.join(word) or 'λ'}")


if __name__ == "__main__":
    main()

"""Compare the interpreter with the compiled code on generated programs.

    python scripts/differential_sweep.py --count 1000 --seed 3
"""

import argparse
from collections import Counter
from dataclasses import dataclass, fields

from rec8.corpus import ProgramCorpusConfig, program_corpus
from rec8.emulator import differential_check
from rec8.syntax import pretty_print


@dataclass(frozen=True)
class SweepConfig(ProgramCorpusConfig):
    show: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(SweepConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=type(f.default), default=f.default)
    a = ap.parse_args()
    cfg = SweepConfig(**{f.name: getattr(a, f.name) for f in fields(SweepConfig)})
    table = cfg.table()
    outcomes, bad = Counter(), []
    for seed, program in enumerate(program_corpus(cfg)):
        v = differential_check(program, seed, None, table, cfg.budget, cfg.script_length)
        outcomes[v.vm.error or str(v.vm.truth).upper()] += 1
        if not v.equal:
            bad.append((program, v))
    print(f"{cfg.count - len(bad)}/{cfg.count} equal; vm outcomes {dict(outcomes)}")
    for program, v in bad[:cfg.show]:
        print(f"  {pretty_print(program)}  {v.describe()}")


if __name__ == "__main__":
    main()

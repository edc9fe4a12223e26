"""Write the transition system of a REC expression (or regex) as DOT,
and render it with Graphviz when ``dot`` is on the PATH.

    python scripts/render_nfa.py "(.a:;)" -o star.dot
    python scripts/render_nfa.py --regex "a|b*" -o ab.dot --determinize
"""

import argparse
import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path

from rec8.automata import Nfa, determinize, rec_to_nfa, to_dot
from rec8.regex import parse_regex, regex_to_rec
from rec8.syntax import parse, pretty_print


@dataclass
class RenderConfig:
    source: str
    output: Path = Path("nfa.dot")
    regex: bool = False
    determinize: bool = False
    image_format: str = "svg"


def render(cfg: RenderConfig) -> Path:
    expr = regex_to_rec(parse_regex(cfg.source)) if cfg.regex else parse(cfg.source)
    nfa = rec_to_nfa(expr)
    if cfg.determinize:
        dfa = determinize(nfa)
        # a DFA drawn as an NFA with one edge per (state, symbol)
        nfa = Nfa(dfa.states, dfa.alphabet,
                  tuple((s, a, t) for (s, a), t in sorted(dfa.delta.items())),
                  dfa.initial, dfa.accepting)
    cfg.output.write_text(to_dot(nfa, name=pretty_print(expr)))
    print(f"{pretty_print(expr)}: {len(nfa.states)} states -> {cfg.output}")
    if shutil.which("dot"):
        image = cfg.output.with_suffix("." + cfg.image_format)
        subprocess.run(["dot", "-T" + cfg.image_format, str(cfg.output), "-o", str(image)], check=True)
        print(f"rendered {image}")
    return cfg.output


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source")
    ap.add_argument("-o", "--output", type=Path, default=Path("nfa.dot"))
    ap.add_argument("--regex", action="store_true")
    ap.add_argument("--determinize", action="store_true")
    ap.add_argument("--image-format", default="svg")
    render(RenderConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()

"""Rerun the three printed traces from their first rows and compare with the fixtures."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from g2sca.sca import SCAState, run, scattering_report, trace_text

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


@dataclass
class ExampleConfig:
    name: str
    steps: int
    carrier: int = 10


EXAMPLES = [ExampleConfig("example1", 4), ExampleConfig("example2", 8), ExampleConfig("example3", 7)]


def reproduce(cfg: ExampleConfig) -> bool:
    text = (GOLDEN / f"{cfg.name}.txt").read_text(encoding="utf-8")
    first = SCAState.parse(text.splitlines()[0].split(":", 1)[1])
    sim = run(first, cfg.carrier, cfg.steps)
    same = trace_text(sim.rows) == text
    print(f"== {cfg.name}: {'matches fixture' if same else 'DIFFERS from fixture'}")
    print(trace_text(sim.rows), end="")
    print(scattering_report(first, cfg.carrier).text())
    print()
    return same


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help="subset of example1 example2 example3")
    args = ap.parse_args()
    chosen = [c for c in EXAMPLES if not args.names or c.name in args.names]
    raise SystemExit(0 if all(reproduce(c) for c in chosen) else 1)


if __name__ == "__main__":
    main()

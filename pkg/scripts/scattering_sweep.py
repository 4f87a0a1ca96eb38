"""Two-soliton scattering against the A1 rule, over label pairs, carriers and initial gaps.

    python scripts/scattering_sweep.py --gaps 1 2 3 --out results/sweep.json
"""

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path

from g2sca.a1 import A1Element
from g2sca.sca import predict_two_body, scattering_report
from g2sca.verify import two_soliton_state


@dataclass
class SweepConfig:
    pairs: list = field(default_factory=lambda: [(2, 1), (3, 1), (3, 2)])
    rmax: int = 5
    gaps: list = field(default_factory=lambda: [1, 2, 5])
    max_steps: int = 64
    out: str | None = None


def sweep(cfg: SweepConfig):
    rows = []
    for l1, l2 in cfg.pairs:
        for r in range(l2 + 1, cfg.rmax + 1):
            for gap in cfg.gaps:
                tally = Counter()
                shifts = Counter()
                for x in range(3 * l1 + 1):
                    for y in range(3 * l2 + 1):
                        b1, b2 = A1Element(x, 3 * l1 - x), A1Element(y, 3 * l2 - y)
                        rep = scattering_report(two_soliton_state(b1, b2, gap), r, cfg.max_steps)
                        pred = predict_two_body((0, b1), (-(l1 + gap), b2))
                        tally["agree" if rep.agreement else "disagree"] += 1
                        shifts[pred.shift_long] += 1
                rows.append({"l1": l1, "l2": l2, "r": r, "gap": gap, **tally,
                             "long_shift_counts": dict(sorted(shifts.items()))})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=SweepConfig.rmax)
    ap.add_argument("--gaps", type=int, nargs="+")
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = SweepConfig(rmax=args.rmax, out=args.out)
    if args.gaps:
        cfg.gaps = args.gaps
    rows = sweep(cfg)
    for row in rows:
        print(f"l1={row['l1']} l2={row['l2']} r={row['r']} gap={row['gap']:>2}  "
              f"agree={row.get('agree', 0):>3} disagree={row.get('disagree', 0):>3}  "
              f"long-soliton shifts {row['long_shift_counts']}")
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))


if __name__ == "__main__":
    main()

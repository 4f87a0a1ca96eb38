"""Run every verification suite and write one JSON report per suite.

    python scripts/run_verification.py --level 3 --out results/verify
"""

import argparse
import time
from dataclasses import replace
from pathlib import Path

from g2sca.verify import SUITES, Bounds, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", type=int, default=Bounds.level)
    ap.add_argument("--energy-one-length", type=int, default=Bounds.energy_one_length)
    ap.add_argument("--carrier-max", type=int, default=Bounds.carrier_max)
    ap.add_argument("--suites", nargs="+", default=list(SUITES))
    ap.add_argument("--out", default="results/verify")
    args = ap.parse_args()
    bounds = replace(Bounds(), level=args.level, energy_one_length=args.energy_one_length,
                     carrier_max=args.carrier_max)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    ok = True
    for name in args.suites:
        t = time.perf_counter()
        report = run_suite(name, None, bounds)
        (out / f"{name}.json").write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"{report.summary()}  [{time.perf_counter() - t:.1f}s]")
        ok &= report.passed
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()

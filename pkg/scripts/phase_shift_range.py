"""Range of the two-body phase shift 2*l2 + H-hat over all label pairs."""

import argparse
from dataclasses import dataclass

from g2sca.a1 import A1Element
from g2sca.sca import predict_two_body


@dataclass
class RangeConfig:
    lmax: int = 6


def shift_range(l1, l2):
    shifts = set()
    for x in range(3 * l1 + 1):
        for y in range(3 * l2 + 1):
            pred = predict_two_body((0, A1Element(x, 3 * l1 - x)), (-20, A1Element(y, 3 * l2 - y)))
            shifts.add(pred.shift_long)
    return min(shifts), max(shifts)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lmax", type=int, default=RangeConfig.lmax)
    cfg = RangeConfig(**vars(ap.parse_args()))
    print("l1 l2  min  max  bound")
    for l1 in range(2, cfg.lmax + 1):
        for l2 in range(1, l1):
            lo, hi = shift_range(l1, l2)
            print(f"{l1:>2} {l2:>2} {lo:>4} {hi:>4}  [{-l2}, {2 * l2}]")


if __name__ == "__main__":
    main()

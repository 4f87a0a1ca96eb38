"""g2sca command line: enum, r, sca, verify."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .crystal import (B1, EMPTY_LETTER, as_fractions, PerfectCrystal, coord, coord_tableau, crystal_edges,
                      membership_failure, tableau_coord, validate_tableau)
from .rmatrix import r_apply, r_insertion
from .sca import (CarrierError, PaddingError, SCAState, parse_tokens, run, scattering_report,
                  trace_json, trace_text)
from .verify import SUITES, Bounds, run_suite

EDGE_COLORS = {0: "red", 1: "blue", 2: "darkgreen"}


class UsageError(Exception):
    pass


def tableau_text(entries) -> str:
    return " ".join(entries) if entries else EMPTY_LETTER


def element_text(b, l: int) -> str:
    return tableau_text(coord_tableau(b, l))


def parse_element(text: str, l: int):
    """Tableau tokens or a coordinate tuple '(a,b,c,d,e,f)' with entries like 1/3."""
    text = text.strip()
    if text.startswith("("):
        parts = [p.strip() for p in text.strip("()").split(",")]
        try:
            b = coord(*parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad coordinates {text!r}: {exc}") from None
        problem = membership_failure(b, l)
        if problem:
            raise UsageError(f"{text} is not in B_{l}: {problem}")
        return b
    tokens = parse_tokens(text)
    if tokens == [EMPTY_LETTER]:
        tokens = []
    if len(tokens) > l:
        raise UsageError(f"tableau {text!r} has {len(tokens)} entries, more than level {l}")
    if not validate_tableau(tokens):
        raise UsageError(f"{text!r} is not a restricted semistandard tableau")
    return tableau_coord(tokens)


def cmd_enum(args) -> int:
    if args.level < 1:
        raise UsageError(f"level must be at least 1, got {args.level}")
    c = PerfectCrystal(args.level)
    elements = c.elements()
    names = {b: element_text(b, args.level) for b in elements}
    edges = crystal_edges(c, elements)
    if args.format == "dot":
        lines = [f"digraph B_{args.level} {{"]
        for b in elements:
            lines.append(f'  "{names[b]}";')
        for src, dst, i in edges:
            lines.append(f'  "{names[src]}" -> "{names[dst]}" [label="{i}", color={EDGE_COLORS[i]}];')
        lines.append("}")
        print("\n".join(lines))
    else:
        doc = {
            "level": args.level,
            "size": len(elements),
            "elements": [{"tableau": list(coord_tableau(b, args.level)),
                          "coord": [str(x) for x in as_fractions(b)]} for b in elements],
            "edges": [{"source": names[s], "target": names[t], "color": i} for s, t, i in edges],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


def cmd_r(args) -> int:
    if args.level < 1:
        raise UsageError(f"level must be at least 1, got {args.level}")
    parts = args.lhs.split(".")
    if len(parts) != 2:
        raise UsageError("expected 'b . beta' with one '.' between the factors")
    b = parse_element(parts[0], args.level)
    beta = parse_tokens(parts[1])
    if len(beta) != 1 or not B1.contains(beta[0]):
        raise UsageError(f"right factor must be a single letter of B_1, got {parts[1]!r}")
    w = (b, beta[0])
    (letter, image), h = r_apply(args.level, w)
    if args.algo == "insertion":
        letter, image = r_insertion(args.level, w)
    out = f"{letter} . {element_text(image, args.level)}"
    if args.format == "json":
        print(json.dumps({"level": args.level, "input": args.lhs.strip(), "image": out,
                          "energy": h, "algo": args.algo}, sort_keys=True))
    else:
        print(out)
        print(f"H = {h}")
    return 0


def _read_state(args) -> SCAState:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
        # first line; an optional 't=0:' prefix is dropped
        text = re.sub(r"^\s*t=\d+:", "", text.strip().splitlines()[0])
    elif args.state:
        text = args.state
    else:
        raise UsageError("give a state with --state or --input")
    return SCAState(tuple(parse_tokens(text)))


def cmd_sca(args) -> int:
    if args.carrier < 1:
        raise UsageError(f"carrier level must be at least 1, got {args.carrier}")
    p = _read_state(args)
    sim = run(p, args.carrier, args.steps)
    report = scattering_report(p, args.carrier, args.max_steps) if args.predict else None
    if args.format == "json":
        doc = json.loads(trace_json(sim, args.carrier))
        if report is not None:
            doc["scattering"] = report.as_dict()
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        sys.stdout.write(trace_text(sim.rows))
        if report is not None:
            print(report.text())
    if report is not None and not report.agreement:
        return 1
    return 0


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    if args.level is not None and args.level < 1:
        raise UsageError(f"level must be at least 1, got {args.level}")
    bounds = Bounds()
    reports = [run_suite(name, args.level, bounds) for name in names]
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:5]:
                if f is not None:
                    print(f"  input={f['input']} expected={f['expected']} got={f['got']}")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2sca", description="G2(1) crystals and soliton cellular automaton")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enum", help="export the crystal graph of B_l")
    e.add_argument("--level", type=int, required=True)
    e.add_argument("--format", choices=("dot", "json"), default="dot")
    e.set_defaults(func=cmd_enum)

    r = sub.add_parser("r", help="apply the combinatorial R on B_l (x) B_1")
    r.add_argument("--level", type=int, required=True)
    r.add_argument("--lhs", required=True, help='e.g. "2 2_3 b2_1 . 0"')
    r.add_argument("--algo", choices=("path", "insertion"), default="path")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_r)

    s = sub.add_parser("sca", help="run the automaton")
    s.add_argument("--state", help="whitespace separated letter tokens")
    s.add_argument("--input", help="file whose first line is the state")
    s.add_argument("--carrier", type=int, default=10)
    s.add_argument("--steps", type=int, default=4)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--predict", action="store_true", help="compare with the scattering rule")
    s.add_argument("--max-steps", type=int, default=64)
    s.set_defaults(func=cmd_sca)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--level", type=int)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PaddingError, CarrierError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

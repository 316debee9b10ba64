"""Command-line front end: ``colorvir {jacobi,classify,realize,involutions}``.

Exit codes: 0 when the check passes, 1 when a mathematical failure is
detected, 2 on usage or parameter errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import stabilization_scan
from .core import RHO_MODES, DomainError, ParamError, Window, params
from .involutions import KINDS as INVOLUTIONS, verify_involution
from .jacobi import ALGEBRAS, verify_window
from .uea import verify_realization

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _window_size(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"window must be >= 1, got {n}")
    return n


def _window_list(text: str) -> list:
    sizes = [_window_size(t) for t in text.split(",") if t.strip()]
    if not sizes:
        raise argparse.ArgumentTypeError("empty window list")
    if sorted(set(sizes)) != sizes:
        raise argparse.ArgumentTypeError("windows must be strictly increasing")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l1", required=True, help="spin l1 (e.g. 0, 1/2, 3/2)")
    common.add_argument("--l2", required=True, help="spin l2")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                        help="maximum worker processes (default: all cores)")

    parser = _Parser(prog="colorvir", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("jacobi", parents=[common], help="exhaustive graded Jacobi check")
    p.add_argument("--window", type=_window_size, default=4)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--rho-mode", choices=RHO_MODES, default="corrected")
    p.add_argument("--algebra", choices=ALGEBRAS, default="color")

    p = sub.add_parser("classify", parents=[common], help="central extensions by window")
    p.add_argument("--windows", type=_window_list, default=[4, 5, 6])
    p.add_argument("--rho-mode", choices=RHO_MODES, default="corrected")
    p.add_argument("--no-representatives", action="store_true",
                   help="omit cocycle representatives from the JSON report")

    p = sub.add_parser("realize", parents=[common], help="enveloping-algebra realization check")
    p.add_argument("--window", type=_window_size, default=4)
    p.add_argument("--extended", action="store_true")

    p = sub.add_parser("involutions", parents=[common], help="adjoint/superadjoint check")
    p.add_argument("--kind", choices=INVOLUTIONS, required=True)
    p.add_argument("--window", type=_window_size, default=4)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--samples", type=int, default=64)
    return parser


# --------------------------------------------------------------------------
# commands: each returns (exit code, json payload, table lines)

def cmd_jacobi(args) -> tuple:
    prm = params(args.l1, args.l2, args.extended, args.rho_mode)
    w = Window.square(args.window)
    rep = verify_window(prm, w, algebra=args.algebra, workers=max(1, args.workers))
    lines = [f"jacobi  l1={prm.l1} l2={prm.l2} extended={prm.extended} "
             f"rho={prm.rho_mode} algebra={args.algebra} window={args.window}",
             f"triples  total={rep.triples_total} checked={rep.triples_checked} "
             f"escaped={rep.escaped} failures={len(rep.failures)}"]
    for shape, n in sorted(rep.failure_shapes().items()):
        lines.append(f"  shape {','.join(shape):<10} {n}")
    for t, res in rep.failures[:20]:
        lines.append(f"  {', '.join(map(str, t))}: {res!r}")
    return (EXIT_OK if rep.ok else EXIT_FAIL), rep.to_json(), lines


def cmd_classify(args) -> tuple:
    prm = params(args.l1, args.l2)
    windows = [Window.square(n) for n in args.windows]
    scan = stabilization_scan(prm, windows, rho_mode=args.rho_mode)
    last = scan.reports[-1]
    payload = scan.to_json()
    payload["largest"] = last.to_json(representatives=not args.no_representatives)
    payload["theoremMatch"] = last.theorem_match
    payload["rhoMode"] = args.rho_mode
    lines = [f"classify  l1={prm.l1} l2={prm.l2} rho={args.rho_mode}",
             f"{'window':>6}  {'(0,0)':>5} {'(0,1)':>5} {'(1,0)':>5} {'(1,1)':>5}  total  match"]
    for n, dims, rep in zip(args.windows, scan.dims, scan.reports):
        lines.append(f"{n:>6}  " + " ".join(f"{d:>5}" for d in dims)
                     + f"  {sum(dims):>5}  {rep.theorem_match}")
    stable = scan.stable_from
    lines.append(f"stable from window: {stable.m_max if stable else 'not observed'}")
    for s in last.sectors:
        if s.theorem_symbols:
            lines.append(f"  sector {s.sector}: {', '.join(s.theorem_symbols)}")
    return (EXIT_OK if last.theorem_match else EXIT_FAIL), payload, lines


def cmd_realize(args) -> tuple:
    prm = params(args.l1, args.l2, args.extended)
    rep = verify_realization(prm, Window.square(args.window))
    lines = [f"realize  l1={prm.l1} l2={prm.l2} window={args.window}",
             f"pairs checked={rep.pairs_checked} mismatches={len(rep.mismatches)}"]
    for (a, b), u, t in rep.mismatches[:20]:
        lines.append(f"  [{a},{b}]: uea={u!r} table={t!r}")
    return (EXIT_OK if rep.ok else EXIT_FAIL), rep.to_json(), lines


def cmd_involutions(args) -> tuple:
    prm = params(args.l1, args.l2, args.extended)
    rep = verify_involution(args.kind, prm, Window.square(args.window),
                            seed=args.seed, samples=args.samples)
    payload = rep.to_json()
    payload["seed"] = args.seed
    lines = [f"{args.kind}  l1={prm.l1} l2={prm.l2} extended={prm.extended} "
             f"window={args.window}",
             f"generators={rep.generators} pairs={rep.pairs} samples={rep.samples}"]
    for name, bad in rep.failures.items():
        lines.append(f"  {name:<11} {'ok' if not bad else f'{len(bad)} failures'}")
    return (EXIT_OK if rep.ok else EXIT_FAIL), payload, lines


COMMANDS = {"jacobi": cmd_jacobi, "classify": cmd_classify,
            "realize": cmd_realize, "involutions": cmd_involutions}


def render_json(command: str, code: int, payload: dict) -> str:
    doc = {"schemaVersion": SCHEMA_VERSION, "command": command,
           "status": "pass" if code == EXIT_OK else "fail", "report": payload}
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, payload, lines = COMMANDS[args.command](args)
    except (ParamError, DomainError) as exc:
        print(f"colorvir {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = render_json(args.command, code, payload)
    else:
        lines.append("PASS" if code == EXIT_OK else "FAIL")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

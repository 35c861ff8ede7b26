"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from .brackets import check_homogeneous, seed_from_graph
from .builtins import BUILTINS, builtin_surfaces, load_surface
from .holonomy import parse_word, trace, trace_numeric
from .moves import FlipError, flip, mutate_lambda, random_point, tropical_mutate
from .qtorus import QLaurent, commutator, poisson
from .suites import SUITES, closed_curves, run_suite
from .surface import SurfaceError, parse_surface, validate

__all__ = ["main", "run", "builtin_surfaces"]


class InputError(Exception):
    pass


def _emit(val: QLaurent, fmt: str) -> list[str]:
    return val.to_lines() if fmt == "lines" else [val.to_text()]


def _surface(source: str):
    try:
        return load_surface(source)
    except SurfaceError as exc:
        raise InputError(str(exc)) from None


def _word(text: str | None, flag: str = "--word"):
    if not text:
        raise InputError(f"{flag} is required")
    try:
        return parse_word(text)
    except ValueError as exc:
        raise InputError(f"{flag}: {exc}") from None


def _trace(graph, word, mode: str) -> QLaurent:
    try:
        return trace(word, graph.basis, mode)
    except (KeyError, ValueError) as exc:
        raise InputError(f"cannot trace {word}: {exc}") from None


# ---- commands

def cmd_validate(args, out) -> int:
    if args.surface in BUILTINS:
        graph = load_surface(args.surface)
    else:
        try:
            with open(args.surface, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{args.surface}: {exc.strerror}") from None
        try:
            graph = parse_surface(text, strict=False, name=args.surface)
        except SurfaceError as exc:
            raise InputError(f"{args.surface}: {exc}") from None
    rep = validate(graph)
    out.extend(rep.lines())
    return 0 if rep.ok else 1


def cmd_trace(args, out) -> int:
    graph = _surface(args.surface)
    word = _word(args.word)
    val = _trace(graph, word, args.mode)
    try:
        graph.path_from_word(word)
    except (KeyError, ValueError):
        print(f"note: {word} is not a path on {graph.name}; tracing it as a formal product",
              file=sys.stderr)
    out.extend(_emit(val, args.format))
    return 0


def cmd_bracket(args, out) -> int:
    graph = _surface(args.surface)
    f = _trace(graph, _word(args.word), "classical")
    g = _trace(graph, _word(args.word2, "--word2"), "classical")
    out.extend(_emit(poisson(f, g), args.format))
    return 0


def cmd_commute(args, out) -> int:
    """Commutator of two words, or the homogeneous relations of the dual seed."""
    graph = _surface(args.surface)
    if args.word:
        f = _trace(graph, _word(args.word), "quantum")
        g = _trace(graph, _word(args.word2, "--word2"), "quantum")
        out.extend(_emit(commutator(f, g), args.format))
        return 0
    try:
        seed = seed_from_graph(graph)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    pairs = check_homogeneous(seed)
    for p in pairs:
        out.append(p.line() + f" reversed={'pass' if p.reversed_ok else 'fail'}")
    return 0 if all(p.ok for p in pairs) else 1


def cmd_flip(args, out) -> int:
    graph = _surface(args.surface)
    if not args.edge:
        raise InputError("--edge is required")
    try:
        ev = flip(graph, args.edge)
    except FlipError as exc:
        raise InputError(str(exc)) from None
    out.extend(ev.substitution())
    out.extend(ev.after.to_text().splitlines())
    # closed geodesic lengths must survive the flip
    rng = np.random.default_rng(args.rng_seed)
    worst = 0.0
    curves = closed_curves(graph, 8, 12)
    moved = [(w, ev.transport_word(d, True, rng)[1]) for d, w in curves]
    for _ in range(args.points):
        values, omega = random_point(graph, rng)
        new = ev.apply(values, omega)
        for w, nw in moved:
            before, after = trace_numeric(w, values, omega), trace_numeric(nw, new, omega)
            worst = max(worst, abs(before - after) / max(1.0, abs(before)))
    ok = worst <= args.tol
    out.append(f"invariance over {len(curves)} closed curves x {args.points} points: "
               f"max relative error {worst:.3g} {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_mutate(args, out) -> int:
    graph = _surface(args.surface)
    try:
        seed = seed_from_graph(graph)
        _, name, val = mutate_lambda(seed, args.arc or "", mode=args.mode)
    except (FlipError, ValueError) as exc:
        raise InputError(str(exc)) from None
    out.append(f"{args.arc} -> {name}")
    out.extend(_emit(val, args.format))
    return 0


def _lengths(text: str | None) -> dict[str, int]:
    if not text:
        raise InputError("--lengths is required, e.g. l_a=1,l_b=0")
    out = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        try:
            if not sep:
                raise ValueError
            out[key.strip()] = int(val)
        except ValueError:
            raise InputError(f"--lengths: cannot read {part!r}") from None
    return out


def cmd_tropical(args, out) -> int:
    graph = _surface(args.surface)
    try:
        seed = seed_from_graph(graph)
        lengths = _lengths(args.lengths)
        missing = [a for a in seed.names if a not in lengths]
        if missing:
            raise InputError("--lengths is missing " + ", ".join(missing))
        res = tropical_mutate(seed, lengths, args.arc or "")
    except (FlipError, ValueError, KeyError) as exc:
        raise InputError(str(exc)) from None
    out.extend(f"{k}={v}" for k, v in res.items())
    return 0


def cmd_suite(args, out) -> int:
    try:
        items = run_suite(args.name, args.rng_seed, args.points)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    for item in items:
        out.append(item.line())
        out.extend("    " + n for n in item.notes)
    failed = sum(not i.ok for i in items)
    out.append(f"{len(items) - failed}/{len(items)} passed")
    return 1 if failed else 0


COMMANDS = {
    "validate": cmd_validate, "trace": cmd_trace, "bracket": cmd_bracket,
    "commute": cmd_commute, "flip": cmd_flip, "mutate": cmd_mutate,
    "tropical": cmd_tropical, "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("classical", "quantum"), default="classical")
    common.add_argument("--rng-seed", type=int, default=42)
    common.add_argument("--points", type=int, default=10)
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--format", choices=("text", "lines"), default="text")

    p = argparse.ArgumentParser(prog="qshear", description="Shear coordinates, holonomy traces and their checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, surface=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if surface:
            sp.add_argument("--surface", required=True, help="built-in name or surface file")
        return sp

    add("validate", "check a surface file")
    add("trace", "trace of a path word").add_argument("--word")
    for name, help_ in (("bracket", "Poisson bracket of two traces"),
                        ("commute", "commutator of two traces, or the seed's homogeneous relations")):
        sp = add(name, help_)
        sp.add_argument("--word")
        sp.add_argument("--word2")
    add("flip", "flip an inner edge").add_argument("--edge")
    add("mutate", "mutate a dual arc").add_argument("--arc")
    sp = add("tropical", "tropical mutation of integer lengths")
    sp.add_argument("--arc")
    sp.add_argument("--lengths", help="comma-separated name=int")
    sp = add("suite", "run an acceptance suite", surface=False)
    sp.add_argument("name", help=" | ".join(SUITES))
    return p


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), ""
    out: list[str] = []
    try:
        code = COMMANDS[args.command](args, out)
    except InputError as exc:
        return 2, f"error: {exc}\n"
    return code, "".join(line + "\n" for line in out)


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(argv)
    stream = sys.stderr if code == 2 else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``oddcolour colour | verify | generate``."""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass

from .classes import (
    bounded_degree_bound,
    bounded_degree_colouring,
    girth7_bound,
    girth7_colouring,
    planar_girth11_colouring,
)
from .errors import ClassError, InfeasibleError, OddColouringError, PreconditionError, SizeError
from .exact import chi_odd_exact, first_odd_component
from .generators import generate
from .graph import Graph, bits, format_edge_list, read_edge_list
from .interval import (
    IntervalRepresentation,
    format_intervals,
    interval_colouring,
    proper_interval_colouring,
    read_intervals,
)
from .modular import colour_modular, read_modules
from .verify import dumps_certificate, loads_certificate, verify_colouring

ALGORITHMS = ("auto", "bounded-degree", "girth7", "planar-girth11", "modular",
              "interval", "proper-interval", "exact")

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3, 4

log = logging.getLogger("oddcolour")


@dataclass
class RunConfig:
    command: str
    graph: str | None = None
    certificate: str | None = None
    algo: str = "auto"
    intervals: str | None = None
    modules: str | None = None
    seed: int | None = None
    cap: int | None = None
    out: str | None = None
    family: str | None = None
    params: tuple = ()


class _Missing(PreconditionError):
    pass


def _run_algorithm(name, g: Graph, rep, parts, cap):
    """Return ``(colouring, bound)`` for one named algorithm."""
    if name == "bounded-degree":
        return bounded_degree_colouring(g), bounded_degree_bound(g)
    if name == "girth7":
        return girth7_colouring(g), girth7_bound(g.n)
    if name == "planar-girth11":
        return planar_girth11_colouring(g), 3
    if name == "exact":
        k, c = chi_odd_exact(g, cap)
        return c, k
    if name in ("interval", "proper-interval"):
        if rep is None:
            raise _Missing(f"--algo {name} needs --intervals")
        if name == "interval":
            return interval_colouring(g, rep), 6
        return proper_interval_colouring(g, rep), 3
    if name == "modular":
        if parts is None:
            raise _Missing("--algo modular needs --modules")
        return colour_modular(g, parts)
    raise PreconditionError(f"unknown algorithm {name!r}")


def _auto_order(g, rep, parts):
    order = []
    if rep is not None:
        if rep.is_proper():
            order.append("proper-interval")
        order.append("interval")
    if parts is not None:
        order.append("modular")
    order += ["planar-girth11", "girth7", "bounded-degree"]
    return order


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_colour(cfg: RunConfig) -> int:
    try:
        g = read_edge_list(cfg.graph)
        rep = read_intervals(cfg.intervals, g.n) if cfg.intervals else None
        parts = read_modules(cfg.modules, g.n) if cfg.modules else None
        if rep is not None:
            rep.check(g)
    except (OSError, ValueError) as exc:
        if isinstance(exc, PreconditionError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    odd = first_odd_component(g)
    if odd is not None:
        print(f"infeasible: component {sorted(bits(odd))} has odd order", file=sys.stderr)
        return EXIT_INFEASIBLE
    names = _auto_order(g, rep, parts) if cfg.algo == "auto" else [cfg.algo]
    last = None
    for name in names:
        try:
            c, bound = _run_algorithm(name, g, rep, parts, cfg.cap)
        except InfeasibleError as exc:
            print(f"infeasible: {exc}", file=sys.stderr)
            return EXIT_INFEASIBLE
        except (ClassError, PreconditionError, SizeError) as exc:
            log.info("%s not applicable: %s", name, exc)
            last = exc
            continue
        report = verify_colouring(g, c)
        if not report.valid:
            print(f"internal error: {name} produced an invalid colouring\n{report.summary()}", file=sys.stderr)
            return EXIT_INVALID
        try:
            _write(dumps_certificate(c, name, bound), cfg.out)
        except OSError as exc:
            print(f"error: cannot write certificate: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"{name}: {len(c)} classes (bound {bound})", file=sys.stderr)
        return EXIT_OK
    print(f"error: {last}", file=sys.stderr)
    return EXIT_PRECONDITION


def cmd_verify(cfg: RunConfig) -> int:
    try:
        g = read_edge_list(cfg.graph)
        with open(cfg.certificate, encoding="utf-8") as fh:
            c, data = loads_certificate(fh.read())
    except (OSError, ValueError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    report = verify_colouring(g, c)
    if report.valid:
        print(f"valid: {len(c)} classes")
        return EXIT_OK
    print("invalid")
    print(report.summary())
    return EXIT_INVALID


def summary(g: Graph) -> str:
    comps = g.component_masks()
    odd = sum(1 for c in comps if c.bit_count() % 2)
    gi = g.girth()
    parity = "all even" if not odd else f"{odd} odd"
    return (f"n={g.n} m={g.m} girth={'inf' if gi is None else gi} max_degree={g.max_degree()} "
            f"components={len(comps)} ({parity})")


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def cmd_generate(cfg: RunConfig) -> int:
    try:
        params = [_number(p) for p in cfg.params]
        made = generate(cfg.family, *params, seed=cfg.seed)
    except (TypeError, ValueError, OddColouringError) as exc:
        print(f"error: bad family spec: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    rep = parts = None
    if isinstance(made, tuple):
        g, extra = made
        if isinstance(extra, IntervalRepresentation):
            rep = extra
        else:
            parts = extra
    else:
        g = made
    try:
        _write(format_edge_list(g), cfg.out)
        if cfg.out is not None:
            if rep is not None:
                _write(format_intervals(rep), cfg.out + ".intervals")
            if parts is not None:
                _write("".join(" ".join(map(str, p)) + "\n" for p in parts), cfg.out + ".modules")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    print(summary(g), file=sys.stdout if cfg.out else sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oddcolour", description="Odd colourings of graphs.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log algorithm selection")
    sub = ap.add_subparsers(dest="command", required=True)

    col = sub.add_parser("colour", help="colour an edge-list graph and print a certificate")
    col.add_argument("graph")
    col.add_argument("--algo", choices=ALGORITHMS, default="auto")
    col.add_argument("--intervals", help="interval file: 'v lo_num lo_den hi_num hi_den' per line")
    col.add_argument("--modules", help="module file: one part per line")
    col.add_argument("--seed", type=int, help="accepted for symmetry; every algorithm is deterministic")
    col.add_argument("--cap", type=int, help="vertex cap for --algo exact")
    col.add_argument("--out", help="write the certificate here instead of stdout")

    ver = sub.add_parser("verify", help="check a certificate against a graph")
    ver.add_argument("graph")
    ver.add_argument("certificate")

    gen = sub.add_parser("generate", help="write a graph from a named family")
    gen.add_argument("family")
    gen.add_argument("params", nargs="*")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", help="edge-list path; side files get .intervals / .modules appended")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k != "verbose"})
    handler = {"colour": cmd_colour, "verify": cmd_verify, "generate": cmd_generate}[cfg.command]
    return handler(cfg)


if __name__ == "__main__":
    sys.exit(main())

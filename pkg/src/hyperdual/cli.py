"""Command-line entry point.

Exit codes: 0 dual (or nothing found), 1 not dual / new transversal
found, 2 input or precondition error.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from typing import Optional

from . import formats
from .assignment import augment, witness_side, witness_transversal
from .core import Instance, is_simple, members, minimize
from .formats import FormatError, format_set
from .generators import exp_family, random_simple
from .labels import sigma_of_labels
from .solver import (
    IntersectionPropertyError,
    SearchStats,
    Status,
    check_dual,
    check_simple_ip,
    det_new_transversal,
    dualize,
    minimize_transversal,
    nd_check_random,
    search_label_sets,
)

log = logging.getLogger("hyperdual")

EXIT_DUAL, EXIT_NOT_DUAL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as err:
        raise InputError(f"{path}: {err}") from err


def _load_pair(args) -> Instance:
    try:
        parsed = formats.parse_pair(_read(args.file), drop_isolated=args.drop_isolated)
    except FormatError as err:
        raise InputError(f"{args.file}: {err}") from err
    for w in parsed.warnings:
        log.warning(w)
    return parsed.instance


def _names(i: Instance):
    return i.g.names or tuple(str(v) for v in range(i.n))


def _as_list(mask: Optional[int], names) -> Optional[list[str]]:
    if mask is None:
        return None
    return [names[v] for v in members(mask)]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


# -- check ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    i = _load_pair(args)
    names = _names(i)
    stats = SearchStats()
    verdict = check_dual(i, stats)
    cert = verdict.certificate
    payload = {
        "status": verdict.status.value,
        "reason": verdict.reason.value if verdict.reason else None,
        "certificate": None,
        "stats": stats.as_dict(),
    }
    lines = [f"status: {verdict.status.value}"]
    if verdict.reason:
        lines.append(f"reason: {verdict.reason.value}")
    if cert is not None:
        payload["certificate"] = {
            "in": _as_list(cert.included, names),
            "ex": _as_list(cert.excluded, names),
            "new_transversal": _as_list(cert.new_transversal, names),
        }
        if cert.edges is not None:
            payload["certificate"]["edges"] = list(cert.edges)
            lines.append(f"offending edges: {cert.edges[0]} {cert.edges[1]}")
        if cert.new_transversal is not None:
            lines.append(f"new transversal: {format_set(cert.new_transversal, names)}")
            lines.append(f"witness in: {format_set(cert.included, names)}")
            lines.append(f"witness ex: {format_set(cert.excluded, names)}")
    lines.append(f"depth: {stats.recursion_depth_max}  calls: {stats.calls}")
    _emit(args, payload, lines)
    return EXIT_DUAL if verdict.status is Status.DUAL else EXIT_NOT_DUAL


# -- find ----------------------------------------------------------------------------


def _find_recursive(i: Instance, stats: SearchStats) -> dict:
    witness = det_new_transversal(i, stats=stats)
    if witness is None:
        return {}
    t = witness_transversal(i, witness)
    return {"in": witness.included, "ex": witness.excluded, "transversal": t}


def _find_enum(i: Instance, args, stats: SearchStats) -> dict:
    hit = search_label_sets(i, args.max_guess_size, args.jobs, stats)
    if hit is None:
        return {}
    return {"labels": sorted(hit.labels), "branch": hit.branch,
            "in": hit.augmented[0], "ex": hit.augmented[1], "transversal": hit.transversal}


def _find_random(i: Instance, args, stats: SearchStats) -> dict:
    labels = nd_check_random(i, args.trials, args.seed, args.max_guess_size, stats)
    if labels is None:
        return {}
    out: dict = {"labels": sorted(labels)}
    pair = augment(i, sigma_of_labels(i, labels))
    side = witness_side(i, pair)
    if side is not None:
        out.update(branch=side, transversal=witness_transversal(i, pair),
                   **{"in": pair.a, "ex": pair.b})
    return out


def cmd_find(args) -> int:
    i = _load_pair(args)
    names = _names(i)
    stats = SearchStats()
    if args.mode in ("gaur", "random"):
        failure = check_simple_ip(i)
        if failure is not None:
            payload = {"status": Status.NOT_DUAL.value, "reason": failure.reason.value,
                       "mode": args.mode, "certificate": {"edges": list(failure.edges)},
                       "stats": stats.as_dict()}
            _emit(args, payload, [f"precondition failed: {failure.reason.value}",
                                  f"offending edges: {failure.edges[0]} {failure.edges[1]}"])
            return EXIT_NOT_DUAL
    if args.mode == "gaur":
        found = _find_recursive(i, stats)
    elif args.mode == "enum":
        try:
            found = _find_enum(i, args, stats)
        except IntersectionPropertyError as err:
            raise InputError(f"enumeration needs the intersection property: {err}") from err
    else:
        found = _find_random(i, args, stats)

    if not found:
        status = "no_refutation" if args.mode == "random" else Status.DUAL.value
        _emit(args, {"status": status, "reason": None, "mode": args.mode,
                     "certificate": None, "stats": stats.as_dict()}, ["none"])
        return EXIT_DUAL

    t = found.get("transversal")
    minimal = minimize_transversal(i.g, t) if t is not None else None
    payload = {
        "status": Status.NOT_DUAL.value,
        "reason": "new_transversal_found",
        "mode": args.mode,
        "certificate": {
            "in": _as_list(found.get("in"), names),
            "ex": _as_list(found.get("ex"), names),
            "new_transversal": _as_list(t, names),
            "minimized": _as_list(minimal, names),
        },
        "stats": stats.as_dict(),
    }
    lines = []
    if "labels" in found:
        labels = found["labels"]
        payload["labels"] = [_label_text(lab, names) for lab in labels]
        lines.append("labels: " + (" ".join(payload["labels"]) or "(none)"))
    if "branch" in found:
        payload["branch"] = found["branch"]
        lines.append(f"branch: {found['branch']}")
    if t is not None:
        lines.append(f"new transversal: {format_set(t, names)}")
        lines.append(f"minimized: {format_set(minimal, names)}")
    _emit(args, payload, lines)
    return EXIT_NOT_DUAL


def _label_text(lab, names) -> str:
    if lab.is_exclude:
        return f"Exc({names[lab.vertex]})"
    return f"Inc({names[lab.vertex]},{lab.edge})"


# -- dualize -------------------------------------------------------------------------


def cmd_dualize(args) -> int:
    try:
        parsed = formats.parse_hypergraph(_read(args.file), drop_isolated=args.drop_isolated)
    except FormatError as err:
        raise InputError(f"{args.file}: {err}") from err
    for w in parsed.warnings:
        log.warning(w)
    g = parsed.hypergraph
    if not is_simple(g):
        if not args.minimize_first:
            raise InputError("input is not simple (an edge contains another); "
                             "rerun with --minimize-first")
        g = minimize(g)
    h = dualize(g)
    sys.stdout.write(formats.emit_hypergraph(h, declare=False))
    return EXIT_DUAL


# -- gen -----------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "exp-family":
        if args.i is None or args.i < 1:
            raise InputError("exp-family needs --i >= 1")
        sys.stdout.write(formats.emit_pair(exp_family(args.i), declare=False))
        return EXIT_DUAL
    if args.kind == "from-dnf":
        if not args.file:
            raise InputError("from-dnf needs a DNF file")
        try:
            parsed = formats.parse_dnf(_read(args.file))
        except FormatError as err:
            raise InputError(f"{args.file}: {err}") from err
        for w in parsed.warnings:
            log.warning(w)
        sys.stdout.write(formats.emit_hypergraph(parsed.hypergraph, declare=False))
        return EXIT_DUAL
    if args.vertices < 1 or args.edges < 0 or args.vertices > 64:
        raise InputError("random needs 1 <= --vertices <= 64 and --edges >= 0")
    rng = random.Random(args.seed)
    g = random_simple(rng, args.vertices, args.edges, args.max_edge_size)
    if args.pair:
        sys.stdout.write(formats.emit_pair(Instance(g, dualize(g))))
    else:
        sys.stdout.write(formats.emit_hypergraph(g))
    return EXIT_DUAL


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperdual",
                                description="Hypergraph duality checking and dualization.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("file", help="input file, '-' for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        sp.add_argument("--drop-isolated", action="store_true",
                        help="drop declared vertices that occur in no edge")

    sp = sub.add_parser("check", help="decide whether H = tr(G)")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("find", help="look for a new transversal of G w.r.t. H")
    common(sp)
    sp.add_argument("--mode", choices=("gaur", "enum", "random"), default="gaur")
    sp.add_argument("--trials", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-guess-size", type=int, default=None,
                    help="override the default guess bound floor(log2|H|)+1")
    sp.set_defaults(func=cmd_find)

    sp = sub.add_parser("dualize", help="print tr(G)")
    common(sp)
    sp.add_argument("--minimize-first", action="store_true",
                    help="replace the input by its minimal edges before dualizing")
    sp.set_defaults(func=cmd_dualize)

    sp = sub.add_parser("gen", help="generate instances")
    sp.add_argument("kind", choices=("random", "exp-family", "from-dnf"))
    sp.add_argument("file", nargs="?", help="DNF file for from-dnf")
    sp.add_argument("--i", type=int, default=None, help="family index for exp-family")
    sp.add_argument("--vertices", type=int, default=8)
    sp.add_argument("--edges", type=int, default=6)
    sp.add_argument("--max-edge-size", type=int, default=None)
    sp.add_argument("--pair", action="store_true", help="also emit tr(G) as H")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="hyperdual: %(levelname)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("hyperdual: error: --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "max_guess_size", None) is not None and args.max_guess_size < 0:
        print("hyperdual: error: --max-guess-size must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as err:
        print(f"hyperdual: error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

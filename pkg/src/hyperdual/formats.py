"""Plain-text hypergraph, pair and DNF files.

Hypergraph file::

    # comment
    @vertices a b c d      (optional: declares vertices, including unused ones)
    a c d                  (one edge per line, whitespace-separated tokens)
    EMPTYEDGE              (the empty edge)

A pair file holds G, one blank line, then H.  Later blank lines are
ignored.  Tokens are opaque; vertex indices follow sorted token order, so
two files listing the same token sets give the same instance.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .core import MAX_VERTICES, Hypergraph, Instance, is_simple, members, minimize

log = logging.getLogger("hyperdual")

EMPTY_EDGE = "EMPTYEDGE"
VERTICES = "@vertices"


class FormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class _Block:
    edges: list = field(default_factory=list)   # (line number, frozenset of tokens)


@dataclass
class Parsed:
    instance: Optional[Instance] = None
    hypergraph: Optional[Hypergraph] = None
    warnings: list = field(default_factory=list)


def _scan(text: str, split_pair: bool):
    """Tokenize lines into one or two blocks plus declared vertices."""
    blocks = [_Block()]
    declared: set[str] = set()
    separated = False
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            # comment-only lines are not separators
            if raw.strip() == "" and split_pair and not separated:
                blocks.append(_Block())
                separated = True
            continue
        tokens = line.split()
        if tokens[0] == VERTICES:
            declared.update(tokens[1:])
            continue
        if EMPTY_EDGE in tokens:
            if len(tokens) != 1:
                raise FormatError(lineno, f"{EMPTY_EDGE} must stand alone on its line")
            blocks[-1].edges.append((lineno, frozenset()))
            continue
        if any(t.startswith("@") for t in tokens):
            raise FormatError(lineno, f"unknown directive {tokens[0]!r}")
        blocks[-1].edges.append((lineno, frozenset(tokens)))
    if split_pair and not separated:
        raise FormatError(last + 1, "pair file needs a blank line between G and H")
    return blocks, declared


def _universe(blocks, declared, drop_isolated: bool, warnings: list):
    used: set[str] = set()
    for b in blocks:
        for _, edge in b.edges:
            used |= edge
    unused = sorted(declared - used)
    if unused:
        if drop_isolated:
            warnings.append(f"dropped isolated vertices: {' '.join(unused)}")
        else:
            warnings.append(f"isolated vertices kept: {' '.join(unused)}")
    tokens = sorted(used if drop_isolated else used | declared)
    if len(tokens) > MAX_VERTICES:
        raise FormatError(0, f"{len(tokens)} vertices exceed the {MAX_VERTICES}-vertex limit")
    return tokens


def _to_hypergraph(block: _Block, names: tuple[str, ...]) -> Hypergraph:
    index = {t: k for k, t in enumerate(names)}
    masks = []
    for _, edge in block.edges:
        m = 0
        for t in edge:
            m |= 1 << index[t]
        masks.append(m)
    return Hypergraph(len(names), tuple(masks), names)


def parse_pair(text: str, drop_isolated: bool = False) -> Parsed:
    blocks, declared = _scan(text, split_pair=True)
    out = Parsed()
    names = tuple(_universe(blocks, declared, drop_isolated, out.warnings))
    g = _to_hypergraph(blocks[0], names)
    h = _to_hypergraph(blocks[1], names)
    for label, hg in (("G", g), ("H", h)):
        lonely = hg.isolated_vertices()
        if lonely and hg.edges:
            out.warnings.append(
                f"vertices isolated in {label}: {' '.join(names[v] for v in lonely)}")
    out.instance = Instance(g, h)
    return out


def parse_hypergraph(text: str, drop_isolated: bool = False) -> Parsed:
    blocks, declared = _scan(text, split_pair=False)
    out = Parsed()
    names = tuple(_universe(blocks, declared, drop_isolated, out.warnings))
    out.hypergraph = _to_hypergraph(blocks[0], names)
    return out


def parse_dnf(text: str) -> Parsed:
    """Hypergraph of a monotone DNF: one edge per term, minimized if needed."""
    out = parse_hypergraph(text)
    g = out.hypergraph
    if not is_simple(g):
        g = minimize(g)
        out.warnings.append("formula is not in prime form; absorbed terms were removed")
        out.hypergraph = g
    return out


def _names(hg: Hypergraph) -> tuple[str, ...]:
    if hg.names is not None:
        return hg.names
    width = len(str(max(hg.n - 1, 0)))
    return tuple(f"v{k:0{width}d}" for k in range(hg.n))


def format_set(mask: int, names) -> str:
    return " ".join(names[v] for v in members(mask))


def _edge_lines(hg: Hypergraph, names) -> list[str]:
    return [format_set(e, names) if e else EMPTY_EDGE for e in hg.edges]


def emit_hypergraph(hg: Hypergraph, declare: bool = True) -> str:
    names = _names(hg)
    lines = [f"{VERTICES} {' '.join(names)}"] if declare and names else []
    lines += _edge_lines(hg, names)
    return "\n".join(lines) + "\n"


def emit_pair(i: Instance, declare: bool = True) -> str:
    names = _names(i.g) if i.g.names is not None else _names(i.h)
    lines = [f"{VERTICES} {' '.join(names)}"] if declare and names else []
    lines += _edge_lines(i.g, names) + [""] + _edge_lines(i.h, names)
    return "\n".join(lines) + "\n"

"""Seeded instance generators."""
from __future__ import annotations

import random
from typing import Optional

from .core import Hypergraph, Instance, minimize


def _names(prefix: str, count: int) -> list[str]:
    width = len(str(count))
    return [f"{prefix}{k:0{width}d}" if width > 1 else f"{prefix}{k}" for k in range(1, count + 1)]


def exp_family(i: int) -> Instance:
    """G_i = {{x_j, y_j}}, H_i = {{x_1..x_i}, {y_1..y_i}}.

    Vertices x_1..x_i take indices 0..i-1 and y_1..y_i take i..2i-1,
    which is also their sorted token order.
    """
    if i < 1:
        raise ValueError("family index must be at least 1")
    names = tuple(_names("x", i) + _names("y", i))
    g = tuple((1 << j) | (1 << (i + j)) for j in range(i))
    xs = (1 << i) - 1
    h = (xs, xs << i)
    return Instance(Hypergraph(2 * i, g, names), Hypergraph(2 * i, h, names))


def random_simple(rng: random.Random, n: int, m: int,
                  max_edge: Optional[int] = None) -> Hypergraph:
    """Up to ``m`` random nonempty edges over ``n`` vertices, minimized."""
    if n < 1 or m < 0:
        raise ValueError("need at least one vertex and a non-negative edge count")
    top = n if max_edge is None else max(1, min(max_edge, n))
    edges = []
    for _ in range(m):
        size = rng.randint(1, top)
        picked = rng.sample(range(n), size)
        mask = 0
        for v in picked:
            mask |= 1 << v
        edges.append(mask)
    width = len(str(max(n - 1, 0)))
    names = tuple(f"v{k:0{width}d}" for k in range(n))
    return minimize(Hypergraph(n, tuple(edges), names))


def random_antichain_of_transversals(rng: random.Random, g: Hypergraph,
                                     minimal: list[int], max_edges: int) -> list[int]:
    """A Sperner family of transversals of ``g``: some minimal ones, some enlarged."""
    pool = list(minimal)
    rng.shuffle(pool)
    chosen: list[int] = []
    full = (1 << g.n) - 1
    for t in pool:
        if len(chosen) >= max_edges:
            break
        if rng.random() < 0.3:
            t |= 1 << rng.randrange(g.n)
            t &= full
        if any(c & t == c or c & t == t for c in chosen):
            continue
        chosen.append(t)
    return chosen

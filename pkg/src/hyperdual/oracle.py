"""Exhaustive ground truth for transversal hypergraphs.

Two independent ways of computing tr(G) are provided so that a bug in one
shows up as a disagreement with the other:

* ``mode="subset"`` walks all 2^|V| vertex subsets,
* ``mode="berge"`` multiplies edges one at a time, minimizing as it goes.

Neither uses anything from :mod:`hyperdual.solver`.
"""
from __future__ import annotations

import os
from typing import Optional

from .core import Hypergraph, Instance, VertexSet

SUBSET_LIMIT = 20
BERGE_LIMIT = 64
ENV_LIMIT = "HYPERDUAL_ORACLE_MAX_VERTICES"


class OracleLimitError(RuntimeError):
    pass


def _limit(default: int) -> int:
    raw = os.environ.get(ENV_LIMIT)
    if raw is None:
        return default
    return min(default, int(raw))


def _check_limit(n: int, default: int) -> None:
    limit = _limit(default)
    if n > limit:
        raise OracleLimitError(f"{n} vertices exceeds the oracle limit of {limit}")


def _hits_all(edges, t: int) -> bool:
    for e in edges:
        if not e & t:
            return False
    return True


def _minimal_sets(sets) -> list[int]:
    """Inclusion-minimal members of ``sets`` (deduplicated), ascending by value."""
    uniq = sorted(set(sets), key=lambda s: (bin(s).count("1"), s))
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return sorted(kept)


def _tr_subset(g: Hypergraph) -> list[int]:
    edges = g.edges
    transversals = [t for t in range(1 << g.n) if _hits_all(edges, t)]
    return _minimal_sets(transversals)


def _tr_berge(g: Hypergraph) -> list[int]:
    current = [0]
    for e in g.edges:
        nxt = []
        for t in current:
            if t & e:
                nxt.append(t)
                continue
            rest = e
            while rest:
                low = rest & -rest
                rest ^= low
                nxt.append(t | low)
        current = _minimal_sets(nxt)
    return current


def brute_force_tr(g: Hypergraph, mode: str = "subset") -> Hypergraph:
    """tr(g) with edges sorted by bit pattern."""
    if mode == "subset":
        _check_limit(g.n, SUBSET_LIMIT)
        edges = _tr_subset(g)
    elif mode == "berge":
        _check_limit(g.n, BERGE_LIMIT)
        edges = _tr_berge(g)
    else:
        raise ValueError(f"unknown oracle mode {mode!r}")
    return Hypergraph(g.n, tuple(edges), g.names)


def is_new(i: Instance, t: int) -> bool:
    return _hits_all(i.g.edges, t) and not any(e & ~t == 0 for e in i.h.edges)


def brute_force_new_transversal(i: Instance) -> Optional[VertexSet]:
    """Numerically least vertex set that is a transversal of G and independent in H."""
    _check_limit(i.n, SUBSET_LIMIT)
    for t in range(1 << i.n):
        if is_new(i, t):
            return t
    return None


def minimal_new_transversals(i: Instance) -> list[VertexSet]:
    """Every minimal transversal of G that contains no edge of H."""
    return [t for t in brute_force_tr(i.g).edges
            if not any(e & ~t == 0 for e in i.h.edges)]


def is_dual_pair(i: Instance) -> bool:
    """H = tr(G) as edge sets."""
    return set(brute_force_tr(i.g).edges) == set(i.h.edges) and len(set(i.h.edges)) == len(i.h.edges)

"""Assignments ⟨In, Ex⟩ and the edge sets they induce on an instance.

Three pair types are kept apart on purpose.  :class:`Assignment` is a
consistent search state (``In ∩ Ex = ∅``).  :class:`LoosePair` is what a
guessed label set evaluates to and may overlap.  :class:`AugmentedPair`
is the result of pushing every free vertex to one side by frequency.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .core import (
    Hypergraph,
    Instance,
    VertexSet,
    members,
    project,
    restrict,
)


class AssignmentError(ValueError):
    pass


@dataclass(frozen=True)
class Assignment:
    included: VertexSet = 0
    excluded: VertexSet = 0

    def __post_init__(self):
        overlap = self.included & self.excluded
        if overlap:
            raise AssignmentError(f"included and excluded overlap on {members(overlap)}")

    def free(self, n: int) -> VertexSet:
        return ((1 << n) - 1) & ~(self.included | self.excluded)

    def reversed(self) -> "Assignment":
        return Assignment(self.excluded, self.included)


EMPTY = Assignment()


@dataclass(frozen=True)
class LoosePair:
    included: VertexSet = 0
    excluded: VertexSet = 0

    def free(self, n: int) -> VertexSet:
        return ((1 << n) - 1) & ~(self.included | self.excluded)


@dataclass(frozen=True)
class AugmentedPair:
    a: VertexSet
    b: VertexSet

    # Condition checks read pairs through these names.
    @property
    def included(self) -> VertexSet:
        return self.a

    @property
    def excluded(self) -> VertexSet:
        return self.b


Pair = Union[Assignment, LoosePair, AugmentedPair]


class Extension(enum.Enum):
    INCLUDE = "i"
    INCLUDE_CRITICAL = "ii"
    EXCLUDE = "iii"
    EXCLUDE_CRITICAL = "iv"


def extend(i: Instance, sigma: Assignment, kind: Extension, v: int,
           e: Optional[int] = None) -> Assignment:
    """Apply one elementary extension to ``sigma``.

    For ``INCLUDE_CRITICAL`` the edge ``e`` indexes G and must lie in
    Sep(sigma); for ``EXCLUDE_CRITICAL`` it indexes H and must lie in
    Com(sigma).  In both cases ``v`` must belong to that edge.
    """
    bit = 1 << v
    if not sigma.free(i.n) & bit:
        raise AssignmentError(f"vertex {v} is not free")
    inc, exc = sigma.included, sigma.excluded
    if kind is Extension.INCLUDE:
        return Assignment(inc | bit, exc)
    if kind is Extension.EXCLUDE:
        return Assignment(inc, exc | bit)
    if e is None:
        raise AssignmentError(f"extension {kind.value} needs an edge")
    if kind is Extension.INCLUDE_CRITICAL:
        if not 0 <= e < len(i.g):
            raise AssignmentError(f"G has no edge {e}")
        edge = i.g.edges[e]
        if edge & inc:
            raise AssignmentError(f"G-edge {e} is not in Sep")
        if not edge & bit:
            raise AssignmentError(f"vertex {v} is not in G-edge {e}")
        return Assignment(inc | bit, exc | (edge & ~bit))
    if not 0 <= e < len(i.h):
        raise AssignmentError(f"H has no edge {e}")
    edge = i.h.edges[e]
    if edge & exc:
        raise AssignmentError(f"H-edge {e} is not in Com")
    if not edge & bit:
        raise AssignmentError(f"vertex {v} is not in H-edge {e}")
    return Assignment(inc | (edge & ~bit), exc | bit)


def sep(i: Instance, p: Pair) -> list[int]:
    """G-edges not met by the included side."""
    inc = p.included
    return [k for k, e in enumerate(i.g.edges) if not e & inc]


def com(i: Instance, p: Pair) -> list[int]:
    """H-edges disjoint from the excluded side."""
    exc = p.excluded
    return [k for k, e in enumerate(i.h.edges) if not e & exc]


def mis(i: Instance, p: Pair) -> list[int]:
    """G-edges lying entirely inside the excluded side."""
    exc = p.excluded
    return [k for k, e in enumerate(i.g.edges) if e & ~exc == 0]


def cov(i: Instance, p: Pair) -> list[int]:
    """H-edges lying entirely inside the included side."""
    inc = p.included
    return [k for k, e in enumerate(i.h.edges) if e & ~inc == 0]


def is_covering(i: Instance, p: Pair) -> bool:
    return bool(mis(i, p) or cov(i, p))


def half(x: int) -> int:
    """⌈x/2⌉ in integers."""
    return (x + 1) // 2


def frequent_vertices(i: Instance, p: Pair) -> tuple[VertexSet, VertexSet]:
    """Split the free vertices of ``p`` into (frequent, infrequent).

    A free vertex is frequent when it lies in at least ⌈|Com|/2⌉ of the
    compatible H-edges; with no compatible edges every free vertex is.
    """
    free = ((1 << i.n) - 1) & ~(p.included | p.excluded)
    compatible = [i.h.edges[k] for k in com(i, p)]
    if not compatible:
        return free, 0
    threshold = half(len(compatible))
    freq = 0
    for v in members(free):
        bit = 1 << v
        if sum(1 for e in compatible if e & bit) >= threshold:
            freq |= bit
    return freq, free & ~freq


def augment(i: Instance, p: Pair) -> AugmentedPair:
    freq, infreq = frequent_vertices(i, p)
    return AugmentedPair(p.included | freq, p.excluded | infreq)


def is_witness(i: Instance, p: Pair) -> bool:
    """(Sep = ∅ ∧ Cov = ∅) ∨ (Com = ∅ ∧ Mis = ∅), read literally on ``p``."""
    return witness_side(i, p) is not None


def witness_side(i: Instance, p: Pair) -> Optional[int]:
    """1 if the first disjunct holds, 2 if only the second does, else None."""
    if not sep(i, p) and not cov(i, p):
        return 1
    if not com(i, p) and not mis(i, p):
        return 2
    return None


def witness_transversal(i: Instance, p: Pair) -> VertexSet:
    """New transversal of G certified by a witness pair.

    The first disjunct certifies the included side itself; the second
    certifies the excluded side as a new transversal of H, whose
    complement is then one of G.
    """
    side = witness_side(i, p)
    if side == 1:
        return p.included
    if side == 2:
        return i.full & ~p.excluded
    raise AssignmentError("pair is not a witness")


def reduced_instance(i: Instance, sigma: Assignment) -> Instance:
    """⟨(G restricted off In, projected on free), (H restricted off Ex, projected on free)⟩."""
    full = i.full
    free = sigma.free(i.n)
    g = project(restrict(i.g, full & ~sigma.included), free)
    h = project(restrict(i.h, full & ~sigma.excluded), free)
    return Instance(g, h)


def coherent_with(sigma: Pair, t: VertexSet) -> bool:
    return sigma.included & ~t == 0 and not sigma.excluded & t


def is_extension_of(small: Pair, big: Pair) -> bool:
    return (small.included & ~big.included == 0
            and small.excluded & ~big.excluded == 0)


def on(g: Hypergraph, ks: list[int]) -> list[VertexSet]:
    """Edge masks for a list of edge indices."""
    return [g.edges[k] for k in ks]

"""Hypergraphs over a dense integer vertex universe.

Vertex sets are plain Python ints used as bitsets: bit ``v`` is set iff
vertex ``v`` belongs to the set.  Edges keep their input order, and an
edge is identified by its position in that order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 4096

VertexSet = int


class HypergraphError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def vset(vertices: Iterable[int]) -> VertexSet:
    """Bitset holding the given vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Ascending vertex indices of a bitset."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class Hypergraph:
    """An ordered list of edges over the universe ``range(n)``.

    ``names`` optionally maps vertex indices to the tokens they came from.
    The empty hypergraph has no edges; ``{∅}`` has the single edge ``0``.
    """

    n: int
    edges: tuple[VertexSet, ...] = ()
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise HypergraphError(
                f"universe of {self.n} vertices exceeds the {MAX_VERTICES}-vertex limit"
            )
        object.__setattr__(self, "edges", tuple(self.edges))
        full = full_set(self.n)
        for k, e in enumerate(self.edges):
            if e < 0 or e & ~full:
                raise HypergraphError(f"edge {k} has vertices outside the universe")
        if self.names is not None and len(self.names) != self.n:
            raise HypergraphError("name table size differs from the universe size")

    @classmethod
    def from_sets(cls, n: int, edges: Iterable[Iterable[int]], names=None) -> "Hypergraph":
        return cls(n, tuple(vset(e) for e in edges), names)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.edges)

    @property
    def size(self) -> int:
        """Representation size: one unit per edge plus one per incidence."""
        return sum(1 + e.bit_count() for e in self.edges)

    @property
    def support(self) -> VertexSet:
        out = 0
        for e in self.edges:
            out |= e
        return out

    def is_empty(self) -> bool:
        return not self.edges

    def is_empty_edge(self) -> bool:
        return self.edges == (0,)

    def isolated_vertices(self) -> list[int]:
        return members(full_set(self.n) & ~self.support)

    def with_edges(self, edges: Iterable[VertexSet]) -> "Hypergraph":
        return Hypergraph(self.n, tuple(edges), self.names)

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(members(e)) for e in self.edges]

    def as_names(self) -> list[list[str]]:
        return [[self.name(v) for v in members(e)] for e in self.edges]


@dataclass(frozen=True)
class Instance:
    """A DUAL instance: the pair ⟨G, H⟩ over one shared universe."""

    g: Hypergraph
    h: Hypergraph

    def __post_init__(self):
        if self.g.n != self.h.n:
            raise HypergraphError(
                f"G has {self.g.n} vertices but H has {self.h.n}; the universe must be shared"
            )

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def full(self) -> VertexSet:
        return full_set(self.g.n)

    @property
    def size(self) -> int:
        return self.g.size + self.h.size

    def swapped(self) -> "Instance":
        return Instance(self.h, self.g)


def is_simple(g: Hypergraph) -> bool:
    return simplicity_violation(g) is None


def simplicity_violation(g: Hypergraph) -> Optional[tuple[int, int]]:
    """First pair ``(i, j)``, ``i != j``, with edge ``i`` contained in edge ``j``."""
    edges = g.edges
    for i, a in enumerate(edges):
        for j, b in enumerate(edges):
            if i != j and a & ~b == 0:
                return i, j
    return None


def minimize(g: Hypergraph) -> Hypergraph:
    """Inclusion-minimal edges of ``g``; the first copy of a duplicate survives."""
    if 0 in g.edges:
        return g.with_edges((0,))
    kept: list[VertexSet] = []
    for i, e in enumerate(g.edges):
        dominated = False
        for j, f in enumerate(g.edges):
            if f & ~e == 0 and (f != e or j < i):
                dominated = True
                break
        if not dominated:
            kept.append(e)
    return g.with_edges(kept)


def restrict(g: Hypergraph, s: VertexSet) -> Hypergraph:
    """Edges of ``g`` lying inside ``s``."""
    return g.with_edges(e for e in g.edges if e & ~s == 0)


def project(g: Hypergraph, s: VertexSet) -> Hypergraph:
    """Minimized traces ``e ∩ s`` of the edges of ``g``."""
    return minimize(g.with_edges(e & s for e in g.edges))


def is_transversal(g: Hypergraph, t: VertexSet) -> bool:
    for e in g.edges:
        if not e & t:
            return False
    return True


def is_independent_set(h: Hypergraph, t: VertexSet) -> bool:
    for e in h.edges:
        if e & ~t == 0:
            return False
    return True


def is_new_transversal(i: Instance, t: VertexSet) -> bool:
    return is_transversal(i.g, t) and is_independent_set(i.h, t)


def criticality_witness(g: Hypergraph, t: VertexSet, v: int) -> Optional[int]:
    """Index of the first edge meeting ``t`` exactly in ``{v}``."""
    bit = 1 << v
    if not t & bit:
        raise PreconditionError(f"vertex {v} is not in the given set")
    for k, e in enumerate(g.edges):
        if e & t == bit:
            return k
    return None


def is_minimal_transversal(g: Hypergraph, t: VertexSet) -> bool:
    if not is_transversal(g, t):
        return False
    return all(criticality_witness(g, t, v) is not None for v in members(t))


def intersection_property(i: Instance) -> bool:
    return intersection_violation(i) is None


def intersection_violation(i: Instance) -> Optional[tuple[int, int]]:
    """First ``(g_index, h_index)`` pair of disjoint edges."""
    for a, ge in enumerate(i.g.edges):
        for b, he in enumerate(i.h.edges):
            if not ge & he:
                return a, b
    return None


def is_trivially_dual(i: Instance) -> bool:
    g, h = i.g, i.h
    return (g.is_empty() and h.is_empty_edge()) or (h.is_empty() and g.is_empty_edge())


def edges_equal_as_sets(a: Sequence[VertexSet], b: Sequence[VertexSet]) -> bool:
    return sorted(a) == sorted(b)

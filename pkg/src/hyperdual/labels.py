"""Decomposition-tree labels, guessed label sets, and their total order.

A label is either ``Exc(v)`` or ``Inc(v, g)`` (include ``v`` as critical,
witnessed by G-edge ``g``).  Labels are encoded as ``Label(vertex, edge)``
with ``edge == -1`` for exclusions, so plain tuple order reproduces the
pair order ⟨v, v⟩ / ⟨v, G⟩ once all vertices are placed before all
G-edges in the domain ordering.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, NamedTuple, Optional

from .assignment import Assignment, AssignmentError, LoosePair
from .core import Instance

EXCLUDE = -1


class CongruencyError(ValueError):
    pass


class PathError(ValueError):
    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step


class Label(NamedTuple):
    vertex: int
    edge: int = EXCLUDE

    @property
    def is_exclude(self) -> bool:
        return self.edge == EXCLUDE

    def __repr__(self) -> str:
        if self.is_exclude:
            return f"Exc({self.vertex})"
        return f"Inc({self.vertex},{self.edge})"


def Exc(v: int) -> Label:
    return Label(v, EXCLUDE)


def Inc(v: int, g: int) -> Label:
    if g < 0:
        raise ValueError("edge index must be non-negative")
    return Label(v, g)


LabelSet = frozenset


def is_congruent(i: Instance, labels: Iterable[Label]) -> bool:
    n, g = i.n, i.g.edges
    for lab in labels:
        if not 0 <= lab.vertex < n:
            return False
        if lab.is_exclude:
            continue
        if not 0 <= lab.edge < len(g) or not g[lab.edge] >> lab.vertex & 1:
            return False
    return True


def label_masks(i: Instance, lab: Label) -> tuple[int, int]:
    """(included, excluded) contribution of one label."""
    bit = 1 << lab.vertex
    if lab.is_exclude:
        return 0, bit
    return bit, i.g.edges[lab.edge] & ~bit


def sigma_of_labels(i: Instance, labels: Iterable[Label]) -> LoosePair:
    labels = list(labels)
    if not is_congruent(i, labels):
        raise CongruencyError(f"label set {sorted(labels)} is not congruent with the instance")
    inc = exc = 0
    for lab in labels:
        a, b = label_masks(i, lab)
        inc |= a
        exc |= b
    return LoosePair(inc, exc)


def is_consistent(p) -> bool:
    return not p.included & p.excluded


def sigma_of_path(i: Instance, path: Iterable[Label]) -> Assignment:
    """Walk a root path, checking each step is a child edge of the node reached."""
    inc = exc = 0
    for step, lab in enumerate(path, start=1):
        if not is_congruent(i, [lab]):
            raise PathError(step, f"{lab!r} is not congruent")
        bit = 1 << lab.vertex
        if (inc | exc) & bit:
            raise PathError(step, f"vertex {lab.vertex} is not free")
        if lab.is_exclude:
            exc |= bit
            continue
        edge = i.g.edges[lab.edge]
        if edge & inc:
            raise PathError(step, f"G-edge {lab.edge} is not in Sep")
        inc |= bit
        exc |= edge & ~bit
    try:
        return Assignment(inc, exc)
    except AssignmentError as err:  # unreachable for valid steps
        raise PathError(0, str(err)) from err


def label_universe(i: Instance) -> list[Label]:
    """Every label that can leave the root, in ascending label order."""
    out = [Exc(v) for v in range(i.n)]
    for k, e in enumerate(i.g.edges):
        v = 0
        while e:
            if e & 1:
                out.append(Label(v, k))
            e >>= 1
            v += 1
    out.sort()
    return out


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare_labels(l1: Label, l2: Label) -> int:
    return _cmp(tuple(l1), tuple(l2))


def label_set_key(labels: Iterable[Label]) -> tuple:
    s = sorted(labels)
    return len(s), s


def compare_label_sets(s1: Iterable[Label], s2: Iterable[Label]) -> int:
    """Smaller sets first; equal sizes compare by their least differing label."""
    return _cmp(label_set_key(s1), label_set_key(s2))


def default_guess_bound(i: Instance) -> int:
    """⌊log₂|H|⌋ + 1, taken as 1 when H has no edges."""
    m = len(i.h)
    return m.bit_length() if m else 1


def count_label_sets(universe_size: int, max_size: int) -> int:
    return sum(comb(universe_size, j) for j in range(0, max_size + 1))


def enumerate_label_sets(i: Instance, max_size: Optional[int] = None) -> Iterator[frozenset]:
    """All label sets of size ≤ ``max_size`` in ascending order, each once.

    Within one cardinality, lexicographic combinations of the sorted
    universe already follow the least-differing-label rule.
    """
    if max_size is None:
        max_size = default_guess_bound(i)
    universe = label_universe(i)
    for k in range(0, max_size + 1):
        for combo in combinations(universe, k):
            yield frozenset(combo)

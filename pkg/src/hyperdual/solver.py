"""Duality decision, new-transversal search and dualization.

Three routes to the same question are provided:

* :func:`det_new_transversal` / :func:`check_dual` — the deterministic
  recursive search that excludes frequent vertices one at a time, then
  includes all of them and branches on critical inclusions.  Every
  recursive step at least halves the number of compatible H-edges.
* :func:`compute_new_transversal` — scans all label sets of logarithmic
  size in ascending order and stops at the first one whose augmented
  pair is a witness.
* :func:`nd_check_random` — the guess-and-check scheme with the guess
  replaced by uniform sampling.
"""
from __future__ import annotations

import enum
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from . import kernel as _kernel
from .assignment import (
    EMPTY,
    Assignment,
    augment,
    is_witness,
    witness_transversal,
)
from .core import (
    Hypergraph,
    Instance,
    PreconditionError,
    VertexSet,
    intersection_violation,
    is_transversal,
    is_trivially_dual,
    members,
    simplicity_violation,
)
from .labels import (
    Label,
    default_guess_bound,
    label_masks,
    label_universe,
    sigma_of_labels,
    enumerate_label_sets,
)


class IntersectionPropertyError(ValueError):
    """Raised by the label-set scan when some G-edge misses some H-edge."""


class NotSimpleError(ValueError):
    pass


class Status(str, enum.Enum):
    DUAL = "dual"
    NOT_DUAL = "not_dual"


class Reason(str, enum.Enum):
    NOT_SIMPLE_G = "not_simple_g"
    NOT_SIMPLE_H = "not_simple_h"
    NO_INTERSECTION_PROPERTY = "no_intersection_property"
    NEW_TRANSVERSAL_FOUND = "new_transversal_found"
    TRIVIALLY_DUAL = "trivially_dual"


@dataclass
class SearchStats:
    """Counters filled in by the recursive search and the label-set scan.

    ``recursion_depth_max`` counts the number of nested calls, the root
    call being depth 1.  ``com_sizes_per_level[d]`` lists |Com| for every
    call made at depth ``d``.  ``halving_violations`` counts recursive
    calls whose |Com| exceeds ⌊|Com(parent)|/2⌋.
    """

    recursion_depth_max: int = 0
    calls: int = 0
    com_sizes_per_level: dict = field(default_factory=dict)
    label_sets_tried: int = 0
    halving_violations: int = 0
    transitions: Optional[list] = None

    def as_dict(self) -> dict:
        return {
            "recursion_depth_max": self.recursion_depth_max,
            "calls": self.calls,
            "com_sizes_per_level": {str(k): v for k, v in sorted(self.com_sizes_per_level.items())},
            "label_sets_tried": self.label_sets_tried,
            "halving_violations": self.halving_violations,
        }


@dataclass(frozen=True)
class Certificate:
    included: Optional[VertexSet] = None
    excluded: Optional[VertexSet] = None
    new_transversal: Optional[VertexSet] = None
    edges: Optional[tuple[int, int]] = None


@dataclass
class Verdict:
    status: Status
    reason: Optional[Reason] = None
    certificate: Optional[Certificate] = None
    stats: Optional[SearchStats] = None

    @property
    def is_dual(self) -> bool:
        return self.status is Status.DUAL


@dataclass(frozen=True)
class SimpleIPFailure:
    reason: Reason
    edges: tuple[int, int]


def check_simple_ip(i: Instance) -> Optional[SimpleIPFailure]:
    """First failing precondition among G simple, H simple, intersection property."""
    bad = simplicity_violation(i.g)
    if bad is not None:
        return SimpleIPFailure(Reason.NOT_SIMPLE_G, bad)
    bad = simplicity_violation(i.h)
    if bad is not None:
        return SimpleIPFailure(Reason.NOT_SIMPLE_H, bad)
    bad = intersection_violation(i)
    if bad is not None:
        return SimpleIPFailure(Reason.NO_INTERSECTION_PROPERTY, bad)
    return None


# -- deterministic recursive search -------------------------------------------------


def det_new_transversal(i: Instance, sigma: Assignment = EMPTY,
                        stats: Optional[SearchStats] = None) -> Optional[Assignment]:
    """Search for a new transversal of G coherent with ``sigma``.

    Returns the witness assignment reached at the bottom of the successful
    recursion path (it satisfies the witness condition), or None when no
    new transversal coherent with ``sigma`` exists.  Assumes the
    intersection property for the halving guarantee, not for correctness.
    """
    if stats is None:
        stats = SearchStats()
    g_edges, h_edges = i.g.edges, i.h.edges
    free0 = i.full & ~(sigma.included | sigma.excluded)

    def rec(inc: int, exc: int, free: int, depth: int, parent_com: Optional[int]):
        compatible = [e for e in h_edges if not e & exc]
        c = len(compatible)
        stats.calls += 1
        if depth > stats.recursion_depth_max:
            stats.recursion_depth_max = depth
        stats.com_sizes_per_level.setdefault(depth, []).append(c)
        if parent_com is not None:
            if c > parent_com // 2:
                stats.halving_violations += 1
            if stats.transitions is not None:
                stats.transitions.append((parent_com, c))

        for e in g_edges:
            if e & ~exc == 0:
                return None
        for e in h_edges:
            if e & ~inc == 0:
                return None
        separated = [e for e in g_edges if not e & inc]
        if not separated or not compatible:
            return Assignment(inc, exc)

        threshold = (c + 1) // 2
        frequent = 0
        for v in members(free):
            bit = 1 << v
            if sum(1 for e in compatible if e & bit) >= threshold:
                frequent |= bit

        for v in members(frequent):
            bit = 1 << v
            found = rec(inc, exc | bit, free & ~bit, depth + 1, c)
            if found is not None:
                return found

        inc |= frequent
        free &= ~frequent
        separated = [e for e in g_edges if not e & inc]
        for e in h_edges:
            if e & ~inc == 0:
                return None
        if not separated:
            return Assignment(inc, exc)

        for e in separated:
            for v in members(e & free):
                bit = 1 << v
                found = rec(inc | bit, exc | (e & ~bit), free & ~e, depth + 1, c)
                if found is not None:
                    return found
        return None

    return rec(sigma.included, sigma.excluded, free0, 1, None)


def minimize_transversal(g: Hypergraph, t: VertexSet) -> VertexSet:
    """Drop vertices in ascending order while ``t`` stays a transversal of ``g``."""
    if not is_transversal(g, t):
        raise PreconditionError("set is not a transversal")
    for v in members(t):
        smaller = t & ~(1 << v)
        if is_transversal(g, smaller):
            t = smaller
    return t


def check_dual(i: Instance, stats: Optional[SearchStats] = None) -> Verdict:
    """Decide whether H = tr(G), with a checkable certificate when not."""
    if stats is None:
        stats = SearchStats()
    if is_trivially_dual(i):
        return Verdict(Status.DUAL, Reason.TRIVIALLY_DUAL, None, stats)
    failure = check_simple_ip(i)
    if failure is not None:
        return Verdict(Status.NOT_DUAL, failure.reason, Certificate(edges=failure.edges), stats)
    witness = det_new_transversal(i, EMPTY, stats)
    if witness is None:
        return Verdict(Status.DUAL, None, None, stats)
    t = minimize_transversal(i.g, witness_transversal(i, witness))
    cert = Certificate(witness.included, witness.excluded, t)
    return Verdict(Status.NOT_DUAL, Reason.NEW_TRANSVERSAL_FOUND, cert, stats)


# -- label-set guessing --------------------------------------------------------------


def check_witness_aug(i: Instance, labels) -> bool:
    """Does the augmented pair of σ(Σ) meet the witness condition?"""
    return is_witness(i, augment(i, sigma_of_labels(i, labels)))


def build_kernel(i: Instance, universe: list[Label], kernel_cls=None):
    if kernel_cls is None:
        kernel_cls = _kernel.Kernel
    masks = [label_masks(i, lab) for lab in universe]
    return kernel_cls(i.n, i.g.edges, i.h.edges,
                      [m[0] for m in masks], [m[1] for m in masks])


@dataclass(frozen=True)
class LabelSetHit:
    labels: frozenset
    branch: int
    transversal: VertexSet
    augmented: tuple[VertexSet, VertexSet]


_worker_kernel = None


def _init_worker(args, use_python):
    global _worker_kernel
    cls = _kernel.PyKernel if use_python else _kernel.Kernel
    _worker_kernel = cls(*args)


def _scan_task(k, lo, hi):
    return lo, _worker_kernel.scan(k, lo, hi)


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for p in range(parts):
        hi = lo + step + (1 if p < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def search_label_sets(i: Instance, max_size: Optional[int] = None, jobs: int = 1,
                      stats: Optional[SearchStats] = None,
                      kernel_cls=None) -> Optional[LabelSetHit]:
    """Find the least label set (in label-set order) whose augmented pair is a witness.

    Raises :class:`IntersectionPropertyError` when G and H violate the
    intersection property.  With ``jobs > 1`` the sets of each size are
    split by their least label across worker processes and the least hit
    is kept, so the answer matches the sequential scan.
    """
    bad = intersection_violation(i)
    if bad is not None:
        raise IntersectionPropertyError(
            f"G-edge {bad[0]} and H-edge {bad[1]} are disjoint")
    if stats is None:
        stats = SearchStats()
    if max_size is None:
        max_size = default_guess_bound(i)
    universe = label_universe(i)
    L = len(universe)
    masks = [label_masks(i, lab) for lab in universe]
    args = (i.n, i.g.edges, i.h.edges, [m[0] for m in masks], [m[1] for m in masks])

    hit = None
    if jobs <= 1:
        kern = (kernel_cls or _kernel.Kernel)(*args)
        for k in range(0, max_size + 1):
            idx, code, tried = kern.scan(k, 0, L)
            stats.label_sets_tried += tried
            if idx is not None:
                hit = (idx, code)
                break
    else:
        use_python = kernel_cls is _kernel.PyKernel
        with ProcessPoolExecutor(jobs, initializer=_init_worker,
                                 initargs=(args, use_python)) as pool:
            for k in range(0, max_size + 1):
                parts = _chunks(L, 4 * jobs) if k > 0 else [(0, 1)]
                results = sorted(pool.map(_scan_task, [k] * len(parts),
                                          [p[0] for p in parts], [p[1] for p in parts]))
                for _, (idx, code, tried) in results:
                    stats.label_sets_tried += tried
                for _, (idx, code, tried) in results:
                    if idx is not None:
                        hit = (idx, code)
                        break
                if hit is not None:
                    break
    if hit is None:
        return None
    idx, code = hit
    labels = frozenset(universe[j] for j in idx)
    pair = augment(i, sigma_of_labels(i, labels))
    if code == 1:
        transversal = pair.a
    else:
        transversal = i.full & ~pair.b
    return LabelSetHit(labels, code, transversal, (pair.a, pair.b))


def compute_new_transversal(i: Instance, max_size: Optional[int] = None, jobs: int = 1,
                            stats: Optional[SearchStats] = None) -> Optional[VertexSet]:
    """A (not necessarily minimal) new transversal of G, or None."""
    hit = search_label_sets(i, max_size, jobs, stats)
    return None if hit is None else hit.transversal


def guess_space_size(i: Instance, max_size: Optional[int] = None) -> int:
    if max_size is None:
        max_size = default_guess_bound(i)
    L = len(label_universe(i))
    return sum(comb(L, j) for j in range(max_size + 1))


def nd_check_random(i: Instance, trials: int, seed: int,
                    max_size: Optional[int] = None,
                    stats: Optional[SearchStats] = None) -> Optional[frozenset]:
    """Sample label sets uniformly and return the first accepted one.

    An instance that is not simple or lacks the intersection property is
    accepted outright with the empty set.  None means no refutation was
    found in ``trials`` draws; it does not certify duality.
    """
    if check_simple_ip(i) is not None:
        return frozenset()
    if max_size is None:
        max_size = default_guess_bound(i)
    universe = label_universe(i)
    L = len(universe)
    kern = build_kernel(i, universe)
    sizes = list(range(max_size + 1))
    weights = [comb(L, j) for j in sizes]
    rng = random.Random(seed)
    for _ in range(trials):
        j = rng.choices(sizes, weights)[0]
        idx = rng.sample(range(L), j)
        if stats is not None:
            stats.label_sets_tried += 1
        if kern.check_labels(idx)[0]:
            return frozenset(universe[x] for x in idx)
    return None


def nd_check_exhaustive(i: Instance, max_size: Optional[int] = None) -> Optional[frozenset]:
    """Try every guess branch in order using the set-algebra checker only."""
    if check_simple_ip(i) is not None:
        return frozenset()
    for labels in enumerate_label_sets(i, max_size):
        if check_witness_aug(i, labels):
            return labels
    return None


# -- dualization ---------------------------------------------------------------------


def canonical_edges(edges) -> list[VertexSet]:
    """Edges sorted by their bit pattern read as an integer."""
    return sorted(edges)


def dualize(g: Hypergraph, stats: Optional[SearchStats] = None) -> Hypergraph:
    """tr(g), built one new minimal transversal at a time."""
    bad = simplicity_violation(g)
    if bad is not None:
        raise NotSimpleError(f"edge {bad[0]} is contained in edge {bad[1]}; minimize first")
    found: list[VertexSet] = []
    while True:
        inst = Instance(g, g.with_edges(found))
        witness = det_new_transversal(inst, EMPTY, stats)
        if witness is None:
            break
        found.append(minimize_transversal(g, witness_transversal(inst, witness)))
    return g.with_edges(canonical_edges(found))

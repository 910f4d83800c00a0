"""Greedy degree-preserving extension and the d(U) <= k^(k-|U|) check."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .covering import covering_number
from .hypergraph import Edge, Family, masks_within, degree, mask_of, validate_family


class NoDisjointEdge(ValueError):
    """The current set already covers the family, so it cannot be extended."""


class EmptyChain(ValueError):
    """The starting set has degree zero in the sub-family."""


@dataclass(frozen=True)
class ChainStep:
    vertex: int
    set: tuple[int, ...]
    degree_within: int


@dataclass(frozen=True)
class GreedyChain:
    start: tuple[int, ...]
    start_degree: int
    steps: tuple[ChainStep, ...]
    source_edges: tuple[Edge, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        """Start set followed by the added vertices, in insertion order."""
        return self.start + tuple(s.vertex for s in self.steps)

    @property
    def final_degree(self) -> int:
        return self.steps[-1].degree_within if self.steps else self.start_degree


def _extend(F: Family, sub_masks, s_mask: int) -> tuple[int, int, Edge]:
    f = None
    for e, m in zip(F.edges, F.masks):
        if not m & s_mask:
            f = e
            break
    if f is None:
        raise NoDisjointEdge("no disjoint edge: the set covers the family")
    best_v, best_d = -1, -1
    for x in f:
        t = s_mask | (1 << x)
        d = sum(1 for m in sub_masks if m & t == t)
        if d > best_d:
            best_v, best_d = x, d
    return best_v, best_d, f


def greedy_extension(F: Family, sub: Optional[Family], S: Iterable[int]) -> tuple[int, int]:
    """Add one vertex to ``S`` keeping at least a 1/k share of its degree in ``sub``.

    The candidates are the vertices of the least edge of ``F`` missing ``S``;
    the one of largest degree wins, smallest id on ties.
    """
    v, d, _ = _extend(F, masks_within(F, sub), mask_of(S))
    return v, d


def greedy_chain(F: Family, sub: Optional[Family], S_start: Iterable[int], target_size: int) -> GreedyChain:
    start = tuple(S_start)
    if len(set(start)) != len(start):
        raise ValueError("S_start repeats a vertex")
    if not len(start) <= target_size <= F.k:
        raise ValueError(f"need |S_start| <= target_size <= k, got {len(start)}, {target_size}, {F.k}")
    masks = masks_within(F, sub)
    d0 = degree(F, start, within=sub)
    if d0 == 0:
        raise EmptyChain("empty chain: starting set has degree 0 in the sub-family")
    s_mask = mask_of(start)
    current = list(start)
    steps, sources = [], []
    for _ in range(target_size - len(start)):
        v, d, f = _extend(F, masks, s_mask)
        s_mask |= 1 << v
        current.append(v)
        steps.append(ChainStep(v, tuple(sorted(current)), d))
        sources.append(f)
    return GreedyChain(start, d0, tuple(steps), tuple(sources))


@dataclass
class DegreeBoundReport:
    k: int
    u_max: int
    precondition_ok: bool
    precondition_failure: Optional[str] = None
    checked: int = 0
    # (U, d(U), k^(k-|U|))
    violations: list = field(default_factory=list)
    tight: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.precondition_ok and not self.violations


def check_degree_bound(F: Family, u_max: int) -> DegreeBoundReport:
    """Check d(U) <= k^(k-|U|) for every U of size 1..u_max lying inside some edge.

    Refuses (``precondition_ok=False``) unless ``F`` is intersecting with
    covering number k, since the bound is only claimed for such families.
    """
    k = F.k
    report = DegreeBoundReport(k=k, u_max=u_max, precondition_ok=True)
    if not F.edges:
        report.precondition_ok = False
        report.precondition_failure = "family is empty"
        return report
    if not validate_family(F).is_intersecting:
        report.precondition_ok = False
        report.precondition_failure = "family is not intersecting"
        return report
    cert = covering_number(F, upper_limit=k)
    if not (cert.is_minimum and cert.size == k):
        report.precondition_ok = False
        report.precondition_failure = f"covering number is {cert.size if cert.is_minimum else '> k'}, not k={k}"
        return report
    for u in range(1, min(u_max, k) + 1):
        counts = Counter(U for e in F.edges for U in combinations(e, u))
        bound = k ** (k - u)
        for U in sorted(counts):
            d = counts[U]
            report.checked += 1
            if d > bound:
                report.violations.append((U, d, bound))
            elif d == bound:
                report.tight.append((U, d, bound))
    return report

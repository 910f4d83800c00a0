"""Exact covering number by branch-and-bound over uncovered edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .hypergraph import Family, mask_of


@dataclass(frozen=True)
class CoverCertificate:
    """Result of a covering-number search.

    When a limit was given and no cover of size ``<= upper_limit`` exists,
    ``is_minimum`` is False, ``size`` is ``upper_limit + 1`` and ``cover`` is
    some (non-minimum) cover found by a greedy pass.
    """

    cover: tuple[int, ...]
    size: int
    is_minimum: bool
    nodes_explored: int


def is_cover(F: Family, C: Iterable[int]) -> bool:
    c = mask_of(C)
    return all(m & c for m in F.masks)


def _greedy_cover(F: Family) -> tuple[int, ...]:
    chosen = 0
    cover = []
    for e, m in zip(F.edges, F.masks):
        if not m & chosen:
            chosen |= 1 << e[0]
            cover.append(e[0])
    return tuple(sorted(cover))


def covering_number(F: Family, upper_limit: Optional[int] = None) -> CoverCertificate:
    """Minimum cover of ``F``.

    Branches on the least uncovered edge, trying its vertices in ascending
    order; a branch is cut once its depth reaches the best size so far (or
    ``upper_limit + 1``).
    """
    if not F.edges:
        raise ValueError("covering number of an empty family is undefined")
    edges = F.edges
    masks = F.masks
    limit = F.n + 1 if upper_limit is None else upper_limit + 1
    best = [limit, None]
    nodes = 0

    def search(chosen: int, path: list[int], start: int) -> None:
        nonlocal nodes
        nodes += 1
        i = start
        while i < len(masks) and masks[i] & chosen:
            i += 1
        if i == len(masks):
            if len(path) < best[0]:
                best[0] = len(path)
                best[1] = tuple(sorted(path))
            return
        if len(path) + 1 >= best[0]:
            return
        # edges before i are covered and stay covered deeper down
        for v in edges[i]:
            path.append(v)
            search(chosen | (1 << v), path, i + 1)
            path.pop()

    search(0, [], 0)
    if best[1] is None:
        return CoverCertificate(_greedy_cover(F), limit, False, nodes)
    return CoverCertificate(best[1], best[0], True, nodes)


def verify_tau_equals_k(F: Family) -> bool:
    if not F.edges:
        return False
    cert = covering_number(F, upper_limit=F.k)
    return cert.is_minimum and cert.size == F.k

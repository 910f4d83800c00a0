"""Exhaustive search for the largest intersecting family with covering number k.

Families are built as lexicographically increasing edge lists over the
k-subsets of ``range(n_max)``. Isomorph pruning: the first edge is fixed to
``(0, ..., k-1)`` and an edge may only introduce the next unused vertex ids
in order. Every isomorphism class has a representative obeying both rules
(its lexicographically least relabeling), so no class is lost.

Covering number only grows when edges are added and never exceeds k for an
intersecting family, so a maximum family with covering number k is
maximal: no further candidate edge meets all of its edges. The covering
number is therefore only checked at nodes with no compatible candidates left.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .covering import verify_tau_equals_k
from .hypergraph import Family, mask_of

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchResult:
    k: int
    n_max: int
    best_size: int
    witness: Optional[Family]
    exhaustive: bool
    nodes: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "best_size": self.best_size,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "witness": None if self.witness is None else [self.witness.labeled(e) for e in self.witness.edges],
            "note": f"maximum over families on at most {self.n_max} vertices",
        }


class _BudgetExhausted(Exception):
    pass


def max_family_size(k: int, n_max: int, node_budget: int = DEFAULT_BUDGET, progress=None) -> SearchResult:
    """Largest k-uniform intersecting family with covering number k on ``<= n_max`` vertices.

    ``progress``, if given, is called with the node count every 10^6 nodes.
    If the budget runs out the best family so far is returned with
    ``exhaustive=False``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if n_max < k:
        return SearchResult(k, n_max, 0, None, True, 0)
    cands = list(combinations(range(n_max), k))
    masks = [mask_of(c) for c in cands]
    tops = [c[-1] for c in cands]
    best_size = 0
    best_edges: Optional[tuple] = None
    nodes = 0

    def visit(chosen: list, used: int, remaining: list) -> None:
        nonlocal nodes, best_size, best_edges
        nodes += 1
        if nodes > node_budget:
            raise _BudgetExhausted
        if progress is not None and nodes % 1_000_000 == 0:
            progress(nodes)
        if not remaining:
            if len(chosen) > best_size:
                fam = Family(k, tuple(cands[i] for i in chosen), n=n_max)
                if verify_tau_equals_k(fam):
                    best_size = len(chosen)
                    best_edges = fam.edges
            return
        for pos, j in enumerate(remaining):
            if len(chosen) + len(remaining) - pos <= best_size:
                return
            c = cands[j]
            new = [v for v in c if v >= used]
            # new ids must be exactly used, used+1, ...
            if new and new[-1] != used + len(new) - 1:
                continue
            m = masks[j]
            rest = [r for r in remaining[pos + 1 :] if masks[r] & m]
            chosen.append(j)
            visit(chosen, max(used, tops[j] + 1), rest)
            chosen.pop()

    first = 0  # (0, ..., k-1) is the least candidate
    exhaustive = True
    try:
        visit([first], k, [r for r in range(1, len(cands)) if masks[r] & masks[first]])
    except _BudgetExhausted:
        exhaustive = False
        nodes = node_budget
    witness = None if best_edges is None else Family(k, best_edges, n=n_max)
    return SearchResult(k, n_max, best_size, witness, exhaustive, nodes)

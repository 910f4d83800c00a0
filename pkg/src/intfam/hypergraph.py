"""k-uniform families stored as canonical edge lists with bitset masks.

Vertices are dense 0-based ids. Every edge is a strictly increasing tuple of
ids and a family keeps its edges sorted lexicographically without
duplicates, so "least edge" below always means the first match in
``Family.edges``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Edge = tuple[int, ...]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Family:
    """An immutable k-uniform family on the ground set ``range(n)``.

    ``edges`` may be passed in any order and with repeats; construction
    stores the canonical form. ``labels[v]`` is the external (file) label
    of vertex ``v`` and defaults to ``v + 1``.
    """

    k: int
    edges: tuple[Edge, ...]
    n: Optional[int] = None
    labels: Optional[tuple[int, ...]] = None
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        k = self.k
        if k < 1:
            raise ValueError(f"uniformity must be positive, got k={k}")
        canon = set()
        for raw in self.edges:
            e = tuple(sorted(int(v) for v in raw))
            if len(set(e)) != len(e):
                raise ValueError(f"edge {raw!r} repeats a vertex")
            if len(e) != k:
                raise ValueError(f"edge {raw!r} has {len(e)} vertices, expected {k}")
            if e and e[0] < 0:
                raise ValueError(f"negative vertex id in edge {raw!r}")
            canon.add(e)
        edges = tuple(sorted(canon))
        top = max((e[-1] for e in edges), default=-1) + 1
        n = top if self.n is None else int(self.n)
        if n < top:
            raise ValueError(f"ground set size {n} too small for vertex id {top - 1}")
        if n < 1:
            n = max(k, 1)
        labels = self.labels
        if labels is None:
            labels = tuple(range(1, n + 1))
        else:
            labels = tuple(int(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"label map has {len(labels)} entries for n={n}")
            if any(a >= b for a, b in zip(labels, labels[1:])) or labels[0] < 1:
                raise ValueError("labels must be positive and strictly increasing")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "masks", tuple(mask_of(e) for e in edges))

    @classmethod
    def from_labeled(cls, k: int, edges: Iterable[Iterable[int]], n: Optional[int] = None) -> "Family":
        """Build a family from edges over arbitrary positive-integer labels.

        Labels already inside ``1..n`` map to ``label - 1``. Otherwise the
        distinct labels are mapped to dense ids in numeric order, padding the
        ground set with fresh labels past the largest one when ``n`` asks for
        more vertices than are used.
        """
        edges = [tuple(int(v) for v in e) for e in edges]
        used = sorted({v for e in edges for v in e})
        if used and used[0] < 1:
            raise ValueError("vertex labels must be positive integers")
        if n is None:
            n = used[-1] if used else k
        if not used or used[-1] <= n:
            return cls(k, [tuple(v - 1 for v in e) for e in edges], n=n)
        if len(used) > n:
            raise ValueError(f"{len(used)} distinct labels exceed ground set size {n}")
        labels = used + list(range(used[-1] + 1, used[-1] + 1 + n - len(used)))
        index = {lab: i for i, lab in enumerate(labels)}
        return cls(k, [tuple(index[v] for v in e) for e in edges], n=n, labels=tuple(labels))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    @property
    def edge_set(self) -> frozenset:
        cached = self.__dict__.get("_edge_set")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", cached)
        return cached

    def derive(self, edges: Iterable[Edge]) -> "Family":
        """A family on the same ground set and labels with other edges."""
        return Family(self.k, tuple(edges), n=self.n, labels=self.labels)

    def label(self, v: int) -> int:
        return self.labels[v]

    def labeled(self, vertices: Iterable[int]) -> list[int]:
        return [self.labels[v] for v in vertices]

    def id_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"label {label} is not a vertex of this family") from None

    def support(self) -> tuple[int, ...]:
        m = 0
        for em in self.masks:
            m |= em
        return vertices_of(m)


@dataclass(frozen=True)
class ValidationReport:
    is_uniform: bool
    is_intersecting: bool
    witness: Optional[tuple[Edge, Edge]]
    max_degree_vertex: int
    max_degree: int


def _check_vertices(F: Family, S: Iterable[int]) -> int:
    m = 0
    for v in S:
        if not 0 <= v < F.n:
            raise ValueError(f"vertex id {v} outside ground set [0, {F.n})")
        m |= 1 << v
    return m


def masks_within(F: Family, within: Optional[Family]) -> Sequence[int]:
    if within is None:
        return F.masks
    if within.k != F.k or not within.edge_set <= F.edge_set:
        raise ValueError("'within' is not a sub-family of F")
    return within.masks


def validate_family(F: Family) -> ValidationReport:
    masks = F.masks
    witness = None
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if not a & masks[j]:
                witness = (F.edges[i], F.edges[j])
                break
        if witness:
            break
    counts = [0] * F.n
    for e in F.edges:
        for v in e:
            counts[v] += 1
    best = max(range(F.n), key=lambda v: (counts[v], -v))
    return ValidationReport(
        is_uniform=all(len(e) == F.k for e in F.edges),
        is_intersecting=witness is None,
        witness=witness,
        max_degree_vertex=best,
        max_degree=counts[best],
    )


def degree(F: Family, S: Iterable[int] = (), within: Optional[Family] = None) -> int:
    """Number of edges of ``within`` (default ``F``) containing every vertex of ``S``."""
    s = _check_vertices(F, S)
    return sum(1 for m in masks_within(F, within) if m & s == s)


def restrict(F: Family, require: Iterable[int] = (), avoid: Iterable[int] = ()) -> Family:
    """Sub-family of edges containing ``require`` and missing ``avoid``."""
    r = _check_vertices(F, require)
    a = _check_vertices(F, avoid)
    if r & a:
        raise ValueError("require and avoid overlap")
    return F.derive(e for e, m in zip(F.edges, F.masks) if m & r == r and not m & a)


def find_disjoint_edge(F: Family, S: Iterable[int] = ()) -> Optional[Edge]:
    """Lexicographically least edge missing ``S``; ``None`` exactly when ``S`` covers ``F``."""
    s = _check_vertices(F, S)
    for e, m in zip(F.edges, F.masks):
        if not m & s:
            return e
    return None

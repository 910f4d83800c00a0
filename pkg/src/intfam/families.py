"""Test families with covering number k, seeded sampling, and ``.ifam`` I/O.

File format (``.ifam``)::

    k n m
    a1 a2 ... ak        # m lines of 1-based vertex labels
    ...

Blank lines and lines starting with ``#`` are skipped on reading. Writing
emits the canonical edge order with single spaces and a trailing newline,
so saving a loaded canonical file reproduces it byte for byte.

Sampling uses SplitMix64: ``state += 0x9E3779B97F4A7C15`` then the usual
two xor-shift-multiply rounds. ``random_subfamily`` takes a Fisher-Yates
prefix of length m over the edge indices, swapping position i with
``i + next() % (N - i)``, and keeps the chosen edges in canonical order.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .covering import CoverCertificate, covering_number
from .hypergraph import Family

MASK64 = (1 << 64) - 1


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def splitmix64(seed: int) -> Iterator[int]:
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def complete_family(k: int) -> Family:
    """All k-subsets of a (2k-1)-set: intersecting, with covering number k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return Family(k, tuple(combinations(range(2 * k - 1), k)), n=2 * k - 1)


def triangle() -> Family:
    return complete_family(2)


def random_subfamily(F: Family, m: int, seed: int) -> tuple[Family, CoverCertificate]:
    N = len(F.edges)
    if not 1 <= m <= N:
        raise ValueError(f"m={m} out of range 1..{N}")
    idx = list(range(N))
    rng = splitmix64(seed)
    for i in range(m):
        j = i + next(rng) % (N - i)
        idx[i], idx[j] = idx[j], idx[i]
    sub = F.derive(F.edges[i] for i in sorted(idx[:m]))
    return sub, covering_number(sub)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str  # complete_2k_minus_1 | triangle | sub_family
    k: int = 2
    seed: int = 0
    m: int = 0

    def build(self) -> Family:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.kind == "complete_2k_minus_1":
            return complete_family(self.k)
        if self.kind == "triangle":
            return triangle()
        if self.kind == "sub_family":
            return random_subfamily(complete_family(self.k), self.m, self.seed)[0]
        raise ValueError(f"unknown generator kind {self.kind!r}")


def dumps(F: Family) -> str:
    lines = [f"{F.k} {F.n} {len(F.edges)}"]
    lines += [" ".join(str(F.labels[v]) for v in e) for e in F.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Family:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 3:
                raise ParseError("header must be 'k n m'", lineno)
            header = nums
            if header[0] < 1 or header[1] < 1 or header[2] < 0:
                raise ParseError("header values out of range", lineno)
            continue
        k = header[0]
        if len(nums) != k:
            raise ParseError(f"edge has {len(nums)} vertices, expected k={k}", lineno)
        if len(set(nums)) != k:
            raise ParseError("edge repeats a vertex", lineno)
        if min(nums) < 1:
            raise ParseError("vertex labels must be positive", lineno)
        edges.append(tuple(sorted(nums)))
    if header is None:
        raise ParseError("missing header")
    k, n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        warnings.warn(f"{len(edges) - len(set(edges))} duplicate edge(s) removed", stacklevel=2)
    try:
        return Family.from_labeled(k, edges, n=n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def save(F: Family, path: str | os.PathLike) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(dumps(F))


def load(path: str | os.PathLike) -> Family:
    with open(path) as fh:
        return loads(fh.read())


def projective_plane(q: int) -> Family:
    """Lines of PG(2, q) for prime q: a (q+1)-uniform intersecting family with covering number q+1."""
    if q < 2 or any(q % p == 0 for p in range(2, int(q**0.5) + 1)):
        raise ValueError("q must be prime")
    points = [(1, a, b) for a in range(q) for b in range(q)] + [(0, 1, a) for a in range(q)] + [(0, 0, 1)]
    index = {p: i for i, p in enumerate(points)}
    lines = [
        tuple(index[p] for p in points if (L[0] * p[0] + L[1] * p[1] + L[2] * p[2]) % q == 0)
        for L in points
    ]
    return Family(q + 1, lines, n=len(points))


def random_maximal_intersecting(k: int, n: int, seed: int) -> Family:
    """Greedy maximal intersecting family from the k-subsets of ``range(n)`` in seeded random order.

    The covering number is not controlled; check it before relying on it.
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    cands = list(combinations(range(n), k))
    rng = splitmix64(seed)
    for i in range(len(cands) - 1):
        j = i + next(rng) % (len(cands) - i)
        cands[i], cands[j] = cands[j], cands[i]
    chosen, masks = [], []
    for c in cands:
        m = sum(1 << v for v in c)
        if all(m & o for o in masks):
            chosen.append(c)
            masks.append(m)
    return Family(k, chosen, n=n)

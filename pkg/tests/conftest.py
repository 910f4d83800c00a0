from itertools import combinations

import pytest

from intfam import Family, complete_family, random_subfamily, triangle, verify_tau_equals_k
from intfam.families import projective_plane, random_maximal_intersecting


def naive_tau(F):
    """Smallest vertex set meeting every edge, by increasing-size enumeration."""
    for size in range(F.n + 1):
        for C in combinations(range(F.n), size):
            c = set(C)
            if all(c & set(e) for e in F.edges):
                return size
    raise AssertionError("unreachable")


def tau_k_parents():
    """Intersecting families with covering number k that have proper sub-families keeping it.

    complete_family(k) is useless here: dropping any edge lets the complement
    (a (k-1)-set) cover the rest.
    """
    parents = [projective_plane(2), projective_plane(3)]
    for k, n in ((3, 6), (3, 7), (4, 8)):
        for seed in range(20):
            F = random_maximal_intersecting(k, n, seed)
            if verify_tau_equals_k(F):
                parents.append(F)
    return parents


def tau_k_subfamilies(count):
    """The first `count` seeded random sub-families (of tau_k_parents) with covering number k."""
    out = []
    seed = 0
    parents = tau_k_parents()
    while len(out) < count:
        p = parents[seed % len(parents)]
        sub, cert = random_subfamily(p, len(p) - 1 - seed % 3, seed)
        if cert.is_minimum and cert.size == p.k:
            out.append(sub)
        seed += 1
    return out


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def k3():
    return complete_family(3)


@pytest.fixture
def star():
    return Family(2, [(0, 1), (0, 2), (0, 3)])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

"""Acceptance criteria, one test each, with the stated tolerances and time limits.

Each criterion function returns a JSON-ready payload so criterion 11 can
rerun them under different worker counts and compare bytes.
"""

import json
import math
import os
import random
import time
from fractions import Fraction
from itertools import product
from math import ceil, comb

import pytest

from conftest import ACCEPTANCE_LINES, naive_tau, tau_k_subfamilies
from intfam import (
    check_degree_bound,
    complete_family,
    covering_number,
    decode,
    degree,
    encode,
    greedy_extension,
    max_family_size,
    validate_family,
    verify_injectivity,
    verify_tau_equals_k,
)
from intfam._parallel import ENV_VAR
from intfam.counting import (
    count_monotone_sequences,
    count_paired_sequences,
    count_valid_pairs,
    pair_crossover,
    default_alpha,
    pair_estimate,
    theorem_bounds,
)


def brute_monotone(k, t):
    return sum(1 for s in product(range(1, k + 1), repeat=t) if list(s) == sorted(s))


def brute_paired(k, t):
    return sum(
        1
        for s in product(range(1, k + 1), repeat=k)
        if not any(3 * s[i] > 2 * k and 3 * s[i + 1] <= k for i in range(0, t, 2))
    )


def c1():
    out = {}
    for k, size in ((2, 3), (3, 10), (4, 35)):
        F = complete_family(k)
        rep = verify_injectivity(F, "basic")
        codes = [encode(F, e).answers for e in F.edges]
        assert len(F) == size and len(set(codes)) == size
        assert all(all(1 <= w <= k for w in c) and len(c) == k for c in codes)
        assert all(decode(F, c, "basic") == e for c, e in zip(codes, F.edges))
        assert rep.ok and size <= k**k == rep.sequence_space_size
        out[k] = rep.to_dict(F)
    return out


def c2():
    out = {}
    for k in (2, 3, 4):
        F = complete_family(k)
        rep = check_degree_bound(F, k)
        assert rep.precondition_ok and rep.violations == []
        tight_sizes = {len(U) for U, _, _ in rep.tight}
        assert {k - 1, k} <= tight_sizes
        assert all(d == k ** (k - len(U)) for U, d, _ in rep.tight)
        out[f"complete{k}"] = [rep.checked, len(rep.tight)]
    subs = tau_k_subfamilies(50)
    assert len(subs) == 50
    for i, F in enumerate(subs):
        assert verify_tau_equals_k(F)
        rep = check_degree_bound(F, F.k)
        assert rep.precondition_ok and rep.violations == []
        out[f"sub{i}"] = [F.k, len(F), rep.checked, len(rep.tight)]
    return out


def c3():
    rng = random.Random(20261018)
    pool = tau_k_subfamilies(30) + [complete_family(k) for k in (2, 3, 4)]
    rows = []
    for _ in range(1000):
        F = rng.choice(pool)
        sub = F.derive(e for e in F.edges if rng.random() < 0.6)
        S = rng.sample(range(F.n), rng.randrange(F.k))
        v, d = greedy_extension(F, sub, S)
        before = degree(F, S, within=sub)
        assert d * F.k >= before and d >= ceil(before / F.k)
        rows.append([before, d])
    return {"triples": len(rows), "checksum": sum(a * 7 + b for a, b in rows)}


def c4():
    F = complete_family(3)
    rep = verify_injectivity(F, "monotone", x=0, t=1, edge_filter=lambda e: 0 not in e)
    assert rep.family_size == 4 and rep.ok and len(rep.codes) == 4
    assert all(list(c[:1]) == sorted(c[:1]) for c in rep.codes.values())
    space = comb(3 + 1 - 1, 1) * 3 ** (3 - 1)
    assert rep.sequence_space_size == space == 27 and 4 <= space
    assert rep.codes[(1, 2, 3)] == (2, 2, 2)
    return rep.to_dict(F)


def c5():
    F = complete_family(3)
    rep = verify_injectivity(F, "paired", t=2)
    assert rep.family_size == 10 and rep.ok and len(rep.codes) == 10
    for c in rep.codes.values():
        assert not (3 * c[0] > 6) or 3 * c[1] > 3
    assert count_paired_sequences(3, 2) == 24 and 10 <= 24
    assert rep.codes[(2, 3, 4)] == (3, 3, 3)
    return rep.to_dict(F)


def c6():
    rows = []
    for k in range(1, 7):
        for t in range(0, 5):
            f = count_monotone_sequences(k, t)
            assert f == brute_monotone(k, t) == count_monotone_sequences(k, t, "enumerate")
            rows.append(["m", k, t, f])
            if t % 2 == 0 and t <= k:
                g = count_paired_sequences(k, t)
                assert g == brute_paired(k, t) == count_paired_sequences(k, t, "enumerate")
                rows.append(["p", k, t, g])
    assert comb(103, 4) == count_monotone_sequences(100, 4) == 4_421_275
    return rows


def c7():
    scan = pair_crossover(500)
    first = scan["crossover"]
    assert first is not None
    assert count_valid_pairs(first)[0] < math.exp(-0.1) * first * first
    assert all(count_valid_pairs(k)[0] >= math.exp(-0.1) * k * k for k in range(1, first))
    assert all(count_valid_pairs(k)[0] <= pair_estimate(k) for k in range(6, 501))
    assert scan["estimate_bounds_exact"]
    return scan


def c8():
    out = {}
    for k in (2, 3, 4, 5):
        F = complete_family(k)
        cert = covering_number(F)
        assert cert.size == k and cert.is_minimum and verify_tau_equals_k(F)
        if k <= 4:
            assert naive_tau(F) == k
        out[k] = [cert.size, cert.nodes_explored]
    return out


def c9():
    r2 = max_family_size(2, 5)
    assert r2.best_size == 3 and r2.exhaustive
    assert math.floor(math.factorial(2) * (math.e - 1)) == 3
    r3 = max_family_size(3, 5)
    assert r3.best_size >= 10 and len(r3.witness) == r3.best_size
    for r in (r2, r3):
        assert validate_family(r.witness).is_intersecting and verify_tau_equals_k(r.witness)
        assert r.best_size <= r.k**r.k
    return [r2.to_dict(), r3.to_dict()]


def c10():
    r = theorem_bounds(100, default_alpha(100))
    assert r.t_monotone == 4
    assert r.monotone_ratio == Fraction(comb(103, 4), 10**8)
    for k in range(2, 201):
        for alpha in (default_alpha(k), 1):
            rep = theorem_bounds(k, alpha)
            assert rep.invariants_hold(), (k, alpha)
    return r.to_dict()


CRITERIA = [
    (1, "basic codec injective on complete families k=2,3,4", c1, 1.0),
    (2, "d(U) <= k^(k-u) on complete + 50 tau=k sub-families", c2, 10.0),
    (3, "greedy extension keeps ceil(d/k) on 1000 triples", c3, 10.0),
    (4, "monotone codec on complete_family(3), x=0, t=1", c4, None),
    (5, "paired codec on complete_family(3), t=2", c5, None),
    (6, "counting formulas match brute enumeration", c6, 30.0),
    (7, "valid-pair count vs e^(-1/10) k^2 scan", c7, None),
    (8, "covering number of complete families", c8, 30.0),
    (9, "extremal search oracle", c9, 60.0),
    (10, "bound calculator", c10, 5.0),
]


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    start = time.perf_counter()
    try:
        fn()
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {number:>2}. {title}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {number:>2}. {title} ({elapsed:.2f}s)")


def _reports(monkeypatch, workers):
    monkeypatch.setenv(ENV_VAR, str(workers))
    return {n: json.dumps(fn(), sort_keys=True, default=str) for n, _, fn, _ in CRITERIA}


def test_criterion11_determinism(monkeypatch):
    title = "criteria 1-10 byte-identical with 1 vs many workers"
    try:
        serial = _reports(monkeypatch, 1)
        parallel = _reports(monkeypatch, max(4, os.cpu_count() or 1))
        assert serial == parallel
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  11. {title}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  11. {title}")

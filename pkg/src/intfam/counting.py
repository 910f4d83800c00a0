"""Sizes of the constrained answer-sequence spaces and the bound formulas.

Counts are exact Python integers. Real-valued quantities use ``decimal`` at
``PRECISION`` significant digits; ``log`` is always the natural logarithm.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import product
from math import comb
from typing import Optional, Union

PRECISION = 50
ENUMERATION_BUDGET = 10**7

Real = Union[int, float, str, Fraction, Decimal]


def _ctx() -> decimal.Context:
    return decimal.Context(prec=PRECISION)


def to_decimal(x: Real) -> Decimal:
    ctx = _ctx()
    if isinstance(x, Fraction):
        return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    if isinstance(x, float):
        return ctx.plus(Decimal(repr(x)))
    return ctx.plus(Decimal(x))


def ln(x: Real) -> Decimal:
    return _ctx().ln(to_decimal(x))


def floor_ln(k: int) -> int:
    """Exact floor of the natural log of a positive integer."""
    if k < 1:
        raise ValueError("k must be positive")
    m = int(ln(k))
    ctx = _ctx()
    # guard the boundary against the 50-digit rounding of ln
    while ctx.exp(Decimal(m + 1)) <= k:
        m += 1
    while m > 0 and ctx.exp(Decimal(m)) > k:
        m -= 1
    return m


def default_monotone_t(k: int) -> int:
    return floor_ln(k)


def default_paired_t(k: int, alpha: Real) -> int:
    """``20 * floor(alpha * ln k)``."""
    return 20 * int(_ctx().multiply(to_decimal(alpha), ln(k)).to_integral_value(rounding=decimal.ROUND_FLOOR))


def _check_budget(k: int, length: int) -> None:
    if k**length > ENUMERATION_BUDGET:
        raise ValueError(f"enumeration budget exceeded: {k}^{length} > {ENUMERATION_BUDGET}")


def count_monotone_sequences(k: int, t: int, method: str = "formula") -> int:
    """Number of non-decreasing sequences in [k]^t."""
    if t < 0 or k < 1:
        raise ValueError("need k >= 1 and t >= 0")
    if method == "formula":
        return comb(k + t - 1, t)
    if method == "enumerate":
        _check_budget(k, t)
        return sum(1 for s in product(range(1, k + 1), repeat=t) if all(a <= b for a, b in zip(s, s[1:])))
    raise ValueError(f"unknown method {method!r}")


def pair_allowed(k: int, a: int, b: int) -> bool:
    """False exactly when a > 2k/3 and b <= k/3."""
    return not (3 * a > 2 * k and 3 * b <= k)


def count_valid_pairs(k: int) -> tuple[int, int, int]:
    """``(valid, u, v)`` with ``valid = k^2 - u*v``.

    ``u`` counts answers above 2k/3 and ``v`` answers at most k/3.
    """
    if k < 1:
        raise ValueError("k must be positive")
    u = k - (2 * k) // 3
    v = k // 3
    return k * k - u * v, u, v


def pair_estimate(k: int) -> Fraction:
    """The closed-form overestimate (8/9)k^2 + 4k/3 - 4 of the valid-pair count."""
    return Fraction(8, 9) * k * k + Fraction(4, 3) * k - 4


def _check_paired_t(k: int, t: int) -> None:
    if t % 2:
        raise ValueError(f"odd t={t}: the paired strategy asks questions in pairs")
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={k}")


def count_paired_sequences(k: int, t: int, method: str = "formula") -> int:
    """Sequences in [k]^k whose first t answers, taken in pairs, avoid (>2k/3, <=k/3)."""
    _check_paired_t(k, t)
    if method == "formula":
        return count_valid_pairs(k)[0] ** (t // 2) * k ** (k - t)
    if method == "enumerate":
        _check_budget(k, k)
        return sum(
            1
            for s in product(range(1, k + 1), repeat=k)
            if all(pair_allowed(k, s[i], s[i + 1]) for i in range(0, t, 2))
        )
    raise ValueError(f"unknown method {method!r}")


def sequence_space_size(k: int, strategy: str, t: int = 0) -> int:
    if strategy == "basic":
        return k**k
    if strategy == "monotone":
        if not 0 <= t <= k:
            raise ValueError(f"need 0 <= t <= k, got t={t}")
        return count_monotone_sequences(k, t) * k ** (k - t)
    if strategy == "paired":
        return count_paired_sequences(k, t)
    raise ValueError(f"unknown strategy {strategy!r}")


def pair_crossover(k_max: int = 500) -> dict:
    """Scan k = 1..k_max comparing valid pairs against e^(-1/10) k^2.

    Reports the smallest k where the strict inequality holds, the k from
    which it holds for every larger scanned k, the same stable point for the
    closed-form estimate, and whether the estimate bounds the exact count
    for every k >= 6.
    """
    ctx = _ctx()
    factor = ctx.exp(Decimal("-0.1"))
    first = None
    stable = None
    estimate_stable = None
    estimate_ok = True
    for k in range(1, k_max + 1):
        cap = ctx.multiply(factor, Decimal(k * k))
        valid = count_valid_pairs(k)[0]
        if Decimal(valid) < cap:
            if first is None:
                first = k
            if stable is None:
                stable = k
        else:
            stable = None
        est = pair_estimate(k)
        if ctx.divide(Decimal(est.numerator), Decimal(est.denominator)) < cap:
            if estimate_stable is None:
                estimate_stable = k
        else:
            estimate_stable = None
        if k >= 6 and not valid <= est:
            estimate_ok = False
    return {
        "k_max": k_max,
        "crossover": first,
        "stable_from": stable,
        "estimate_stable_from": estimate_stable,
        "estimate_bounds_exact": estimate_ok,
    }


@dataclass(frozen=True)
class BoundsReport:
    k: int
    alpha: Decimal
    t_monotone: int
    t_paired: int
    el_bound: int
    monotone_space: int
    valid_pairs: int
    u: int
    v: int
    pair_estimate: Fraction
    # None when t_paired > k, where the paired strategy cannot run
    paired_space: Optional[int]
    theorem_rhs: int
    high_degree_threshold: Decimal
    max_deg_bound: Decimal
    precision: int = PRECISION

    @property
    def monotone_ratio(self) -> Fraction:
        return Fraction(self.monotone_space, self.el_bound)

    def invariants_hold(self) -> bool:
        return (
            self.monotone_space <= self.el_bound
            and (self.paired_space is None or self.paired_space <= self.el_bound)
            and self.valid_pairs == self.k * self.k - self.u * self.v
            # C(k, 1) k^(k-1) = k^k, so strictness needs t >= 2
            and (self.t_monotone < 2 or self.monotone_space < self.el_bound)
        )

    def to_dict(self) -> dict:
        r = self.monotone_ratio
        return {
            "k": self.k,
            "alpha": str(self.alpha),
            "t_monotone": self.t_monotone,
            "t_paired": self.t_paired,
            "el_bound": str(self.el_bound),
            "monotone_space": str(self.monotone_space),
            "monotone_ratio": f"{r.numerator}/{r.denominator}",
            "valid_pairs": str(self.valid_pairs),
            "u": self.u,
            "v": self.v,
            "pair_estimate": str(self.pair_estimate),
            "paired_space": None if self.paired_space is None else str(self.paired_space),
            "theorem_rhs": str(self.theorem_rhs),
            "high_degree_threshold": str(self.high_degree_threshold),
            "max_deg_bound": str(self.max_deg_bound),
            "precision": self.precision,
        }


def default_alpha(k: int) -> Decimal:
    """alpha = k / (40 ln^2 k), the choice that makes the low-degree case work."""
    ctx = _ctx()
    return ctx.divide(Decimal(k), ctx.multiply(Decimal(40), ctx.power(ln(k), 2)))


def theorem_bounds(k: int, alpha: Real) -> BoundsReport:
    if k < 2:
        raise ValueError("k must be at least 2")
    a = to_decimal(alpha)
    if a <= 0:
        raise ValueError("alpha must be positive")
    ctx = _ctx()
    t_mono = default_monotone_t(k)
    t_pair = default_paired_t(k, a)
    valid, u, v = count_valid_pairs(k)
    monotone_space = count_monotone_sequences(k, t_mono) * k ** (k - t_mono)
    paired_space = count_paired_sequences(k, t_pair) if t_pair <= k else None
    lk = ln(k)
    two_thirds = ctx.multiply(Decimal(2), ctx.exp(ctx.multiply(lk, ctx.divide(Decimal(2 * k), Decimal(3)))))
    e_term = ctx.exp(ctx.add(Decimal(1), ctx.multiply(lk, ctx.subtract(Decimal(k), a))))
    return BoundsReport(
        k=k,
        alpha=a,
        t_monotone=t_mono,
        t_paired=t_pair,
        el_bound=k**k,
        monotone_space=monotone_space,
        valid_pairs=valid,
        u=u,
        v=v,
        pair_estimate=pair_estimate(k),
        paired_space=paired_space,
        theorem_rhs=k ** (k - 1) + monotone_space,
        high_degree_threshold=ctx.multiply(lk, Decimal(k ** (k - 2))),
        max_deg_bound=max(two_thirds, e_term),
    )


def classify_max_degree(k: int, max_degree: int) -> str:
    """Which case of the main argument a family with this maximum degree falls in.

    ``"high"`` when the maximum degree reaches (ln k) k^(k-2), where one
    vertex's link dominates; ``"low"`` otherwise.
    """
    threshold = _ctx().multiply(ln(k), Decimal(k ** (k - 2)))
    return "high" if Decimal(max_degree) >= threshold else "low"

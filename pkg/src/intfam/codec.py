"""Guesser strategies as deterministic edge <-> answer-sequence codecs.

Each question shows the hidden edge ``e`` a labeled *testing edge*
``(t_1, ..., t_k)``; the answer is the least position ``w`` with ``t_w`` in
``e``. After k questions the identified vertices are exactly ``e``, so the
map from edges to answer sequences is injective and ``|F|`` is at most the
number of sequences the strategy can produce.

Three strategies are provided:

``basic``
    Every testing edge is the least edge missing the vertices found so far,
    labeled in ascending order. Codes live in ``[k]^k``.
``monotone``
    For edges avoiding a fixed vertex ``x``. The first ``t`` testing edges
    start with the known non-vertices ``U`` and are completed by a greedy
    degree chain, which forces ``w_1 <= ... <= w_t``.
``paired``
    Questions ``i, i+1`` (i odd, ``i < t``) share a greedy prefix ``S`` of
    length ``k // 3``. If ``w_i > 2k/3`` the second testing edge again starts
    with ``S`` while dodging the vertex just found, forcing
    ``w_{i+1} > k/3``.

Encoding and decoding run the same replay routine, differing only in where
answers come from, so a decoder can never disagree with its encoder.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from . import _parallel
from .counting import Real, default_monotone_t, default_paired_t, pair_allowed, sequence_space_size
from .hypergraph import Edge, Family, find_disjoint_edge, mask_of, masks_within, restrict
from .lemmas import EmptyChain, NoDisjointEdge, greedy_chain

STRATEGIES = ("basic", "monotone", "paired")


class CodecError(ValueError):
    pass


class EdgeNotInFamily(CodecError):
    pass


class VertexInEdge(CodecError):
    """Monotone encoding needs the hidden edge to avoid ``x``."""


class StrategyInfeasible(CodecError):
    """The strategy cannot build its next testing edge on this family.

    The guarantees behind the strategies need degree hypotheses that small
    families may not meet; this is reported, not hidden.
    """

    def __init__(self, step: int, reason: str):
        self.step = step
        super().__init__(f"strategy infeasible at step {step}: {reason}")


class NoTestingEdge(CodecError):
    def __init__(self, step: int):
        self.step = step
        super().__init__(f"no disjoint testing edge at step {step}: found vertices cover the family (tau < k)")


class InvalidCode(CodecError):
    pass


@dataclass(frozen=True)
class AnswerSequence:
    answers: tuple[int, ...]
    strategy: str
    t: int = 0
    x: Optional[int] = None


@dataclass(frozen=True)
class Step:
    index: int
    phase: str
    testing_edge: tuple[int, ...]
    answer: int
    vertex: int
    V: tuple[int, ...]
    U: Optional[tuple[int, ...]] = None
    family_size: Optional[int] = None
    forced: Optional[tuple[int, ...]] = None
    # monotone only: (ln k - i) k^(k - w_i) and whether |F_i| reaches it
    size_bound: Optional[float] = None
    size_bound_holds: Optional[bool] = None

    def to_dict(self, F: Family) -> dict:
        d = {
            "step": self.index,
            "phase": self.phase,
            "testing_edge": F.labeled(self.testing_edge),
            "answer": self.answer,
            "vertex": F.label(self.vertex),
            "V": F.labeled(self.V),
        }
        if self.U is not None:
            d["U"] = F.labeled(self.U)
        if self.family_size is not None:
            d["F_size"] = self.family_size
        if self.forced is not None:
            d["P"] = F.labeled(self.forced)
        if self.size_bound is not None:
            d["size_bound"] = self.size_bound
            d["size_bound_holds"] = self.size_bound_holds
        return d


def compute_forced_vertices(F: Family, sub: Optional[Family], S: Iterable[int]) -> tuple[int, ...]:
    """Vertices outside ``S`` lying in every edge of ``sub`` that contains ``S``."""
    s = mask_of(S)
    common = -1
    for m in masks_within(F, sub):
        if m & s == s:
            common &= m
    if common == -1:
        raise ValueError("no extending edges: S has degree 0 in the sub-family")
    common &= ~s
    return tuple(v for v in range(F.n) if common >> v & 1)


Respond = Callable[[tuple[int, ...], int], int]


def _monotone_prefix(F: Family, x: int, t: int, respond: Respond, V: list, trace: list) -> None:
    k = F.k
    U = [x]
    prev = 2
    log_k = math.log(k)
    for i in range(1, t + 1):
        sub = restrict(F, U, V)
        try:
            chain = greedy_chain(F, sub, U, k)
        except EmptyChain:
            raise StrategyInfeasible(i, f"no edge contains U={sorted(U)} while avoiding V={sorted(V)}") from None
        except NoDisjointEdge:
            raise StrategyInfeasible(i, "greedy chain met a cover (tau < k)") from None
        if chain.final_degree < 1:
            raise StrategyInfeasible(i, "greedy chain lost all degree (family not intersecting)")
        label = chain.vertices
        w = respond(label, i)
        if w < prev:
            raise CodecError(f"answer {w} at step {i} drops below {prev}: U meets the hidden edge")
        V.append(label[w - 1])
        U = list(label[: w - 1])
        prev = w
        size = len(restrict(F, U, V))
        bound = (log_k - i) * float(k) ** (k - w)
        trace.append(Step(i, "monotone", label, w, V[-1], tuple(V), tuple(U), size, None, bound, size >= bound))


def _paired_prefix(F: Family, t: int, respond: Respond, V: list, trace: list) -> None:
    k = F.k
    third = k // 3
    for i in range(1, t + 1, 2):
        sub = restrict(F, (), V)
        if not sub.edges:
            raise NoTestingEdge(i)
        try:
            chain = greedy_chain(F, sub, (), third)
        except NoDisjointEdge:
            raise StrategyInfeasible(i, "greedy chain met a cover (tau < k)") from None
        S = chain.vertices
        D = restrict(sub, S, ())
        P = compute_forced_vertices(F, D, S)
        skip = set(S) | set(P)
        label = S + P + tuple(v for v in D.edges[0] if v not in skip)
        w = respond(label, i)
        v = label[w - 1]
        V.append(v)
        trace.append(Step(i, "pair-first", label, w, v, tuple(V), None, len(sub), P))
        if 3 * w > 2 * k:
            if v in P:
                raise StrategyInfeasible(i, f"vertex at position {w} > 2k/3 is forced by S")
            e2 = find_disjoint_edge(D, (v,))
            label2 = S + tuple(u for u in e2 if u not in set(S))
            phase = "pair-forced"
        else:
            e2 = find_disjoint_edge(F, V)
            if e2 is None:
                raise NoTestingEdge(i + 1)
            label2 = e2
            phase = "pair-free"
        w2 = respond(label2, i + 1)
        V.append(label2[w2 - 1])
        trace.append(Step(i + 1, phase, label2, w2, V[-1], tuple(V)))


def _play(F: Family, strategy: str, respond: Respond, t: int, x: Optional[int]) -> tuple[list, list]:
    V: list = []
    trace: list = []
    if strategy == "monotone":
        _monotone_prefix(F, x, t, respond, V, trace)
    elif strategy == "paired":
        _paired_prefix(F, t, respond, V, trace)
    for i in range(len(V) + 1, F.k + 1):
        edge = find_disjoint_edge(F, V)
        if edge is None:
            raise NoTestingEdge(i)
        w = respond(edge, i)
        V.append(edge[w - 1])
        trace.append(Step(i, "free", edge, w, V[-1], tuple(V)))
    return V, trace


def _resolve_params(F: Family, strategy: str, t: Optional[int], x: Optional[int], alpha: Optional[Real]) -> tuple[int, Optional[int]]:
    k = F.k
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "basic":
        return 0, None
    if strategy == "monotone":
        if x is None or not 0 <= x < F.n:
            raise ValueError("monotone strategy needs a vertex x in the ground set")
        if t is None:
            t = default_monotone_t(k)
    else:
        x = None
        if t is None:
            if alpha is None:
                raise ValueError("paired strategy needs t or alpha")
            t = default_paired_t(k, alpha)
        if t % 2:
            raise ValueError(f"odd t={t}: paired questions come in pairs")
    if not 0 <= t <= k:
        raise ValueError(f"need 0 <= t <= k, got t={t}, k={k}")
    return t, x


def check_constraints(answers: Sequence[int], strategy: str, k: int, t: int = 0) -> Optional[str]:
    """Reason the sequence cannot come from the strategy, or ``None`` if it can."""
    if len(answers) != k:
        return f"code has {len(answers)} answers, expected k={k}"
    for i, w in enumerate(answers, 1):
        if not 1 <= w <= k:
            return f"answer {w} at position {i} outside [1, {k}]"
    if strategy == "monotone":
        for i in range(1, t):
            if answers[i] < answers[i - 1]:
                return f"answers {i} and {i + 1} decrease inside the monotone prefix"
    elif strategy == "paired":
        for i in range(0, t, 2):
            if not pair_allowed(k, answers[i], answers[i + 1]):
                return f"pair ({answers[i]}, {answers[i + 1]}) at positions {i + 1},{i + 2} is forbidden"
    return None


def encode(
    F: Family,
    e: Iterable[int],
    strategy: str = "basic",
    *,
    t: Optional[int] = None,
    x: Optional[int] = None,
    alpha: Optional[Real] = None,
    trace: bool = False,
):
    """Encode edge ``e``; with ``trace=True`` also return the per-step states."""
    t, x = _resolve_params(F, strategy, t, x, alpha)
    e = tuple(sorted(e))
    if e not in F.edge_set:
        raise EdgeNotInFamily(f"edge {e} not in family")
    if x is not None and x in e:
        raise VertexInEdge(f"x={x} in edge {e}")
    emask = mask_of(e)

    def respond(label, i):
        for pos, v in enumerate(label, 1):
            if emask >> v & 1:
                return pos
        raise CodecError(f"testing edge {label} misses the hidden edge at step {i}; family is not intersecting")

    V, steps = _play(F, strategy, respond, t, x)
    assert tuple(sorted(V)) == e
    seq = AnswerSequence(tuple(s.answer for s in steps), strategy, t, x)
    return (seq, steps) if trace else seq


def decode(
    F: Family,
    code: Union[AnswerSequence, Sequence[int]],
    strategy: Optional[str] = None,
    *,
    t: Optional[int] = None,
    x: Optional[int] = None,
    alpha: Optional[Real] = None,
    trace: bool = False,
):
    if isinstance(code, AnswerSequence):
        strategy = strategy or code.strategy
        t = code.t if t is None else t
        x = code.x if x is None else x
        answers = code.answers
    else:
        answers = tuple(int(w) for w in code)
    strategy = strategy or "basic"
    t, x = _resolve_params(F, strategy, t, x, alpha)
    problem = check_constraints(answers, strategy, F.k, t)
    if problem:
        raise InvalidCode(f"invalid code: {problem}")

    def respond(label, i):
        return answers[i - 1]

    try:
        V, steps = _play(F, strategy, respond, t, x)
    except CodecError as exc:
        raise InvalidCode(f"invalid code: {exc}") from None
    edge = tuple(sorted(V))
    if len(set(edge)) != F.k or edge not in F.edge_set:
        raise InvalidCode(f"invalid code: identified vertices {edge} are not an edge")
    return (edge, steps) if trace else edge


def encode_basic(F: Family, e: Iterable[int]) -> AnswerSequence:
    return encode(F, e, "basic")


def decode_basic(F: Family, code) -> Edge:
    return decode(F, code, "basic")


def encode_monotone(F: Family, x: int, e: Iterable[int], t: Optional[int] = None) -> AnswerSequence:
    return encode(F, e, "monotone", t=t, x=x)


def decode_monotone(F: Family, x: int, code, t: Optional[int] = None) -> Edge:
    return decode(F, code, "monotone", t=t, x=x)


def encode_paired(F: Family, e: Iterable[int], t: Optional[int] = None, alpha: Optional[Real] = None) -> AnswerSequence:
    return encode(F, e, "paired", t=t, alpha=alpha)


def decode_paired(F: Family, code, t: Optional[int] = None, alpha: Optional[Real] = None) -> Edge:
    return decode(F, code, "paired", t=t, alpha=alpha)


@dataclass
class InjectivityReport:
    strategy: str
    t: int
    x: Optional[int]
    family_size: int
    codes_distinct: bool
    constraints_hold: bool
    sequence_space_size: int
    failures: list = field(default_factory=list)
    codes: dict = field(default_factory=dict)

    @property
    def bound_holds(self) -> bool:
        return self.family_size <= self.sequence_space_size

    @property
    def ok(self) -> bool:
        return not self.failures and self.codes_distinct and self.constraints_hold and self.bound_holds

    def to_dict(self, F: Family) -> dict:
        return {
            "strategy": self.strategy,
            "t": self.t,
            "x": None if self.x is None else F.label(self.x),
            "family_size": self.family_size,
            "encoded": len(self.codes),
            "codes_distinct": self.codes_distinct,
            "constraints_hold": self.constraints_hold,
            "sequence_space_size": str(self.sequence_space_size),
            "bound_holds": self.bound_holds,
            "failures": [[F.labeled(e), reason] for e, reason in self.failures],
            "codes": [[F.labeled(e), list(w)] for e, w in sorted(self.codes.items())],
        }


def _check_edge(args) -> tuple[Edge, Optional[tuple[int, ...]], Optional[str]]:
    F, e, strategy, t, x = args
    try:
        seq = encode(F, e, strategy, t=t, x=x)
    except CodecError as exc:
        return e, None, str(exc)
    try:
        back = decode(F, seq)
    except CodecError as exc:
        return e, seq.answers, f"decode failed: {exc}"
    if back != e:
        return e, seq.answers, f"roundtrip mismatch: decoded {back}"
    return e, seq.answers, None


def verify_injectivity(
    F: Family,
    strategy: str = "basic",
    *,
    t: Optional[int] = None,
    x: Optional[int] = None,
    alpha: Optional[Real] = None,
    edge_filter: Optional[Callable[[Edge], bool]] = None,
    workers: Optional[int] = None,
) -> InjectivityReport:
    """Encode every selected edge, decode it back, and check the codes.

    For the monotone strategy the default filter keeps edges avoiding ``x``.
    The report does not depend on ``workers``.
    """
    t, x = _resolve_params(F, strategy, t, x, alpha)
    if edge_filter is None and strategy == "monotone":
        edge_filter = lambda e: x not in e  # noqa: E731
    edges = [e for e in F.edges if edge_filter is None or edge_filter(e)]
    results = _parallel.ordered_map(_check_edge, [(F, e, strategy, t, x) for e in edges], workers)
    codes, failures = {}, []
    for e, answers, reason in results:
        if answers is not None:
            codes[e] = answers
        if reason is not None:
            failures.append((e, reason))
    constraints = all(check_constraints(w, strategy, F.k, t) is None for w in codes.values())
    return InjectivityReport(
        strategy=strategy,
        t=t,
        x=x,
        family_size=len(edges),
        codes_distinct=len(set(codes.values())) == len(codes),
        constraints_hold=constraints,
        sequence_space_size=sequence_space_size(F.k, strategy, t),
        failures=sorted(failures),
        codes=codes,
    )


def is_canonical_code(F: Family, code: AnswerSequence) -> bool:
    """True when the code decodes and re-encoding the edge reproduces it."""
    try:
        edge = decode(F, code)
        return encode(F, edge, code.strategy, t=code.t, x=code.x) == code
    except CodecError:
        return False

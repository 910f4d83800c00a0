"""Command-line entry point: ``intfam <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
With ``--json`` a single JSON object is printed; integers that can exceed
64 bits are written as decimal strings. Vertices are always shown with
their file labels (1-based by default).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Any, Optional

from . import codec, counting, families, lemmas
from .covering import covering_number
from .hypergraph import Family, validate_family
from .search import DEFAULT_BUDGET, max_family_size


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict
    outcome: dict = field(default_factory=dict)
    elapsed: float = 0.0
    exit_code: int = 0
    text: list = field(default_factory=list)
    json: bool = False

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "elapsed_ms": round(self.elapsed, 3),
            "exit_code": self.exit_code,
        }


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"{what} must be space-separated integers, got {text!r}") from None


def _load(path: str) -> Family:
    try:
        return families.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except families.ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _vertex(F: Family, label: Optional[int]) -> Optional[int]:
    if label is None:
        return None
    try:
        return F.id_of(label)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _codec_params(F: Family, args) -> dict:
    return {"t": args.t, "x": _vertex(F, args.x), "alpha": args.alpha}


def cmd_gen(args, report: RunReport) -> None:
    if args.kind == "complete":
        if args.k is None:
            raise UsageError("gen --kind complete needs --k")
        F = families.complete_family(args.k)
        report.outcome = {"edges": len(F), "n": F.n, "k": F.k}
    elif args.kind == "triangle":
        F = families.triangle()
        report.outcome = {"edges": len(F), "n": F.n, "k": F.k}
    else:
        if args.source is None or args.m is None:
            raise UsageError("gen --kind sub needs --from and --m")
        parent = _load(args.source)
        F, cert = families.random_subfamily(parent, args.m, args.seed)
        report.outcome = {"edges": len(F), "n": F.n, "k": F.k, "tau": cert.size, "seed": args.seed}
    families.save(F, args.output)
    report.outcome["path"] = args.output
    report.text.append(f"wrote {len(F)} edges (k={F.k}, n={F.n}) to {args.output}")


def cmd_tau(args, report: RunReport) -> None:
    F = _load(args.file)
    if not F.edges:
        raise UsageError("family has no edges")
    cert = covering_number(F, upper_limit=args.limit)
    report.outcome = {
        "tau": cert.size,
        "cover": F.labeled(cert.cover),
        "minimum": cert.is_minimum,
        "nodes": cert.nodes_explored,
    }
    if cert.is_minimum:
        report.text.append(f"tau = {cert.size}")
        report.text.append("cover: " + " ".join(map(str, F.labeled(cert.cover))))
    else:
        report.text.append(f"tau > {args.limit}")
    report.text.append(f"nodes explored: {cert.nodes_explored}")


def _trace_lines(F: Family, steps) -> list[str]:
    out = []
    for s in steps:
        d = s.to_dict(F)
        extra = "".join(f" {key}={d[key]}" for key in ("U", "F_size", "P", "size_bound_holds") if key in d)
        out.append(f"  step {d['step']} [{d['phase']}] edge={d['testing_edge']} answer={d['answer']} V={d['V']}{extra}")
    return out


def cmd_encode(args, report: RunReport) -> None:
    F = _load(args.file)
    edge = [_vertex(F, lab) for lab in _ints(args.edge, "--edge")]
    try:
        seq, steps = codec.encode(F, edge, args.strategy, trace=True, **_codec_params(F, args))
    except (codec.EdgeNotInFamily, codec.VertexInEdge) as exc:
        raise UsageError(str(exc)) from None
    except codec.CodecError as exc:
        report.exit_code = 1
        report.outcome = {"error": str(exc)}
        report.text.append(str(exc))
        return
    report.outcome = {"code": list(seq.answers), "strategy": seq.strategy, "t": seq.t}
    report.text.append("code: " + " ".join(map(str, seq.answers)))
    if args.trace:
        report.outcome["trace"] = [s.to_dict(F) for s in steps]
        report.text += _trace_lines(F, steps)


def cmd_decode(args, report: RunReport) -> None:
    F = _load(args.file)
    answers = _ints(args.code, "--code")
    try:
        edge, steps = codec.decode(F, answers, args.strategy, trace=True, **_codec_params(F, args))
    except codec.InvalidCode as exc:
        raise UsageError(str(exc)) from None
    report.outcome = {"edge": F.labeled(edge)}
    report.text.append("edge: " + " ".join(map(str, F.labeled(edge))))
    if args.trace:
        report.outcome["trace"] = [s.to_dict(F) for s in steps]
        report.text += _trace_lines(F, steps)


def cmd_verify(args, report: RunReport) -> None:
    F = _load(args.file)
    rep = codec.verify_injectivity(F, args.strategy, **_codec_params(F, args))
    report.outcome = rep.to_dict(F)
    report.exit_code = 0 if rep.ok else 1
    report.text.append(f"strategy {rep.strategy} (t={rep.t}): {len(rep.codes)}/{rep.family_size} edges encoded")
    report.text.append(f"codes distinct: {rep.codes_distinct}; constraints hold: {rep.constraints_hold}")
    report.text.append(f"family size {rep.family_size} <= sequence space {rep.sequence_space_size}: {rep.bound_holds}")
    for e, reason in rep.failures:
        report.text.append(f"  failure {F.labeled(e)}: {reason}")


def cmd_count(args, report: RunReport) -> None:
    method = "enumerate" if args.enumerate else "formula"
    if args.strategy == "monotone":
        prefix = counting.count_monotone_sequences(args.k, args.t, method)
        total = prefix * args.k ** (args.k - args.t)
        report.outcome = {"prefix_count": str(prefix), "space": str(total), "method": method}
        report.text.append(f"non-decreasing sequences in [{args.k}]^{args.t}: {prefix}")
    else:
        total = counting.count_paired_sequences(args.k, args.t, method)
        valid, u, v = counting.count_valid_pairs(args.k)
        report.outcome = {"valid_pairs": str(valid), "u": u, "v": v, "space": str(total), "method": method}
        report.text.append(f"valid pairs: {valid} = {args.k}^2 - {u}*{v}")
    report.text.append(f"sequence space: {total}")


def cmd_bounds(args, report: RunReport) -> None:
    alpha = counting.default_alpha(args.k) if args.alpha is None else args.alpha
    rep = counting.theorem_bounds(args.k, alpha)
    report.outcome = rep.to_dict()
    report.outcome["invariants_hold"] = rep.invariants_hold()
    for key, value in report.outcome.items():
        report.text.append(f"{key}: {value}")


def cmd_check_lemmas(args, report: RunReport) -> None:
    F = _load(args.file)
    rep = lemmas.check_degree_bound(F, args.umax)
    val = validate_family(F)
    report.outcome = {
        "precondition_ok": rep.precondition_ok,
        "precondition_failure": rep.precondition_failure,
        "checked": rep.checked,
        "violations": [[F.labeled(U), d, str(b)] for U, d, b in rep.violations],
        "tight": [[F.labeled(U), d, str(b)] for U, d, b in rep.tight],
        "max_degree": val.max_degree,
        "max_degree_vertex": F.label(val.max_degree_vertex),
        "degree_case": counting.classify_max_degree(F.k, val.max_degree),
    }
    if not rep.precondition_ok:
        report.exit_code = 2
        report.text.append(f"precondition failed: {rep.precondition_failure}")
        return
    report.exit_code = 0 if rep.ok else 1
    report.text.append(f"checked {rep.checked} sets; {len(rep.violations)} violations; {len(rep.tight)} tight")
    for U, d, b in rep.violations:
        report.text.append(f"  VIOLATION d({F.labeled(U)}) = {d} > {b}")


def cmd_search(args, report: RunReport) -> None:
    res = max_family_size(args.k, args.nmax, args.budget)
    report.outcome = res.to_dict()
    report.text.append(f"best size on <= {args.nmax} vertices: {res.best_size} (exhaustive={res.exhaustive}, nodes={res.nodes})")
    if args.output and res.witness is not None:
        families.save(res.witness, args.output)
        report.outcome["path"] = args.output


def _add_codec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("file")
    p.add_argument("--strategy", choices=codec.STRATEGIES, default="basic")
    p.add_argument("--x", type=int, help="excluded vertex label (monotone)")
    p.add_argument("--t", type=int, help="length of the constrained prefix")
    p.add_argument("--alpha", type=Decimal, help="sets t = 20 floor(alpha ln k) for paired")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intfam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a test family")
    p.add_argument("--kind", choices=("complete", "triangle", "sub"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--from", dest="source")
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tau", help="exact covering number")
    p.add_argument("file")
    p.add_argument("--limit", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("encode", help="encode an edge as an answer sequence")
    _add_codec_args(p)
    p.add_argument("--edge", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode an answer sequence")
    _add_codec_args(p)
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="check a strategy is injective on a family")
    _add_codec_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="size of a constrained sequence space")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--strategy", choices=("monotone", "paired"), required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", help="evaluate the bound formulas")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=Decimal, help="default k / (40 ln^2 k)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("check-lemmas", help="check d(U) <= k^(k-|U|) on a family")
    p.add_argument("file")
    p.add_argument("--umax", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_lemmas)

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)
    return parser


def dispatch(argv=None) -> RunReport:
    """Parse ``argv`` and run the subcommand. Usage errors raise ``SystemExit(2)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    inputs = {k: (str(v) if isinstance(v, Decimal) else v) for k, v in vars(args).items() if k not in ("func", "command")}
    report = RunReport(args.command, inputs)
    start = time.perf_counter()
    try:
        args.func(args, report)
    except (UsageError, ValueError) as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    report.elapsed = (time.perf_counter() - start) * 1000
    report.json = args.json
    return report


def _default(obj: Any):
    if isinstance(obj, (Decimal,)):
        return str(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def main(argv=None) -> int:
    report = dispatch(argv)
    if report.json:
        print(json.dumps(report.to_dict(), default=_default, sort_keys=True))
    else:
        print("\n".join(report.text))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

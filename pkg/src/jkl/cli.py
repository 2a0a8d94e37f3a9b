"""Command-line frontend: ``jkl <command> --n N ...``.

Exit status is 0 on success, 1 for domain errors and failed claims, and 2
for usage errors (bad flags, unparseable input, rank out of range).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import golden
from .glrep import (DomainError, ModuleError, decompose, decomposition_json, decomposition_str,
                    lambda_to_phi, phi_to_lambda, weyl_dimension)
from .grammar import (ParseError, parse_autword, parse_module, vector_from_json,
                      vector_to_dict, vector_to_json)
from .johnson import (NotCommuting, NotIA, NotInKernel, abelian_cycle_image, chain, in_K, tau,
                      tau2)

MAX_N = 12
MAX_DECOMPOSE_N = 8
MAX_DEGREE = 6


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    n: int = 3
    degree: int = 4
    format: str = "text"

    def __post_init__(self):
        if not 2 <= self.n <= MAX_N:
            raise UsageError(f"--n must lie in 2..{MAX_N}, got {self.n}")
        if not 1 <= self.degree <= MAX_DEGREE:
            raise UsageError(f"--degree must lie in 1..{MAX_DEGREE}, got {self.degree}")
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")

    def require_decomposable(self):
        if self.n > MAX_DECOMPOSE_N:
            raise UsageError(f"decomposition commands need n <= {MAX_DECOMPOSE_N}")


def _emit(cfg: Config, text: str, data) -> None:
    if cfg.format == "json":
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_tau(cfg: Config, args) -> int:
    v = tau(parse_autword(args.word, cfg.n))
    _emit(cfg, str(v), vector_to_dict(v))
    return 0


def cmd_tau2(cfg: Config, args) -> int:
    if cfg.degree < 3:
        raise UsageError("tau2 needs --degree >= 3")
    a = parse_autword(args.word, cfg.n)
    v = tau2(a)
    if cfg.format == "json":
        print(vector_to_json(v))
    else:
        print(v)
        if cfg.degree >= 4:
            print(f"in K^(3): {in_K(a, 3, cfg.degree)}")
    return 0


def cmd_decompose(cfg: Config, args) -> int:
    cfg.require_decomposable()
    module = parse_module(args.expr, cfg.n)
    d = decompose(module)
    _emit(cfg, f"{module.name} (dim {module.dim}) = {decomposition_str(d)}",
          {"module": module.name, "dim": module.dim, "decomposition": decomposition_json(d)})
    return 0


def _parse_label(text: str, n: int, as_lambda: bool):
    if "..." in text or "…" in text:
        if as_lambda:
            raise UsageError("ellipses are only supported in subscript labels")
        lam = golden.expand_label(text, n)
        if lam is None:
            raise UsageError(f"label {text!r} does not fit n={n}")
        return lam
    try:
        vals = [int(t.replace("−", "-")) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed label {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"label {text!r} has {len(vals)} entries, expected {n}")
    if as_lambda:
        return tuple(vals)
    if any(x < 0 for x in vals[:-1]):
        raise DomainError(f"label {text!r} is not dominant")
    return phi_to_lambda(vals)


def cmd_weyl_dim(cfg: Config, args) -> int:
    lam = _parse_label(args.label, cfg.n, args.as_lambda)
    try:
        d = weyl_dimension(lam)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(cfg, str(d), {"lambda": list(lam), "phi": list(lambda_to_phi(lam)), "dimension": d})
    return 0


def cmd_cycle(cfg: Config, args) -> int:
    u = parse_autword(args.u, cfg.n)
    v = parse_autword(args.v, cfg.n)
    val = abelian_cycle_image(u, v)
    steps = _parse_steps(args.through, cfg.n) if args.through else ()
    if steps:
        val = chain(val, *steps)
    _emit(cfg, str(val), vector_to_dict(val))
    return 0


_E_STEP = re.compile(r"E\((\d+),(\d+)\)")


def _parse_steps(text: str, n: int) -> List:
    steps = []
    for part in text.replace(" ", "").split("."):
        m = _E_STEP.fullmatch(part)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= n and 1 <= j <= n):
                raise UsageError(f"{part} is out of range for n={n}")
            steps.append((i, j))
        elif part:
            from .johnson import MAP_NAMES

            if part not in MAP_NAMES and part != "n":
                raise UsageError(f"unknown map {part!r}")
            steps.append(part)
    return steps


def cmd_map(cfg: Config, args) -> int:
    text = sys.stdin.read() if args.vector == "-" else args.vector
    try:
        v = vector_from_json(text, cfg.n)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (ModuleError, DomainError)):
            raise
        raise UsageError(f"cannot read vector: {exc}") from None
    out = chain(v, *_parse_steps(args.maps, cfg.n))
    _emit(cfg, str(out), vector_to_dict(out))
    return 0


def cmd_verify(cfg: Config, args) -> int:
    from . import verify

    if args.claim:
        ids = args.claim
        unknown = [c for c in ids if c not in verify.REGISTRY]
        if unknown:
            raise UsageError(f"unknown claim(s): {', '.join(unknown)}")
    elif args.all:
        ids = list(verify.CLAIM_IDS)
    else:
        ids = verify.claims_for_rank(cfg.n)
        if not ids:
            raise UsageError(f"no claims are stated at n={cfg.n}")
    reports = verify.run_claims(ids)
    data = verify.report_dict(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(data, fh, ensure_ascii=False, indent=2)
    if cfg.format == "json":
        print(json.dumps(data, ensure_ascii=False))
    else:
        for r in reports:
            print(f"{r.status.upper():7s} {r.claim_id} ({r.runtime:.2f}s)")
            for c in r.checks:
                if c.status == "fail":
                    print(f"        fail: {c.name}: expected {c.expected}, got {c.computed}"
                          + (f" [{c.note}]" if c.note else ""))
        s = data["summary"]
        print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return 1 if data["summary"]["fail"] else 0


def cmd_rank(cfg: Config, args) -> int:
    from .verify import tau2_image

    cfg.require_decomposable()
    if cfg.n < 3:
        raise UsageError("rank needs n >= 3")
    span = tau2_image(cfg.n).dim
    formula = golden.corollary_rank(cfg.n)
    _emit(cfg, f"n={cfg.n}: span rank {span}, formula n²(n²−4)/3 + n(n−1)/2 = {formula}, "
               + ("match" if span == formula else "MISMATCH"),
          {"n": cfg.n, "span": span, "formula": formula, "match": span == formula})
    return 0 if span == formula else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="rank of the free group (default 3)")
    common.add_argument("--degree", type=int, default=4, help="Magnus truncation degree")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="jkl", description="Johnson homomorphisms and GL(n) "
                                "decompositions with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tau", parents=[common], help="Johnson homomorphism of an IA word")
    s.add_argument("word")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("tau2", parents=[common], help="second Johnson homomorphism")
    s.add_argument("word")
    s.set_defaults(func=cmd_tau2)

    s = sub.add_parser("decompose", parents=[common], help="decompose a module expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("weyl-dim", parents=[common], help="dimension of an irreducible")
    s.add_argument("label", help='subscript label such as "1,0,...,0,-1"')
    s.add_argument("--lambda", dest="as_lambda", action="store_true",
                   help="read the label as a weakly decreasing weight")
    s.set_defaults(func=cmd_weyl_dim)

    s = sub.add_parser("cycle", parents=[common], help="image of an abelian cycle in ∧²U")
    s.add_argument("u")
    s.add_argument("v")
    s.add_argument("--through", help='maps to apply afterwards, e.g. "g1.f"')
    s.set_defaults(func=cmd_cycle)

    s = sub.add_parser("map", parents=[common], help="apply equivariant maps to a vector")
    s.add_argument("maps", help='composition such as "k.f.E(2,4).E(1,5)"')
    s.add_argument("vector", help="vector JSON, or - to read stdin")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("verify", parents=[common], help="reproduce the stated claims")
    s.add_argument("--claim", action="append", help="claim id (repeatable)")
    s.add_argument("--all", action="store_true", help="run every registered claim")
    s.add_argument("--out", help="write the JSON report to this path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("rank", parents=[common], help="span rank of τ2 against the formula")
    s.set_defaults(func=cmd_rank)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = Config(args.n, args.degree, args.format)
        return args.func(cfg, args)
    except (UsageError, ParseError) as exc:
        print(f"jkl: error: {exc}", file=sys.stderr)
        return 2
    except (NotIA, NotInKernel, NotCommuting, DomainError, ModuleError) as exc:
        print(f"jkl: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Run every registered claim and write the JSON report.

    python scripts/reproduce_all.py --out report.json [--max-n 6] [--threads 4]
"""
import argparse
import json
import sys
from dataclasses import dataclass

from jkl import verify


@dataclass(frozen=True)
class ReproduceConfig:
    out: str = "report.json"
    max_n: int = 8
    threads: int = 1
    with_runtime: bool = True


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default=ReproduceConfig.out)
    p.add_argument("--max-n", type=int, default=ReproduceConfig.max_n)
    p.add_argument("--threads", type=int, default=ReproduceConfig.threads)
    p.add_argument("--no-runtime", action="store_true",
                   help="omit timings so the report is byte-for-byte reproducible")
    a = p.parse_args(argv)
    cfg = ReproduceConfig(a.out, a.max_n, a.threads, not a.no_runtime)
    ids = [c for c in verify.CLAIM_IDS if _rank(c) <= cfg.max_n]
    reports = verify.run_claims(ids, threads=cfg.threads)
    data = verify.report_dict(reports, cfg.with_runtime)
    with open(cfg.out, "w", encoding="utf-8") as fh:
        json.dump(data, fh, ensure_ascii=False, indent=2)
    for r in reports:
        print(f"{r.status:5s} {r.claim_id}")
    s = data["summary"]
    print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped -> {cfg.out}")
    return 1 if s["fail"] else 0


def _rank(claim_id: str) -> int:
    tail = claim_id.rsplit("-n", 1)
    return int(tail[1]) if len(tail) == 2 and tail[1].isdigit() else 3


if __name__ == "__main__":
    sys.exit(main())

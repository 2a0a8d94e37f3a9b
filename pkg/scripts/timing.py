"""Time the expensive computations as n grows.

    python scripts/timing.py [--max-n 8]
"""
import argparse
import time
from dataclasses import dataclass

from jkl.glrep import U_dual, Wedge, decompose
from jkl.verify import tau2_image


@dataclass(frozen=True)
class TimingConfig:
    min_n: int = 3
    max_n: int = 8
    max_rank_n: int = 5


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=TimingConfig.max_n)
    cfg = TimingConfig(max_n=p.parse_args(argv).max_n)
    print(f"{'n':>2} {'dim wedge2 U*':>14} {'decompose s':>12} {'tau2 span':>10} {'span s':>8}")
    for n in range(cfg.min_n, cfg.max_n + 1):
        module = Wedge(U_dual(n), 2)
        _, t_dec = _timed(lambda: decompose(module))
        if n <= cfg.max_rank_n:
            span, t_span = _timed(lambda: tau2_image(n).dim)
            tail = f"{span:>10} {t_span:>8.2f}"
        else:
            tail = f"{'-':>10} {'-':>8}"
        print(f"{n:>2} {module.dim:>14} {t_dec:>12.2f} {tail}")


if __name__ == "__main__":
    main()

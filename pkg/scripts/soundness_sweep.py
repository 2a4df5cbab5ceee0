"""Extend random hypothesis-conforming instances and tabulate outcomes.

    python scripts/soundness_sweep.py --sizes 100 200 400 --instances 100
"""

import argparse
import math
import statistics
import time

from eulerext.engine import ExtendConfig, extend
from eulerext.errors import ExtensionError
from eulerext.experiments import gen_random_connected_graph
from eulerext.verify import verify_extension


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--alpha", type=float, default=0.05)
    ap.add_argument("--beta", type=float, default=0.3)
    ap.add_argument("--mode", choices=["strict", "advisory"], default="advisory")
    args = ap.parse_args()

    print(f"{'n':>6} {'m':>6} {'ok':>5} {'fail':>5} {'mean s':>8} {'max deg/n':>10} {'mean retries':>13}")
    for n in args.sizes:
        m = max(2 * n, math.floor(args.alpha * n**1.5))
        config = ExtendConfig(args.alpha, args.beta, mode=args.mode)
        ok = fail = 0
        times, ratios, retries = [], [], []
        for seed in range(args.instances):
            g = gen_random_connected_graph(n, m - n, math.floor(args.beta * n), seed)
            t0 = time.perf_counter()
            try:
                cert = extend(g, m, seed=seed, config=config)
            except ExtensionError as exc:
                fail += 1
                print(f"  n={n} seed={seed}: {exc.kind}: {exc}")
                continue
            times.append(time.perf_counter() - t0)
            ok += verify_extension(g, cert.h, m).passed
            ratios.append(cert.max_degree / n)
            retries.extend(cert.retries)
        print(
            f"{n:>6} {m:>6} {ok:>5} {fail:>5} {statistics.fmean(times or [0]):>8.3f} "
            f"{max(ratios or [0]):>10.3f} {statistics.fmean(retries or [0]):>13.2f}"
        )


if __name__ == "__main__":
    main()

"""Compare the compiled kernel backend against the pure-Python fallback.

Runs the same workloads through both implementations and prints a timing
table.  Usage:

    python3 benchmarks/compare_backends.py [--order-exp N] [--repeat R]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from eta_meta import _purepy
from eta_meta.params import validate

try:
    from eta_meta import _core
except ImportError:
    _core = None


def law_for(mod, params):
    pa, pb = params.p**params.alpha, params.p**params.beta
    carry = params.p ** (params.alpha - params.epsilon) % pa
    return mod.mc_law(pa, pb, params.r, carry)


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_workloads(mod, params, rng):
    law = law_for(mod, params)
    n = params.order
    gs = rng.integers(0, n, size=n).astype(np.int64)
    hs = rng.integers(0, n, size=n).astype(np.int64)
    return {
        "mul_many (n pairs)": lambda: mod.mul_many(law, gs, hs),
        "power_map (k=p)": lambda: mod.power_map(law, params.p),
        "conj_map": lambda: mod.conj_map(law, 1),
        "element_orders": lambda: mod.element_orders(law, params.p),
        "cyclic_index": lambda: mod.cyclic_index(law, params.p),
        "closure (<x,y>)": lambda: mod.closure(
            law, np.array([1, params.p**params.alpha], dtype=np.int64)),
    }


def end_to_end_sweep(pure: bool, order_exp: int) -> float:
    env = dict(os.environ, ETA_META_PURE="1" if pure else "")
    code = (
        "import time; from eta_meta.verify import SweepGrid, sweep; "
        f"t0=time.time(); sweep(SweepGrid(p=2, max_order_exponent={order_exp}, "
        f"oracle_budget=2**{order_exp})); print(time.time()-t0)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order-exp", type=int, default=12,
                    help="group order exponent for the kernel workloads")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sweep-exp", type=int, default=9,
                    help="max order exponent for the end-to-end sweep")
    ap.add_argument("--skip-sweep", action="store_true")
    args = ap.parse_args()

    if _core is None:
        print("compiled backend not available; nothing to compare")
        return 1

    half = args.order_exp // 2
    params = validate((2, args.order_exp - half, half, 0,
                       min(args.order_exp - half - 2, half), "-"))
    print(f"kernel workloads on {params} (order {params.order}), "
          f"best of {args.repeat}\n")
    print(f"{'workload':<22}{'compiled':>12}{'pure':>12}{'speedup':>10}")
    rng = np.random.default_rng(0)
    compiled_work = kernel_workloads(_core, params, rng)
    rng = np.random.default_rng(0)
    pure_work = kernel_workloads(_purepy, params, rng)
    for name in compiled_work:
        tc = bench(compiled_work[name], args.repeat)
        tp = bench(pure_work[name], args.repeat)
        print(f"{name:<22}{tc*1e3:>10.2f}ms{tp*1e3:>10.2f}ms{tp/tc:>9.1f}x")

    if not args.skip_sweep:
        print(f"\nend-to-end sweep, p=2, order <= 2^{args.sweep_exp} "
              "(fresh interpreter per backend)")
        tc = end_to_end_sweep(pure=False, order_exp=args.sweep_exp)
        tp = end_to_end_sweep(pure=True, order_exp=args.sweep_exp)
        print(f"{'full sweep':<22}{tc:>10.2f}s {tp:>10.2f}s {tp/tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

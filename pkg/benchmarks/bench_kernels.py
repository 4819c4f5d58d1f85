"""Benchmark the scan kernels: compiled extension vs pure-Python fallback.

Generates seeded random adjacency bitsets and times the three kernels on
both backends.  Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py --sizes 32 64 96 --repeat 5

The compiled backend is skipped (with a note) when the extension is not
built.  STRONGCOVER_PURE only affects the dispatching package, not this
script; both implementations are imported directly.
"""

import argparse
import random
import statistics
import time

from strongcover._kernels import pure

try:
    from strongcover import _speedups
except ImportError:
    _speedups = None


def random_adj(rng: random.Random, n: int, density: float) -> list[int]:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def random_interval_adj(rng: random.Random, n: int) -> list[int]:
    """Adjacency of a random interval graph: chordal, so free of induced
    4-cycles, which forces the C4 scan to visit everything."""
    spans = []
    for _ in range(n):
        lo = rng.randint(0, 3 * n)
        spans.append((lo, lo + rng.randint(0, n)))
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def time_call(fn, args, repeat: int) -> float:
    """Best-of-N wall time for one call, in seconds."""
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def bench_kernel(fn_name: str, args, repeat: int) -> tuple[float, float | None]:
    t_pure = time_call(getattr(pure, fn_name), args, repeat)
    t_fast = None
    if _speedups is not None:
        fast_fn = getattr(_speedups, fn_name)
        if fast_fn(*args) != getattr(pure, fn_name)(*args):
            raise SystemExit(f"backend mismatch in {fn_name}; refusing to time")
        t_fast = time_call(fast_fn, args, repeat)
    return t_pure, t_fast


def fmt_ms(seconds: float | None) -> str:
    return "-" if seconds is None else f"{seconds * 1000.0:9.3f}"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 96])
    parser.add_argument("--density", type=float, default=0.35)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--k", type=int, default=3, help="k for the (t,k) scan")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; timing the pure backend only")
    header = f"{'kernel':<24}{'n':>5}{'pure ms':>12}{'compiled ms':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    speedups = []
    for n in args.sizes:
        rng = random.Random(args.seed + n)
        adj = random_adj(rng, n, args.density)
        second = random_adj(rng, n, args.density)
        chordal = random_interval_adj(rng, n)
        complete = [((1 << n) - 1) ^ (1 << v) for v in range(n)]
        # "hit" rows find a witness in the first few steps; "scan" rows have
        # no witness and walk the whole search space
        cases = [
            ("maximal_cliques", "maximal_cliques", (n, adj)),
            ("find_induced_c4/hit", "find_induced_c4", (n, adj)),
            ("find_induced_c4/scan", "find_induced_c4", (n, chordal)),
            (
                "first_tk_violation/hit",
                "first_tk_violation",
                (n, args.k, [adj, second]),
            ),
            (
                "first_tk_violation/scan",
                "first_tk_violation",
                (n, args.k, [[0] * n, complete]),
            ),
        ]
        for label, fn_name, call_args in cases:
            t_pure, t_fast = bench_kernel(fn_name, call_args, args.repeat)
            ratio = ""
            if t_fast:
                speedups.append(t_pure / t_fast)
                ratio = f"{t_pure / t_fast:8.1f}x"
            print(
                f"{label:<24}{n:>5}{fmt_ms(t_pure):>12}{fmt_ms(t_fast):>14}{ratio:>10}"
            )

    if speedups:
        print(
            f"\ngeometric mean speedup: "
            f"{statistics.geometric_mean(speedups):.1f}x over {len(speedups)} cases"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""
Crystal generation benchmarks.

Times the geometric engine against the calibrated fast rule, and a cold
component cache against a warm one. Uses time.perf_counter() and reports
the average wall time per run in milliseconds.

Scenarios:
    - B(omega_1 + omega_2) for sl_3, geometric, cold cache.
    - The same graph with a warm cache.
    - The same graph on the fast engine.
    - The tableau model of the same crystal.

Usage:
    python -m app.benchmark.bench_crystals

Example:
    >>> bench("Sample operation", lambda: 1 + 1, runs=10)
    Sample operation         : 0.00 ms
"""

import time

from app.core import component_cache
from app.crystals import blambda, fast_rule, tableau
from app.policies.genericity import GenericitySampler
from app.types.crystal import CrystalEngine
from app.types.weights import RootDatum

SL3 = RootDatum.type_a(2)
HIGHEST_WEIGHT = (1, 1)


def bench(name, fn, runs=5, setup=None):
    """
    Benchmark a function by measuring execution time over multiple runs.

    Args:
        name: A descriptive name for the benchmark (left-aligned in output).
        fn: A callable to benchmark.
        runs: Number of times to execute fn.
        setup: Optional callable run before every execution, outside the timing.

    Returns:
        The average time in milliseconds (also printed).
    """
    total = 0.0
    for _ in range(runs):
        if setup is not None:
            setup()
        start = time.perf_counter()
        fn()
        total += time.perf_counter() - start
    avg = total / runs * 1e3
    print(f"{name:<25}: {avg:.2f} ms")
    return avg


def main(runs: int = 5) -> dict[str, float]:
    sampler = GenericitySampler.create(seed=0)
    fast_rule.ensure_calibrated(sampler)

    def geometric():
        return blambda.generate_blambda(SL3, HIGHEST_WEIGHT, sampler)

    print("\n--- Crystal Benchmarks ---")
    return {
        "cold": bench("Geometric, cold cache", geometric, runs, setup=component_cache.clear),
        "warm": bench("Geometric, warm cache", geometric, runs),
        "fast": bench("Fast rule", lambda: blambda.generate_blambda(
            SL3, HIGHEST_WEIGHT, sampler, engine=CrystalEngine.FAST), runs),
        "tableau": bench("Tableau model", lambda: tableau.generate_tableau_graph(SL3, (2, 1)), runs),
    }


if __name__ == "__main__":
    main()

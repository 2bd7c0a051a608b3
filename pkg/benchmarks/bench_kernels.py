#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times the hot loops (element enumeration, conjugation orbits, class-algebra
matrices, normalizer scans) on the order-648 showcase group and on S7
(order 5040) as a larger closure stress, then times an end-to-end character
table on fresh group objects per lane.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from charcorr.kernels import pure  # noqa: E402

try:
    from charcorr import _speedups as compiled
except ImportError:
    compiled = None


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_kernels(label, degree, gens, repeat):
    rows = []
    lanes = [("pure", pure)] + ([("compiled", compiled)] if compiled else [])
    shared = {}
    for name, impl in lanes:
        t_closure, elements = timed(lambda: impl.closure_bfs(degree, gens, 20000), repeat)
        ctx = impl.make_ctx(degree, elements)
        gen_ids = [elements.index(g) for g in gens]
        t_orbits, orbit = timed(lambda: impl.conj_orbit_ids(ctx, gen_ids), repeat)
        buckets = {}
        for eid, oid in enumerate(orbit):
            buckets.setdefault(oid, []).append(eid)
        orbits = sorted((sorted(b) for b in buckets.values()), key=lambda ms: ms[0])
        class_of = [0] * len(elements)
        for ci, ms in enumerate(orbits):
            for eid in ms:
                class_of[eid] = ci
        reps = [ms[0] for ms in orbits]
        t_mats, mats = timed(
            lambda: [impl.class_matrix(ctx, class_of, orbits[i], reps) for i in range(len(reps))],
            repeat,
        )
        sub = impl.subgroup_closure(ctx, gen_ids[:1])
        t_norm, _ = timed(lambda: impl.normalizer_ids(ctx, set(sub), gen_ids[:1]), repeat)
        rows.append((name, t_closure, t_orbits, t_mats, t_norm))
        shared.setdefault("elements", elements)
        shared.setdefault("mats", mats)
        assert shared["elements"] == elements, "lane outputs diverged"
        assert shared["mats"] == mats, "lane outputs diverged"
    print(f"\n{label}: {len(shared['elements'])} elements, {len(reps)} classes")
    print(f"  {'lane':<9} {'closure':>10} {'orbits':>10} {'class mats':>11} {'normalizer':>11}")
    for name, a, b, c, d in rows:
        print(f"  {name:<9} {a * 1e3:9.2f}ms {b * 1e3:9.2f}ms {c * 1e3:10.2f}ms {d * 1e3:10.2f}ms")
    if len(rows) == 2:
        speedups = [rows[0][i] / rows[1][i] for i in range(1, 5)]
        print(
            "  speedup   "
            + " ".join(f"{s:9.1f}x" for s in speedups)
        )


def bench_table(repeat):
    from charcorr.groups import PermGroup
    from charcorr.chartab import character_table
    from charcorr.kernels import pure as pure_mod
    from charcorr import groups as groups_mod
    from charcorr.showcase import remark_generators

    gens = remark_generators()
    print("\nend-to-end character table, order-648 group (fresh objects per run):")
    for label, force_pure in (("pure", True), ("compiled", False)):
        if force_pure:
            orig = groups_mod.impl_for_degree
            groups_mod.impl_for_degree = lambda d: pure_mod
        elif compiled is None:
            continue
        try:
            def build():
                G = PermGroup.from_generators(27, gens, name="Remark648")
                return character_table(G).degrees

            t, degrees = timed(build, repeat)
            print(f"  {label:<9} {t * 1e3:9.2f}ms  degrees {degrees}")
        finally:
            if force_pure:
                groups_mod.impl_for_degree = orig


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        print("compiled extension not available; benchmarking the pure lane only")

    from charcorr.showcase import remark_generators

    bench_kernels("remark648 (order 648, degree 27)", 27, [tuple(g) for g in remark_generators()], args.repeat)
    s7 = [tuple([1, 2, 3, 4, 5, 6, 0]), tuple([1, 0, 2, 3, 4, 5, 6])]
    bench_kernels("S7 (order 5040, degree 7)", 7, s7, args.repeat)
    bench_table(args.repeat)


if __name__ == "__main__":
    main()

"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--n 8 10 12 14] [--repeat 5] [--json]

For every backend, bracket method (naive chain enumeration, DP) and n, the
best-of-``repeat`` time of one bracket table plus the phi recursion is
reported, together with the speedup of the compiled backend.
"""

from __future__ import annotations

import argparse
import json
import timeit
from fractions import Fraction

from filiform import kernels
from filiform.scalarfield import SamplerConfig, make_rng, random_scalar


def _inputs(n: int, seed: int, gaussian: bool):
    rng = make_rng(seed)
    cfg = SamplerConfig(gaussian=gaussian)
    coords = [random_scalar(rng, cfg) for _ in range(n - 1)]
    y = random_scalar(rng, cfg)
    if not gaussian:
        coords, y = [c.re for c in coords], y.re
        zero, one = Fraction(0), Fraction(1)
    else:
        from filiform.scalarfield import ONE, ZERO

        zero, one = ZERO, ONE
    return [None, None, None] + coords, y, zero, one


def bench(ns, repeat: int, gaussian: bool) -> list[dict]:
    rows = []
    backends = kernels.available_backends()
    for n in ns:
        z, y, zero, one = _inputs(n, seed=n, gaussian=gaussian)
        for method in ("naive", "dp"):
            times = {}
            results = {}
            for name, mod in backends.items():
                table_fn = getattr(mod, f"bracket_table_{method}")

                def run():
                    table = table_fn(z, n, y, zero)
                    return mod.phi_values(z, n, y, table, zero, one)

                results[name] = run()
                times[name] = min(timeit.repeat(run, number=1, repeat=repeat))
            if len({tuple(r) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree at n={n}, method={method}")
            row = {"n": n, "method": method, **{f"{k}_s": v for k, v in times.items()}}
            if "cython" in times:
                row["speedup"] = times["python"] / times["cython"]
            rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[8, 10, 12, 14])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--gaussian", action="store_true", help="Gaussian-rational inputs instead of rationals")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = bench(args.n, args.repeat, args.gaussian)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'n':>3} {'method':>6} {'python':>11} {'cython':>11} {'speedup':>8}")
    for r in rows:
        cy = r.get("cython_s")
        print(
            f"{r['n']:>3} {r['method']:>6} {r['python_s'] * 1e3:>9.2f}ms "
            + (f"{cy * 1e3:>9.2f}ms {r['speedup']:>7.2f}x" if cy is not None else f"{'-':>11} {'-':>8}")
        )


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on both backends; the results are checked for
equality before any timing is reported.
"""

import argparse
import time

from sp4gt.diagrams import HighestWeight, enumerate_labels
from sp4gt.highest import sp4_highest_function
from sp4gt.ideals import SYMPLECTIC, _cached_rules
from sp4gt.kernels import backends
from sp4gt.operators import derivation_table, parse_operator


def _workloads():
    w = HighestWeight.parse("5,4")
    polys = [sp4_highest_function(l).expand().terms for l in enumerate_labels(w)]
    rules = _cached_rules(SYMPLECTIC)
    table = derivation_table(parse_operator("f[1,-2]"))
    products = []

    def mul(k):
        products.clear()
        for a, b in zip(polys, polys[1:]):
            products.append(k.poly_mul(a, b))
        return products[:]

    def reduce(k):
        return [k.reduce_poly(p, rules) for p in (products or mul(k))]

    def derive(k):
        out = []
        for p in polys:
            q = p
            for _ in range(3):
                q = k.apply_derivation(q, table)
            out.append(q)
        return out

    def power(k):
        return [k.poly_pow(p, 3, len(next(iter(p)))) for p in polys[:6]]

    return {"poly_mul": mul, "reduce_poly": reduce, "apply_derivation": derive, "poly_pow": power}


def bench(repeat: int = 3):
    found = backends()
    rows = []
    for name, fn in _workloads().items():
        results, times = {}, {}
        for label, mod in found.items():
            best = float("inf")
            for _ in range(repeat):
                t = time.perf_counter()
                results[label] = fn(mod)
                best = min(best, time.perf_counter() - t)
            times[label] = best
        values = list(results.values())
        if any(v != values[0] for v in values[1:]):
            raise AssertionError(f"backends disagree on {name}")
        rows.append((name, times))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rows = bench(args.repeat)
    labels = sorted({k for _, t in rows for k in t})
    print(f"{'workload':<18}" + "".join(f"{l:>12}" for l in labels) + ("     speedup" if len(labels) == 2 else ""))
    for name, t in rows:
        line = f"{name:<18}" + "".join(f"{t[l] * 1e3:>10.1f}ms" for l in labels)
        if len(labels) == 2:
            line += f"{t['python'] / t['compiled']:>11.2f}x"
        print(line)


if __name__ == "__main__":
    main()

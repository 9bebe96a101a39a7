"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each row is checked for identical output before timings are reported.
"""
import argparse
import time

import numpy as np

from steiner_sparse import kernels


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def cases(quick):
    mod_n = 40 if quick else 80
    mod = kernels.zero_sum_edges(4, mod_n, 0, 1, False)
    prod = kernels.zero_sum_edges(5, 2, 4, 0, True)
    pairs_mod = kernels.shared_pairs(mod, mod_n, 2)
    pairs_prod = kernels.shared_pairs(prod, 32, 3)
    yield f"mod-sum edges n={mod_n}", lambda b: kernels.zero_sum_edges(4, mod_n, 0, 1, False, backend=b)
    yield "binary edges r=6 d=5", lambda b: kernels.zero_sum_edges(6, 1, 5, 0, True, backend=b)
    m = 2 if quick else 4
    yield f"product edges r=5 m={m} d=4", lambda b: kernels.zero_sum_edges(5, m, 4, 0, True, backend=b)
    yield f"close pairs mod-sum n={mod_n}", lambda b: kernels.shared_pairs(mod, mod_n, 2, backend=b)
    yield f"sparse-3 triples mod-sum n={mod_n}", lambda b: kernels.sparse3_triples(mod, mod_n, pairs_mod, 100, backend=b)
    yield "sparse-3 triples product r=5 m=2 d=4", lambda b: kernels.sparse3_triples(prod, 32, pairs_prod, 100, backend=b)
    yield f"covered triples mod-sum n={mod_n}", lambda b: kernels.count_covered(mod, mod_n, 3, backend=b)


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python backend only")
    print(f"{'kernel':40s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn in cases(args.quick):
        timings, results = [], []
        for b in backends:
            t, res = best_of(lambda: fn(b), args.repeat)
            timings.append(t)
            results.append(res)
        assert all(same(results[0], r) for r in results[1:]), f"backends disagree on {name}"
        row = f"{name:40s}" + "".join(f"{t:11.4f}s" for t in timings)
        if len(timings) > 1:
            row += f"{timings[0] / max(timings[1], 1e-9):11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

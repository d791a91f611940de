"""Time the modular-table kernels: compiled vs pure Python.

    python benchmarks/bench_kernels.py --moduli 16 32 48 64 --repeat 3
"""
import argparse
import time

from utdos import _kernels_py

try:
    from utdos import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def run_backend(mod, m):
    codes = mod.square_codes(m)
    return bytes(mod.difference_mask(codes, m)), len(codes)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--moduli", type=int, nargs="+", default=[16, 32, 48, 64])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels not built; only the pure-Python backend is timed")
    print(f"{'m':>4} {'squares':>8} {'pairs':>12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for m in args.moduli:
        t_py, (mask_py, n) = best_of(lambda: run_backend(_kernels_py, m), args.repeat)
        if _kernels_c is not None:
            t_c, (mask_c, _) = best_of(lambda: run_backend(_kernels_c, m), args.repeat)
            if mask_c != mask_py:
                raise SystemExit(f"backends disagree at m = {m}")
            print(f"{m:>4} {n:>8} {n * n:>12} {t_py:>10.3f} {t_c:>10.4f} {t_py / t_c:>7.1f}x")
        else:
            print(f"{m:>4} {n:>8} {n * n:>12} {t_py:>10.3f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()

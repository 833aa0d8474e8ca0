"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 1e6 1e7] [--repeat 3]

Each row is the best of ``--repeat`` runs.  Backends that are not
available (extension not built) are skipped.
"""
import argparse
import time

from ternarith import kernels
from ternarith.primality import is_2prime
from ternarith.sieves import _primes_from_bits


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_sieve(be, n):
    def run():
        bits = be.eratosthenes(n)
        be.ternary_stages(bits, n, _primes_from_bits(bits, n))
    return run


def bench_direct(be, n):
    bits = kernels.python.eratosthenes(n)
    primes = _primes_from_bits(bits, n)
    return lambda: be.direct_scan(bytearray(bits), n, primes, is_2prime)


def bench_trace(be, moduli):
    return lambda: [be.first_repetition(m) for m in moduli]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=float, nargs="+", default=[1e6, 1e7])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernels.available()
    # semiprimes with far-apart factors make the trace run long
    moduli = [p * q for p, q in ((3, 999983), (101, 99991), (7919, 7927), (1009, 1000003))]
    rows = []
    for n in (int(s) for s in args.sizes):
        for label, bench in (("sieve", bench_sieve), ("direct", bench_direct)):
            rows.append((f"{label} {n:.0e}",
                         [best_of(args.repeat, bench(b, n)) for b in backends]))
    rows.append(("trace x4", [best_of(args.repeat, bench_trace(b, moduli)) for b in backends]))

    names = [b.NAME for b in backends]
    print(f"{'kernel':<16}" + "".join(f"{n:>12}" for n in names)
          + ("     speedup" if len(names) > 1 else ""))
    for label, times in rows:
        line = f"{label:<16}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) > 1:
            line += f"{times[-1] / times[0]:>11.1f}x"
        print(line)
    if kernels.compiled is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()

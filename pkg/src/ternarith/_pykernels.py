"""Pure-Python kernels, used when the compiled extension is unavailable.

Sieve status is a little-endian bit array: bit ``i`` of the bytearray
(byte ``i >> 3``, mask ``1 << (i & 7)``) is set while ``i`` survives.
The sieves work on a temporary numpy bool array and pack back into bits.
"""
from __future__ import annotations

import numpy as np

NAME = "python"


def _unpack(bits: bytearray, n: int) -> np.ndarray:
    return np.unpackbits(np.frombuffer(bytes(bits), dtype=np.uint8),
                         count=n + 1, bitorder="little").astype(bool)


def _pack_into(bits: bytearray, alive: np.ndarray) -> None:
    bits[:] = np.packbits(alive, bitorder="little").tobytes()


def eratosthenes(n: int) -> bytearray:
    alive = np.ones(n + 1, dtype=bool)
    alive[:2] = False
    p = 2
    while p * p <= n:
        if alive[p]:
            alive[p * p::p] = False
        p += 1
    out = bytearray((n + 8) // 8)
    _pack_into(out, alive)
    return out


def ternary_stages(bits: bytearray, n: int, primes) -> int:
    """Run elimination stages k = 1, 2, ... in place; return how many ran.

    Stage k clears ``p*p - k*(k+1) + m*p`` for every 2-prime p with
    ``2k+1 <= p`` and ``p*p - k*(k+1) <= n``.
    """
    alive = _unpack(bits, n)
    primes = np.asarray(primes, dtype=np.int64)
    k = 1
    while 3 * k * k + 3 * k + 1 <= n:
        shift = k * (k + 1)
        lo = int(np.searchsorted(primes, 2 * k + 1))
        for p in primes[lo:]:
            p = int(p)
            start = p * p - shift
            if start > n:
                break
            alive[start::p] = False
        k += 1
    _pack_into(bits, alive)
    return k - 1


def first_repetition(n: int):
    """Residues ``-2*T(k) mod n`` up to the first repeat.

    Returns ``(residues, k, l)``; ``k == l == -1`` when the residues stay
    distinct through ``k = (n-1)//2``.
    """
    seen = {}
    residues = []
    r = 0
    last = (n - 1) // 2
    for i in range(last + 1):
        if i:
            r = (r - 2 * i) % n
        residues.append(r)
        j = seen.get(r)
        if j is not None:
            return residues, j, i
        seen[r] = i
    return residues, -1, -1


def direct_scan(bits: bytearray, n: int, primes, is_prime) -> list[int]:
    """Keep the 2-primes p <= n for which p + k(k+1) is 2-prime for all k < p-1.

    Values inside the sieve range are looked up in ``bits``; larger ones go
    to ``is_prime``.
    """
    out = []
    for p in primes:
        p = int(p)
        ok = True
        for k in range(1, p - 1):
            v = p + k * (k + 1)
            if v <= n:
                if not (bits[v >> 3] >> (v & 7)) & 1:
                    ok = False
                    break
            elif not is_prime(v):
                ok = False
                break
        if ok:
            out.append(p)
    return out

"""Sieve of Eratosthenes and the ternary sieve for 3-primes.

Stage k >= 1 of the ternary sieve removes the products
``<k+1, p-k, z>`` for 2-primes p and z >= p-k.  Those are the residue
class ``(k+1)(p-k) mod p`` starting at ``<k+1, p-k, p-k> = p^2 - k(k+1)``.
Stages run while ``<k+1,k+1,k+1> = 3k^2+3k+1 <= N``, and within a stage
only primes with ``2k+1 <= p`` and ``p^2 - k(k+1) <= N`` contribute.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import checked
from .primality import is_2prime

# bit array cap; 256 MiB of bits covers N up to ~2.1e9
DEFAULT_MAX_BYTES = 256 * 1024 * 1024


class SieveLimitError(MemoryError):
    """Requested sieve does not fit the memory budget."""


@dataclass(frozen=True)
class SieveTable:
    limit: int
    bits: bytes
    primes2: np.ndarray
    stages_run: int

    def __contains__(self, n: int) -> bool:
        return self.survives(n)

    def survives(self, n: int) -> bool:
        if n < 2 or n > self.limit:
            return False
        return bool((self.bits[n >> 3] >> (n & 7)) & 1)

    def survivors(self):
        """Surviving values in ascending order, streamed."""
        bits = self.bits
        chunk = 1 << 16
        for off in range(0, len(bits), chunk):
            block = np.frombuffer(bits, dtype=np.uint8, count=min(chunk, len(bits) - off),
                                  offset=off)
            for i in np.flatnonzero(np.unpackbits(block, bitorder="little")):
                v = off * 8 + int(i)
                if v > self.limit:
                    return
                yield v

    def survivor_count(self) -> int:
        arr = np.unpackbits(np.frombuffer(self.bits, dtype=np.uint8),
                            count=self.limit + 1, bitorder="little")
        return int(arr.sum())


def _check_limit(n: int, max_bytes: int) -> None:
    if n < 2:
        raise ValueError(f"sieve limit must be >= 2, got {n}")
    checked(n)
    if (n + 8) // 8 > max_bytes:
        raise SieveLimitError(f"sieve to {n} needs {(n + 8) // 8} bytes, budget is {max_bytes}")


def _primes_from_bits(bits: bytes, n: int) -> np.ndarray:
    arr = np.unpackbits(np.frombuffer(bits, dtype=np.uint8), count=n + 1, bitorder="little")
    return np.flatnonzero(arr).astype(np.int64)


def stage_count(n: int) -> int:
    """Largest k with ``3k^2 + 3k + 1 <= n`` (0 if none)."""
    k = 0
    while 3 * (k + 1) ** 2 + 3 * (k + 1) + 1 <= n:
        k += 1
    return k


def sieve_schedule(n: int, primes):
    """Yield ``(k, p, start)`` for every elimination run of stages k >= 1."""
    for k in range(1, stage_count(n) + 1):
        shift = k * (k + 1)
        for p in primes:
            p = int(p)
            if p < 2 * k + 1:
                continue
            start = p * p - shift
            if start > n:
                break
            yield k, p, start


def sieve2(n: int, *, max_bytes: int = DEFAULT_MAX_BYTES, backend=None) -> SieveTable:
    """Sieve of Eratosthenes; survivors are the 2-primes up to ``n``."""
    _check_limit(n, max_bytes)
    be = backend or kernels.active
    bits = be.eratosthenes(n)
    return SieveTable(n, bytes(bits), _primes_from_bits(bytes(bits), n), 1)


def ternary_sieve(n: int, *, max_bytes: int = DEFAULT_MAX_BYTES, backend=None) -> SieveTable:
    """Full ternary sieve; survivors are the 3-primes from 2 to ``n``."""
    _check_limit(n, max_bytes)
    be = backend or kernels.active
    bits = be.eratosthenes(n)
    primes = _primes_from_bits(bytes(bits), n)
    stages = be.ternary_stages(bits, n, primes)
    return SieveTable(n, bytes(bits), primes, stages + 1)


def three_primes(n: int, augmented: bool = False, **kw) -> list[int]:
    """3-primes up to ``n`` from the ternary sieve; 1 is prepended if ``augmented``."""
    out = list(ternary_sieve(n, **kw).survivors())
    return [1] + out if augmented else out


def three_primes_direct(n: int, augmented: bool = False, *,
                        max_bytes: int = DEFAULT_MAX_BYTES, backend=None) -> list[int]:
    """Same list as :func:`three_primes`, by testing each 2-prime directly.

    A 2-prime p survives when ``p + k(k+1)`` stays 2-prime for all k < p-1;
    almost every p fails within a few steps.
    """
    _check_limit(n, max_bytes)
    be = backend or kernels.active
    bits = be.eratosthenes(n)
    primes = _primes_from_bits(bytes(bits), n)
    out = [int(p) for p in be.direct_scan(bits, n, primes, is_2prime)]
    return [1] + out if augmented else out

"""Primality and factorization, binary and ternary.

A number is 3-prime when its only ternary representation is ``<1,1,n>``.
Completing a hexagon ``<x,y,z>`` (z smallest) to a parallelogram adds two
triangles of ``T(z-1)`` points, so

    n + 2*T(z-1) == (x + z - 1) * (y + z - 1).

Everything here hangs off that identity: the direct 3-primality test,
enumeration of 3-factorizations, and the residue trace ``-2*T(k) mod n``
whose first repeat splits an odd composite.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd, isqrt

from . import kernels
from .core import U64_MAX, Triple, checked, resolve_augmented, triangular

# witnesses 2..37 make the strong-pseudoprime test exact below 3.18e23
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_2prime(n: int) -> bool:
    """Ordinary primality; exact for every 64-bit input."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class HeegnerConstants:
    heegner: tuple[int, ...] = (1, 2, 3, 7, 11, 19, 43, 67, 163)
    discriminants: tuple[int, ...] = (-3, -4, -7, -8, -11, -19, -43, -67, -163)
    augmented_lucky: tuple[int, ...] = (1, 2, 3, 5, 11, 17, 41)

    @property
    def odd_discriminants(self) -> tuple[int, ...]:
        return tuple(d for d in self.discriminants if d % 4 == 1)


HEEGNER = HeegnerConstants()


def is_3prime_direct(n: int, augmented: bool | None = None) -> bool:
    """True iff ``n + 2*T(k)`` is 2-prime for every k in ``0..n-2``.

    ``k = n-1`` is excluded: ``n + 2*T(n-1) = n^2`` is the completion of
    the degenerate row ``<1,1,n>`` and is never 2-prime.

    For ``n == 1`` the answer is the augmented-one convention
    (see :func:`ternarith.core.set_augmented_one`).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return resolve_augmented(augmented)
    if n + (n - 1) * (n - 2) > U64_MAX:
        raise OverflowError(f"n + 2*T(n-2) exceeds 64 bits for n={n}")
    return all(is_2prime(n + k * (k + 1)) for k in range(n - 1))


def _divisor_pairs(m: int):
    """Yield (a, b) with a*b == m and a <= b, a ascending."""
    for a in range(1, isqrt(m) + 1):
        if m % a == 0:
            yield a, m // a


@dataclass(frozen=True)
class TernaryFactorizationSet:
    n: int
    triples: frozenset = field(default_factory=frozenset)

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(sorted(self.triples))

    def __contains__(self, t):
        return t in self.triples

    @property
    def nondegenerate(self) -> list[Triple]:
        return [t for t in self if not t.is_degenerate]


def enumerate_3factorizations(n: int) -> TernaryFactorizationSet:
    """Every triple (up to order) whose ternary product is ``n``.

    With smallest factor ``k+1``, the parallelogram ``n + 2*T(k) = a*b``
    has ``a, b > k`` and gives ``n = <k+1, a-k, b-k>``.  The smallest
    factor never exceeds the largest z with ``<z,z,z> = 3z^2-3z+1 <= n``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    checked(n)
    found = set()
    k = 0
    while 3 * (k + 1) ** 2 - 3 * (k + 1) + 1 <= n:
        m = checked(n + 2 * triangular(k))
        for a, b in _divisor_pairs(m):
            if a > k:
                found.add(Triple(k + 1, a - k, b - k))
        k += 1
    return TernaryFactorizationSet(n, frozenset(found))


def count_3factorizations(n: int) -> int:
    return len(enumerate_3factorizations(n))


# ------------------------------------------------------ residue trace / 2-test

@dataclass(frozen=True)
class CongruenceTrace:
    """Residues ``-2*T(k) mod n`` for k = 0, 1, ... up to the first repeat.

    ``repetition`` is the first pair (k, l), k < l, with equal residues, or
    ``None`` if all residues through ``k = (n-1)/2`` are distinct.
    """

    n: int
    residues: tuple[int, ...]
    repetition: tuple[int, int] | None

    @property
    def is_prime(self) -> bool:
        return self.repetition is None


def _require_odd(n: int, minimum: int = 3) -> None:
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")


def congruence_trace(n: int) -> CongruenceTrace:
    _require_odd(n)
    checked(n)
    residues, k, l = kernels.active.first_repetition(n)
    rep = None if k < 0 else (int(k), int(l))
    return CongruenceTrace(n, tuple(residues), rep)


def two_primality_test(n: int) -> bool:
    """2-primality of odd ``n`` from distinctness of the trace residues."""
    return congruence_trace(n).repetition is None


@dataclass
class FactorizationReport:
    n: int
    divisor: int | None = None
    repetition: tuple[int, int] | None = None
    gcd_lk: int | None = None  # gcd(l - k, n)
    gcd_lk1: int | None = None  # gcd(l + k + 1, n)
    source: str | None = None  # which gcd produced the divisor
    factors: dict[int, int] = field(default_factory=dict)

    @property
    def cofactor(self) -> int | None:
        return None if self.divisor is None else self.n // self.divisor

    @property
    def is_prime(self) -> bool:
        return self.divisor is None and self.factors == {self.n: 1}

    def flat_factors(self) -> list[int]:
        return sorted(Counter(self.factors).elements())


def divisor_from_repetition(n: int, k: int, l: int) -> FactorizationReport:
    """Split ``n`` using residues that coincide at indices k and l.

    ``2*(T(l) - T(k)) = (l-k)(l+k+1)`` is a multiple of n, and for distinct
    k, l <= (n-1)/2 with n > 3 both factors share a divisor with n.
    Prefers ``gcd(l-k, n)`` when both are proper.
    """
    if k > l:
        k, l = l, k
    g1, g2 = gcd(l - k, n), gcd(l + k + 1, n)
    rep = FactorizationReport(n, repetition=(k, l), gcd_lk=g1, gcd_lk1=g2)
    if 1 < g1 < n:
        rep.divisor, rep.source = g1, "l-k"
    elif 1 < g2 < n:
        rep.divisor, rep.source = g2, "l+k+1"
    else:
        raise ArithmeticError(f"repetition {(k, l)} gives no proper divisor of {n}")
    return rep


def factor2_step(n: int) -> FactorizationReport:
    """One split of odd ``n`` from the first repeat of its trace.

    A 2-prime has no repeat; the report then has ``divisor is None`` and
    ``factors == {n: 1}``.
    """
    trace = congruence_trace(n)
    if trace.repetition is None:
        return FactorizationReport(n, factors={n: 1})
    return divisor_from_repetition(n, *trace.repetition)


def factor2_full(n: int) -> FactorizationReport:
    """Complete 2-factorization: strip 2s, then split odd parts recursively."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    checked(n)
    factors: Counter = Counter()
    m = n
    while m % 2 == 0:
        factors[2] += 1
        m //= 2
    first = None
    stack = [m] if m > 1 else []
    while stack:
        q = stack.pop()
        step = factor2_step(q)
        if first is None:
            first = step
        if step.divisor is None:
            factors[q] += 1
        else:
            stack.extend((step.divisor, step.cofactor))
    report = FactorizationReport(n)
    if first is not None and first.divisor is not None:
        report.divisor = first.divisor
        report.repetition = first.repetition
        report.gcd_lk, report.gcd_lk1 = first.gcd_lk, first.gcd_lk1
        report.source = first.source
    elif sum(factors.values()) > 1:
        report.divisor, report.source = 2, "even"
    report.factors = dict(sorted(factors.items()))
    return report


# --------------------------------------------------- lucky numbers / Heegner

def euler_lucky_check(p: int) -> bool:
    """True iff ``x^2 - x + p`` is 2-prime for every x in ``1..p-1``."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    checked(p + (p - 1) * (p - 2))
    return all(is_2prime(x * x - x + p) for x in range(1, p))


def rabinowitsch_check(d: int) -> bool:
    """Prime-producing test for a negative discriminant ``d = 1 mod 4``.

    Checks ``x^2 - x + (1+|d|)/4`` for x in ``1..(|d|-3)/4``.
    """
    if d >= 0 or d % 4 != 1:
        raise ValueError(f"discriminant must be negative and 1 mod 4, got {d}")
    q = (1 - d) // 4
    top = (-d - 3) // 4
    checked(top * top + q)
    return all(is_2prime(x * x - x + q) for x in range(1, top + 1))


def lucky_numbers(limit: int) -> list[int]:
    return [p for p in range(1, limit + 1) if euler_lucky_check(p)]


def rabinowitsch_discriminants(limit: int) -> list[int]:
    """Negative d = 1 mod 4 with ``|d| < limit`` passing the check."""
    return [d for d in range(-3, -limit, -4) if rabinowitsch_check(d)]

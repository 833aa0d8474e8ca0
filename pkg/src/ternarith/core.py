"""Ternary product on the natural numbers.

``<x, y, z>`` counts the lattice points of an equiangular hexagon in the
triangular lattice with x, y and z points along its three pairs of opposite
sides.  ``<1, y, z>`` is the ordinary product ``y * z``, so 1 is an identity.

All arithmetic is exact and confined to unsigned 64-bit range; anything that
would leave that range raises :class:`OverflowError` rather than wrapping.
"""
from __future__ import annotations

from dataclasses import dataclass

U64_MAX = (1 << 64) - 1

# 1 counts as a 3-prime unless a caller says otherwise.
augmented_one = True


def set_augmented_one(flag: bool) -> None:
    """Switch the global "1 is a 3-prime" convention on or off."""
    global augmented_one
    augmented_one = bool(flag)


def resolve_augmented(flag: bool | None) -> bool:
    return augmented_one if flag is None else bool(flag)


def checked(value: int) -> int:
    """Return ``value`` if it fits an unsigned 64-bit word, else raise."""
    if value < 0 or value > U64_MAX:
        raise OverflowError(f"{value} does not fit in 64 bits")
    return value


@dataclass(frozen=True, order=True)
class Triple:
    """Arguments of a ternary product, always stored sorted (x <= y <= z)."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        vals = (self.x, self.y, self.z)
        for v in vals:
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"triple components must be int, got {v!r}")
            if v < 1:
                raise ValueError(f"triple components must be >= 1, got {vals}")
            checked(v)
        x, y, z = sorted(vals)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __str__(self):
        return f"<{self.x},{self.y},{self.z}>"

    @property
    def is_degenerate(self) -> bool:
        """True for ``<1,1,n>``, the only representation a 3-prime has."""
        return self.y == 1


def canonicalize(x: int, y: int, z: int) -> Triple:
    return Triple(x, y, z)


def triangular(k: int) -> int:
    """k-th triangular number k(k+1)/2."""
    if k < 0:
        raise ValueError(f"triangular number index must be >= 0, got {k}")
    return checked(k * (k + 1) // 2)


def symmetric_formula(x: int, y: int, z: int) -> int:
    return checked(x * y + y * z + z * x - x - y - z + 1)


def strip_formula(x: int, y: int, z: int) -> int:
    # <x,y,1> = xy; each unit step in z adds a strip of x+y-1 points
    return checked(x * y + (z - 1) * (x + y - 1))


def inclusion_formula(x: int, y: int, z: int) -> int:
    return checked(x * y * z - (x - 1) * (y - 1) * (z - 1))


def product_symmetric(t: Triple) -> int:
    return symmetric_formula(t.x, t.y, t.z)


def product_strip(t: Triple) -> int:
    return strip_formula(t.x, t.y, t.z)


def product_inclusion(t: Triple) -> int:
    return inclusion_formula(t.x, t.y, t.z)


def product(t: Triple) -> int:
    """Discrete volume ``<x, y, z>`` of the hexagon described by ``t``."""
    return product_strip(t)


def ternary_product(x: int, y: int, z: int) -> int:
    """Shorthand for ``product(canonicalize(x, y, z))``."""
    return product(Triple(x, y, z))

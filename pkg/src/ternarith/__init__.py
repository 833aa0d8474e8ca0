"""Ternary multiplication on the natural numbers.

``<x, y, z>`` is the number of points of the triangular lattice inside an
equiangular hexagon with x, y, z points along its pairs of opposite sides;
``<1, y, z> = y * z``.  The package provides the product itself, a
brute-force lattice model of it, the ternary sieve for 3-primes,
enumeration of 3-factorizations, and a factoring method built on the
residues of twice the triangular numbers.
"""
from .core import (
    Triple,
    canonicalize,
    product,
    product_inclusion,
    product_strip,
    product_symmetric,
    set_augmented_one,
    ternary_product,
    triangular,
)
from .kernels import BACKEND
from .lattice import (
    Hexagon,
    LatticePoint,
    SvgDocument,
    SvgStyle,
    complete_to_parallelogram,
    discrete_volume,
    hexagon,
    hexagon_from_triple,
    render_svg,
)
from .primality import (
    HEEGNER,
    CongruenceTrace,
    FactorizationReport,
    HeegnerConstants,
    TernaryFactorizationSet,
    congruence_trace,
    count_3factorizations,
    divisor_from_repetition,
    enumerate_3factorizations,
    euler_lucky_check,
    factor2_full,
    factor2_step,
    is_2prime,
    is_3prime_direct,
    rabinowitsch_check,
    two_primality_test,
)
from .sieves import (
    SieveLimitError,
    SieveTable,
    sieve2,
    ternary_sieve,
    three_primes,
    three_primes_direct,
)

__version__ = "0.1.0"

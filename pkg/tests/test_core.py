import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ternarith.core import (
    U64_MAX,
    Triple,
    canonicalize,
    inclusion_formula,
    product,
    product_inclusion,
    product_strip,
    product_symmetric,
    strip_formula,
    symmetric_formula,
    ternary_product,
    triangular,
)
from ternarith.lattice import discrete_volume, hexagon


@pytest.mark.parametrize("k, expected", [(0, 0), (2, 3), (4, 10)])
def test_triangular(k, expected):
    assert triangular(k) == expected


def test_triangular_rejects_negative_and_overflow():
    with pytest.raises(ValueError):
        triangular(-1)
    with pytest.raises(OverflowError):
        triangular(1 << 33)


@pytest.mark.parametrize("args, expected", [
    ((2, 3, 4), 18),
    ((1, 1, 7), 7),
    ((2, 2, 2), 7),
])
def test_product_symmetric(args, expected):
    assert product_symmetric(Triple(*args)) == expected


@pytest.mark.parametrize("args, expected", [((2, 3, 3), 14), ((1, 3, 3), 9)])
def test_product_strip(args, expected):
    assert product_strip(Triple(*args)) == expected


@pytest.mark.parametrize("z", range(1, 30))
def test_strip_two_two_z(z):
    assert product_strip(Triple(2, 2, z)) == 4 + 3 * (z - 1)


@pytest.mark.parametrize("args, expected", [((3, 3, 3), 19), ((1, 1, 1), 1), ((4, 3, 2), 18)])
def test_product_inclusion(args, expected):
    assert product_inclusion(Triple(*args)) == expected


def test_product_one_two_five_matches_lattice_count():
    expected = discrete_volume(hexagon(1, 2, 5))
    assert expected == 10
    assert product(Triple(1, 2, 5)) == expected


@pytest.mark.parametrize("raw, canon", [
    ((4, 3, 2), (2, 3, 4)),
    ((1, 1, 1), (1, 1, 1)),
    ((5, 5, 2), (2, 5, 5)),
])
def test_canonicalize(raw, canon):
    t = canonicalize(*raw)
    assert tuple(t) == canon
    assert t == Triple(*canon)
    assert hash(t) == hash(Triple(*canon))
    assert product(t) == ternary_product(*raw)


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, -2, 3)])
def test_zero_rejected(bad):
    with pytest.raises(ValueError):
        canonicalize(*bad)


def test_triple_type_checks():
    with pytest.raises(TypeError):
        Triple(1.5, 2, 3)


def test_overflow_detected():
    big = 1 << 40
    with pytest.raises(OverflowError):
        product(Triple(big, big, big))
    with pytest.raises(OverflowError):
        Triple(1, 1, U64_MAX + 1)


def test_three_formulas_agree_exhaustively():
    r = range(1, 51)
    for x, y, z in itertools.product(r, r, r):
        s = symmetric_formula(x, y, z)
        assert strip_formula(x, y, z) == s
        assert inclusion_formula(x, y, z) == s


@given(st.integers(1, 10**5), st.integers(1, 10**5), st.integers(1, 10**5))
def test_permutation_invariance(x, y, z):
    vals = {f(*p) for p in itertools.permutations((x, y, z))
            for f in (symmetric_formula, strip_formula, inclusion_formula)}
    assert len(vals) == 1


def test_identity():
    for n in range(1, 1001):
        assert ternary_product(1, 1, n) == n
    for m in range(1, 1001, 7):
        for n in range(1, 1001, 13):
            assert ternary_product(1, m, n) == m * n


def test_completion_identity():
    r = range(1, 51)
    for x, y, z in itertools.product(r, r, r):
        assert (x + z - 1) * (y + z - 1) == symmetric_formula(x, y, z) + 2 * triangular(z - 1)


@given(st.integers(2, 500), st.integers(2, 500), st.integers(2, 500))
def test_monotone_in_each_argument(x, y, z):
    base = symmetric_formula(x, y, z)
    assert symmetric_formula(x + 1, y, z) > base
    assert symmetric_formula(x, y + 1, z) > base
    assert symmetric_formula(x, y, z + 1) > base

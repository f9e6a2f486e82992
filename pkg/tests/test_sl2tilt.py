import itertools

import pytest

from higherver.charring import decompose, tilting_char
from higherver.errors import InvalidPrime
from higherver.sl2tilt import IdealLevel, TiltingSum, hom_dim, ideal_level, socle_unit_test, tensor_decompose


@pytest.mark.parametrize("a, p, expected", [(0, 3, 0), (1, 3, 0), (2, 3, 1), (7, 3, 1), (8, 3, 2), (26, 3, 3)])
def test_ideal_level(a, p, expected):
    level = ideal_level(a, p)
    assert level == IdealLevel(expected)
    assert level.is_unit == (expected == 0)


def test_ideal_level_chain():
    # I_n(SL2) = J_(n+1)(SL2)
    for p in (2, 3, 5):
        for a in range(200):
            lv = ideal_level(a, p)
            for n in range(1, 5):
                assert lv.in_I(n) == (a >= p**n - 1)
                assert lv.in_J(n) == (a >= p ** (n - 1) - 1)
                assert lv.in_I(n) == lv.in_J(n + 1)


def test_ideal_level_invalid_prime():
    with pytest.raises(InvalidPrime):
        ideal_level(3, 6)


@pytest.mark.parametrize(
    "factors, p, expected",
    [([1, 1], 2, {2: 1}), ([2, 2], 3, {4: 1, 2: 1}), ([1, 4], 5, {5: 1}), ([(1, 2)], 2, {2: 1})],
)
def test_tensor_decompose(factors, p, expected):
    assert tensor_decompose(factors, p).terms == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tensor_commutative_and_dimension(p):
    for a, b in itertools.combinations_with_replacement(range(61), 2):
        s = tensor_decompose([a, b], p)
        assert s == tensor_decompose([b, a], p)
        dims = sum(m * tilting_char(c, p).dim() for c, m in s.terms.items())
        assert dims == tilting_char(a, p).dim() * tilting_char(b, p).dim()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tensor_ideal_property(p):
    for a, b in itertools.product(range(0, 45, 3), range(0, 45, 4)):
        s = tensor_decompose([a, b], p)
        top = max(ideal_level(a, p).level, ideal_level(b, p).level)
        assert s.min_level().level >= top


def test_tilting_sum_json():
    s = tensor_decompose([5, 7], 3)
    assert TiltingSum.from_json(s.to_json()) == s


@pytest.mark.parametrize("a, b, p, expected", [(1, 1, 3, 1), (4, 4, 3, 2), (2, 4, 3, 0), (6, 7, 3, 0), (6, 4, 3, 1)])
def test_hom_dim(a, b, p, expected):
    assert hom_dim(a, b, p) == expected


def test_hom_dim_symmetric():
    for p in (2, 3, 5):
        for a in range(30):
            for b in range(30):
                assert hom_dim(a, b, p) == hom_dim(b, a, p)


@pytest.mark.parametrize("p, n, expected", [(3, 2, [4]), (2, 2, [2]), (5, 1, [0])])
def test_socle_unit(p, n, expected):
    assert socle_unit_test(p, n) == expected


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tilt_cover_shadow(p):
    # T(2(p^n-1) - lambda) contains L(lambda), for restricted lambda
    for n in (1, 2):
        for lam in range(p**n - 1 + 1):
            a = 2 * (p**n - 1) - lam
            assert decompose(tilting_char(a, p), "simple", p)[lam] >= 1
        b = 2 * (p ** (n - 1) - 1)
        assert decompose(tilting_char(b, p), "weyl", p)[0] == 1

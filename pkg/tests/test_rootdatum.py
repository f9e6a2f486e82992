import pytest
from hypothesis import given
from hypothesis import strategies as st

from higherver.errors import NotDominant, PrimeTooSmall, UnsupportedType
from higherver.rootdatum import (
    alcove_test,
    build,
    check_regime,
    classify_region,
    donkin_split,
    in_J,
    in_restricted,
    minus_w0,
    pair,
)

TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


def brute_force_roots(label):
    """Positive roots found by the spec-independent Weyl group orbit of all simple roots."""
    d = build(label)
    simple = [d.simple_root(i) for i in range(d.rank)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        v = todo.pop()
        for i, a in enumerate(simple):
            w = tuple(x - v[i] * y for x, y in zip(v, a))
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


@pytest.mark.parametrize(
    "label, n_pos, h",
    [("A1", 1, 2), ("A2", 3, 3), ("B2", 4, 4), ("G2", 6, 6), ("F4", 24, 12), ("E8", 120, 30), ("D4", 12, 6)],
)
def test_build(label, n_pos, h):
    d = build(label)
    assert len(d.positive_roots) == n_pos
    assert d.coxeter_number == h


@pytest.mark.parametrize("label", TYPES)
def test_root_count_by_orbit(label):
    d = build(label)
    orbit = brute_force_roots(label)
    assert len(orbit) == 2 * len(d.positive_roots)
    assert set(d.positive_roots) <= orbit


@pytest.mark.parametrize("label", TYPES)
def test_coxeter_identities(label):
    d = build(label)
    (c,) = d.components
    assert c.coxeter_number == 1 + pair(d.rho, c.theta_coroot) == 1 + sum(c.theta_coroot)
    assert 2 * len(c.positive_roots) == c.coxeter_number * c.rank


def test_a1():
    d = build("A1")
    assert d.rho == (1,)
    assert d.coxeter_number == 2


def test_products():
    d = build("B2xA1")
    assert d.rank == 3
    assert d.coxeter_numbers == (4, 2)
    assert len(d.positive_roots) == 5


def test_unsupported():
    for bad in ["E5", "F3", "G3", "B1", "Z2", "A0", ""]:
        with pytest.raises(UnsupportedType):
            build(bad)


def test_pairing():
    d = build("A2")
    (theta,) = d.theta_coroots
    assert pair((4, 4), theta) == 8
    assert pair((0, 0), theta) == 0
    assert in_restricted((0, 0), 5, 1) and in_restricted((0, 0), 5, 3)
    assert in_restricted((4, 4), 5, 1)
    assert not in_restricted((5, 4), 5, 1)


def test_alcove():
    d = build("A2")
    assert alcove_test((0, 0), d, 5)
    assert not alcove_test((2, 2), d, 5)
    assert alcove_test((1, 1), d, 5) and alcove_test((1, 1), d, 5, closed=True)
    assert not alcove_test((3, 0), d, 5) and alcove_test((3, 0), d, 5, closed=True)
    with pytest.raises(NotDominant):
        alcove_test((-1, 0), d, 5)
    with pytest.raises(PrimeTooSmall):
        alcove_test((0, 0), d, 2)


def test_regime_warning():
    assert check_regime(build("A2"), 5) == []
    warnings = check_regime(build("G2"), 7)
    assert len(warnings) == 1 and "2h-4=8" in warnings[0]
    assert check_regime(build("G2"), 11) == []


def test_donkin_split():
    d = build("A2")
    assert donkin_split((4, 4), d, 5, 2) == ((4, 4), (0, 0))
    assert donkin_split((2, 2), d, 5, 2) is None
    assert donkin_split((4, 9), d, 5, 2) == ((4, 4), (0, 1))


@given(st.integers(0, 120), st.integers(0, 120), st.sampled_from([3, 5, 7]), st.integers(1, 3))
def test_donkin_split_reassembles(a, b, p, n):
    d = build("A2")
    split = donkin_split((a, b), d, p, n)
    if split is None:
        assert min(a, b) < p ** (n - 1) - 1
        return
    low, mu = split
    q = p ** (n - 1)
    assert all(q - 1 <= c < 2 * q - 1 for c in low)
    assert tuple(x + q * m for x, m in zip(low, mu)) == (a, b)


@pytest.mark.parametrize(
    "weight, n, chain, kind",
    [
        ((4, 4), 2, "J2\\I2", "Jn_minus_In"),
        ((2, 2), 2, "I1\\J2", "Tn_outside_Jn"),
        ((14, 9), 2, "I2", "In"),
        ((0, 0), 1, "A", "FundamentalAlcove"),
    ],
)
def test_classify_region(weight, n, chain, kind):
    label = classify_region(weight, build("A2"), 5, n)
    assert label.chain == chain
    assert label.kind == kind


def test_region_nesting_sl2():
    d = build("A1")
    for p in (2, 3, 5):
        for a in range(201):
            for n in (1, 2, 3):
                here = classify_region((a,), d, p, n)
                if here.kind == "In":
                    assert in_J((a,), d, p, n)
                # I_n(SL2) = J_(n+1)(SL2)
                nxt = classify_region((a,), d, p, n + 1)
                assert (here.kind == "In") == (nxt.kind in ("In", "Jn_minus_In"))
                assert (here.kind == "In") == (a >= p**n - 1)


@pytest.mark.parametrize(
    "label, weight, expected",
    [("A2", (1, 0), (0, 1)), ("A2", (3, 1), (1, 3)), ("B2", (3, 2), (3, 2)), ("G2", (1, 4), (1, 4)), ("A1", (0,), (0,))],
)
def test_minus_w0(label, weight, expected):
    assert minus_w0(weight, build(label)) == expected


@pytest.mark.parametrize("label", ["A3", "D5", "E6", "B2xA2"])
def test_minus_w0_involution(label):
    d = build(label)
    for i in range(d.rank):
        lam = tuple(int(k == i) * 2 + 1 for k in range(d.rank))
        image = minus_w0(lam, d)
        assert all(c >= 0 for c in image)
        assert minus_w0(image, d) == lam

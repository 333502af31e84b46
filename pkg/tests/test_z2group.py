import itertools

import pytest
from hypothesis import given, strategies as st

from zgraded._common import CapExceeded, DimensionMismatch
from zgraded.z2group import (
    GroupElement,
    enumerate_even,
    enumerate_group,
    gp_add,
    parity,
    parse,
    scalar_product,
)

T = GroupElement.from_tuple


def test_add_examples():
    assert gp_add(T((0, 1, 1)), T((1, 0, 1))) == T((1, 1, 0))
    assert gp_add(T((1, 0, 0)), T((0, 0, 0))) == T((1, 0, 0))
    for g in enumerate_group(4):
        assert g + g == GroupElement.zero(4)


def test_scalar_product_examples():
    assert scalar_product(T((0, 1, 1)), T((1, 0, 1))) == 1
    assert scalar_product(T((0, 1, 1)), T((0, 1, 1))) == 0
    for g in enumerate_group(3):
        assert scalar_product(g, GroupElement.zero(3)) == 0


def test_parity_examples():
    assert parity(T((0, 1, 1))) == 0
    assert parity(T((1, 1, 1))) == 1
    assert parity(T((0, 0, 0))) == 0


def test_enumerate_order():
    assert [g.to_tuple() for g in enumerate_group(1)] == [(0,), (1,)]
    assert [g.to_tuple() for g in enumerate_group(2)] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert len(enumerate_group(3)) == 8


def test_enumerate_even():
    assert {g.to_tuple() for g in enumerate_even(3)} == {(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert [g.to_tuple() for g in enumerate_even(2)] == [(0, 0), (1, 1)]
    for n in range(2, 9):
        evens = enumerate_even(n)
        assert len(evens) == 2 ** (n - 1)
        assert all(parity(g) == 0 for g in evens)
        assert {a + b for a in evens for b in evens} == set(evens)


@pytest.mark.parametrize("n", range(1, 7))
def test_group_laws_exhaustive(n):
    G = enumerate_group(n)
    zero = GroupElement.zero(n)
    for a in G:
        assert a + zero == a
        assert a + a == zero
        for b in G:
            assert a + b == b + a
    for a, b, c in itertools.product(G, repeat=3):
        assert (a + b) + c == a + (b + c)


@pytest.mark.parametrize("n", range(1, 7))
def test_scalar_product_symmetric_bilinear(n):
    G = enumerate_group(n)
    for a, b in itertools.product(G, repeat=2):
        assert scalar_product(a, b) == scalar_product(b, a)
    for a, b, c in itertools.product(G, repeat=3):
        assert scalar_product(a + b, c) == (scalar_product(a, c) + scalar_product(b, c)) % 2


def test_dimension_mismatch_and_caps():
    with pytest.raises(DimensionMismatch):
        gp_add(T((1, 0)), T((1, 0, 0)))
    with pytest.raises(DimensionMismatch):
        scalar_product(T((1,)), T((1, 1)))
    with pytest.raises(CapExceeded):
        enumerate_group(21)
    with pytest.raises(CapExceeded):
        enumerate_even(1)
    with pytest.raises(CapExceeded):
        GroupElement(63, 0)
    with pytest.raises(ValueError):
        GroupElement(2, 4)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=62))
def test_text_round_trip(coords):
    g = T(coords)
    assert str(g) == "(" + ",".join(map(str, coords)) + ")"
    assert parse(str(g)) == g


@pytest.mark.parametrize("bad", ["(0, 1)", "0,1", "()", "(2,0)", "(0,1", " (0,1)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse(bad)

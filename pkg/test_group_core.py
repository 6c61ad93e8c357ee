# -*- coding: utf-8 -*-
"""
Test Group Core
Group axioms, element orders against the multiplication oracle, spectra
and cyclicity
"""

import sys
from collections import Counter
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import given, settings, strategies as st

from config.group_catalog import catalog_groups, groups_of_order
from modules.group_schema import (
    GroupSpec, GroupFamily, OrderSpectrum,
    CyclicElem, DihedralElem, ProductElem, QuaternionElem,
    DomainError, PreconditionError, ResourceBoundError,
)
from modules.group_core import (
    check_element, identity, multiply, inverse, power,
    iterate_order, element_order, enumerate_elements,
    order_table, order_spectrum, is_cyclic, _cached_order_table,
)
from modules.number_theory import totient, divisors


# ==================== STRATEGIES ====================

groups = st.one_of(
    st.integers(1, 40).map(GroupSpec.cyclic),
    st.integers(1, 20).map(GroupSpec.dihedral),
    st.lists(st.integers(1, 6), min_size=2, max_size=3).map(lambda ns: GroupSpec.product(*ns)),
    st.integers(2, 10).map(GroupSpec.quaternion),
)


@st.composite
def group_with_elements(draw, count):
    g = draw(groups)
    elements = enumerate_elements(g)
    picked = [elements[draw(st.integers(0, len(elements) - 1))] for _ in range(count)]
    return (g, *picked)


catalog_to_200 = st.sampled_from(catalog_groups(200))


# ==================== AXIOMS ====================

@given(group_with_elements(3))
def test_multiplication_is_associative(case):
    g, x, y, z = case
    assert multiply(g, multiply(g, x, y), z) == multiply(g, x, multiply(g, y, z))


@given(group_with_elements(1))
def test_identity_and_inverse(case):
    g, x = case
    e = identity(g)
    assert multiply(g, x, e) == x
    assert multiply(g, e, x) == x
    assert multiply(g, x, inverse(g, x)) == e
    assert multiply(g, inverse(g, x), x) == e


@given(group_with_elements(1), st.integers(-50, 50))
def test_power_matches_repeated_multiplication(case, t):
    g, x = case
    expected = identity(g)
    step = x if t >= 0 else inverse(g, x)
    for _ in range(abs(t)):
        expected = multiply(g, expected, step)
    assert power(g, x, t) == expected


@given(group_with_elements(1))
def test_order_is_smallest_annihilating_power(case):
    g, x = case
    d = element_order(g, x)
    assert g.order % d == 0
    assert power(g, x, d) == identity(g)
    assert all(power(g, x, t) != identity(g) for t in range(1, d))


def test_dihedral_relations():
    g = GroupSpec.dihedral(5)
    r, s = DihedralElem(0, 1), DihedralElem(1, 0)
    assert power(g, r, 5) == identity(g)
    assert multiply(g, s, s) == identity(g)
    # r s = s r^-1
    assert multiply(g, r, s) == multiply(g, s, inverse(g, r))
    assert multiply(g, s, r) == DihedralElem(1, 1)


def test_quaternion_relations():
    m = 3
    g = GroupSpec.quaternion(m)
    x, y = QuaternionElem(1, 0), QuaternionElem(0, 1)
    assert power(g, x, 2 * m) == identity(g)
    assert multiply(g, y, y) == power(g, x, m)
    assert multiply(g, multiply(g, y, x), inverse(g, y)) == inverse(g, x)


@settings(max_examples=500)
@given(catalog_to_200, st.data())
def test_products_stay_in_the_group(g, data):
    elements = enumerate_elements(g)
    members = set(elements)
    for _ in range(20):
        x = data.draw(st.sampled_from(elements))
        y = data.draw(st.sampled_from(elements))
        z = multiply(g, x, y)
        check_element(g, z)
        assert z in members


def test_closure_exhaustive_on_small_catalog():
    for g in catalog_groups(24):
        elements = enumerate_elements(g)
        members = set(elements)
        for x in elements:
            for y in elements:
                assert multiply(g, x, y) in members, (g, x, y)


def test_check_element_rejects_foreign_elements():
    with pytest.raises(DomainError):
        check_element(GroupSpec.cyclic(4), CyclicElem(4))
    with pytest.raises(DomainError):
        check_element(GroupSpec.cyclic(4), DihedralElem(0, 1))
    with pytest.raises(DomainError):
        check_element(GroupSpec.dihedral(3), DihedralElem(2, 0))
    with pytest.raises(DomainError):
        check_element(GroupSpec.product(2, 3), ProductElem((1,)))
    with pytest.raises(DomainError):
        element_order(GroupSpec.quaternion(2), QuaternionElem(4, 0))


def test_group_spec_validation():
    with pytest.raises(PreconditionError):
        GroupSpec.cyclic(0)
    with pytest.raises(PreconditionError):
        GroupSpec.product(6)
    with pytest.raises(PreconditionError):
        GroupSpec.quaternion(1)
    with pytest.raises(PreconditionError):
        GroupSpec(GroupFamily.DIHEDRAL, (2, 3))
    with pytest.raises(PreconditionError):
        GroupSpec.cyclic(2 ** 64)


# ==================== ORDERS ====================

def test_cyclic_order_rule_up_to_1000():
    for n in range(1, 1001):
        g = GroupSpec.cyclic(n)
        for b in range(n):
            assert element_order(g, CyclicElem(b)) == n // gcd(n, b)


def test_fast_path_matches_oracle_on_small_catalog():
    for g in catalog_groups(48):
        for x, d in zip(enumerate_elements(g), order_table(g)):
            assert element_order(g, x) == iterate_order(g, x) == d, (g, x)


@pytest.mark.parametrize("g", [
    GroupSpec.cyclic(2000),
    GroupSpec.dihedral(1000),
    GroupSpec.product(40, 50),
    GroupSpec.product(2, 10, 100),
    GroupSpec.quaternion(500),
])
def test_fast_path_matches_oracle_near_2000(g):
    for x, d in zip(enumerate_elements(g), order_table(g)):
        assert d == iterate_order(g, x), x
    # element_order itself, not just the bulk table
    for x in enumerate_elements(g)[::97]:
        assert element_order(g, x) == iterate_order(g, x)


def test_dihedral_orders():
    g = GroupSpec.dihedral(3)
    assert order_table(g) == (1, 3, 3, 2, 2, 2)


def test_reflections_have_order_two_up_to_500():
    for n in range(1, 501):
        g = GroupSpec.dihedral(n)
        for b in range(n):
            s = DihedralElem(1, b)
            assert element_order(g, s) == 2 == iterate_order(g, s), (n, b)


def test_order_table_memoises_small_groups_only():
    small, large = GroupSpec.dihedral(30), GroupSpec.cyclic(5000)
    order_table(small)
    hits = _cached_order_table.cache_info().hits
    assert order_table(small) == order_table(small)
    assert _cached_order_table.cache_info().hits == hits + 2

    misses = _cached_order_table.cache_info().misses
    assert len(order_table(large)) == 5000
    assert _cached_order_table.cache_info().misses == misses


# ==================== ENUMERATION ====================

def test_canonical_enumeration_order():
    assert enumerate_elements(GroupSpec.cyclic(3)) == [CyclicElem(0), CyclicElem(1), CyclicElem(2)]
    assert enumerate_elements(GroupSpec.dihedral(2)) == [
        DihedralElem(0, 0), DihedralElem(0, 1), DihedralElem(1, 0), DihedralElem(1, 1),
    ]
    assert enumerate_elements(GroupSpec.product(2, 2)) == [
        ProductElem((0, 0)), ProductElem((0, 1)), ProductElem((1, 0)), ProductElem((1, 1)),
    ]
    q = enumerate_elements(GroupSpec.quaternion(2))
    assert q[:4] == [QuaternionElem(i, 0) for i in range(4)]
    assert q[4:] == [QuaternionElem(i, 1) for i in range(4)]


@given(groups)
def test_enumeration_is_exhaustive_and_unique(g):
    elements = enumerate_elements(g)
    assert len(elements) == g.order == len(set(elements))
    for x in elements:
        check_element(g, x)


def test_enumeration_bound():
    with pytest.raises(ResourceBoundError) as exc:
        enumerate_elements(GroupSpec.cyclic(100), bound=50)
    assert "--bound" in str(exc.value)
    with pytest.raises(ResourceBoundError):
        order_spectrum(GroupSpec.dihedral(100), bound=50)


# ==================== SPECTRA ====================

def test_known_spectra():
    assert order_spectrum(GroupSpec.product(3, 6)).as_dict() == {1: 1, 2: 1, 3: 8, 6: 8}
    assert order_spectrum(GroupSpec.dihedral(4)).as_dict() == {1: 1, 2: 5, 4: 2}
    assert order_spectrum(GroupSpec.quaternion(2)).as_dict() == {1: 1, 2: 1, 4: 6}
    assert order_spectrum(GroupSpec.cyclic(6)).as_dict() == {1: 1, 2: 1, 3: 2, 6: 2}


def test_cyclic_spectrum_closed_form_up_to_1000():
    for n in range(1, 1001):
        spectrum = order_spectrum(GroupSpec.cyclic(n))
        assert spectrum.as_dict() == {d: totient(d) for d in divisors(n)}
        assert spectrum.as_dict() == dict(Counter(n // gcd(n, b) for b in range(n)))


@given(groups)
def test_spectrum_consistency(g):
    spectrum = order_spectrum(g)
    assert sum(c for _, c in spectrum.entries) == g.order
    assert all(g.order % d == 0 for d in spectrum.orders)
    assert spectrum.as_dict() == dict(Counter(order_table(g)))


def test_spectrum_rejects_inconsistent_entries():
    with pytest.raises(DomainError):
        OrderSpectrum(((1, 1), (2, 2)), 4)
    with pytest.raises(DomainError):
        OrderSpectrum(((1, 1), (3, 3)), 4)
    with pytest.raises(DomainError):
        OrderSpectrum(((2, 4),), 4)


# ==================== CYCLICITY ====================

def test_is_cyclic_examples():
    assert is_cyclic(GroupSpec.cyclic(7)).witness == CyclicElem(1)
    assert is_cyclic(GroupSpec.cyclic(1)).witness == CyclicElem(0)
    assert is_cyclic(GroupSpec.dihedral(1)).cyclic
    assert not is_cyclic(GroupSpec.dihedral(3)).cyclic
    assert not is_cyclic(GroupSpec.quaternion(2)).cyclic
    assert is_cyclic(GroupSpec.product(2, 3, 5)).witness == ProductElem((1, 1, 1))
    assert not is_cyclic(GroupSpec.product(2, 3, 4)).cyclic


def test_product_cyclic_iff_coprime():
    for n in range(1, 51):
        for m in range(1, 51):
            g = GroupSpec.product(n, m)
            result = is_cyclic(g)
            assert result.cyclic == (gcd(n, m) == 1), (n, m)
            if result.cyclic:
                assert element_order(g, result.witness) == n * m
                assert order_spectrum(g) == order_spectrum(GroupSpec.cyclic(n * m))


def test_cyclicity_agrees_with_spectrum():
    for g in catalog_groups(64):
        has_generator = order_spectrum(g).count(g.order) > 0
        result = is_cyclic(g)
        assert result.cyclic == has_generator, g
        if result.cyclic:
            assert element_order(g, result.witness) == g.order


def test_catalog_listing():
    assert [g.order for g in catalog_groups(4)] == [1, 2, 2, 3, 4, 4, 4]
    order_8 = groups_of_order(8)
    assert GroupSpec.quaternion(2) in order_8
    assert GroupSpec.product(2, 2, 2) in order_8
    assert GroupSpec.product(2, 4) in order_8
    assert GroupSpec.dihedral(4) in order_8
    assert order_8[0] == GroupSpec.cyclic(8)

# -*- coding: utf-8 -*-
"""
Test Bijection Existence Checker
Flow decisions against the backtracking oracle, certificates, realization
"""

import sys
from collections import Counter
from dataclasses import replace
from itertools import product as cartesian
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from config.group_catalog import catalog_groups
from modules.group_schema import GroupSpec, ComparisonMode, DomainError, ResourceBoundError
from modules.group_core import order_spectrum, enumerate_elements, is_cyclic
from modules.existence import (
    build_class_graph, exists_bijection, verify_certificate,
    brute_force_exists, realize_bijection, survey_solvable,
)


def _spectrum(g):
    return order_spectrum(g)


def _pairs_by_order(max_order):
    by_order = {}
    for g in catalog_groups(max_order):
        by_order.setdefault(g.order, []).append(g)
    for groups in by_order.values():
        yield from cartesian(groups, repeat=2)


# ==================== EXAMPLES ====================

def test_dihedral_to_cyclic_is_feasible():
    src, dst = _spectrum(GroupSpec.dihedral(4)), _spectrum(GroupSpec.cyclic(8))
    cert = exists_bijection(src, dst)
    assert cert.feasible
    assert cert.flow_value == 8
    assert sum(c for _, _, c in cert.assignment) == 8
    assert verify_certificate(src, dst, cert)


def test_cyclic_to_klein_is_infeasible():
    src, dst = _spectrum(GroupSpec.cyclic(4)), _spectrum(GroupSpec.product(2, 2))
    cert = exists_bijection(src, dst)
    assert not cert.feasible
    assert cert.assignment is None
    w = cert.witness
    assert w.source_orders == (4,)
    assert w.source_count == 2
    assert w.adjacent_target_orders == ()
    assert w.adjacent_target_count == 0
    assert verify_certificate(src, dst, cert)


def test_identity_pairing_is_feasible():
    s = _spectrum(GroupSpec.cyclic(6))
    cert = exists_bijection(s, s)
    assert cert.feasible
    assert verify_certificate(s, s, cert)


def test_class_graph_edges():
    graph = build_class_graph(_spectrum(GroupSpec.dihedral(3)), _spectrum(GroupSpec.cyclic(6)))
    assert graph.edges == ((1, 1), (1, 2), (1, 3), (1, 6), (2, 2), (2, 6), (3, 3), (3, 6))
    assert graph.group_order == 6


def test_order_mismatch_is_a_domain_error():
    with pytest.raises(DomainError):
        exists_bijection(_spectrum(GroupSpec.cyclic(4)), _spectrum(GroupSpec.cyclic(6)))
    with pytest.raises(DomainError):
        brute_force_exists(_spectrum(GroupSpec.cyclic(4)), _spectrum(GroupSpec.cyclic(6)))


# ==================== ORACLE EQUIVALENCE ====================

@pytest.mark.parametrize("mode", list(ComparisonMode))
def test_flow_agrees_with_backtracking(mode):
    for g, h in _pairs_by_order(24):
        src, dst = _spectrum(g), _spectrum(h)
        cert = exists_bijection(src, dst, mode)
        assert cert.feasible == brute_force_exists(src, dst, mode), (g, h, mode)
        assert verify_certificate(src, dst, cert), (g, h, mode)
        if not cert.feasible:
            assert cert.witness.source_count > cert.witness.adjacent_target_count


def test_brute_force_bound():
    s = _spectrum(GroupSpec.cyclic(100))
    with pytest.raises(ResourceBoundError):
        brute_force_exists(s, s)
    assert brute_force_exists(s, s, bound=100)


# ==================== CERTIFICATES ====================

def test_tampered_certificates_are_rejected():
    src, dst = _spectrum(GroupSpec.dihedral(4)), _spectrum(GroupSpec.cyclic(8))
    cert = exists_bijection(src, dst)

    d, e, count = cert.assignment[0]
    shifted = ((d, e, count + 1),) + cert.assignment[1:]
    assert not verify_certificate(src, dst, replace(cert, assignment=shifted))

    # order 2 -> order 1 breaks the divides predicate
    illegal = cert.assignment + ((2, 1, 0),)
    assert not verify_certificate(src, dst, replace(cert, assignment=illegal))
    assert not verify_certificate(src, dst, replace(cert, assignment=None))

    k_src, k_dst = _spectrum(GroupSpec.cyclic(4)), _spectrum(GroupSpec.product(2, 2))
    bad = exists_bijection(k_src, k_dst)
    fake = replace(bad.witness, source_orders=(1,))
    assert not verify_certificate(k_src, k_dst, replace(bad, witness=fake))


# ==================== REALIZATION ====================

@pytest.mark.parametrize("g", [
    GroupSpec.dihedral(4),
    GroupSpec.quaternion(2),
    GroupSpec.product(3, 6),
    GroupSpec.product(2, 2, 2),
])
def test_realized_table_rechecks(g):
    c = GroupSpec.cyclic(g.order)
    cert = exists_bijection(_spectrum(g), _spectrum(c))
    table = realize_bijection(g, c, cert)

    assert table.verdict and table.bijective
    assert [r.element for r in table.rows] == enumerate_elements(g)
    assert Counter(r.image for r in table.rows) == Counter(enumerate_elements(c))
    assert all(r.image_order % r.domain_order == 0 for r in table.rows)


def test_realization_is_deterministic():
    g, c = GroupSpec.dihedral(6), GroupSpec.cyclic(12)
    first = realize_bijection(g, c, exists_bijection(_spectrum(g), _spectrum(c)))
    second = realize_bijection(g, c, exists_bijection(_spectrum(g), _spectrum(c)))
    assert first == second


def test_infeasible_certificate_cannot_be_realized():
    g, h = GroupSpec.cyclic(4), GroupSpec.product(2, 2)
    cert = exists_bijection(_spectrum(g), _spectrum(h))
    with pytest.raises(DomainError):
        realize_bijection(g, h, cert)


# ==================== SURVEY ====================

def test_every_non_cyclic_group_maps_to_its_cyclic_group():
    outcomes = survey_solvable(200)
    assert outcomes
    assert all(not is_cyclic(o.group).cyclic for o in outcomes)
    failures = [o.group for o in outcomes if not (o.feasible and o.realized)]
    assert failures == []


def test_survey_skips_cyclic_groups():
    groups = [o.group for o in survey_solvable(8)]
    assert GroupSpec.product(2, 3) not in groups
    assert GroupSpec.dihedral(1) not in groups
    assert GroupSpec.dihedral(3) in groups
    assert GroupSpec.quaternion(2) in groups

# -*- coding: utf-8 -*-
"""
Group Catalog Registry
Every catalog group up to a given order, in a fixed deterministic order
"""

from typing import List, Tuple

from modules.group_schema import GroupSpec, GroupFamily


# Family listing order inside one group order
FAMILY_RANK = {
    GroupFamily.CYCLIC: 0,
    GroupFamily.DIHEDRAL: 1,
    GroupFamily.DIRECT_PRODUCT_CYCLIC: 2,
    GroupFamily.GENERALIZED_QUATERNION: 3,
}


def _product_factorizations(limit: int, smallest: int = 2) -> List[Tuple[int, ...]]:
    """Non-decreasing tuples of factors >= 2 whose product is <= limit"""
    result = []
    for n in range(smallest, limit + 1):
        result.append((n,))
        for tail in _product_factorizations(limit // n, n):
            result.append((n,) + tail)
    return result


def catalog_groups(max_order: int) -> List[GroupSpec]:
    """
    All catalog groups of order <= max_order:
    - Z_n for every n
    - D_2n for every n
    - Z_n1 x ... x Z_nt, t >= 2, 2 <= n1 <= ... <= nt
    - Q_4m for m >= 2
    """
    groups = [GroupSpec.cyclic(n) for n in range(1, max_order + 1)]
    groups += [GroupSpec.dihedral(n) for n in range(1, max_order // 2 + 1)]
    groups += [
        GroupSpec.product(*factors)
        for factors in _product_factorizations(max_order)
        if len(factors) >= 2
    ]
    groups += [GroupSpec.quaternion(m) for m in range(2, max_order // 4 + 1)]

    return sorted(groups, key=lambda g: (g.order, FAMILY_RANK[g.family], g.parameters))


def groups_of_order(order: int) -> List[GroupSpec]:
    return [g for g in catalog_groups(order) if g.order == order]

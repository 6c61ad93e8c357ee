# -*- coding: utf-8 -*-
"""
Group Core
Normal-form arithmetic, element orders and order spectra

Multiplication rules:
- Cyclic / product: componentwise addition
- Dihedral: (a1, b1)(a2, b2) = (a1 + a2 mod 2, (-1)^a2 * b1 + b2 mod n), from rs = sr^-1
- Quaternion: x^2m = 1, y^2 = x^m, y x y^-1 = x^-1, so y x^i = x^-i y

Canonical enumeration order:
- Cyclic: residue ascending
- Dihedral: a ascending, then b ascending (1, r, r^2, ..., s, sr, sr^2, ...)
- Product: lexicographic
- Quaternion: j ascending, then i ascending
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import gcd
from typing import List, Optional, Tuple

from config.settings import ENUMERATION_BOUND, ORDER_TABLE_CACHE_ORDER
from modules.group_schema import (
    GroupSpec, GroupFamily, Element, OrderSpectrum,
    CyclicElem, DihedralElem, ProductElem, QuaternionElem,
    DomainError, ResourceBoundError,
)
from modules.number_theory import cyclic_order, lcm_all, divisors, totient

logger = logging.getLogger(__name__)


_ELEMENT_TYPES = {
    GroupFamily.CYCLIC: CyclicElem,
    GroupFamily.DIHEDRAL: DihedralElem,
    GroupFamily.DIRECT_PRODUCT_CYCLIC: ProductElem,
    GroupFamily.GENERALIZED_QUATERNION: QuaternionElem,
}


def check_element(g: GroupSpec, x: Element) -> None:
    """Raise DomainError unless x is a normal-form element of g"""
    expected = _ELEMENT_TYPES[g.family]
    if not isinstance(x, expected):
        raise DomainError(f"{type(x).__name__} is not an element of a {g.family.value} group")

    if g.family == GroupFamily.CYCLIC:
        ok = 0 <= x.residue < g.parameters[0]
    elif g.family == GroupFamily.DIHEDRAL:
        ok = x.a in (0, 1) and 0 <= x.b < g.parameters[0]
    elif g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        ok = len(x.residues) == len(g.parameters) and all(
            0 <= r < n for r, n in zip(x.residues, g.parameters)
        )
    else:
        ok = 0 <= x.i < 2 * g.parameters[0] and x.j in (0, 1)

    if not ok:
        raise DomainError(f"{x} is not in normal form for {g.family.value}{list(g.parameters)}")


def check_bound(g: GroupSpec, bound: Optional[int] = None) -> None:
    limit = ENUMERATION_BOUND if bound is None else bound
    if g.order > limit:
        raise ResourceBoundError("Group enumeration", g.order, limit)


def identity(g: GroupSpec) -> Element:
    if g.family == GroupFamily.CYCLIC:
        return CyclicElem(0)
    if g.family == GroupFamily.DIHEDRAL:
        return DihedralElem(0, 0)
    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        return ProductElem((0,) * len(g.parameters))
    return QuaternionElem(0, 0)


def multiply(g: GroupSpec, x: Element, y: Element) -> Element:
    check_element(g, x)
    check_element(g, y)
    return _multiply(g, x, y)


def _multiply(g: GroupSpec, x: Element, y: Element) -> Element:
    # Unchecked; callers validate once up front
    if g.family == GroupFamily.CYCLIC:
        return CyclicElem((x.residue + y.residue) % g.parameters[0])

    if g.family == GroupFamily.DIHEDRAL:
        n = g.parameters[0]
        b1 = -x.b if y.a else x.b
        return DihedralElem((x.a + y.a) % 2, (b1 + y.b) % n)

    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        return ProductElem(tuple(
            (r1 + r2) % n for r1, r2, n in zip(x.residues, y.residues, g.parameters)
        ))

    m = g.parameters[0]
    if x.j == 0:
        return QuaternionElem((x.i + y.i) % (2 * m), y.j)
    i = x.i - y.i
    if y.j == 1:
        return QuaternionElem((i + m) % (2 * m), 0)
    return QuaternionElem(i % (2 * m), 1)


def inverse(g: GroupSpec, x: Element) -> Element:
    check_element(g, x)

    if g.family == GroupFamily.CYCLIC:
        return CyclicElem(-x.residue % g.parameters[0])
    if g.family == GroupFamily.DIHEDRAL:
        if x.a == 1:
            return x  # reflections are involutions
        return DihedralElem(0, -x.b % g.parameters[0])
    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        return ProductElem(tuple(-r % n for r, n in zip(x.residues, g.parameters)))

    m = g.parameters[0]
    if x.j == 0:
        return QuaternionElem(-x.i % (2 * m), 0)
    return QuaternionElem((x.i + m) % (2 * m), 1)


def power(g: GroupSpec, x: Element, t: int) -> Element:
    """x^t by square-and-multiply; negative t uses the inverse"""
    check_element(g, x)
    if t < 0:
        x, t = inverse(g, x), -t

    result = identity(g)
    base = x
    while t:
        if t & 1:
            result = _multiply(g, result, base)
        base = _multiply(g, base, base)
        t >>= 1
    return result


def iterate_order(g: GroupSpec, x: Element) -> int:
    """
    Reference oracle: multiply by x until the identity comes back.
    Never takes more than |G| steps in a correct implementation.
    """
    check_element(g, x)
    e = identity(g)
    current = x
    for t in range(1, g.order + 1):
        if current == e:
            return t
        current = _multiply(g, current, x)
    raise RuntimeError(f"Order of {x} in {g} exceeded group order {g.order}")


def _order_by_divisors(g: GroupSpec, x: Element) -> int:
    e = identity(g)
    for d in divisors(g.order):
        if power(g, x, d) == e:
            return d
    raise RuntimeError(f"No divisor of {g.order} annihilates {x} in {g}")


def element_order(g: GroupSpec, x: Element) -> int:
    check_element(g, x)

    if g.family == GroupFamily.CYCLIC:
        return cyclic_order(g.parameters[0], x.residue)

    if g.family == GroupFamily.DIHEDRAL:
        if x.a == 1:
            return 2
        return cyclic_order(g.parameters[0], x.b)

    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        return lcm_all(cyclic_order(n, r) for r, n in zip(x.residues, g.parameters))

    return _order_by_divisors(g, x)


def enumerate_elements(g: GroupSpec, bound: Optional[int] = None) -> List[Element]:
    """Every element exactly once, in canonical order"""
    check_bound(g, bound)

    if g.family == GroupFamily.CYCLIC:
        return [CyclicElem(r) for r in range(g.parameters[0])]

    if g.family == GroupFamily.DIHEDRAL:
        n = g.parameters[0]
        return [DihedralElem(a, b) for a in (0, 1) for b in range(n)]

    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        return [ProductElem(t) for t in cartesian(*(range(n) for n in g.parameters))]

    m = g.parameters[0]
    return [QuaternionElem(i, j) for j in (0, 1) for i in range(2 * m)]


def _build_order_table(g: GroupSpec) -> Tuple[int, ...]:
    if g.family == GroupFamily.CYCLIC:
        n = g.parameters[0]
        return tuple(n // gcd(n, r) for r in range(n))
    if g.family == GroupFamily.GENERALIZED_QUATERNION:
        # Closed form for bulk tables; element_order keeps the generic path
        # x^i has its cyclic order in <x>; every x^i y squares to x^m, order 4
        m = g.parameters[0]
        return tuple(cyclic_order(2 * m, i) for i in range(2 * m)) + (4,) * (2 * m)
    return tuple(element_order(g, x) for x in enumerate_elements(g, bound=g.order))


_cached_order_table = lru_cache(maxsize=256)(_build_order_table)


def _order_table(g: GroupSpec) -> Tuple[int, ...]:
    if g.order <= ORDER_TABLE_CACHE_ORDER:
        return _cached_order_table(g)
    return _build_order_table(g)


def order_table(g: GroupSpec, bound: Optional[int] = None) -> Tuple[int, ...]:
    """Element orders aligned with enumerate_elements(g)"""
    check_bound(g, bound)
    return _order_table(g)


def order_spectrum(g: GroupSpec, bound: Optional[int] = None) -> OrderSpectrum:
    check_bound(g, bound)

    if g.family == GroupFamily.CYCLIC:
        n = g.parameters[0]
        return OrderSpectrum(tuple((d, totient(d)) for d in divisors(n)), n)

    counts = Counter(_order_table(g))
    logger.debug(f"Spectrum of {g.family.value}{list(g.parameters)}: {dict(counts)}")
    return OrderSpectrum(tuple(counts.items()), g.order)


@dataclass(frozen=True)
class CyclicityResult:
    cyclic: bool
    witness: Optional[Element] = None


def is_cyclic(g: GroupSpec) -> CyclicityResult:
    if g.family == GroupFamily.CYCLIC:
        return CyclicityResult(True, CyclicElem(1 % g.parameters[0]))

    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        moduli = g.parameters
        coprime = all(
            gcd(moduli[i], moduli[j]) == 1
            for i in range(len(moduli)) for j in range(i + 1, len(moduli))
        )
        if coprime:
            return CyclicityResult(True, ProductElem(tuple(1 % n for n in moduli)))
        return CyclicityResult(False)

    if g.family == GroupFamily.DIHEDRAL:
        # Rotations have order <= n and reflections order 2, so only D_2 is cyclic
        if g.parameters[0] == 1:
            return CyclicityResult(True, DihedralElem(1, 0))
        return CyclicityResult(False)

    # x has order 2m and every x^i y has order 4 < 4m
    return CyclicityResult(False)

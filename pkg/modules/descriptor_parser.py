# -*- coding: utf-8 -*-
"""
Group Descriptor Parser
Converts descriptor strings <-> GroupSpec, and renders elements

Grammar (names use the GROUP ORDER, like D_2n):
    Z<n>          cyclic of order n
    D<2n>         dihedral of order 2n (even, >= 2)
    Q<4m>         generalized quaternion of order 4m (multiple of 4, >= 8)
    Z<a>xZ<b>...  direct product of two or more cyclic factors
"""

import re

from modules.group_schema import (
    GroupSpec, GroupFamily, Element, DescriptorParseError,
    CyclicElem, DihedralElem, ProductElem, QuaternionElem,
)


GRAMMAR_HELP = "expected Z<n>, D<2n>, Q<4m> or a product like Z3xZ6"

_FACTOR_PATTERN = re.compile(r"^([ZDQ])(\d+)$")
_SEPARATOR_PATTERN = re.compile(r"\s*[xX]\s*")


def parse_group(descriptor: str) -> GroupSpec:
    """
    Parse a descriptor into a GroupSpec.
    Raises DescriptorParseError naming the grammar if invalid.
    """
    text = (descriptor or "").strip()
    if not text:
        raise DescriptorParseError(f"Empty group descriptor; {GRAMMAR_HELP}")

    parts = _SEPARATOR_PATTERN.split(text)
    factors = []
    for part in parts:
        match = _FACTOR_PATTERN.match(part.upper())
        if not match:
            raise DescriptorParseError(f"Cannot parse '{descriptor}' at '{part}'; {GRAMMAR_HELP}")
        factors.append((match.group(1), int(match.group(2))))

    if len(factors) > 1:
        if any(letter != "Z" for letter, _ in factors):
            raise DescriptorParseError(f"Products may only combine Z factors: '{descriptor}'; {GRAMMAR_HELP}")
        return GroupSpec.product(*(n for _, n in factors))

    letter, size = factors[0]
    if size < 1:
        raise DescriptorParseError(f"Group order must be >= 1 in '{descriptor}'; {GRAMMAR_HELP}")
    if letter == "Z":
        return GroupSpec.cyclic(size)
    if letter == "D":
        if size % 2:
            raise DescriptorParseError(f"Dihedral order must be even in '{descriptor}'; {GRAMMAR_HELP}")
        return GroupSpec.dihedral(size // 2)
    if size % 4 or size < 8:
        raise DescriptorParseError(f"Quaternion order must be a multiple of 4 and >= 8 in '{descriptor}'; {GRAMMAR_HELP}")
    return GroupSpec.quaternion(size // 4)


def format_group(g: GroupSpec) -> str:
    """Inverse of parse_group"""
    if g.family == GroupFamily.CYCLIC:
        return f"Z{g.parameters[0]}"
    if g.family == GroupFamily.DIHEDRAL:
        return f"D{g.order}"
    if g.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
        return "x".join(f"Z{n}" for n in g.parameters)
    return f"Q{g.order}"


def _power_text(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


def format_element(x: Element) -> str:
    """Dihedral elements render as 1, r, r^2, s, sr, sr^2"""
    if isinstance(x, CyclicElem):
        return str(x.residue)

    if isinstance(x, DihedralElem):
        text = ("s" if x.a else "") + _power_text("r", x.b)
        return text or "1"

    if isinstance(x, ProductElem):
        return "(" + ",".join(str(r) for r in x.residues) + ")"

    if isinstance(x, QuaternionElem):
        text = _power_text("x", x.i) + ("y" if x.j else "")
        return text or "1"

    raise TypeError(f"Not a group element: {x!r}")

# -*- coding: utf-8 -*-
"""
Group Family Definitions and Validation
Four supported families with strict parameter checks

Every element is stored in a unique normal form:
1. Cyclic:      residue in [0, n)
2. Dihedral:    s^a r^b with a in {0, 1}, b in [0, n)
3. Product:     tuple of residues, residue i in [0, n_i)
4. Quaternion:  x^i y^j with i in [0, 2m), j in {0, 1}
"""

from enum import Enum
from math import prod
from typing import Tuple, Union
from dataclasses import dataclass

from config.settings import UINT64_MAX


class GroupError(Exception):
    """Base class for all group computation errors"""
    pass


class DomainError(GroupError):
    """Raised when an element, group or certificate does not fit the operation"""
    pass


class PreconditionError(DomainError):
    """Raised when a constructor's hypotheses are violated"""
    pass


class DescriptorParseError(DomainError):
    """Raised when a group descriptor string does not match the grammar"""
    pass


class ResourceBoundError(GroupError):
    """Raised when an enumeration or search bound is exceeded"""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what} of size {size} exceeds bound {bound} (raise it with --bound)")


class GroupFamily(str, Enum):
    """Supported group families"""
    CYCLIC = "CYCLIC"                                  # Z_n
    DIHEDRAL = "DIHEDRAL"                              # D_2n, parameter n
    DIRECT_PRODUCT_CYCLIC = "DIRECT_PRODUCT_CYCLIC"    # Z_n1 x ... x Z_nt
    GENERALIZED_QUATERNION = "GENERALIZED_QUATERNION"  # Q_4m, parameter m


class ComparisonMode(str, Enum):
    """Order predicate P(o_domain, o_image) checked per element"""
    DIVIDES = "divides"        # o_domain | o_image
    DIVIDED_BY = "divided-by"  # o_image | o_domain
    GEQ = "geq"                # o_domain >= o_image
    LEQ = "leq"                # o_domain <= o_image

    def holds(self, domain_order: int, image_order: int) -> bool:
        if self is ComparisonMode.DIVIDES:
            return image_order % domain_order == 0
        if self is ComparisonMode.DIVIDED_BY:
            return domain_order % image_order == 0
        if self is ComparisonMode.GEQ:
            return domain_order >= image_order
        return domain_order <= image_order


@dataclass(frozen=True)
class GroupSpec:
    """
    One finite group from the family catalog.

    Parameters by family:
    - CYCLIC: (n,)                  order n
    - DIHEDRAL: (n,)                order 2n
    - DIRECT_PRODUCT_CYCLIC: (n1, ..., nt) with t >= 2, order n1*...*nt
    - GENERALIZED_QUATERNION: (m,)  with m >= 2, order 4m
    """
    family: GroupFamily
    parameters: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.family, GroupFamily):
            raise PreconditionError(f"Invalid group family: {self.family}")
        object.__setattr__(self, "parameters", tuple(self.parameters))

        params = self.parameters
        if not params or any(not isinstance(p, int) or isinstance(p, bool) for p in params):
            raise PreconditionError(f"{self.family.value} parameters must be integers, got {params}")
        if any(p < 1 for p in params):
            raise PreconditionError(f"Every parameter must be >= 1, got {params}")

        if self.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
            if len(params) < 2:
                raise PreconditionError("DIRECT_PRODUCT_CYCLIC needs at least two factors; use CYCLIC for one")
        elif len(params) != 1:
            raise PreconditionError(f"{self.family.value} takes exactly one parameter, got {params}")

        if self.family == GroupFamily.GENERALIZED_QUATERNION and params[0] < 2:
            raise PreconditionError(f"Quaternion parameter m must be >= 2, got {params[0]}")

        if self.order > UINT64_MAX:
            raise PreconditionError(f"Group order {self.order} overflows 64 bits")

    # Convenience constructors
    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls(GroupFamily.CYCLIC, (n,))

    @classmethod
    def dihedral(cls, n: int) -> "GroupSpec":
        return cls(GroupFamily.DIHEDRAL, (n,))

    @classmethod
    def product(cls, *moduli: int) -> "GroupSpec":
        return cls(GroupFamily.DIRECT_PRODUCT_CYCLIC, tuple(moduli))

    @classmethod
    def quaternion(cls, m: int) -> "GroupSpec":
        return cls(GroupFamily.GENERALIZED_QUATERNION, (m,))

    @property
    def order(self) -> int:
        if self.family == GroupFamily.CYCLIC:
            return self.parameters[0]
        if self.family == GroupFamily.DIHEDRAL:
            return 2 * self.parameters[0]
        if self.family == GroupFamily.DIRECT_PRODUCT_CYCLIC:
            return prod(self.parameters)
        return 4 * self.parameters[0]

    def to_dict(self):
        return {"family": self.family.value, "parameters": list(self.parameters)}


@dataclass(frozen=True)
class CyclicElem:
    residue: int


@dataclass(frozen=True)
class DihedralElem:
    """s^a r^b"""
    a: int
    b: int


@dataclass(frozen=True)
class ProductElem:
    residues: Tuple[int, ...]


@dataclass(frozen=True)
class QuaternionElem:
    """x^i y^j"""
    i: int
    j: int


Element = Union[CyclicElem, DihedralElem, ProductElem, QuaternionElem]


@dataclass(frozen=True)
class OrderSpectrum:
    """
    Multiset of element orders: ((d, count of elements of order d), ...)
    Entries are kept sorted by d ascending.
    """
    entries: Tuple[Tuple[int, int], ...]
    group_order: int

    def __post_init__(self):
        entries = tuple(sorted((int(d), int(c)) for d, c in self.entries))
        object.__setattr__(self, "entries", entries)

        if sum(c for _, c in entries) != self.group_order:
            raise DomainError(f"Spectrum counts do not sum to group order {self.group_order}: {entries}")
        for d, c in entries:
            if c < 1 or d < 1 or self.group_order % d != 0:
                raise DomainError(f"Invalid spectrum entry {d}:{c} for group order {self.group_order}")
        if self.count(1) != 1:
            raise DomainError("Exactly one element must have order 1")

    def count(self, d: int) -> int:
        for order, c in self.entries:
            if order == d:
                return c
        return 0

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    def as_dict(self):
        return dict(self.entries)

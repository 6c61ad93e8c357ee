# -*- coding: utf-8 -*-
"""
Linear Map Constructors and Verifier
Builds the explicit order-dividing bijections onto cyclic groups and
checks any candidate map element by element.

Supported maps (all of the form first -> coeff_a, second -> coeff_b):
1. D_2n -> Z_2n,            s^a r^b -> k*a + 2*b            (k odd)
2. Z_p x Z_kp -> Z_kp^2,    (a, b)  -> m*k*a + p*b          (p odd prime, gcd(p,k) = gcd(m,p) = 1)
3. Z_p x Z_k -> Z_pk,       (a, b)  -> k*a + p*b            (coprime variant, order preserving)
4. D_2n -> Z_2n,            s^a r^b -> x*a + y*b            (arbitrary, for exploration)
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from modules.group_schema import (
    GroupSpec, GroupFamily, Element, ComparisonMode,
    CyclicElem, DomainError, PreconditionError,
)
from modules.group_core import check_element, enumerate_elements, order_table
from modules.number_theory import is_odd_prime, fits_uint64

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearMapSpec:
    """
    Candidate map domain -> Z_modulus, element (first, second) -> coeff_a*first + coeff_b*second.
    Coefficients are stored reduced mod the modulus.
    """
    domain: GroupSpec
    codomain: GroupSpec
    coeff_a: int
    coeff_b: int
    modulus: int

    def __post_init__(self):
        if self.codomain.family != GroupFamily.CYCLIC:
            raise DomainError(f"Codomain must be cyclic, got {self.codomain.family.value}")
        if not (self.domain.order == self.codomain.order == self.modulus):
            raise DomainError(
                f"Orders differ: |domain|={self.domain.order}, |codomain|={self.codomain.order}, modulus={self.modulus}"
            )
        object.__setattr__(self, "coeff_a", self.coeff_a % self.modulus)
        object.__setattr__(self, "coeff_b", self.coeff_b % self.modulus)


@dataclass(frozen=True)
class MapRow:
    """One line of a verification table"""
    element: Element
    domain_order: int
    image: Element
    image_order: int
    predicate_holds: bool


@dataclass(frozen=True)
class FailureWitness:
    """
    kind = "predicate": row breaks the order predicate
    kind = "collision": row's image was already taken by other
    """
    kind: str
    row: MapRow
    other: Optional[MapRow] = None


@dataclass(frozen=True)
class VerificationReport:
    map_spec: LinearMapSpec
    mode: ComparisonMode
    bijective: bool
    rows: Tuple[MapRow, ...]
    verdict: bool
    failure_witness: Optional[FailureWitness] = None


# ==================== CONSTRUCTORS ====================

def dihedral_map(n: int, k: int) -> LinearMapSpec:
    """D_2n -> Z_2n, s^a r^b -> k*a + 2*b"""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if k % 2 == 0:
        raise PreconditionError(f"k must be odd (hypothesis: k is an odd integer), got {k}")
    return dihedral_linear_map(n, k, 2)


def dihedral_linear_map(n: int, x: int, y: int) -> LinearMapSpec:
    """Arbitrary coefficients on D_2n -> Z_2n: s^a r^b -> x*a + y*b"""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    return LinearMapSpec(
        domain=GroupSpec.dihedral(n),
        codomain=GroupSpec.cyclic(2 * n),
        coeff_a=x,
        coeff_b=y,
        modulus=2 * n,
    )


def product_map(p: int, k: int, m: int = 1) -> LinearMapSpec:
    """Z_p x Z_kp -> Z_kp^2, (a, b) -> m*k*a + p*b"""
    if not is_odd_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    if k < 1:
        raise PreconditionError(f"k must be a positive integer, got {k}")
    if gcd(p, k) != 1:
        raise PreconditionError(f"gcd(p, k) must be 1, got gcd({p}, {k}) = {gcd(p, k)}")
    if gcd(m, p) != 1:
        raise PreconditionError(f"gcd(m, p) must be 1, got gcd({m}, {p}) = {gcd(m, p)}")
    modulus = k * p * p
    if not fits_uint64(modulus):
        raise PreconditionError(f"k*p^2 = {modulus} overflows 64 bits")

    return LinearMapSpec(
        domain=GroupSpec.product(p, k * p),
        codomain=GroupSpec.cyclic(modulus),
        coeff_a=m * k,
        coeff_b=p,
        modulus=modulus,
    )


def coprime_product_map(p: int, k: int) -> LinearMapSpec:
    """Z_p x Z_k -> Z_pk, (a, b) -> k*a + p*b; the domain is itself cyclic"""
    if not is_odd_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    if k < 1:
        raise PreconditionError(f"k must be a positive integer, got {k}")
    if gcd(p, k) != 1:
        raise PreconditionError(f"k must not be a multiple of p, got p={p}, k={k}")
    modulus = p * k
    if not fits_uint64(modulus):
        raise PreconditionError(f"p*k = {modulus} overflows 64 bits")

    return LinearMapSpec(
        domain=GroupSpec.product(p, k),
        codomain=GroupSpec.cyclic(modulus),
        coeff_a=k,
        coeff_b=p,
        modulus=modulus,
    )


# ==================== EVALUATION ====================

def _coordinates(domain: GroupSpec, x: Element) -> Tuple[int, int]:
    if domain.family == GroupFamily.DIHEDRAL:
        return x.a, x.b
    if domain.family == GroupFamily.DIRECT_PRODUCT_CYCLIC and len(domain.parameters) == 2:
        return x.residues
    raise DomainError(
        f"Linear maps need a dihedral or two-factor product domain, got {domain.family.value}{list(domain.parameters)}"
    )


def eval_map(spec: LinearMapSpec, x: Element) -> int:
    check_element(spec.domain, x)
    first, second = _coordinates(spec.domain, x)
    return (spec.coeff_a * first + spec.coeff_b * second) % spec.modulus


# ==================== VERIFICATION ====================

def check_rows(rows: Sequence[MapRow]) -> Tuple[bool, bool, Optional[FailureWitness]]:
    """
    Element-level recheck shared by every table producer.
    Returns (bijective, verdict, first failure witness).
    Rows must cover the whole domain, so injective means bijective.
    """
    seen = {}
    bijective = True
    all_hold = True
    witness = None

    for row in rows:
        if not row.predicate_holds:
            all_hold = False
            if witness is None:
                witness = FailureWitness("predicate", row)
        if row.image in seen:
            bijective = False
            if witness is None:
                witness = FailureWitness("collision", row, seen[row.image])
        else:
            seen[row.image] = row

    return bijective, bijective and all_hold, witness


def verify(spec: LinearMapSpec, mode: ComparisonMode = ComparisonMode.DIVIDES,
           bound: Optional[int] = None) -> VerificationReport:
    """Evaluate the map on every element and check bijectivity plus the order predicate"""
    elements = enumerate_elements(spec.domain, bound)
    domain_orders = order_table(spec.domain, bound)
    image_orders = order_table(spec.codomain, bound)

    # Validate the domain shape once, then evaluate inline
    if elements:
        _coordinates(spec.domain, elements[0])

    A, B, M = spec.coeff_a, spec.coeff_b, spec.modulus
    is_dihedral = spec.domain.family == GroupFamily.DIHEDRAL

    rows: List[MapRow] = []
    for x, d in zip(elements, domain_orders):
        first, second = (x.a, x.b) if is_dihedral else x.residues
        image = (A * first + B * second) % M
        e = image_orders[image]
        rows.append(MapRow(x, d, CyclicElem(image), e, mode.holds(d, e)))

    bijective, verdict, witness = check_rows(rows)
    logger.debug(f"Verified map a->{A}, b->{B} mod {M} ({mode.value}): verdict={verdict}")

    return VerificationReport(
        map_spec=spec,
        mode=mode,
        bijective=bijective,
        rows=tuple(rows),
        verdict=verdict,
        failure_witness=witness,
    )

# -*- coding: utf-8 -*-
"""
Swap Conjecture Search
Exhaustively finds every order-dividing bijective linear map
s^a r^b -> x*a + y*b from D_2n to Z_2n, then asks whether the swapped
map s^a r^b -> y*a + x*b is ever also one.

Conventions:
- Coefficients are canonical residues mod 2n (images only depend on them)
- A counterexample is an unordered pair {x, y}, x != y, with both (x, y)
  and (y, x) valid; it is listed once as (min, max)
- Valid pairs with x == y are listed as self_swapped, never as counterexamples
- n = 1 is flagged degenerate (b only takes the value 0)
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Tuple

import numpy as np

from config.settings import CONJECTURE_N_BOUND
from modules.group_schema import ComparisonMode, PreconditionError, ResourceBoundError
from modules.linear_maps import VerificationReport, dihedral_linear_map, verify

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CoefficientPair:
    x: int
    y: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "x", self.x % (2 * self.n))
        object.__setattr__(self, "y", self.y % (2 * self.n))

    def swapped(self) -> "CoefficientPair":
        return CoefficientPair(self.y, self.x, self.n)


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    valid_pairs: Tuple[CoefficientPair, ...]
    counterexamples: Tuple[CoefficientPair, ...]
    self_swapped: Tuple[CoefficientPair, ...]
    degenerate: bool
    conjecture_holds: bool


@dataclass(frozen=True)
class SweepSummary:
    n_min: int
    n_max: int
    n_checked: int
    n_with_counterexamples: Tuple[int, ...]
    n_without_counterexamples: Tuple[int, ...]
    total_valid_pairs: int
    total_counterexamples: int
    conjecture_holds: bool


@dataclass(frozen=True)
class SweepResult:
    reports: Tuple[ConjectureReport, ...]
    summary: SweepSummary


def _check_n(n: int, bound: Optional[int]) -> None:
    limit = CONJECTURE_N_BOUND if bound is None else bound
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if n > limit:
        raise ResourceBoundError("Conjecture search n", n, limit)


def enumerate_valid_pairs(n: int, bound: Optional[int] = None) -> List[CoefficientPair]:
    """All (x, y) in [0, 2n)^2 whose map is an order-dividing bijection, sorted"""
    _check_n(n, bound)
    N = 2 * n

    # Domain elements in canonical order: rotations (0, b) then reflections (1, b)
    a = np.repeat(np.array([0, 1], dtype=np.int64), n)
    b = np.tile(np.arange(n, dtype=np.int64), 2)
    domain_orders = np.where(a == 1, 2, n // np.gcd(n, b))
    image_orders = N // np.gcd(N, np.arange(N, dtype=np.int64))
    expected = np.arange(N, dtype=np.int64)
    ys = np.arange(N, dtype=np.int64)

    valid: List[CoefficientPair] = []
    for x in range(N):
        images = (x * a[None, :] + ys[:, None] * b[None, :]) % N
        divides = (image_orders[images] % domain_orders[None, :] == 0).all(axis=1)
        candidates = np.nonzero(divides)[0]
        if candidates.size == 0:
            continue
        bijective = (np.sort(images[candidates], axis=1) == expected).all(axis=1)
        valid.extend(CoefficientPair(x, int(y), n) for y in candidates[bijective])

    logger.debug(f"n={n}: {len(valid)} valid pairs out of {N * N}")
    return valid


def test_conjecture(n: int, bound: Optional[int] = None) -> ConjectureReport:
    valid = enumerate_valid_pairs(n, bound)
    valid_set = {(p.x, p.y) for p in valid}

    counterexamples = tuple(p for p in valid if p.x < p.y and (p.y, p.x) in valid_set)
    self_swapped = tuple(p for p in valid if p.x == p.y)

    return ConjectureReport(
        n=n,
        valid_pairs=tuple(valid),
        counterexamples=counterexamples,
        self_swapped=self_swapped,
        degenerate=(n == 1),
        conjecture_holds=not counterexamples,
    )


# pytest would otherwise collect the library function above as a test
test_conjecture.__test__ = False


def explain_pair(n: int, x: int, y: int) -> VerificationReport:
    """Full element table for one pair; failure_witness names the failing row"""
    return verify(dihedral_linear_map(n, x, y), ComparisonMode.DIVIDES)


def summarize(reports: Tuple[ConjectureReport, ...], n_min: int, n_max: int) -> SweepSummary:
    counted = [r for r in reports if not r.degenerate]
    with_ce = tuple(r.n for r in counted if r.counterexamples)
    without_ce = tuple(r.n for r in counted if not r.counterexamples)
    return SweepSummary(
        n_min=n_min,
        n_max=n_max,
        n_checked=len(counted),
        n_with_counterexamples=with_ce,
        n_without_counterexamples=without_ce,
        total_valid_pairs=sum(len(r.valid_pairs) for r in counted),
        total_counterexamples=sum(len(r.counterexamples) for r in counted),
        conjecture_holds=not with_ce,
    )


def sweep_conjecture(n_min: int, n_max: int, jobs: int = 1,
                     bound: Optional[int] = None) -> SweepResult:
    """One report per n in [n_min, n_max], ordered by n whatever the worker count"""
    if not 2 <= n_min <= n_max:
        raise PreconditionError(f"Need 2 <= n_min <= n_max, got n_min={n_min}, n_max={n_max}")
    _check_n(n_max, bound)

    worker = partial(test_conjecture, bound=bound)
    values = range(n_min, n_max + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = tuple(pool.map(worker, values))
    else:
        reports = tuple(worker(n) for n in values)

    summary = summarize(reports, n_min, n_max)
    logger.info(
        f"Swap sweep n={n_min}..{n_max}: counterexamples at {len(summary.n_with_counterexamples)} of "
        f"{summary.n_checked} values"
    )
    return SweepResult(reports, summary)

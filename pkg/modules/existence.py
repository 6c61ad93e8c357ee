# -*- coding: utf-8 -*-
"""
Bijection Existence Checker
Decides from order spectra alone whether an order-comparing bijection
exists between two groups of equal order.

Every comparison predicate depends only on element orders, so a bijection
exists iff the class graph (order d -> order e where P(d, e) holds) admits
an integral assignment with row sums = source counts and column sums =
target counts. That is a max-flow question:

    source -> class d   capacity count(d)
    class d -> class e  capacity |G| (unbounded in practice)
    class e -> sink     capacity count(e)

Feasible iff max flow = |G|. Otherwise the source side of the final
residual cut yields a Hall violator.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from config.settings import BRUTE_FORCE_ORDER_BOUND
from config.group_catalog import catalog_groups
from modules.group_schema import (
    GroupSpec, ComparisonMode, OrderSpectrum, Element,
    DomainError, ResourceBoundError,
)
from modules.group_core import enumerate_elements, order_table, order_spectrum, is_cyclic
from modules.linear_maps import MapRow, FailureWitness, check_rows

logger = logging.getLogger(__name__)

INT32_MAX = 2 ** 31 - 1


@dataclass(frozen=True)
class ClassGraph:
    source_classes: Tuple[Tuple[int, int], ...]
    target_classes: Tuple[Tuple[int, int], ...]
    edges: Tuple[Tuple[int, int], ...]
    mode: ComparisonMode

    @property
    def group_order(self) -> int:
        return sum(c for _, c in self.source_classes)


@dataclass(frozen=True)
class HallWitness:
    """Source orders whose total count exceeds that of every target they can reach"""
    source_orders: Tuple[int, ...]
    source_count: int
    adjacent_target_orders: Tuple[int, ...]
    adjacent_target_count: int


@dataclass(frozen=True)
class ExistenceCertificate:
    feasible: bool
    mode: ComparisonMode
    group_order: int
    flow_value: int
    assignment: Optional[Tuple[Tuple[int, int, int], ...]] = None  # (d, e, count)
    witness: Optional[HallWitness] = None


@dataclass(frozen=True)
class BijectionTable:
    """An explicit element pairing produced from a feasible certificate"""
    domain: GroupSpec
    codomain: GroupSpec
    mode: ComparisonMode
    rows: Tuple[MapRow, ...]
    bijective: bool
    verdict: bool
    failure_witness: Optional[FailureWitness] = None


# ==================== CLASS GRAPH ====================

def build_class_graph(src: OrderSpectrum, dst: OrderSpectrum,
                      mode: ComparisonMode = ComparisonMode.DIVIDES) -> ClassGraph:
    if src.group_order != dst.group_order:
        raise DomainError(f"Group orders differ: {src.group_order} vs {dst.group_order}")

    edges = tuple(
        (d, e)
        for d, _ in src.entries
        for e, _ in dst.entries
        if mode.holds(d, e)
    )
    return ClassGraph(src.entries, dst.entries, edges, mode)


# ==================== FLOW DECISION ====================

def exists_bijection(src: OrderSpectrum, dst: OrderSpectrum,
                     mode: ComparisonMode = ComparisonMode.DIVIDES) -> ExistenceCertificate:
    graph = build_class_graph(src, dst, mode)
    total = graph.group_order
    if total > INT32_MAX:
        raise ResourceBoundError("Flow capacity", total, INT32_MAX)

    S, T = len(graph.source_classes), len(graph.target_classes)
    source, sink = 0, S + T + 1
    src_index = {d: 1 + i for i, (d, _) in enumerate(graph.source_classes)}
    dst_index = {e: 1 + S + j for j, (e, _) in enumerate(graph.target_classes)}

    # Node layout: source, source classes, target classes, sink; classes ascend by order
    rows, cols, caps = [], [], []
    for d, count in graph.source_classes:
        rows.append(source); cols.append(src_index[d]); caps.append(count)
    for d, e in graph.edges:
        rows.append(src_index[d]); cols.append(dst_index[e]); caps.append(total)
    for e, count in graph.target_classes:
        rows.append(dst_index[e]); cols.append(sink); caps.append(count)

    size = S + T + 2
    capacity = csr_matrix(
        (np.array(caps, dtype=np.int32), (np.array(rows), np.array(cols))),
        shape=(size, size),
    )
    result = maximum_flow(capacity, source, sink, method="edmonds_karp")
    flow = result.flow.toarray()
    flow_value = int(result.flow_value)
    logger.debug(f"Class-graph flow {flow_value}/{total} ({mode.value}), {len(graph.edges)} edges")

    if flow_value == total:
        assignment = tuple(
            (d, e, int(flow[src_index[d], dst_index[e]]))
            for d, e in graph.edges
            if flow[src_index[d], dst_index[e]] > 0
        )
        return ExistenceCertificate(True, mode, total, flow_value, assignment=assignment)

    reachable = _residual_reachable(capacity.toarray(), flow, source)
    witness = _hall_witness(graph, reachable, src_index)
    return ExistenceCertificate(False, mode, total, flow_value, witness=witness)


def _residual_reachable(capacity: np.ndarray, flow: np.ndarray, source: int) -> List[bool]:
    residual = capacity - flow
    seen = [False] * len(capacity)
    seen[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in np.nonzero(residual[u] > 0)[0]:
            if not seen[v]:
                seen[v] = True
                queue.append(int(v))
    return seen


def _hall_witness(graph: ClassGraph, reachable: List[bool], src_index: Dict[int, int]) -> HallWitness:
    # Unbounded middle edges keep every neighbour of a reachable class reachable
    orders = tuple(d for d, _ in graph.source_classes if reachable[src_index[d]])
    return _witness_for(graph, orders)


def _witness_for(graph: ClassGraph, orders: Tuple[int, ...]) -> HallWitness:
    chosen = set(orders)
    counts = dict(graph.target_classes)
    adjacent = tuple(sorted({e for d, e in graph.edges if d in chosen}))
    return HallWitness(
        source_orders=orders,
        source_count=sum(c for d, c in graph.source_classes if d in chosen),
        adjacent_target_orders=adjacent,
        adjacent_target_count=sum(counts[e] for e in adjacent),
    )


def verify_certificate(src: OrderSpectrum, dst: OrderSpectrum,
                       cert: ExistenceCertificate) -> bool:
    """Independent summation pass over a certificate"""
    graph = build_class_graph(src, dst, cert.mode)

    if cert.feasible:
        if cert.assignment is None:
            return False
        row_sums: Dict[int, int] = {}
        col_sums: Dict[int, int] = {}
        for d, e, count in cert.assignment:
            if count < 0 or not cert.mode.holds(d, e):
                return False
            row_sums[d] = row_sums.get(d, 0) + count
            col_sums[e] = col_sums.get(e, 0) + count
        return (
            all(row_sums.get(d, 0) == c for d, c in src.entries)
            and all(col_sums.get(e, 0) == c for e, c in dst.entries)
            and set(row_sums) <= set(src.orders)
            and set(col_sums) <= set(dst.orders)
        )

    if cert.witness is None or not set(cert.witness.source_orders) <= set(src.orders):
        return False
    recomputed = _witness_for(graph, cert.witness.source_orders)
    return recomputed.source_count > recomputed.adjacent_target_count


# ==================== ORACLE ====================

def brute_force_exists(src: OrderSpectrum, dst: OrderSpectrum,
                       mode: ComparisonMode = ComparisonMode.DIVIDES,
                       bound: Optional[int] = None) -> bool:
    """Backtracking over class assignments; independent of the flow code"""
    limit = BRUTE_FORCE_ORDER_BOUND if bound is None else bound
    if src.group_order > limit:
        raise ResourceBoundError("Backtracking search", src.group_order, limit)
    if src.group_order != dst.group_order:
        raise DomainError(f"Group orders differ: {src.group_order} vs {dst.group_order}")

    sources = list(src.entries)
    targets = [e for e, _ in dst.entries]
    adjacency = [
        [j for j, e in enumerate(targets) if mode.holds(d, e)]
        for d, _ in sources
    ]
    failed = set()

    def place(i: int, remaining: List[int]) -> bool:
        if i == len(sources):
            return True
        key = (i, tuple(remaining))
        if key in failed:
            return False
        if distribute(i, sources[i][1], 0, remaining):
            return True
        failed.add(key)
        return False

    def distribute(i: int, left: int, pos: int, remaining: List[int]) -> bool:
        if left == 0:
            return place(i + 1, remaining)
        adj = adjacency[i]
        if sum(remaining[j] for j in adj[pos:]) < left:
            return False
        j = adj[pos]
        for take in range(min(left, remaining[j]), -1, -1):
            remaining[j] -= take
            found = distribute(i, left - take, pos + 1, remaining)
            remaining[j] += take
            if found:
                return True
        return False

    return place(0, [c for _, c in dst.entries])


# ==================== REALIZATION ====================

def realize_bijection(g: GroupSpec, c: GroupSpec, cert: ExistenceCertificate,
                      bound: Optional[int] = None) -> BijectionTable:
    """Expand a class-level assignment into an explicit element pairing"""
    if not cert.feasible or cert.assignment is None:
        raise DomainError("Cannot realize an infeasible certificate")
    if g.order != c.order or g.order != cert.group_order:
        raise DomainError(f"Certificate is for order {cert.group_order}, groups have {g.order} and {c.order}")

    domain_elements = enumerate_elements(g, bound)
    domain_orders = order_table(g, bound)
    codomain_elements = enumerate_elements(c, bound)
    codomain_orders = order_table(c, bound)

    # Per-order queues, each in canonical enumeration order
    targets: Dict[int, deque] = {}
    for y, e in zip(codomain_elements, codomain_orders):
        targets.setdefault(e, deque()).append(y)
    quota: Dict[int, deque] = {}
    for d, e, count in cert.assignment:
        quota.setdefault(d, deque()).extend([e] * count)

    pairing: List[Tuple[Element, int, Element, int]] = []
    for x, d in zip(domain_elements, domain_orders):
        if not quota.get(d):
            raise DomainError(f"Certificate assigns too few elements of order {d}")
        e = quota[d].popleft()
        if not targets.get(e):
            raise DomainError(f"Certificate assigns too many elements to order {e}")
        pairing.append((x, d, targets[e].popleft(), e))
    if any(quota.values()):
        raise DomainError("Certificate assigns more elements than the domain has")

    rows = tuple(MapRow(x, d, y, e, cert.mode.holds(d, e)) for x, d, y, e in pairing)
    bijective, verdict, witness = check_rows(rows)
    return BijectionTable(g, c, cert.mode, rows, bijective, verdict, witness)


# ==================== SURVEY ====================

@dataclass(frozen=True)
class SurveyOutcome:
    group: GroupSpec
    feasible: bool
    realized: bool


def survey_solvable(max_order: int, mode: ComparisonMode = ComparisonMode.DIVIDES,
                    bound: Optional[int] = None) -> List[SurveyOutcome]:
    """Every non-cyclic catalog group G against Z_|G|, with element-level recheck"""
    outcomes = []
    for g in catalog_groups(max_order):
        if is_cyclic(g).cyclic:
            continue
        c = GroupSpec.cyclic(g.order)
        cert = exists_bijection(order_spectrum(g, bound), order_spectrum(c, bound), mode)
        realized = cert.feasible and realize_bijection(g, c, cert, bound).verdict
        outcomes.append(SurveyOutcome(g, cert.feasible, realized))

    logger.info(f"Survey up to order {max_order}: {len(outcomes)} non-cyclic groups checked")
    return outcomes

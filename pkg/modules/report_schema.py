# -*- coding: utf-8 -*-
"""
Report Output Schemas
Pydantic models for every serialized report; JSON key order follows
field declaration order, so these classes ARE the stable JSON schema.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from modules.group_schema import GroupSpec, OrderSpectrum
from modules.group_core import enumerate_elements, order_table
from modules.descriptor_parser import format_group, format_element
from modules.linear_maps import MapRow, FailureWitness, VerificationReport
from modules.existence import ExistenceCertificate, BijectionTable, SurveyOutcome
from modules.conjecture_search import ConjectureReport, SweepResult, CoefficientPair


class SpectrumEntryOut(BaseModel):
    order: int
    count: int


class SpectrumOut(BaseModel):
    group: str = Field(..., description="Group descriptor, e.g. D6")
    group_order: int
    spectrum: List[SpectrumEntryOut]


class ElementOrderOut(BaseModel):
    element: str
    order: int


class ElementsOut(BaseModel):
    group: str
    group_order: int
    elements: List[ElementOrderOut]


class RowOut(BaseModel):
    element: str
    domain_order: int
    image: str
    image_order: int
    predicate_holds: bool


class WitnessOut(BaseModel):
    kind: str = Field(..., description="predicate or collision")
    element: str
    domain_order: int
    image: str
    image_order: int
    other_element: Optional[str] = Field(None, description="Earlier element with the same image (collision only)")


class VerificationOut(BaseModel):
    domain: str
    codomain: str
    coeff_a: Optional[int] = Field(None, description="Coefficient on the first coordinate (linear maps only)")
    coeff_b: Optional[int] = Field(None, description="Coefficient on the second coordinate (linear maps only)")
    modulus: int
    mode: str
    bijective: bool
    verdict: bool
    failure_witness: Optional[WitnessOut] = None
    rows: List[RowOut]


class AssignmentOut(BaseModel):
    source_order: int
    target_order: int
    count: int


class HallWitnessOut(BaseModel):
    source_orders: List[int]
    source_count: int
    adjacent_target_orders: List[int]
    adjacent_target_count: int


class CertificateOut(BaseModel):
    source: str
    target: str
    mode: str
    group_order: int
    feasible: bool
    flow_value: int
    assignment: Optional[List[AssignmentOut]] = None
    witness: Optional[HallWitnessOut] = None
    realization: Optional[VerificationOut] = None


class ConjectureReportOut(BaseModel):
    n: int
    degenerate: bool
    conjecture_holds: bool
    valid_pair_count: int
    valid_pairs: List[Tuple[int, int]]
    counterexamples: List[Tuple[int, int]] = Field(..., description="Unordered pairs, smaller coefficient first")
    self_swapped: List[Tuple[int, int]]


class SweepSummaryOut(BaseModel):
    n_min: int
    n_max: int
    n_checked: int
    n_with_counterexamples: List[int]
    n_without_counterexamples: List[int]
    total_valid_pairs: int
    total_counterexamples: int
    conjecture_holds: bool


class SweepOut(BaseModel):
    summary: SweepSummaryOut
    reports: List[ConjectureReportOut]


class SurveyRowOut(BaseModel):
    group: str
    group_order: int
    feasible: bool
    realized: bool


class SurveyOut(BaseModel):
    max_order: int
    mode: str
    all_feasible: bool
    groups: List[SurveyRowOut]


# ==================== BUILDERS ====================

def spectrum_out(g: GroupSpec, spectrum: OrderSpectrum) -> SpectrumOut:
    return SpectrumOut(
        group=format_group(g),
        group_order=spectrum.group_order,
        spectrum=[SpectrumEntryOut(order=d, count=c) for d, c in spectrum.entries],
    )


def elements_out(g: GroupSpec, bound: Optional[int] = None) -> ElementsOut:
    elements = enumerate_elements(g, bound)
    orders = order_table(g, bound)
    return ElementsOut(
        group=format_group(g),
        group_order=g.order,
        elements=[ElementOrderOut(element=format_element(x), order=d) for x, d in zip(elements, orders)],
    )


def _row_out(row: MapRow) -> RowOut:
    return RowOut(
        element=format_element(row.element),
        domain_order=row.domain_order,
        image=format_element(row.image),
        image_order=row.image_order,
        predicate_holds=row.predicate_holds,
    )


def _witness_out(witness: Optional[FailureWitness]) -> Optional[WitnessOut]:
    if witness is None:
        return None
    return WitnessOut(
        kind=witness.kind,
        element=format_element(witness.row.element),
        domain_order=witness.row.domain_order,
        image=format_element(witness.row.image),
        image_order=witness.row.image_order,
        other_element=format_element(witness.other.element) if witness.other else None,
    )


def verification_out(report: VerificationReport) -> VerificationOut:
    spec = report.map_spec
    return VerificationOut(
        domain=format_group(spec.domain),
        codomain=format_group(spec.codomain),
        coeff_a=spec.coeff_a,
        coeff_b=spec.coeff_b,
        modulus=spec.modulus,
        mode=report.mode.value,
        bijective=report.bijective,
        verdict=report.verdict,
        failure_witness=_witness_out(report.failure_witness),
        rows=[_row_out(r) for r in report.rows],
    )


def bijection_out(table: BijectionTable) -> VerificationOut:
    return VerificationOut(
        domain=format_group(table.domain),
        codomain=format_group(table.codomain),
        modulus=table.codomain.order,
        mode=table.mode.value,
        bijective=table.bijective,
        verdict=table.verdict,
        failure_witness=_witness_out(table.failure_witness),
        rows=[_row_out(r) for r in table.rows],
    )


def certificate_out(src: GroupSpec, dst: GroupSpec, cert: ExistenceCertificate,
                    table: Optional[BijectionTable] = None) -> CertificateOut:
    witness = None
    if cert.witness is not None:
        witness = HallWitnessOut(
            source_orders=list(cert.witness.source_orders),
            source_count=cert.witness.source_count,
            adjacent_target_orders=list(cert.witness.adjacent_target_orders),
            adjacent_target_count=cert.witness.adjacent_target_count,
        )
    assignment = None
    if cert.assignment is not None:
        assignment = [AssignmentOut(source_order=d, target_order=e, count=c) for d, e, c in cert.assignment]

    return CertificateOut(
        source=format_group(src),
        target=format_group(dst),
        mode=cert.mode.value,
        group_order=cert.group_order,
        feasible=cert.feasible,
        flow_value=cert.flow_value,
        assignment=assignment,
        witness=witness,
        realization=bijection_out(table) if table is not None else None,
    )


def _pairs(pairs: Tuple[CoefficientPair, ...]) -> List[Tuple[int, int]]:
    return [(p.x, p.y) for p in pairs]


def conjecture_report_out(report: ConjectureReport) -> ConjectureReportOut:
    return ConjectureReportOut(
        n=report.n,
        degenerate=report.degenerate,
        conjecture_holds=report.conjecture_holds,
        valid_pair_count=len(report.valid_pairs),
        valid_pairs=_pairs(report.valid_pairs),
        counterexamples=_pairs(report.counterexamples),
        self_swapped=_pairs(report.self_swapped),
    )


def sweep_out(result: SweepResult) -> SweepOut:
    s = result.summary
    return SweepOut(
        summary=SweepSummaryOut(
            n_min=s.n_min,
            n_max=s.n_max,
            n_checked=s.n_checked,
            n_with_counterexamples=list(s.n_with_counterexamples),
            n_without_counterexamples=list(s.n_without_counterexamples),
            total_valid_pairs=s.total_valid_pairs,
            total_counterexamples=s.total_counterexamples,
            conjecture_holds=s.conjecture_holds,
        ),
        reports=[conjecture_report_out(r) for r in result.reports],
    )


def survey_out(max_order: int, mode: str, outcomes: List[SurveyOutcome]) -> SurveyOut:
    return SurveyOut(
        max_order=max_order,
        mode=mode,
        all_feasible=all(o.feasible and o.realized for o in outcomes),
        groups=[
            SurveyRowOut(group=format_group(o.group), group_order=o.group.order,
                         feasible=o.feasible, realized=o.realized)
            for o in outcomes
        ],
    )

# -*- coding: utf-8 -*-
"""
Report Formatter
Renders report models as an aligned text table, CSV or JSON

Table layout, e.g. for D_6 -> Z_6:
    Order of D6 | D6   | Z6 | Order of Z6
"""

import csv
import io
from enum import Enum
from typing import List, Sequence

from pydantic import BaseModel

from modules.report_schema import (
    SpectrumOut, ElementsOut, VerificationOut, CertificateOut, SweepOut, SurveyOut,
)


class OutputFormat(str, Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _aligned(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    """Fixed-width columns joined by ' | ', no trailing blanks"""
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells):
        return " | ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    return [line(headers), "-+-".join("-" * w for w in widths)] + [line(r) for r in rows]


def _csv(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def _text(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"


# ==================== SPECTRUM / ELEMENTS ====================

def render_spectrum(out: SpectrumOut, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json(out)
    if fmt == OutputFormat.CSV:
        return _csv(["order", "count"], [[e.order, e.count] for e in out.spectrum])

    compact = ", ".join(f"{e.order}:{e.count}" for e in out.spectrum)
    lines = [f"Spectrum of {out.group} (order {out.group_order}): {compact}", ""]
    lines += _aligned(["Order", "Count"], [[str(e.order), str(e.count)] for e in out.spectrum])
    return _text(lines)


def render_elements(out: ElementsOut, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json(out)
    if fmt == OutputFormat.CSV:
        return _csv(["element", "order"], [[e.element, e.order] for e in out.elements])

    lines = [f"Elements of {out.group} (order {out.group_order})", ""]
    lines += _aligned([out.group, f"Order of {out.group}"], [[e.element, str(e.order)] for e in out.elements])
    return _text(lines)


# ==================== VERIFICATION ====================

def _verification_lines(out: VerificationOut) -> List[str]:
    if out.coeff_a is not None:
        title = f"Map {out.domain} -> {out.codomain}: (a, b) -> {out.coeff_a}a + {out.coeff_b}b mod {out.modulus}"
    else:
        title = f"Bijection {out.domain} -> {out.codomain}"

    headers = [f"Order of {out.domain}", out.domain, out.codomain, f"Order of {out.codomain}"]
    rows = [[str(r.domain_order), r.element, r.image, str(r.image_order)] for r in out.rows]

    lines = [title, ""]
    lines += _aligned(headers, rows)
    lines += [
        "",
        f"mode: {out.mode}",
        f"bijective: {_yes_no(out.bijective)}",
        f"verdict: {'PASS' if out.verdict else 'FAIL'}",
    ]
    w = out.failure_witness
    if w is not None:
        if w.kind == "collision":
            lines.append(f"witness: {w.element} -> {w.image} collides with {w.other_element}")
        else:
            lines.append(f"witness: {w.element} -> {w.image} (order {w.domain_order} vs {w.image_order})")
    return lines


def render_verification(out: VerificationOut, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json(out)
    if fmt == OutputFormat.CSV:
        return _csv(
            ["domain_order", "element", "image", "image_order", "predicate_holds"],
            [[r.domain_order, r.element, r.image, r.image_order, str(r.predicate_holds).lower()] for r in out.rows],
        )
    return _text(_verification_lines(out))


# ==================== EXISTENCE ====================

def render_certificate(out: CertificateOut, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json(out)
    if fmt == OutputFormat.CSV:
        # One block per present section, blocks separated by a blank line
        blocks = []
        if out.assignment is not None:
            blocks.append(_csv(
                ["source_order", "target_order", "count"],
                [[a.source_order, a.target_order, a.count] for a in out.assignment],
            ))
        if out.witness is not None:
            w = out.witness
            blocks.append(_csv(
                ["witness_source_orders", "source_count", "adjacent_target_orders", "adjacent_target_count"],
                [[" ".join(map(str, w.source_orders)), w.source_count,
                  " ".join(map(str, w.adjacent_target_orders)), w.adjacent_target_count]],
            ))
        if out.realization is not None:
            blocks.append(render_verification(out.realization, OutputFormat.CSV))
        return "\n".join(blocks)

    status = "feasible" if out.feasible else "infeasible"
    lines = [f"{out.source} -> {out.target} ({out.mode}): {status}, flow {out.flow_value}/{out.group_order}", ""]
    if out.assignment is not None:
        lines += _aligned(
            ["Source order", "Target order", "Count"],
            [[str(a.source_order), str(a.target_order), str(a.count)] for a in out.assignment],
        )
    if out.witness is not None:
        w = out.witness
        src = ",".join(str(d) for d in w.source_orders)
        dst = ",".join(str(e) for e in w.adjacent_target_orders)
        lines.append(
            f"Hall witness: source orders {{{src}}} hold {w.source_count} elements, "
            f"adjacent target orders {{{dst}}} hold {w.adjacent_target_count}"
        )
    if out.realization is not None:
        lines += [""] + _verification_lines(out.realization)
    return _text(lines)


# ==================== CONJECTURE SWEEP ====================

def _pair_text(pairs) -> str:
    return " ".join(f"{{{x},{y}}}" for x, y in pairs) or "-"


def render_sweep(out: SweepOut, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json(out)
    if fmt == OutputFormat.CSV:
        return _csv(
            ["n", "valid_pairs", "counterexamples", "self_swapped", "conjecture_holds"],
            [[r.n, r.valid_pair_count, _pair_text(r.counterexamples), _pair_text(r.self_swapped),
              str(r.conjecture_holds).lower()]
             for r in out.reports],
        )

    s = out.summary
    lines = [f"Swap conjecture sweep, n = {s.n_min}..{s.n_max}", ""]
    lines += _aligned(
        ["n", "Valid pairs", "Counterexamples", "Self-swapped", "Holds"],
        [[str(r.n), str(r.valid_pair_count), _pair_text(r.counterexamples), _pair_text(r.self_swapped),
          _yes_no(r.conjecture_holds)]
         for r in out.reports],
    )
    lines += [
        "",
        f"n checked: {s.n_checked}",
        f"n with counterexamples: {len(s.n_with_counterexamples)}",
        f"total valid pairs: {s.total_valid_pairs}",
        f"total counterexamples: {s.total_counterexamples}",
        f"conjecture holds on range: {_yes_no(s.conjecture_holds)}",
    ]
    return _text(lines)


# ==================== SURVEY ====================

def render_survey(out: SurveyOut, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return _json(out)
    if fmt == OutputFormat.CSV:
        return _csv(
            ["group", "group_order", "feasible", "realized"],
            [[g.group, g.group_order, str(g.feasible).lower(), str(g.realized).lower()] for g in out.groups],
        )

    lines = [f"Non-cyclic catalog groups up to order {out.max_order} against Z_|G| ({out.mode})", ""]
    lines += _aligned(
        ["Group", "Order", "Feasible", "Realized"],
        [[g.group, str(g.group_order), _yes_no(g.feasible), _yes_no(g.realized)] for g in out.groups],
    )
    lines += ["", f"all feasible and realized: {_yes_no(out.all_feasible)}"]
    return _text(lines)

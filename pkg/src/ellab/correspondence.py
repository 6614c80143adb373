"""Certification of product diagrams against a rigid Calabi-Yau partner.

Two hypothesis cases are supported:

* Case A: both factors have four singular fibers and exactly three common
  singular base points;
* Case B: one factor has four singular fibers, the other five, exactly four
  common singular points, no smooth-paired I_5 or I_7 fiber, and no
  smooth-paired I_6 fiber when the five-fiber factor is 62211.

Certification first searches the factor classes for a rigid fiber-product
partner.  When that fails, the only possible leftover obstruction is a lone
I_2 x I_0 fiber; if the five-fiber factor of a representative pair with that
obstruction is one of 33321, 44211, 62211 (the partitions with a quartic
model whose I_2 fibers come from nodes), the fiberwise Kummer quotient of
that pair is tested for rigidity.  Anything else is honestly NotCertified.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from . import catalog
from .errors import HypothesesNotMet, MissingFlag, NotInCatalog
from .isogeny import GraphMode, _closure_tuples
from .kummer import (KummerReport, NODE_COUNT_PATTERNS, fiber_fixed_points,
                     kummer_input_from_catalog, kummer_rigidity, report_to_json)
from .product import (AppliedMove, ProductDiagram, _move_record, _pair_rows,
                      _replace_factor, common_singular_count, factors_share_class,
                      find_rigid_partner, is_rigid_criterion, left_config,
                      render_diagram, right_config)

KUMMER_PARTITIONS = frozenset({(3, 3, 3, 2, 1), (4, 4, 2, 1, 1), (6, 2, 2, 1, 1)})


class CaseKind(Enum):
    CASE_A = "CaseA"
    CASE_B = "CaseB"
    NOT_APPLICABLE = "NotApplicable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class HypothesisCase:
    kind: CaseKind
    reason: str | None = None


class CertificateKind(Enum):
    RIGID_PRODUCT_PARTNER = "RigidProductPartner"
    RIGID_KUMMER = "RigidKummer"
    NOT_CERTIFIED = "NotCertified"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    case: HypothesisCase
    diagram: ProductDiagram | None = None
    moves: tuple[AppliedMove, ...] = ()
    kummer_report: KummerReport | None = None
    reasons: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()


def _check_admissible(d: ProductDiagram):
    for side, cfg in (("left", left_config(d)), ("right", right_config(d))):
        partition = tuple(sorted(cfg.indices, reverse=True))
        if catalog.admissible(partition) is not catalog.Admissibility.ADMISSIBLE:
            raise NotInCatalog(f"{side} factor partition {partition} is not admissible")


def classify_hypotheses(d: ProductDiagram) -> HypothesisCase:
    """Sort a diagram into Case A, Case B, or NotApplicable with the violated clause."""
    _check_admissible(d)
    n_left = len(left_config(d))
    n_right = len(right_config(d))
    common = common_singular_count(d)
    if n_left == 4 and n_right == 4:
        if common == 3:
            return HypothesisCase(CaseKind.CASE_A)
        return HypothesisCase(
            CaseKind.NOT_APPLICABLE,
            f"four-fiber factors need 3 common singular fibers, found {common}")
    if {n_left, n_right} == {4, 5}:
        if common != 4:
            return HypothesisCase(
                CaseKind.NOT_APPLICABLE,
                f"mixed 4/5-fiber factors need 4 common singular fibers, found {common}")
        five_partition = tuple(sorted(
            (left_config(d) if n_left == 5 else right_config(d)).indices, reverse=True))
        for a, b in d.pairs:
            if 0 not in (a, b):
                continue
            n = a + b
            if n in (5, 7):
                return HypothesisCase(
                    CaseKind.NOT_APPLICABLE, f"smooth-paired I_{n} fiber excluded")
            if n == 6 and five_partition == (6, 2, 2, 1, 1):
                return HypothesisCase(
                    CaseKind.NOT_APPLICABLE,
                    "smooth-paired I_6 fiber excluded for a 62211 factor")
        return HypothesisCase(CaseKind.CASE_B)
    return HypothesisCase(
        CaseKind.NOT_APPLICABLE,
        f"factors must have 4+4 or 4+5 singular fibers, found {n_left}+{n_right}")


def _representative_pairs(d, left_data, right_data):
    """Input pair first, then descending lexicographic order."""
    start = (left_config(d).indices, right_config(d).indices)
    yield start
    for l_tuple in sorted(left_data.nodes, reverse=True):
        for r_tuple in sorted(right_data.nodes, reverse=True):
            if (l_tuple, r_tuple) != start:
                yield l_tuple, r_tuple


def certify(d: ProductDiagram, node_count: int | None = None) -> Certificate:
    """Attempt both certification routes in deterministic priority order.

    The rigid-partner search runs first.  The Kummer route then tries every
    representative pair whose sole obstruction is one I_2 x I_0 fiber with
    the five-fiber factor in scope; delta defaults to 2 only when the
    fixed-point multiset matches a reference pattern, otherwise an explicit
    ``node_count`` is required.
    """
    case = classify_hypotheses(d)
    if case.kind is CaseKind.NOT_APPLICABLE:
        raise HypothesesNotMet(case.reason)
    warnings = ()
    if factors_share_class(d):
        warnings = ("factors share an isogeny class; the constructions assume non-isogenous factors",)

    found = find_rigid_partner(d)
    if found is not None:
        partner, moves = found
        assert is_rigid_criterion(partner)
        return Certificate(CertificateKind.RIGID_PRODUCT_PARTNER, case,
                           diagram=partner, moves=moves, warnings=warnings)

    reasons = ["no rigid fiber-product partner among the class representatives"]
    if case.kind is CaseKind.CASE_A:
        reasons.append("no five-fiber factor, so the Kummer route does not apply")
        return Certificate(CertificateKind.NOT_CERTIFIED, case,
                           reasons=tuple(reasons), warnings=warnings)
    entries = catalog.active_entries()
    left = left_config(d)
    right = right_config(d)
    left_data = _closure_tuples(left.indices, GraphMode.CATALOG_GATED, entries)
    right_data = _closure_tuples(right.indices, GraphMode.CATALOG_GATED, entries)
    five_on_left = len(left) == 5
    for l_tuple, r_tuple in _representative_pairs(d, left_data, right_data):
        rows = _pair_rows(d, l_tuple, r_tuple)
        obstructions = [(a, b) for a, b in rows
                        if (a == 0 and b >= 2) or (b == 0 and a >= 2)]
        if len(obstructions) != 1 or set(obstructions[0]) != {2, 0}:
            continue
        five_partition = tuple(sorted(l_tuple if five_on_left else r_tuple, reverse=True))
        label = f"{''.join(map(str, l_tuple))} x {''.join(map(str, r_tuple))}"
        if five_partition not in KUMMER_PARTITIONS:
            reasons.append(
                f"kummer route {label}: five-fiber partition {five_partition} has no "
                "quartic model with node-induced I_2 fibers")
            continue
        candidate = _replace_factor(d, "left", left_data.paths[l_tuple], left.points)
        candidate = _replace_factor(candidate, "right", right_data.paths[r_tuple], right.points)
        moves = candidate.log[len(d.log):]
        delta = node_count
        if delta is None:
            counts = Counter(fiber_fixed_points(a, b) for a, b in candidate.pairs)
            if counts in NODE_COUNT_PATTERNS:
                delta = 2
        if delta is None:
            reasons.append(f"kummer route {label}: node count of the fixed curve unknown")
            continue
        try:
            report = kummer_rigidity(kummer_input_from_catalog(candidate, delta))
        except (NotInCatalog, MissingFlag) as exc:
            # only reachable with a stripped-down catalog override
            reasons.append(f"kummer route {label}: {exc}")
            continue
        if report.rigid:
            return Certificate(CertificateKind.RIGID_KUMMER, case, diagram=candidate,
                               moves=moves, kummer_report=report, warnings=warnings)
        reasons.append(
            f"kummer route {label}: not rigid (euler {report.euler}, components "
            f"{report.component_min}..{report.component_max}, {report.rationality}, "
            f"equisingular_zero={report.equisingular_zero})")
    return Certificate(CertificateKind.NOT_CERTIFIED, case,
                       reasons=tuple(reasons), warnings=warnings)


def certificate_to_json(cert: Certificate) -> str:
    payload = {
        "schema": 1,
        "kind": str(cert.kind),
        "case": str(cert.case.kind),
        "diagram": None if cert.diagram is None else {
            "points": list(cert.diagram.points),
            "pairs": [list(pair) for pair in cert.diagram.pairs],
        },
        "moves": [_move_record(applied) for applied in cert.moves],
        "kummer": None if cert.kummer_report is None
        else json.loads(report_to_json(cert.kummer_report)),
        "reasons": list(cert.reasons),
        "warnings": list(cert.warnings),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_certificate(cert: Certificate) -> str:
    lines = [f"case: {cert.case.kind}", f"kind: {cert.kind}"]
    if cert.diagram is not None:
        lines.append(f"diagram: {render_diagram(cert.diagram)}")
    if cert.moves:
        for applied in cert.moves:
            move = applied.move
            lines.append(
                f"move: {applied.side} p={move.p} "
                f"{''.join(map(str, move.source.indices))} -> "
                f"{''.join(map(str, move.target.indices))}")
    if cert.kummer_report is not None:
        report = cert.kummer_report
        lines.append(f"euler: {report.euler}")
        lines.append(f"components: {report.component_min}..{report.component_max}")
        lines.append(f"rationality: {report.rationality}")
        lines.append(f"rigid: {'true' if report.rigid else 'false'}")
    for reason in cert.reasons:
        lines.append(f"reason: {reason}")
    for warning in cert.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"

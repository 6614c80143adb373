import json

import pytest

from ellab.configs import FiberConfig, default_points, parse_config
from ellab.correspondence import (CaseKind, CertificateKind, certificate_to_json,
                                  certify, classify_hypotheses)
from ellab.errors import HypothesesNotMet, NotInCatalog
from ellab.kummer import Rationality
from ellab.product import (ProductDiagram, is_rigid_criterion, make_product,
                           parse_diagram)

WORKED_A = parse_diagram("4,4,2,1,1 / 6,2,_,3,1")
WORKED_B = parse_diagram("3,3,2,3,1 / 8,2,_,1,1")
SEEDED_CASE_A = parse_diagram("3,3,3,3,_ / 4,4,2,_,2")


def swapped(d):
    return ProductDiagram(d.points, tuple((b, a) for a, b in d.pairs))


def test_classify_case_a():
    assert classify_hypotheses(SEEDED_CASE_A).kind is CaseKind.CASE_A


def test_classify_case_b():
    assert classify_hypotheses(WORKED_A).kind is CaseKind.CASE_B
    assert classify_hypotheses(swapped(WORKED_A)).kind is CaseKind.CASE_B


def test_classify_rejects_smooth_paired_i5():
    left = parse_config("54111")
    right = FiberConfig(("P2", "P3", "P4", "P5"), (3, 3, 3, 3))
    d = make_product(left, right)
    assert d.pairs == ((5, 0), (4, 3), (1, 3), (1, 3), (1, 3))
    case = classify_hypotheses(d)
    assert case.kind is CaseKind.NOT_APPLICABLE
    assert "I_5" in case.reason


def test_classify_rejects_smooth_paired_i6_for_62211():
    left = parse_config("62211")
    right = FiberConfig(("P2", "P3", "P4", "P5"), (3, 3, 3, 3))
    d = make_product(left, right)
    assert d.pairs == ((6, 0), (2, 3), (2, 3), (1, 3), (1, 3))
    case = classify_hypotheses(d)
    assert case.kind is CaseKind.NOT_APPLICABLE
    assert "62211" in case.reason


def test_classify_allows_smooth_paired_i6_for_other_partitions():
    left = FiberConfig(default_points(5), (1, 1, 1, 6, 3))
    right = FiberConfig(("P1", "P2", "P3", "P5"), (4, 4, 2, 2))
    d = make_product(left, right)
    assert d.pairs == ((1, 4), (1, 4), (1, 2), (6, 0), (3, 2))
    assert classify_hypotheses(d).kind is CaseKind.CASE_B


def test_classify_wrong_common_count():
    d = make_product(parse_config("3333"), parse_config("9111"))
    case = classify_hypotheses(d)
    assert case.kind is CaseKind.NOT_APPLICABLE
    assert "3" in case.reason


def test_classify_requires_admissible_factors():
    d = ProductDiagram(default_points(4), ((7, 9), (3, 1), (1, 1), (1, 1)))
    with pytest.raises(NotInCatalog):
        classify_hypotheses(d)


def test_certify_requires_hypotheses():
    d = make_product(parse_config("3333"), parse_config("9111"))
    with pytest.raises(HypothesesNotMet):
        certify(d)


def test_certify_seeded_case_a_partner():
    cert = certify(SEEDED_CASE_A)
    assert cert.kind is CertificateKind.RIGID_PRODUCT_PARTNER
    assert cert.diagram.pairs == ((9, 8), (1, 2), (1, 1), (1, 0), (0, 1))
    assert is_rigid_criterion(cert.diagram)
    assert len(cert.moves) == 2


def test_certify_first_worked_kummer_example():
    cert = certify(WORKED_A)
    assert cert.kind is CertificateKind.RIGID_KUMMER
    report = cert.kummer_report
    assert report.euler == 20
    assert (report.component_min, report.component_max) == (9, 10)
    assert report.rationality is Rationality.FORCED
    assert report.rigid
    assert cert.moves == ()


def test_certify_second_worked_kummer_example():
    cert = certify(WORKED_B)
    assert cert.kind is CertificateKind.RIGID_KUMMER
    assert cert.kummer_report.euler == 12
    assert (cert.kummer_report.component_min, cert.kummer_report.component_max) == (6, 6)
    assert cert.kummer_report.rigid


def test_certify_transports_to_the_kummer_model():
    # the 81111 member of the 44211 class, with its I_8 over the lone
    # smooth point of the other factor
    d = parse_diagram("1,1,8,1,1 / 6,2,_,3,1")
    cert = certify(d)
    assert cert.kind is CertificateKind.RIGID_KUMMER
    assert cert.diagram.pairs == ((4, 6), (4, 2), (2, 0), (1, 3), (1, 1))
    assert [a.move.target.indices for a in cert.moves] == [
        (2, 2, 4, 2, 2), (4, 4, 2, 1, 1)]
    assert cert.kummer_report.euler == 20


def test_certify_not_certified_without_node_count():
    d = parse_diagram("3,3,3,2,1 / 3,3,3,_,3")
    cert = certify(d)
    assert cert.kind is CertificateKind.NOT_CERTIFIED
    assert any("node count" in reason for reason in cert.reasons)
    assert any("partner" in reason for reason in cert.reasons)


def test_certify_explicit_node_count_can_close_the_gap():
    d = parse_diagram("3,3,3,2,1 / 3,3,3,_,3")
    cert = certify(d, node_count=8)
    assert cert.kind is CertificateKind.RIGID_KUMMER
    assert cert.kummer_report.euler == 12


def test_certify_invariant_under_swap():
    for d in (WORKED_A, WORKED_B, SEEDED_CASE_A):
        cert = certify(d)
        cert_swapped = certify(swapped(d))
        assert cert.kind is cert_swapped.kind
        if cert.kummer_report is not None:
            assert cert.kummer_report.euler == cert_swapped.kummer_report.euler
            assert cert.kummer_report.rigid == cert_swapped.kummer_report.rigid
        if cert.kind is CertificateKind.RIGID_PRODUCT_PARTNER:
            assert cert_swapped.diagram.pairs == tuple(
                (b, a) for a, b in cert.diagram.pairs)


def test_certify_invariant_under_relabeling():
    relabeled = ProductDiagram(("A", "B", "C", "D", "E"), SEEDED_CASE_A.pairs)
    cert = certify(SEEDED_CASE_A)
    cert_relabeled = certify(relabeled)
    assert cert.kind is cert_relabeled.kind
    assert cert.diagram.pairs == cert_relabeled.diagram.pairs


def test_certify_warns_on_isogenous_factors():
    left = parse_config("3333")
    right = FiberConfig(("P1", "P2", "P3", "Q1"), (9, 1, 1, 1))
    d = make_product(left, right)
    assert classify_hypotheses(d).kind is CaseKind.CASE_A
    cert = certify(d)
    assert cert.warnings


def test_certificate_json_audit_trail():
    payload = json.loads(certificate_to_json(certify(WORKED_A)))
    assert payload["schema"] == 1
    assert payload["kind"] == "RigidKummer"
    assert payload["case"] == "CaseB"
    assert payload["kummer"]["euler"] == 20
    assert payload["kummer"]["rigid"] is True
    assert payload["moves"] == []
    payload = json.loads(certificate_to_json(certify(SEEDED_CASE_A)))
    assert payload["kind"] == "RigidProductPartner"
    assert payload["diagram"]["pairs"] == [[9, 8], [1, 2], [1, 1], [1, 0], [0, 1]]
    assert len(payload["moves"]) == 2


def test_62211_good_i2_over_smooth_gets_a_partner():
    # the distinguished I_2 (position 2) maps to I_1, so the partner route works
    left = parse_config("62211")
    right = FiberConfig(("P1", "P3", "P4", "P5"), (6, 2, 3, 1))
    d = make_product(left, right)
    assert d.pairs == ((6, 6), (2, 0), (2, 2), (1, 3), (1, 1))
    cert = certify(d)
    assert cert.kind is CertificateKind.RIGID_PRODUCT_PARTNER
    assert cert.diagram.pairs[1] == (1, 0)


def test_62211_bad_i2_over_smooth_needs_kummer():
    # the other I_2 maps to I_4 in every representative, so only the Kummer
    # construction certifies
    left = parse_config("62211")
    right = FiberConfig(("P1", "P2", "P4", "P5"), (6, 2, 3, 1))
    d = make_product(left, right)
    assert d.pairs == ((6, 6), (2, 2), (2, 0), (1, 3), (1, 1))
    cert = certify(d)
    assert cert.kind is CertificateKind.RIGID_KUMMER
    assert cert.kummer_report.euler == 20
    assert cert.kummer_report.rigid


def test_case_b_with_unit_extra_point_is_already_rigid():
    left = parse_config("44211")
    right = FiberConfig(("P1", "P2", "P3", "P4"), (6, 2, 3, 1))
    d = make_product(left, right)
    assert d.pairs == ((4, 6), (4, 2), (2, 3), (1, 1), (1, 0))
    cert = certify(d)
    assert cert.kind is CertificateKind.RIGID_PRODUCT_PARTNER
    assert cert.diagram == d
    assert cert.moves == ()

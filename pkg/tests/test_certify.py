import json

import pytest

from nefcert.certify import (
    certify_corollary,
    certify_edge,
    certify_main1,
    certify_main2,
    certify_proof_identities,
)
from nefcert.configurations import as_configuration
from nefcert.exceptions import NotConnected
from nefcert.graphs import Graph, family
from nefcert.linalg import IntMatrix

E2 = as_configuration(IntMatrix.identity(2))
C3 = as_configuration(IntMatrix.from_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]]))
C4R = as_configuration(IntMatrix.from_rows([[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0]]))
BRIDGED = family("bridged_triangles")


def clause(report, name):
    return next(c for c in report.clauses if c.name == name)


def test_main1_e2():
    r = certify_main1(E2)
    assert r.verdict == "CONFIRMED"
    cay = clause(r, "cayley_sum_gorenstein_of_index_2")
    assert cay.data["h_star"] == [1, 1]
    assert cay.data["gorenstein_index"] == 2
    assert cay.data["second_dilate_reflexive"]
    mink = clause(r, "minkowski_sum_reflexive_nef_partition")
    assert mink.data["reflexive"]
    assert mink.data["origin_in_P_A_minus_a"] and mink.data["origin_in_negated_P_A_plus_a"]
    assert clause(r, "lattice_point_sum_equality").data["holds"]


def test_main1_c4():
    r = certify_main1(C4R)
    assert r.verdict == "CONFIRMED"


def test_main1_negative_control():
    bridged_cols = [(1, 1, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0), (0, 1, 1, 0, 0, 0),
                    (0, 0, 1, 1, 0, 0), (0, 0, 0, 1, 1, 0), (0, 0, 0, 1, 0, 1),
                    (0, 0, 0, 0, 1, 1)]
    A = as_configuration(IntMatrix.from_columns(bridged_cols))
    r = certify_main1(A)
    assert r.verdict == "HYPOTHESIS_NOT_MET"
    uni = next(h for h in r.hypotheses if h.name == "unimodular_configuration")
    assert not uni.passed
    assert uni.details["minor_profile"] == [2, 4]
    assert all(c.status == "SKIPPED" for c in r.clauses)


def test_main2_e2_hexagon():
    r = certify_main2(E2)
    assert r.verdict == "CONFIRMED"
    mink = clause(r, "minkowski_sum_reflexive_nef_partition")
    assert mink.data["h_star"] == [1, 4, 1]
    assert mink.data["reflexive"]
    assert mink.data["origin_in_P_A0"] and mink.data["origin_in_negated_P_A0"]


def test_main2_c3_spanning_fails():
    r = certify_main2(C3)
    assert r.verdict == "HYPOTHESIS_NOT_MET"
    failed = [h.name for h in r.hypotheses if not h.passed]
    assert failed == ["P_A0_spanning"]


def test_main2_c4():
    r = certify_main2(C4R)
    assert r.verdict == "CONFIRMED"


def test_corollary_examples():
    r = certify_corollary(E2)
    assert r.verdict == "CONFIRMED"
    data = r.clauses[0].data
    assert data["h_star_cayley"] == [1, 1]
    assert data["h_star_cayley_origin"] == [1, 2, 1]
    r4 = certify_corollary(C4R)
    assert r4.verdict == "CONFIRMED"
    rc3 = certify_corollary(C3)
    assert rc3.verdict == "HYPOTHESIS_NOT_MET"


def test_proof_identities():
    r = certify_proof_identities(E2)
    assert r.verdict == "CONFIRMED"
    d = clause(r, "h_chain_one_plus_t").data
    assert d["h_pm"] == [1, 2, 1] and d["h_cayley"] == [1, 1]
    d2 = clause(r, "h_equals_h_star_symmetric_polytope").data
    assert d2["h_star_spanned"] == [1, 2, 1]
    assert clause(r, "palindromic_of_degree_d").status == "PASS"
    # degenerate single-column configuration: the interval [-1, 1]
    one = as_configuration(IntMatrix.from_rows([[1]]))
    r1 = certify_proof_identities(one)
    assert r1.verdict == "CONFIRMED"
    assert clause(r1, "h_chain_one_plus_t").data["h_pm"] == [1, 1]
    r4 = certify_proof_identities(C4R)
    assert r4.verdict == "CONFIRMED"


def test_certify_edge_dispatch():
    r = certify_edge(family("bowtie"))
    assert r.verdict == "CONFIRMED"
    assert clause(r, "edge_statement_1").status == "PASS"
    assert clause(r, "edge_statement_2").status == "SKIPPED"
    r4 = certify_edge(family("cycle", (4,)))
    assert r4.verdict == "CONFIRMED"
    assert [c.status for c in r4.clauses] == ["PASS", "PASS", "PASS"]
    rb = certify_edge(BRIDGED)
    assert rb.verdict == "HYPOTHESIS_NOT_MET"
    assert rb.hypotheses[0].details["minor_profile"] == [2, 4]
    assert next(h for h in rb.hypotheses
                if h.name == "unimodularity_crosscheck_agrees").passed
    with pytest.raises(NotConnected):
        certify_edge(Graph.from_edges(4, [(1, 2), (3, 4)]))


def test_reports_are_deterministic():
    a = certify_main2(E2).to_json(include_timings=False)
    b = certify_main2(E2).to_json(include_timings=False)
    assert a == b
    ga = certify_edge(family("cycle", (3,))).to_json(include_timings=False)
    gb = certify_edge(family("cycle", (3,))).to_json(include_timings=False)
    assert ga == gb


def test_report_schema_roundtrip():
    r = certify_main1(E2)
    doc = json.loads(r.to_json())
    assert doc["version"] == "1.0"
    assert set(doc) == {"version", "instance", "hypotheses", "clauses",
                       "verdict", "timings_ms"}
    for h in doc["hypotheses"]:
        assert set(h) == {"name", "passed", "details"}
    for c in doc["clauses"]:
        assert set(c) == {"name", "status", "data"}
        assert c["status"] in {"PASS", "FAIL", "PARTIAL", "SKIPPED"}
    assert doc["verdict"] in {"CONFIRMED", "HYPOTHESIS_NOT_MET", "DISCREPANCY"}
    assert json.loads(json.dumps(doc)) == doc


def test_gorenstein_detectors_agree():
    # h*-palindromicity route vs reflexivity of the second dilate
    for A in (E2, C4R):
        for rep in (certify_main1(A), certify_main2(A)):
            assert rep.verdict == "CONFIRMED"
            data = clause(rep, "cayley_sum_gorenstein_of_index_2").data
            assert data["gorenstein_index"] == 2
            assert data["second_dilate_reflexive"]


def test_check_all_translates_flag():
    r = certify_main1(E2, check_all_translates=True)
    assert r.verdict == "CONFIRMED"
    mink = clause(r, "minkowski_sum_reflexive_nef_partition")
    assert mink.data["all_translates_checked"] == 2


def test_lattice_point_hypothesis_failure_is_a_report_state():
    sparse = as_configuration(IntMatrix.from_columns([(1, 0), (1, 3)]))
    r = certify_main1(sparse)
    assert r.verdict == "HYPOTHESIS_NOT_MET"
    failed = [h.name for h in r.hypotheses if not h.passed]
    assert "lattice_points_of_P_A_equal_columns" in failed
    r0 = certify_main2(sparse)
    assert r0.verdict == "HYPOTHESIS_NOT_MET"

import json

import pytest

import rtdg


def test_cardinality_and_distance():
    assert rtdg.space_cardinality("zq:q=3,n=4") == 81
    assert rtdg.space_cardinality("sn:n=5") == 120
    assert rtdg.space_cardinality("product:sizes=2,3,2") == 12
    assert rtdg.rt_distance("zq:q=3,n=3", [0, 1, 2], [0, 2, 2]) == 2
    assert rtdg.rt_distance("sn:n=3", [1, 2, 3], [2, 1, 3]) == 2


def test_formula_strings():
    assert rtdg.formula("zq:q=3,n=4", "1,3") == "3*[3*K_3(1)]^3"
    assert rtdg.formula("sn:n=4", "2,4") == "[3*K_2(1)]^4"
    assert rtdg.formula("product:sizes=2,3,2", "2") == "2*K_3(2)"


def test_formula_stats_are_plain_ints():
    stats = rtdg.formula_stats("zq:q=3,n=4", "1,3")
    assert stats["vertices"] == 81
    assert stats["edges"] == 810
    assert stats["degree"] == 20
    assert stats["components"] == 3
    assert stats["chromatic"] == 9
    # Counting is exact far beyond machine integers.
    big = rtdg.expr_stats("[K_10(1000000)]^9")
    assert big["vertices"] == 10**7 * 9
    assert isinstance(big["edges"], int)


def test_build_graph_shape():
    g = rtdg.build_graph("zq:q=2,n=2", "2")
    assert g["vertex_count"] == 4
    assert sorted(g["edges"]) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert g["labels"][0] == [0, 0]


def test_graph_json_parses():
    doc = json.loads(rtdg.graph_json("sn:n=3", "2,3"))
    assert doc["space"] == "sn:n=3"
    assert doc["vertex_count"] == 6
    assert len(doc["edges"]) == 15  # all distances present: complete graph K_6
    assert "graph distance_graph {" in rtdg.graph_dot("sn:n=3", "2,3")


def test_verify_structure():
    report = rtdg.verify_structure("zq:q=2,n=4", "2,3")
    assert report["claim"] == "structure"
    assert report["status"] == "verified"
    assert "isomorphic to" in report["evidence"]


def test_verify_suites():
    reports = rtdg.verify_suite_zq(2, 3)
    assert len(reports) == 22
    assert all(r["status"] == "verified" for r in reports)
    sn_reports = rtdg.verify_suite_sn(3)
    assert all(r["status"] == "verified" for r in sn_reports)


def test_metric_and_embedding():
    assert rtdg.verify_metric_axioms("sn:n=4")["status"] == "verified"
    assert rtdg.verify_embedding(3, "2,3")["status"] == "verified"


def test_chromatic():
    res = rtdg.chromatic("zq:q=2,n=3", "1,2")
    assert res["formula"] == 4
    assert res["exact"] is True
    assert res["lower"] == res["upper"] == 4


def test_recover():
    assert rtdg.recover_zq(3, 20) == [1, 3]
    assert rtdg.recover_zq(2, 0) == []
    assert rtdg.recover_sn(5) == [2, 3]
    assert rtdg.recover_sn(19) == [2, 4]
    with pytest.raises(rtdg.NoPreimageError):
        rtdg.recover_zq(3, 7)
    with pytest.raises(ValueError):  # NoPreimageError is a ValueError
        rtdg.recover_sn(2)


def test_errors_are_typed():
    with pytest.raises(rtdg.RTDGError):
        rtdg.build_graph("zq:q=2,n=3", "7")
    with pytest.raises(rtdg.RTDGError):
        rtdg.space_cardinality("nope:q=1")


def test_report_line_is_stable():
    line = rtdg.report_json_line("zq:q=2,n=2", "1")
    assert line == rtdg.report_json_line("zq:q=2,n=2", "1")
    parsed = json.loads(line)
    assert parsed["seconds"] == 0.0
    assert parsed["status"] == "verified"

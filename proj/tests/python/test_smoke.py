import copy

import pytest

import vinberg


def test_admissible_norms():
    assert vinberg.admissible_norms(5, 3) == [1, 2, 5, 10]
    assert vinberg.norm([1, 2, 1], 5) == 0
    assert vinberg.is_root([2, 5, 0], 5)
    assert not vinberg.is_root([1, 3, 0], 5)


def test_classify_reflective():
    r = vinberg.classify(5, 2)
    assert r["schema_version"] == vinberg.SCHEMA_VERSION
    assert r["verdict"] == "reflective"
    assert [x["vector"] for x in r["roots"]] == ["-v1+v2", "-v2", "2v0+5v1", "3v0+5v1+5v2"]
    assert r["certificate_verified"]
    assert vinberg.verify(r["certificate"]) == (True, [])


def test_symmetry_certificate_and_tampering():
    r = vinberg.classify(23, 3)
    assert r["verdict"] == "non_reflective"
    cert = r["certificate"]
    assert cert["kind"] == "infinite_symmetry"
    ok, failures = vinberg.verify(cert)
    assert ok and failures == []
    bad = copy.deepcopy(cert)
    bad["payload"]["matrix"][0][0] = 784
    ok, failures = vinberg.verify(bad)
    assert not ok and failures


def test_norm_angle_sequence():
    symbol, rotation, preserves = vinberg.norm_angle_sequence(13)
    assert symbol == "(2_4 1_2 13_inf 13_2)^2"
    assert rotation == 2 and preserves


def test_errors():
    with pytest.raises(vinberg.VinbergError):
        vinberg.classify(4, 3)
    with pytest.raises(ValueError):
        vinberg.verify({"schema_version": 1})


def test_family_and_resume():
    fam = vinberg.classify_family(7, 5)
    assert [r["verdict"] for r in fam] == ["reflective", "reflective", "non_reflective", "non_reflective"]
    assert fam[-1]["searched"] is False
    partial = vinberg.classify(5, 6, max_roots=6)
    assert partial["verdict"] == "undecided"
    done = vinberg.resume(partial)
    assert done["verdict"] == "reflective"
    assert done["roots"] == vinberg.classify(5, 6)["roots"]


def test_table_and_diagram():
    assert "47v0+169v1+13v2" in vinberg.table(13, 2)
    assert vinberg.diagram(5, 2, "dot").startswith("graph")

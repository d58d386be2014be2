import neargroup as ng
import pytest


def test_pi_search():
    assert ng.find_all_pi("Z5") == []
    assert ng.find_all_pi("Z2xZ2") == []
    group, pi = ng.pi_from_field(5)
    assert group == "Z4"
    assert pi in ng.find_all_pi("Z4")
    assert ng.pi_violations(group, pi) == []


def test_field():
    t = ng.field_from_pi(*ng.pi_from_field(9))
    assert t["q"] == 9 and t["axioms_hold"] and t["isomorphic_to_GF_q"]
    assert ng.affine_group_fusion(7) == (42, 6, 6, 5)


def test_construct_and_verify():
    data = ng.construct_standard(field=5)
    assert data["schema"] == "neargroup-data"
    report = ng.verify(data, oracle=True)
    assert report["status"] == "pass"
    assert any(f["family"].startswith("oracle:") for f in report["families"])


def test_corrupted_data_fails():
    data = ng.construct_standard(field=4)
    data["matrices"]["lambda"][0][0][0] = {"order": 1, "coeffs": [["3", "1"]]}
    assert ng.verify(data)["status"] == "fail"


def test_braidings():
    counts = {("Z2k1", 0): 3, ("Z2k1", 1): 0, ("Z3k2", 0): 4, ("Z3k2", 1): 0, ("Z4k3", 0): 1}
    for (name, sel), n in counts.items():
        result = ng.enumerate_braidings(ng.example_data(name, sel))
        assert len(result["braidings"]) == n, (name, sel)
    z4 = ng.enumerate_braidings(ng.example_data("Z4k3"))
    assert z4["reduced_solutions"] == 5
    assert z4["braidings"][0]["symmetric"]


def test_classify():
    row = ng.classify_family("Z3k2")
    assert row["monoidal_structures"] == 2
    assert sorted(len(s["braidings"]) for s in row["structures"]) == [0, 4]
    assert ng.classify_monoidal(*ng.pi_from_field(3))["lattice_count"] == 3


def test_obstruction():
    for k in range(1, 21):
        assert ng.obstruction(k)["obstructed"] == (k % 4 in (2, 3))
    assert ng.flip_determinant(3) == -1


def test_cli():
    code, out, _ = ng.run_cli(["obstruction", "--k", "3"])
    assert code == 0 and "Obstructed" in out
    code, _, _ = ng.run_cli(["verify", "--input", "/nonexistent.json"])
    assert code == 2


def test_bad_input_raises():
    with pytest.raises(Exception):
        ng.verify("{")
    with pytest.raises(Exception):
        ng.construct_standard("Zq", "()")

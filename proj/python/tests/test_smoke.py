import json

import satake


def test_basic_lie_data():
    assert satake.rank("G2") == 2
    assert len(satake.positive_roots("G2")) == 6
    assert satake.weyl_dimension("A2", [1, 1]) == 8
    assert satake.weight_multiplicity("A2", [1, 1], [0, 0]) == 2


def test_kostka_matches_graded_series():
    k = satake.kostka("A2", [1, 1], [0, 0])
    assert k == [0, 1, 1]  # q + q^2
    series = satake.graded_section_multiplicity("A2", [1, 1], [0, 0], 6)
    assert series[: len(k)] == k
    assert all(c == 0 for c in series[len(k):])


def test_verify_eq1_reports_match():
    rep = satake.verify_eq1("B2", [1, 1], [0, 1], 8)
    assert rep["match"] is True
    assert rep["first_mismatch"] is None


def test_affine_multiplicity_basic_module():
    # basic representation of the rank-1 untwisted affinization:
    # weight Lambda_0 - delta has multiplicity 1
    assert satake.affine_multiplicity("A1", [1, 0], [1, 1], 3) == 1


def test_monopole_series_molien():
    quiver = {"vertices": ["0"], "edges": [], "v": {"0": 1}, "w": {"0": 2}}
    coeffs = satake.monopole_hilbert_series(json.dumps(quiver), 4)
    assert coeffs[::2] == [1, 3, 5, 7, 9]
    assert all(c == 0 for c in coeffs[1::2])
    # the orbifold series is graded by polynomial degree, one t-unit per
    # DEGREE-2 generator, so its coefficients sit at twice the monopole degree
    sym = satake.sym_power_orbifold_series(2, 1, 8)
    assert sym[::4] == coeffs[::2]


def test_run_job_roundtrip():
    spec = {
        "command": "kostka",
        "params": {"type": "A2", "lambda": [1, 1], "mu": [0, 0]},
        "format": "json",
    }
    code, report = satake.run_job(json.dumps(spec))
    assert code == 0
    assert json.loads(report)["coeffs"] == [0, 1, 1]

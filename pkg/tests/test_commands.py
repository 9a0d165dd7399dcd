""" test_commands.py -- Command-line surface, run in-process through main(argv).

    Language: Python 3.9
"""

import json
import math

import pytest

from pythagoras.main import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_verify_degua_single_case(capsys):
    status, out, _ = run(capsys, "verify", "degua", "--cases", "1")
    report = json.loads(out)
    assert status == 0
    assert report["failures"] == 0
    assert report["per_case"][0]["residual"] <= 1e-15


def test_verify_output_is_byte_identical(capsys):
    _, first, _ = run(capsys, "verify", "closure", "--seed", "42", "--cases", "30")
    _, second, _ = run(capsys, "verify", "closure", "--seed", "42", "--cases", "30")
    assert first == second


def test_verify_impossible_tolerance_fails(capsys):
    status, out, _ = run(capsys, "verify", "spherical", "--cases", "200", "--tolerance", "0")
    assert status == 1
    assert json.loads(out)["failures"] > 0


def test_verify_unknown_suite_is_a_usage_error(capsys):
    status, out, err = run(capsys, "verify", "astrology")
    assert status == 2
    assert out == ""
    assert "astrology" in err


def test_distance_earth_example(capsys):
    status, out, _ = run(
        capsys, "distance", "--cities", "quito,portoalegre", "--via", "macapa", "--compare", "--json"
    )
    result = json.loads(out)
    assert status == 0
    assert list(result) == [
        "geodesic", "leg_1", "leg_2", "spherical_pythagoras", "flat_pythagoras", "discrepancy",
    ]
    assert result["spherical_pythagoras"] == pytest.approx(4414, rel=0.01)
    assert result["flat_pythagoras"] == pytest.approx(4511, rel=0.01)
    assert result["discrepancy"] > 0


def test_distance_quarter_equator(capsys):
    status, out, _ = run(capsys, "distance", "--radius", "1", "--p", "0,0", "--q", "0,90", "--json")
    assert status == 0
    assert json.loads(out)["geodesic"] == pytest.approx(math.pi / 2, rel=1e-14)


def test_distance_same_point(capsys):
    status, out, _ = run(capsys, "distance", "--p=-30.03,-51.23", "--q=-30.03,-51.23", "--json")
    assert status == 0
    assert json.loads(out)["geodesic"] == 0.0


def test_distance_hyperbolic_coordinates(capsys):
    p = f"{math.cosh(1)},{math.sinh(1)},0"
    status, out, _ = run(capsys, "distance", "--geometry", "hyperbolic", "--p", "1,0,0", "--q", p, "--json")
    assert status == 0
    assert json.loads(out)["geodesic"] == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize(
    "argv",
    [
        ("distance", "--p", "a,b", "--q", "0,0"),
        ("distance", "--p", "0,0"),
        ("distance", "--cities", "quito,atlantis"),
        ("distance", "--p", "0,0", "--q", "0,1", "--compare"),
        ("distance", "--p", "95,0", "--q", "0,1"),
    ],
)
def test_distance_usage_errors(capsys, argv):
    status, _, _ = run(capsys, *argv)
    assert status == 2


def test_simplex_table(capsys):
    status, out, _ = run(capsys, "simplex", "3", "4", "12", "--json")
    result = json.loads(out)
    assert status == 0
    assert result["hypotenuse_gram"] == pytest.approx(6 * math.sqrt(26), rel=1e-12)
    assert result["pythagoras_residual"] <= 1e-12
    assert result["closure_residual"] <= 1e-12
    assert [face["face"] for face in result["faces"]] == [0, 1, 2, 3]


def test_simplex_unit_heights(capsys):
    status, out, _ = run(capsys, "simplex", "1", "1", "1", "--json")
    faces = json.loads(out)["faces"]
    assert status == 0
    assert faces[0]["volume"] == pytest.approx(math.sqrt(3) / 2)
    assert faces[0]["height"] == pytest.approx(1 / math.sqrt(3))


def test_simplex_two_legs_text(capsys):
    status, out, _ = run(capsys, "simplex", "3", "4")
    assert status == 0
    assert "hypotenuse_gram: 5.000000" in out


@pytest.mark.parametrize("legs", [("3", "-4"), ("3", "0"), ("5",)])
def test_simplex_rejects_bad_legs(capsys, legs):
    status, _, _ = run(capsys, "simplex", *legs)
    assert status == 2


def _frame_file(tmp_path, content):
    path = tmp_path / "frame.json"
    path.write_text(content)
    return str(path)


def test_project_real_frame(capsys, tmp_path):
    path = _frame_file(tmp_path, json.dumps({"n": 3, "m": 2, "vectors": [[1, 0, 1], [0, 1, 1]]}))
    status, out, _ = run(capsys, "project", path)
    report = json.loads(out)
    assert status == 0
    assert report["total"] == pytest.approx(math.sqrt(3))
    assert report["per_index"] == pytest.approx({"1,2": 1.0, "1,3": 1.0, "2,3": 1.0})


def test_project_complex_frame(capsys, tmp_path):
    path = _frame_file(tmp_path, json.dumps({"n": 2, "m": 1, "vectors": [[[1, 2], [3, 4]]]}))
    status, out, _ = run(capsys, "project", path, "--complex")
    report = json.loads(out)
    assert status == 0
    assert report["total"] == pytest.approx(30.0)
    assert report["per_index"] == pytest.approx({"1": 5.0, "2": 25.0})


def test_project_complex_subspace(capsys, tmp_path):
    vectors = [[[1, 0], [0, 1], [2, 0]], [[0, 0], [1, 1], [0, -1]]]
    path = _frame_file(tmp_path, json.dumps({"vectors": vectors}))
    status, out, _ = run(capsys, "project", path, "--complex")
    report = json.loads(out)
    assert status == 0
    assert report["theorem"] == "complex-subspace"
    assert report["residual"] <= 1e-12


@pytest.mark.parametrize(
    "content",
    [
        '{"n": 3, "m": 0, "vectors": []}',
        '{"vectors": [[1, 0, 1], [0, 1, 1]',
        '{"vectors": [[1, "x"]]}',
        '{"n": 4, "vectors": [[1, 0, 1]]}',
        '{"vectors": [[[1, 2], [3, 4]]]}',
    ],
)
def test_project_parse_errors(capsys, tmp_path, content):
    status, out, _ = run(capsys, "project", _frame_file(tmp_path, content))
    assert status == 2
    assert out == ""


def test_project_parse_error_reports_position(capsys, tmp_path):
    status, _, err = run(capsys, "project", _frame_file(tmp_path, '{\n  "vectors": [1, 2,,]\n}'))
    assert status == 2
    assert "line 2" in err


def test_project_missing_file(capsys, tmp_path):
    status, _, _ = run(capsys, "project", str(tmp_path / "nope.json"))
    assert status == 2


def test_triples(capsys):
    status, out, _ = run(capsys, "triples", "13")
    assert status == 0
    assert out.splitlines() == ["3 4 5", "5 12 13", "6 8 10"]
    status, out, _ = run(capsys, "triples", "10", "--json")
    assert json.loads(out) == [[3, 4, 5], [6, 8, 10]]


def test_hypotenuse_hyperbolic(capsys):
    status, out, _ = run(capsys, "hypotenuse", "2", "2", "--geometry", "hyperbolic", "--json")
    result = json.loads(out)
    assert status == 0
    assert result["a"] == pytest.approx(3.342, abs=1e-3)
    assert result["law_residual"] <= 1e-12
    assert result["disk_residual"] <= 1e-12


def test_hypotenuse_second_root(capsys):
    b = str(math.pi / 2)
    status, out, _ = run(capsys, "hypotenuse", b, b, "--geometry", "spherical", "--second-root", "--json")
    result = json.loads(out)
    assert status == 0
    assert result["a"] == pytest.approx(3 * math.pi / 2)
    assert result["disk_residual"] is None


def test_hypotenuse_proper(capsys):
    status, out, _ = run(capsys, "hypotenuse", "1.22", "0.86", "--geometry", "sphere", "--proper", "--json")
    assert status == 0
    assert json.loads(out)["a"] == pytest.approx(math.pi / 2, abs=0.01)


def test_hypotenuse_without_proper_triangle(capsys):
    status, _, err = run(capsys, "hypotenuse", "3", "3", "--geometry", "spherical", "--proper")
    assert status == 2
    assert "proper" in err


def test_help(capsys):
    status, out, _ = run(capsys, "help")
    assert status == 0
    assert "verify:" in out
    status, out, _ = run(capsys, "help", "d")
    assert status == 0
    assert out.startswith("distance:")
    status, _, _ = run(capsys, "help", "bogus")
    assert status == 2


def test_alias_runs_command(capsys):
    status, out, _ = run(capsys, "t", "5")
    assert status == 0
    assert out == "3 4 5\n"


def test_no_command_is_a_usage_error(capsys):
    status, _, _ = run(capsys)
    assert status == 2


def test_version(capsys):
    status, out, _ = run(capsys, "--version")
    assert status == 0
    assert out.startswith("pythagoras ")

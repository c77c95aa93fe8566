import json

import numpy as np
import pytest

from bosonsim.cli import RunConfig, main
from bosonsim.transforms import matrix_to_jsonable

BEAMSPLITTER = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


@pytest.fixture
def bs_file(tmp_path):
    path = tmp_path / "beamsplitter.json"
    path.write_text(json.dumps(matrix_to_jsonable(BEAMSPLITTER)))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_random_unitary_check_roundtrip(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "random-unitary", "--d", "4", "--seed", "7")
    assert code == 0
    path = tmp_path / "u.json"
    path.write_text(out)
    code, out, _ = run_cli(capsys, "check", str(path))
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[-1] == "ok"
    for line in lines[:3]:
        assert float(line.split(" = ")[1]) <= 1e-10


def test_random_unitary_deterministic(capsys):
    _, first, _ = run_cli(capsys, "random-unitary", "--d", "3", "--seed", "5")
    _, second, _ = run_cli(capsys, "random-unitary", "--d", "3", "--seed", "5")
    assert first == second


def test_check_reports_three_deviations(bs_file, capsys):
    code, out, _ = run_cli(capsys, "check", bs_file)
    assert code == 0
    assert out.startswith("unitarity deviation = ")
    assert "symplectic deviation = " in out
    assert "orthogonal deviation = " in out


def test_check_non_unitary_exits_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(matrix_to_jsonable(np.diag([1.0, 2.0]))))
    code, out, err = run_cli(capsys, "check", str(path))
    assert code == 3
    assert "unitarity deviation = 3" in out
    assert err.startswith("error:")


def test_permanent_command(bs_file, capsys):
    code, out, _ = run_cli(capsys, "permanent", bs_file)
    assert code == 0
    assert out.startswith("permanent = ")
    # per([[1,1],[1,-1]]/sqrt2) = 1/2 - 1/2 = 0
    assert "permanent = 0+0j" in out or "permanent = -0+0j" in out
    code, naive_out, _ = run_cli(capsys, "permanent", bs_file, "--naive")
    assert code == 0
    assert naive_out == out


def test_basis_command(capsys):
    code, out, _ = run_cli(capsys, "basis", "--d", "2", "--n", "2")
    assert code == 0
    assert out == "|2,0⟩\n|1,1⟩\n|0,2⟩\n"


def test_amplitude_hom(bs_file, capsys):
    code, out, _ = run_cli(capsys, "amplitude", bs_file, "--in", "1,1", "--out", "1,1")
    assert code == 0
    assert "probability = 0" in out


def test_amplitude_accepts_ket_notation(bs_file, capsys):
    code, out, _ = run_cli(
        capsys, "amplitude", bs_file, "--in", "|1,1⟩", "--out", "|2,0⟩"
    )
    assert code == 0
    prob = float(out.strip().split("\n")[1].split(" = ")[1])
    assert abs(prob - 0.5) < 1e-12


def test_amplitude_fermion(bs_file, capsys):
    code, out, _ = run_cli(
        capsys, "amplitude", bs_file, "--in", "1,1", "--out", "1,1", "--fermion"
    )
    assert code == 0
    lines = out.strip().split("\n")
    amp = complex(lines[0].split(" = ")[1])
    assert abs(amp - (-1.0)) < 1e-12
    prob = float(lines[1].split(" = ")[1])
    assert abs(prob - 1.0) < 1e-12


def test_distribution_json(bs_file, capsys):
    code, out, _ = run_cli(capsys, "distribution", bs_file, "--in", "1,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["input"] == [1, 1]
    states = [tuple(o["state"]) for o in payload["outcomes"]]
    assert states == [(2, 0), (1, 1), (0, 2)]
    probs = [o["probability"] for o in payload["outcomes"]]
    assert abs(probs[0] - 0.5) < 1e-12
    assert probs[1] < 1e-12


def test_distribution_fermion_pauli_blocking(bs_file, capsys):
    code, out, _ = run_cli(capsys, "distribution", bs_file, "--in", "1,1", "--fermion")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["outcomes"]) == 1
    assert payload["outcomes"][0]["state"] == [1, 1]
    assert abs(payload["outcomes"][0]["probability"] - 1.0) < 1e-12


def test_distribution_csv(bs_file, capsys):
    code, out, _ = run_cli(
        capsys, "distribution", bs_file, "--in", "1,1", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "state;probability"
    assert len(lines) == 4
    assert lines[1].split(";")[0] == "2,0"


def test_expect_matches_distribution_first_moment(tmp_path, capsys):
    _, ujson, _ = run_cli(capsys, "random-unitary", "--d", "4", "--seed", "99")
    path = tmp_path / "u4.json"
    path.write_text(ujson)

    code, out, _ = run_cli(capsys, "expect", str(path), "--in", "1,1,0,0")
    assert code == 0
    lines = out.strip().split("\n")
    means = [float(line.split(" = ")[1]) for line in lines[:-1]]
    total = float(lines[-1].split(" = ")[1])
    assert abs(total - 2.0) < 1e-9

    code, dist_out, _ = run_cli(capsys, "distribution", str(path), "--in", "1,1,0,0")
    payload = json.loads(dist_out)
    moments = [0.0, 0.0, 0.0, 0.0]
    for outcome in payload["outcomes"]:
        for k in range(4):
            moments[k] += outcome["probability"] * outcome["state"][k]
    assert max(abs(m - e) for m, e in zip(moments, means)) < 1e-9


def test_expect_fermion(bs_file, capsys):
    code, out, _ = run_cli(capsys, "expect", bs_file, "--in", "1,0", "--fermion")
    assert code == 0
    lines = out.strip().split("\n")
    assert abs(float(lines[0].split(" = ")[1]) - 0.5) < 1e-12
    assert abs(float(lines[-1].split(" = ")[1]) - 1.0) < 1e-12


def test_sample_output_and_determinism(bs_file, capsys):
    args = ("sample", bs_file, "--in", "1,1", "--count", "10000", "--seed", "42")
    code, first, _ = run_cli(capsys, *args)
    assert code == 0
    payload = json.loads(first)
    assert payload["seed"] == 42
    assert payload["count"] == 10000
    assert sum(c["observed"] for c in payload["counts"]) == 10000
    assert payload["chi_square"]["p_value"] > 0.001
    code, second, _ = run_cli(capsys, *args)
    assert first == second  # byte-stable


def test_malformed_file_exits_2(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "permanent", str(path))
    assert code == 2
    assert err.startswith("error:")
    assert "\n" not in err.strip()


def test_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "check", "/nonexistent/matrix.json")
    assert code == 2
    assert err.startswith("error:")


def test_dimension_mismatch_exits_2(bs_file, capsys):
    code, _, err = run_cli(capsys, "amplitude", bs_file, "--in", "1,1,1", "--out", "1,1,1")
    assert code == 2
    assert "modes" in err


def test_cap_violation_exits_2(capsys):
    code, _, err = run_cli(capsys, "basis", "--d", "30", "--n", "10", "--cap", "100")
    assert code == 2
    assert "cap" in err


def test_particle_guard_exits_2(bs_file, capsys):
    code, _, err = run_cli(
        capsys, "amplitude", bs_file, "--in", "20,20", "--out", "20,20", "--perm-guard", "8"
    )
    assert code == 2
    assert "guard" in err


def test_non_unitary_matrix_exits_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(matrix_to_jsonable(np.ones((2, 2)))))
    code, _, err = run_cli(capsys, "distribution", str(path), "--in", "1,1")
    assert code == 3
    assert "not unitary" in err


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(unitarity_tol=-1.0)
    with pytest.raises(ValueError):
        RunConfig(basis_cap=0)
    with pytest.raises(ValueError):
        RunConfig(threads=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_threads_flag_gives_identical_output(tmp_path, capsys):
    _, ujson, _ = run_cli(capsys, "random-unitary", "--d", "5", "--seed", "3")
    path = tmp_path / "u5.json"
    path.write_text(ujson)
    base = ("distribution", str(path), "--in", "1,1,1,0,0")
    _, serial, _ = run_cli(capsys, *base, "--threads", "1")
    _, threaded, _ = run_cli(capsys, *base, "--threads", "4")
    assert serial == threaded

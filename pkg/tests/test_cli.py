import json

import pytest

import client


def run_cli(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        client.main(["--quiet", "--workers", "2", *argv])
    out = capsys.readouterr().out
    return info.value.code, (json.loads(out) if out.strip() else None)


def test_codeword_rows(capsys):
    code, report = run_cli(capsys, "codeword", "--torus", "3", "3", "--boundary", "100")
    assert code == client.EXIT_OK
    assert report["results"]["rows"] == ["100", "202", "112"]
    assert report["results"]["charges"]["sector"] == 1
    assert report["summary"]["fail"] == 0


def test_codeword_signed_boundary_and_file(capsys, tmp_path):
    out = tmp_path / "codeword.txt"
    code, report = run_cli(capsys, "codeword", "--boundary", "1,-1,0", "--out", str(out))
    assert code == client.EXIT_OK
    assert report["inputs"]["boundary"] == [1, 2, 0]
    assert out.read_text(encoding="utf-8").splitlines()[:2] == ["# torus 3 3", "120"]


def test_codeword_on_inadmissible_torus(capsys):
    code, report = run_cli(capsys, "codeword", "--torus", "3", "2", "--boundary", "100")
    assert code == client.EXIT_USAGE
    assert report is None


def test_codeword_wrong_length(capsys):
    code, _ = run_cli(capsys, "codeword", "--boundary", "1000")
    assert code == client.EXIT_USAGE


def test_bad_boundary_trits(capsys):
    code, _ = run_cli(capsys, "codeword", "--boundary", "105")
    assert code == client.EXIT_USAGE


def test_admissible_table_and_csv(capsys, tmp_path):
    csv = tmp_path / "periods.csv"
    code, report = run_cli(capsys, "admissible", "--n", "3..9", "--m-max", "100", "--csv", str(csv))
    assert code == client.EXIT_OK
    table = {row["n"]: row for row in report["results"]["table"]}
    assert table[3]["minimal_m"] == 3
    assert table[9]["minimal_m"] == 9
    assert table[4]["singular"]
    assert csv.read_text(encoding="utf-8").splitlines()[1] == "3,3,3 6 9"


def test_admissible_rejects_n_below_2(capsys):
    code, _ = run_cli(capsys, "admissible", "--n", "1")
    assert code == client.EXIT_USAGE


def test_distance(capsys):
    code, report = run_cli(capsys, "distance", "--torus", "3", "3")
    assert code == client.EXIT_OK
    results = report["results"]
    assert (results["n"], results["m"]) == (3, 3)
    assert results["min_distance"] == 6
    assert not results["upper_bound"]
    assert results["sector_counts"] == {"0": 9, "1": 9, "2": 9}
    assert results["charge_constant"] is True


def test_distance_on_patch_has_no_charges(capsys):
    code, report = run_cli(capsys, "distance", "--patch", "3", "3")
    assert code == client.EXIT_OK
    assert report["results"]["charge_constant"] is None
    assert sum(report["results"]["sector_counts"].values()) == 27


def test_entropy_triangle(capsys):
    code, report = run_cli(capsys, "entropy", "--torus", "3", "3", "--region", "triangle", "--brute-force")
    assert code == client.EXIT_OK
    assert report["results"]["rank"]["entropy"] == 2
    assert report["summary"]["pass"] == 1


def test_entropy_topological(capsys):
    code, report = run_cli(capsys, "entropy", "--torus", "9", "9", "--region", "topo")
    assert code == client.EXIT_OK
    assert report["results"]["topological_entropy"] == -1


def test_spectrum_sector(capsys):
    code, report = run_cli(capsys, "spectrum", "--operator", "hx", "--sector", "0")
    assert code == client.EXIT_OK
    results = report["results"]
    values = [(e["value"], e["multiplicity"]) for e in results["sector_spectrum"]["eigenvalues"]]
    assert values == [(-6.0, 1), (0.0, 6), (3.0, 2)]
    assert results["eigenvalues"] == results["sector_spectrum"]["eigenvalues"]
    assert (results["operator"], results["sector"], results["ground_degeneracy"]) == ("hx", 0, 1)


def test_spectrum_boundary(capsys):
    code, report = run_cli(capsys, "spectrum", "--operator", "boundary", "--n", "4")
    assert code == client.EXIT_OK
    results = report["results"]
    assert results["ground_space"]["degeneracy"] == results["ground_degeneracy"] == 3
    assert results["ground_space"]["energy"] == -12.0
    assert results["eigenvalues"][0] == {"value": -12.0, "multiplicity": 3}
    assert results["operator"] == "boundary"
    assert results["sector"] is None


def test_spectrum_leakage_is_a_usage_error(capsys):
    code, _ = run_cli(capsys, "spectrum", "--operator", "hx-prime", "--sector", "0")
    assert code == client.EXIT_USAGE


def test_spectrum_general_guard(capsys):
    code, _ = run_cli(capsys, "spectrum", "--operator", "hx-general", "--k", "3")
    assert code == client.EXIT_USAGE


def test_constraints(capsys):
    code, report = run_cli(capsys, "constraints")
    assert code == client.EXIT_OK
    assert report["results"]["rank"] == 6
    assert report["results"]["general_vs_explicit"]["same_term_set"]


def test_ame(capsys):
    code, report = run_cli(capsys, "ame")
    assert code == client.EXIT_OK
    assert report["results"]["ame"]


def test_verify_all_k1(capsys):
    code, report = run_cli(capsys, "verify-all", "--k", "1")
    assert code == client.EXIT_OK
    assert report["summary"]["fail"] == 0
    names = {c["name"] for c in report["checks"]}
    assert "code.min_distance" in names
    assert "spectra.sector_0_spectrum" in names


@pytest.mark.slow
def test_verify_all_k2(capsys):
    code, report = run_cli(capsys, "verify-all", "--k", "2")
    assert code == client.EXIT_OK
    assert report["summary"]["fail"] == 0
    checks = {c["name"]: c for c in report["checks"]}
    assert checks["code.min_distance"]["observed"] == 36
    assert checks["code.pairwise_min_distance"]["status"] == "pass"
    assert checks["spectra.dense_spectra"]["status"] == "skipped"
    assert checks["entanglement.topological_triangle"]["status"] == "pass"


def test_verify_all_rejects_large_k(capsys):
    code, _ = run_cli(capsys, "verify-all", "--k", "3")
    assert code == client.EXIT_USAGE


def test_reports_are_deterministic(capsys):
    argv = ("--seed", "7", "distance", "--torus", "9", "9", "--samples", "200")
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    first.pop("wall_time")
    second.pop("wall_time")
    assert first == second
    assert first["results"]["upper_bound"]


def test_json_to_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, stdout = run_cli(capsys, "--json", str(path), "ame")
    assert code == client.EXIT_OK
    assert stdout is None
    assert json.loads(path.read_text(encoding="utf-8"))["command"] == "ame"

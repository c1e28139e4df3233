import json

from partsat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_w_reports_edges(capsys, tmp_path):
    out_prefix = str(tmp_path / "w432")
    code, out, err = run(
        capsys, "construct", "--family", "w", "--l", "4", "--k", "3",
        "--n", "2", "--out", out_prefix,
    )
    assert code == 0
    assert "edges 6" in out
    assert "matches known_value" in out
    assert (tmp_path / "w432.g6").exists()
    assert (tmp_path / "w432.parts.json").exists()
    meta = json.loads((tmp_path / "w432.meta.json").read_text())
    assert meta["family"] == "w"


def test_construct_y_edges(capsys):
    code, out, err = run(capsys, "construct", "--family", "y", "--k", "5", "--n", "2")
    assert code == 0
    assert "edges 11" in out


def test_construct_gamma_53_errors(capsys):
    code, out, err = run(capsys, "construct", "--family", "gamma", "--l", "5", "--k", "3")
    assert code == 1
    assert "(5,3) excluded" in err


def test_verify_roundtrip_exit_codes(capsys, tmp_path):
    prefix = str(tmp_path / "w432")
    run(capsys, "construct", "--family", "w", "--l", "4", "--k", "3",
        "--n", "2", "--out", prefix)
    code, out, err = run(capsys, "verify", "--in", prefix + ".g6", "--l", "4")
    assert code == 0
    code, out, err = run(capsys, "verify", "--in", prefix, "--l", "5")
    assert code == 2
    code, out, err = run(capsys, "verify", "--in", prefix, "--l", "4", "--budget", "1")
    assert code == 3


def test_verify_json_matches_report_file(capsys, tmp_path):
    prefix = str(tmp_path / "hex")
    run(capsys, "construct", "--family", "matched-tripartite", "--n", "2",
        "--out", prefix)
    code, out, err = run(
        capsys, "verify", "--in", prefix, "--l", "5", "--json", "--out", prefix
    )
    assert code == 0
    on_disk = (tmp_path / "hex.report.json").read_text()
    assert out == on_disk


def test_verify_missing_file_is_usage_error(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "--in", str(tmp_path / "nope"), "--l", "4")
    assert code == 1


def test_solve_matches_registry(capsys):
    code, out, err = run(capsys, "solve", "--k", "3", "--n", "2", "--l", "4")
    assert code == 0
    assert "6 (matches Thm 1.5)" in out


def test_solve_greedy_and_budget(capsys):
    code, out, err = run(
        capsys, "solve", "--k", "3", "--n", "2", "--l", "4",
        "--mode", "greedy", "--seed", "1",
    )
    assert code == 0
    assert "greedy upper bound" in out
    code, out, err = run(
        capsys, "solve", "--k", "3", "--n", "3", "--l", "4", "--budget", "5"
    )
    assert code == 3
    assert "inconclusive" in out


def test_solve_open_cell_reported(capsys):
    code, out, err = run(capsys, "solve", "--k", "4", "--n", "1", "--l", "4")
    assert code == 0
    assert "resolves an open cell" in out


def test_table_cells(capsys):
    code, out, err = run(capsys, "table", "--max-k", "5", "--max-l", "6", "--n", "3")
    assert code == 0
    assert "= 10 (Thm 1.6)" in out
    code, out, err = run(capsys, "table", "--max-k", "4", "--max-l", "5", "--n", "2")
    assert "8 <= . <= 9" in out

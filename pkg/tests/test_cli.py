import math

import pytest

from rindler_ferm.cli import (
    CSV_HEADER,
    ConfigError,
    main,
    parse_r_grid,
    parse_tol_overrides,
)


# --- parsing helpers -----------------------------------------------------------


def test_parse_r_grid_explicit_list():
    assert parse_r_grid("0,0.3,pi/4") == [0.0, 0.3, math.pi / 4]
    assert parse_r_grid("") == []


def test_parse_r_grid_linspace():
    grid = parse_r_grid("5@0:pi/4")
    assert len(grid) == 5
    assert grid[0] == 0.0
    assert grid[-1] == math.pi / 4
    assert parse_r_grid("1@0.2:0.7") == [0.2]


def test_parse_r_grid_errors():
    with pytest.raises(ConfigError):
        parse_r_grid("abc")
    with pytest.raises(ConfigError):
        parse_r_grid("5@0")
    with pytest.raises(ConfigError):
        parse_r_grid("x@0:1")
    with pytest.raises(ConfigError):
        parse_r_grid("0@0:1")


def test_parse_tol_overrides():
    assert parse_tol_overrides("annihilation=1e-9, psd=1e-8") == {
        "annihilation": 1e-9,
        "psd": 1e-8,
    }
    with pytest.raises(ConfigError):
        parse_tol_overrides("annihilation")


# --- sweep -----------------------------------------------------------------------


def read_rows(path):
    lines = path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    return [line.split(",") for line in lines[1:]]


def test_sweep_writes_deterministic_csv(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = [
        "sweep", "--scenario", "vacuum-one", "--field", "dirac",
        "--modes", "2", "--r-grid", "0,0.3,pi/4",
    ]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert b"\r" not in out1.read_bytes()
    rows = read_rows(out1)
    assert len(rows) == 3
    assert all(row[0] == "vac-one-dirac" and row[1] == "2" for row in rows)
    assert float(rows[0][3]) == 0.5
    assert float(rows[-1][6]) == pytest.approx(0.25, abs=1e-15)
    for row in rows:
        assert float(row[5]) < 1e-10
        assert float(row[4]) == pytest.approx(float(row[6]), abs=1e-10)


def test_sweep_empty_grid_gives_header_only(tmp_path):
    out = tmp_path / "empty.csv"
    assert main(["sweep", "--r-grid", "", "--out", str(out)]) == 0
    assert out.read_text() == CSV_HEADER + "\n"


def test_sweep_to_stdout(capsys):
    assert main(["sweep", "--modes", "1", "--r-grid", "0"]) == 0
    captured = capsys.readouterr().out.splitlines()
    assert captured[0] == CSV_HEADER
    assert captured[1].startswith("vac-one-dirac,1,0.0,0.5,")


def test_sweep_with_acceleration_grid(tmp_path):
    out = tmp_path / "a.csv"
    assert main([
        "sweep", "--scenario", "bell", "--field", "dirac", "--modes", "1",
        "--a-grid", "1e12", "--k0", "1", "--c", "1", "--out", str(out),
    ]) == 0
    (row,) = read_rows(out)
    assert float(row[6]) == pytest.approx(0.25, abs=1e-9)


def test_sweep_beyond_bruteforce_leaves_column_empty(tmp_path):
    out = tmp_path / "big.csv"
    assert main([
        "sweep", "--field", "spinless", "--modes", "16",
        "--r-grid", "0.4", "--out", str(out),
    ]) == 0
    (row,) = read_rows(out)
    assert row[4] == ""
    assert float(row[5]) < 1e-11


def test_sweep_require_bruteforce_capacity_exit(tmp_path):
    code = main([
        "sweep", "--field", "dirac", "--modes", "6", "--r-grid", "0.4",
        "--require-bruteforce", "--out", str(tmp_path / "x.csv"),
    ])
    assert code == 3


def test_dump_rho_files(tmp_path):
    dump = tmp_path / "rhos"
    assert main([
        "sweep", "--modes", "1", "--r-grid", "0,0.3",
        "--out", str(tmp_path / "s.csv"), "--dump-rho", str(dump),
    ]) == 0
    files = sorted(p.name for p in dump.iterdir())
    assert files == [
        "rho_vac-one-dirac_n1_0000.csv",
        "rho_vac-one-dirac_n1_0001.csv",
    ]
    header = (dump / files[0]).read_text().splitlines()[0]
    assert header == "row,col,re,im"


def test_thread_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("RINDLER_FERM_THREADS", "2")
    out = tmp_path / "t.csv"
    assert main(["sweep", "--modes", "1", "--r-grid", "3@0:pi/4", "--out", str(out)]) == 0
    assert len(read_rows(out)) == 3
    monkeypatch.setenv("RINDLER_FERM_THREADS", "zero")
    assert main(["sweep", "--modes", "1", "--r-grid", "0"]) == 2


# --- config validation --------------------------------------------------------------


def test_invalid_mode_count_is_config_error():
    assert main(["verify", "--modes", "0"]) == 2


def test_bell_spinless_rejected():
    assert main(["sweep", "--scenario", "bell", "--field", "spinless", "--r-grid", "0"]) == 2


def test_r_out_of_range_rejected():
    assert main(["sweep", "--r-grid", "1.0"]) == 2


def test_both_grids_rejected():
    assert main(["sweep", "--r-grid", "0", "--a-grid", "1"]) == 2


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# sweep defaults\nscenario=vacuum-one\nfield=spinless\nmodes=3\nr-grid=0,0.2\n"
    )
    out = tmp_path / "out.csv"
    assert main([
        "sweep", "--config", str(config), "--modes", "2", "--out", str(out),
    ]) == 0
    rows = read_rows(out)
    assert len(rows) == 2
    assert all(row[0] == "vac-one-spinless" and row[1] == "2" for row in rows)


def test_malformed_config_file(tmp_path):
    config = tmp_path / "bad.cfg"
    config.write_text("scenario vacuum-one\n")
    assert main(["sweep", "--config", str(config)]) == 2


# --- blocks --------------------------------------------------------------------------


def test_blocks_table_vac_one_dirac_n2(capsys):
    assert main(["blocks", "--scenario", "vacuum-one", "--field", "dirac", "--modes", "2"]) == 0
    out = capsys.readouterr().out
    assert "all multiplicities match" in out
    counts = [line.split()[1] for line in out.splitlines()[2:6]]
    assert counts == ["1", "3", "3", "1"]


def test_blocks_table_spinless_n4(capsys):
    assert main(["blocks", "--field", "spinless", "--modes", "4"]) == 0
    counts = [line.split()[1] for line in capsys.readouterr().out.splitlines()[2:6]]
    assert counts == ["1", "3", "3", "1"]


def test_blocks_bell_n1(capsys):
    assert main(["blocks", "--scenario", "bell", "--field", "dirac", "--modes", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[2].split() == ["0", "1", "1", "yes"]
    assert len(lines) == 4


def test_blocks_beyond_capacity_skips_extraction(capsys):
    assert main(["blocks", "--field", "spinless", "--modes", "16"]) == 0
    assert "skipped" in capsys.readouterr().out


# --- verify ---------------------------------------------------------------------------


def test_verify_passes_on_default_build(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "RESULT: PASS" in out
    assert out.count("PASS") >= 9


def test_verify_fails_with_absurd_tolerance(capsys):
    assert main(["verify", "--tol", "negativity-bruteforce=1e-30"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_unknown_tolerance_is_config_error():
    assert main(["verify", "--tol", "nonsense=1e-3"]) == 2

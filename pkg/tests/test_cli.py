import csv
import io
import json
import math
import os

import pytest

from quantfield.cli import CSV_HEADER, main


def run(argv, capsys):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_curvature_json_records(capsys):
    rc, out, _ = run(["curvature", "--model", "group:su2", "--corrected",
                      "--k", "0,1,2", "--im-s", "1"], capsys)
    assert rc == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 3
    for rec in records:
        assert abs(rec["kappa"]) < 1e-6
        assert rec["model"] == "group:su2"
        assert rec["corrected"] is True
        assert set(rec) >= {"model", "corrected", "k", "s", "log_p", "kappa",
                            "method", "tolerances"}


def test_p_value(capsys):
    rc, out, _ = run(["p-value", "--model", "torus:1", "--k", "2",
                      "--im-s", "1"], capsys)
    assert rc == 0
    rec = json.loads(out)
    # log p = (1/2) log y + b + k^2 y with b = -log y: at y=1 just k^2 y
    assert rec["log_p"] == pytest.approx(4.0 + 0.5 * math.log(math.pi),
                                         abs=1e-9)
    assert rec["kappa"] is None


def test_flatness_witness(capsys):
    rc, out, _ = run(["flatness", "--model", "group:su2", "--k", "0,1",
                      "--im-s", "1,2"], capsys)
    assert rc == 0
    payload = json.loads(out)
    assert payload["verdict"] == "NotProjectivelyFlat"
    assert payload["witness"]["gap"] == pytest.approx(1 / 9, abs=1e-6)


def test_sweep_csv_header_and_order(capsys, monkeypatch):
    monkeypatch.setenv("QUANTFIELD_THREADS", "4")
    rc, out, _ = run(["sweep", "--model", "torus:1", "--k", "2,0,10",
                      "--im-s", "1,0.5", "--format", "csv"], capsys)
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    ks = [int(r[2]) for r in rows[1:]]
    ys = [float(r[4]) for r in rows[1:]]
    assert ks == [0, 0, 2, 2, 10, 10]       # numeric, not lexicographic
    assert ys == [0.5, 1.0, 0.5, 1.0, 0.5, 1.0]


def test_byte_stable(capsys):
    argv = ["sweep", "--model", "circle:1.0", "--k", "3", "--im-s", "1",
            "--format", "csv"]
    _, out1, _ = run(argv, capsys)
    _, out2, _ = run(argv, capsys)
    assert out1 == out2


def test_asymptote(capsys):
    rc, out, _ = run(["asymptote", "--model", "sphere:2", "--k", "10",
                      "--im-s", "1"], capsys)
    assert rc == 0
    rec = json.loads(out)
    assert rec["asymptote"] == pytest.approx(-1 / (8 * 21 ** 2))
    assert abs(rec["ratio"] - 1.0) < 0.25


def test_transport(capsys):
    rc, out, _ = run(["transport", "--example", "abelian-area",
                      "--loop", "unit-square"], capsys)
    assert rc == 0
    rec = json.loads(out)
    assert rec["magnitude"] == pytest.approx(1.0, abs=1e-9)
    assert abs(rec["argument"]) == pytest.approx(1.0, abs=1e-9)
    assert rec["off_scalar"] < 1e-10


def test_invalid_model_exit_code(capsys):
    rc, _, err = run(["curvature", "--model", "nonagon:7"], capsys)
    assert rc == 2
    assert "nonagon" in err


def test_bad_flag_exit_code(capsys):
    assert main(["curvature", "--frobnicate"]) == 2


def test_missing_subcommand(capsys):
    assert main([]) == 2


def test_show_config(capsys):
    rc, out, _ = run(["curvature", "--model", "torus:2", "--show-config"],
                     capsys)
    assert rc == 0
    cfg = json.loads(out)
    assert cfg["model"] == "torus:2"
    assert cfg["fmt"] == "json"


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("model = torus:1\nk_values = 5\nim_s = 2\nfmt = csv\n")
    rc, out, _ = run(["curvature", "--config", str(cfg)], capsys)
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][0] == "torus:1" and rows[1][2] == "5"
    # flags override the file
    rc, out, _ = run(["curvature", "--config", str(cfg), "--k", "1"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][2] == "1"


def test_config_json_file(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"model": "circle:0.5", "k_values": [1],
                               "im_s": [1.0]}))
    rc, out, _ = run(["p-value", "--config", str(cfg)], capsys)
    assert rc == 0
    assert json.loads(out)["model"] == "circle:0.5"


def test_unknown_config_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("banana = 3\n")
    assert main(["curvature", "--config", str(cfg)]) == 2


def test_output_file(tmp_path, capsys):
    dest = tmp_path / "out.jsonl"
    rc, out, _ = run(["curvature", "--model", "torus:1", "--k", "0",
                      "--im-s", "1", "--output", str(dest)], capsys)
    assert rc == 0 and out == ""
    assert json.loads(dest.read_text())["model"] == "torus:1"


def test_verify_subset(capsys):
    rc, out, _ = run(["verify", "--checks",
                      "character-weight-sum,half-form-density-duality"],
                     capsys)
    assert rc == 0
    assert "2/2 checks passed" in out
    assert "PASS" in out

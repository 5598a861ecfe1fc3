import json
import os

import pytest

from polyunion.cli import main
from polyunion.polyfile import loads


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_cross(tmp_path, capsys):
    out = tmp_path / "q3.poly"
    code, stdout, _ = run(capsys, "build", "cross", "--d", "3", "-o", str(out))
    assert code == 0
    assert "facets=8" in stdout
    obj, comments = loads(out.read_text())
    assert obj.nrows == 8 and obj.dim == 3


def test_build_liftproject(tmp_path, capsys):
    out = tmp_path / "p3.poly"
    code, stdout, _ = run(capsys, "build", "liftproject", "--d", "3",
                          "-o", str(out))
    assert code == 0
    obj, _ = loads(out.read_text())
    assert obj.nrows == 10


def test_build_guard_exits_2(capsys):
    code, _, err = run(capsys, "build", "cayley", "--d", "4")
    assert code == 2 and "guard" in err


def test_convert_roundtrip_byte_identical(tmp_path, capsys):
    poly = tmp_path / "c.poly"
    code, _, _ = run(capsys, "build", "cyclic", "--d", "2", "--k", "5",
                     "-o", str(poly))
    assert code == 0
    as_json = tmp_path / "c.json"
    assert run(capsys, "convert", str(poly), "--format", "json",
               "-o", str(as_json))[0] == 0
    back = tmp_path / "c2.poly"
    assert run(capsys, "convert", str(as_json), "--format", "text",
               "-o", str(back))[0] == 0
    assert poly.read_bytes() == back.read_bytes()


def test_convert_bad_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.poly"
    bad.write_text("H 2 1\n1 1\n")
    code, _, err = run(capsys, "convert", str(bad), "--format", "json")
    assert code == 2


def test_verify_construction_d2(capsys):
    code, stdout, _ = run(capsys, "verify", "construction", "--d", "2")
    assert code == 0
    report = json.loads(stdout)
    assert report["pass"] and report["counts"]["colorful_facets"] == 4


def test_verify_balas_small(capsys):
    code, stdout, _ = run(capsys, "verify", "balas", "--d", "1",
                          "--trials", "3", "--seed", "7")
    assert code == 0
    report = json.loads(stdout)
    assert report["pass"] and report["params"]["seed"] == 7


def test_verify_bigm(capsys):
    code, stdout, _ = run(capsys, "verify", "bigm")
    assert code == 0
    report = json.loads(stdout)
    assert report["pass"] and report["counts"]["factor_witness"] is not None


def test_verify_approx_guard(capsys):
    code, _, err = run(capsys, "verify", "approx", "--d", "13")
    assert code == 2


def test_verify_bad_rational_exits_2(capsys):
    code, _, err = run(capsys, "verify", "approx", "--d", "4",
                       "--delta", "0.5x")
    assert code == 2


def test_report_bound(capsys):
    code, stdout, _ = run(capsys, "report", "bound", "--fP", "1024",
                          "--fQ", "40")
    assert code == 0
    assert json.loads(stdout)["min_m"] == 1


def test_report_bound_missing_params(capsys):
    assert run(capsys, "report", "bound")[0] == 2


def test_report_summary(tmp_path, capsys):
    code, stdout, _ = run(capsys, "report", "summary",
                          "--workspace", str(tmp_path))
    assert code == 0 and json.loads(stdout) == []


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("POLYUNION_THREADS", "zero")
    code, _, err = run(capsys, "report", "summary", "--workspace", ".")
    assert code == 2 and "POLYUNION_THREADS" in err

import json
import math
import subprocess
import sys

import pytest

from dilog_zeros import cli
from dilog_zeros.polylog import eulerian, find_polylog_zeros
from dilog_zeros.zero_finder import find_zero


def run(args, capsys):
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def load_jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line]


def test_zero_example(capsys):
    code, out, _ = run(["zero", "0", "-1", "--json"], capsys)
    assert code == 0
    rec = load_jsonl(out)[0]
    assert rec["kind"] == "zero" and rec["schema_version"] == "1"
    z = cli.decode_complex(rec["payload"]["zero"])
    assert z == find_zero((0, -1)).zero  # bit-for-bit
    assert abs(z - complex(0.91619781620686, -0.18245889720714)) < 1e-13


def test_zero_text_output(capsys):
    code, out, _ = run(["zero", "1", "0"], capsys)
    assert code == 0
    assert "-5995.08558" in out
    assert "error_radius" in out and "iterations" in out


def test_zero_unsupported(capsys):
    code, _, err = run(["zero", "2", "3"], capsys)
    assert code == 2
    assert "no zero: requires -|B|/2 < A <= |B|/2" in err


def test_usage_errors(capsys):
    assert run(["nope"], capsys)[0] == 1
    assert run(["zero", "x", "1"], capsys)[0] == 1
    assert run([], capsys)[0] == 1
    assert run(["eulerian", "0"], capsys)[0] == 1


def test_table(tmp_path, capsys):
    p = tmp_path / "t.jsonl"
    assert run(["table", "1", "--out", str(p)], capsys)[0] == 0
    recs = load_jsonl(p.read_text())
    assert [(r["payload"]["A"], r["payload"]["B"]) for r in recs] == [(0, -1), (0, 0), (1, 0), (0, 1)]
    p3 = tmp_path / "t3.jsonl"
    run(["table", "3", "--out", str(p3)], capsys)
    branches = [(r["payload"]["A"], r["payload"]["B"]) for r in load_jsonl(p3.read_text())]
    assert (1, 3) in branches and (-1, 3) in branches
    assert branches == sorted(branches, key=lambda b: (b[1], b[0]))
    again = tmp_path / "t3b.jsonl"
    run(["table", "3", "--out", str(again)], capsys)
    assert again.read_bytes() == p3.read_bytes()


def test_table_parallel_is_identical(tmp_path, capsys, monkeypatch):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run(["table", "4", "--out", str(a)], capsys)
    monkeypatch.setenv("DILOG_ZEROS_THREADS", "3")
    run(["table", "4", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_threads_env(monkeypatch):
    monkeypatch.delenv("DILOG_ZEROS_THREADS", raising=False)
    assert cli.worker_count() == 1
    monkeypatch.setenv("DILOG_ZEROS_THREADS", "0")
    assert cli.worker_count() >= 1
    monkeypatch.setenv("DILOG_ZEROS_THREADS", "bad")
    with pytest.raises(cli.UsageError):
        cli.worker_count()


@pytest.mark.parametrize("amax,bmax", [(0, 0), (5, 5), (10, 10)])
def test_verify(amax, bmax, capsys):
    code, out, _ = run(["verify", str(amax), str(bmax)], capsys)
    assert code == 0
    assert "0 mismatches" in out


def test_verify_json(capsys):
    code, out, err = run(["verify", "1", "2", "--json"], capsys)
    assert code == 0
    recs = load_jsonl(out)
    assert len(recs) == 9 and all(r["kind"] == "count" for r in recs)
    assert all(r["payload"]["count"] == r["payload"]["expected"] for r in recs)


def test_curves(tmp_path, capsys):
    p = tmp_path / "c.csv"
    assert run(["curves", "0", "1", "100", "--out", str(p)], capsys)[0] == 0
    lines = p.read_text().splitlines()
    assert lines[0] == "curve,param,value,residual"
    rows = [l.split(",") for l in lines[1:]]
    assert len(rows) == 200
    assert all(abs(float(r[3])) < 1e-10 for r in rows)
    # the two curves cross near 0.916 + 0.182i
    g = [(float(r[1]), float(r[2])) for r in rows if r[0] == "g"]
    h = [(float(r[1]), float(r[2])) for r in rows if r[0] == "h"]
    z = complex(0.916, 0.182)
    assert min(abs(r * complex(math.cos(t), math.sin(t)) - z) for t, r in g) < 5e-3
    assert min(abs(r * complex(math.cos(t), math.sin(t)) - z) for r, t in h) < 5e-3


def test_curves_unsupported(capsys):
    assert run(["curves", "0", "0", "10"], capsys)[0] == 2


def test_polylog_csv(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["polylog", "-10", "-44", "--jmax", "139", "--out", str(a)], capsys)[0] == 0
    run(["polylog", "-10", "-44", "--jmax", "139", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "j,seed_re,seed_im,zero_re,zero_im,dist"
    assert len(lines) - 1 == 140
    zs = find_polylog_zeros(complex(-10, -44), 139)
    for line, z in zip(lines[1:], zs.zeros):
        f = line.split(",")
        assert complex(float(f[3]), float(f[4])) == z


def test_polylog_strip(capsys):
    assert run(["polylog", "0.5", "1"], capsys)[0] == 1


def test_polylog_positive_s_reference_zero(tmp_path, capsys):
    p = tmp_path / "p.csv"
    assert run(["polylog", "10", "44", "--out", str(p)], capsys)[0] == 0
    rows = [l.split(",") for l in p.read_text().splitlines()[1:]]
    d = min(abs(complex(float(r[3]), float(r[4])) - complex(21.1251, -6.7895)) for r in rows)
    assert d < 1e-2


def test_eulerian_cmd(capsys):
    code, out, _ = run(["eulerian", "4"], capsys)
    assert code == 0 and "1,11,11,1" in out
    code, out, _ = run(["eulerian", "10", "--json"], capsys)
    p = load_jsonl(out)[0]["payload"]
    assert p["coefficients"] == list(eulerian(10).coeffs)
    nine = [r for r in p["zeros"] if r["j"] == 9][0]
    assert round(nine["zero"], 2) == -963.85 and round(nine["approx"], 2) == -971.78
    code, out, _ = run(["eulerian", "1", "--json"], capsys)
    assert load_jsonl(out)[0]["payload"]["zeros"] == []


def test_json_round_trip():
    vals = [0.1, 1 / 3, -5995.085581553156, 1e-300, 2.0 ** -1074, math.pi * 1e200]
    for v in vals:
        assert float(cli.fmt_float(v)) == v
    rec = cli.record("zero", {"z": complex(1 / 3, -2 / 7), "xs": vals, "big": 10 ** 40})
    back = json.loads(cli.encode(rec))
    assert cli.decode_complex(back["payload"]["z"]) == complex(1 / 3, -2 / 7)
    assert back["payload"]["xs"] == vals
    assert back["payload"]["big"] == 10 ** 40


def test_console_module_entry():
    r = subprocess.run([sys.executable, "-m", "dilog_zeros", "zero", "0", "1"], capture_output=True, text=True)
    assert r.returncode == 0 and "0.91619781620686" in r.stdout

import json
import subprocess
import sys

import pytest

from pergolay import dataset
from pergolay.cli import main
from pergolay.equiv import AffineTransform, transform
from pergolay.pairs import format_pair, sds_to_pair
from pergolay.sds import Sds, format_sds


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, sds34):
    g2 = tmp_path / "g2.txt"
    g2.write_text("-+\n++\n")
    p34 = tmp_path / "p34.txt"
    p34.write_text(format_pair(*sds_to_pair(sds34)))
    ones = tmp_path / "ones.txt"
    ones.write_text("++++\n++++\n")
    return {"g2": str(g2), "p34": str(p34), "ones": str(ones), "dir": tmp_path}


def test_verify_dataset(capsys):
    code, out, _ = run(capsys, "verify", "--dataset", "72-1")
    assert code == 0 and "(72;36,30;30)" in out and "result:     PASS" in out
    code, out, _ = run(capsys, "verify", "--dataset", "34", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["params"] == "(34;16,13;12)" and rep["result"] == "PASS"


def test_verify_failures(capsys, files, tmp_path):
    code, out, _ = run(capsys, "verify", files["ones"])
    assert code == 1 and "FAIL" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("v=4 {9}")
    assert run(capsys, "verify", str(bad))[0] == 2
    assert run(capsys, "verify", "no-such-thing")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--dataset", "nope")[0] == 2


def test_verify_pair_file(capsys, files):
    code, out, _ = run(capsys, "verify", files["p34"])
    assert code == 0 and "(34;16,13;12)" in out


def test_params(capsys):
    _, out, _ = run(capsys, "params", "--max", "4")
    assert len(out.splitlines()) == 3  # header + two rows
    _, out, _ = run(capsys, "params", "--max", "2")
    assert len(out.splitlines()) == 2
    _, out, _ = run(capsys, "params", "--max", "72")
    assert out.splitlines()[-1].split()[:4] == ["72", "36", "30", "30"]
    _, out, _ = run(capsys, "params", "--max", "10", "--format", "json")
    assert [r["v"] for r in json.loads(out)] == [2, 4, 8, 10]


def test_lengths(capsys):
    _, out, _ = run(capsys, "lengths", "--max", "300")
    first, note = out.splitlines()[:2]
    assert {90, 298} <= set(map(int, first.split()))
    assert "Arasu-Xiang" in note
    _, out, _ = run(capsys, "lengths", "--max", "10", "--format", "json")
    assert json.loads(out)["open"] == []


def test_compress(capsys, files):
    code, out, _ = run(capsys, "compress", files["p34"], "--d", "17")
    rows = [list(map(int, ln.split())) for ln in out.splitlines()]
    assert code == 0 and len(rows) == 2 and all(len(r) == 17 for r in rows)
    assert run(capsys, "compress", files["p34"], "--d", "5")[0] == 2


def test_multiply(capsys, files):
    code, out, _ = run(capsys, "multiply", "--method", "sds", files["g2"], "34")
    assert code == 0 and format_sds(dataset.get("68-P-Q")) in out
    code, out, _ = run(capsys, "multiply", "--method", "turyn", files["g2"], files["p34"], "--format", "json")
    assert code == 0 and Sds.from_record(json.loads(out)["sds"]) == dataset.get("68-R-S")
    g1 = files["dir"] / "g1.txt"
    g1.write_text("+\n+\n")
    assert run(capsys, "multiply", "--method", "turyn", str(g1), "34")[0] == 0
    # not a Golay pair
    assert run(capsys, "multiply", "--method", "turyn", files["ones"], "34")[0] == 1
    assert run(capsys, "multiply", "--method", "sds", files["g2"], files["ones"])[0] == 1


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--v", "8", "--d", "4", "--quiet")
    assert code == 0 and out.strip()
    assert run(capsys, "search", "--v", "6", "--d", "3")[0] == 2
    _, one, _ = run(capsys, "search", "--v", "16", "--d", "8", "--quiet")
    _, four, _ = run(capsys, "search", "--v", "16", "--d", "8", "--threads", "4", "--quiet")
    assert one == four and len(one.splitlines()) == 21


def test_search_out_and_checkpoint(capsys, tmp_path):
    out_file, ck = tmp_path / "sols.jsonl", tmp_path / "ck"
    code, out, _ = run(capsys, "search", "--v", "10", "--d", "5", "--format", "json", "--quiet",
                       "--out", str(out_file), "--checkpoint", str(ck))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines == out.splitlines() and len(lines) == 2
    assert all(json.loads(ln).keys() == {"v", "blocks"} for ln in lines)
    # resumed run finds nothing new but keeps the file
    run(capsys, "search", "--v", "10", "--d", "5", "--quiet", "--out", str(out_file), "--checkpoint", str(ck))
    assert out_file.read_text().splitlines() == lines


def test_search_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("PERGOLAY_THREADS", "2")
    code, out, _ = run(capsys, "search", "--v", "10", "--d", "2", "--quiet")
    assert code == 0 and len(out.splitlines()) == 2


def test_equiv_and_canon(capsys, files, sds34):
    assert run(capsys, "equiv", "72-1", "72-2")[:2] == (0, "inequivalent\n")
    shifted = files["dir"] / "s.json"
    shifted.write_text(transform(sds34, AffineTransform(5, (3, 9))).to_json())
    assert run(capsys, "equiv", "34", str(shifted))[:2] == (0, "equivalent\n")
    assert run(capsys, "equiv", "34", "72-1")[0] == 2
    _, c1, _ = run(capsys, "canon", str(shifted))
    once = files["dir"] / "c1"
    once.write_text(c1)
    _, c2, _ = run(capsys, "canon", str(once))
    assert c1 == c2
    _, c3, _ = run(capsys, "canon", "34", "--format", "json")
    assert Sds.from_json(c3) == Sds.from_record(json.loads(c3))


def test_dataset(capsys):
    _, out, _ = run(capsys, "dataset")
    assert [ln.split()[0] for ln in out.splitlines()] == dataset.ids()
    _, out, _ = run(capsys, "dataset", "72-3", "--format", "json")
    assert Sds.from_json(out) == dataset.get("72-3")
    _, out, _ = run(capsys, "dataset", "34", "--pair")
    assert len(out.split()) == 2
    assert run(capsys, "dataset", "nope")[0] == 2


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "pergolay.cli", "params", "--max", "4"], capture_output=True, text=True)
    assert res.returncode == 0 and "(4" not in res.stderr
    assert len(res.stdout.splitlines()) == 3

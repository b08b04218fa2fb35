import shutil

import pytest

from sdclass import sddb
from sdclass.cli import main

from conftest import FIXTURES


@pytest.fixture(scope="module")
def db_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("db")
    assert main(["classify", "--upto", "14", "--out", str(out)]) == 0
    return out


def test_classify_writes_one_file_per_length(db_dir, capsys):
    names = sorted(p.name for p in db_dir.glob("*.sddb"))
    assert len(names) == 7
    db = sddb.load(db_dir / "sd14.sddb")
    assert db.certified and db.layer_counts() == {2: 3, 4: 1}


def test_classify_resume(db_dir, tmp_path, capsys):
    for n in range(2, 15, 2):
        shutil.copy(db_dir / f"sd{n}.sddb", tmp_path)
    assert main(["classify", "--upto", "18", "--out", str(tmp_path), "--resume"]) == 0
    out = capsys.readouterr().out
    assert "resuming from n=14" in out
    assert "n=18 total=9" in out


def test_classify_rejects_odd_length(tmp_path):
    assert main(["classify", "--upto", "7", "--out", str(tmp_path)]) == 1


def test_classify_max_d_partial(tmp_path, capsys):
    assert main(["classify", "--upto", "8", "--max-d", "2", "--out", str(tmp_path)]) == 0
    assert "n=8 total=1 #2=1 partial" in capsys.readouterr().out


def test_verify(db_dir, capsys):
    assert main(["verify", str(db_dir / "sd12.sddb"), "--recompute-aut"]) == 0
    out = capsys.readouterr().out
    assert "cert weight n=12 d=4" in out and "ok=1" in out
    assert "aut recomputed: ok" in out
    assert "thompson n=12 ok=1" in out


def test_verify_catches_wrong_aut(tmp_path, capsys):
    bad = tmp_path / "bad.sddb"
    bad.write_text((FIXTURES / "c36_golden.sddb").read_text().replace("aut=5760", "aut=2880"))
    assert main(["verify", str(bad), "--recompute-aut"]) == 2


def test_verify_corrupt_file(tmp_path, capsys):
    bad = tmp_path / "bad.sddb"
    bad.write_text("SDDB 1\nnonsense\n")
    assert main(["verify", str(bad)]) == 1
    assert "ParseError" in capsys.readouterr().err


def test_analyze_fixture(capsys):
    assert main(["analyze", str(FIXTURES / "c36_golden.sddb")]) == 0
    out = capsys.readouterr().out
    assert "d=6" in out and "aut=5760" in out
    assert "we=(0,0,12,4)" in out and "s=2" in out and "R=6" in out
    assert "VIOLATION" not in out


def test_analyze_selected_columns(db_dir, capsys):
    assert main(["analyze", str(db_dir / "sd8.sddb"), "--aut"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 2 and all("R=" not in line for line in out)


@pytest.mark.parametrize("kind", ["counts", "we", "aut", "shadow", "cr"])
def test_report_kinds(db_dir, kind, capsys):
    assert main(["report", str(db_dir), "--kind", kind]) == 0
    assert capsys.readouterr().out.strip()


def test_report_counts_chain(db_dir, capsys):
    main(["report", str(db_dir), "--kind", "counts"])
    lines = capsys.readouterr().out.splitlines()
    header = lines[0].split()
    rows = [dict(zip(header, map(int, line.split()))) for line in lines[2:]]
    assert [r["n"] for r in rows] == list(range(2, 15, 2))
    # the weight-2 column at length n is the total at length n - 2
    for prev, cur in zip(rows, rows[1:]):
        assert cur["#2"] == prev["#T"]


def test_report_counts_refuses_uncertified(capsys):
    assert main(["report", str(FIXTURES / "c36_golden.sddb"), "--kind", "counts"]) == 2


def test_bound(capsys):
    assert main(["bound", "--length", "38"]) == 0
    out = capsys.readouterr().out
    assert "13644432.203" in out and "at least 13644433" in out
    assert main(["bound", "--length", "5"]) == 1


def test_usage_errors(capsys):
    assert main([]) == 1
    assert main(["report", "/nonexistent/x.sddb"]) == 1

import csv
import io
import json

import pytest

from ffkdf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_field(capsys):
    code, out, _ = run(capsys, "field", "5")
    rec = records(out)[0]
    assert code == 0 and (rec["q"], rec["generator"]) == (5, 2)
    code, out, _ = run(capsys, "field", "3^2")
    assert records(out)[0]["modulus"] == [1, 0, 1]
    assert run(capsys, "field", "4")[0] == 2
    assert run(capsys, "--field", "7", "field")[0] == 0


def test_chars_and_gauss(capsys):
    code, out, _ = run(capsys, "chars", "5")
    recs = records(out)
    assert code == 0 and len(recs) == 4 and recs[0]["exponents"][0] is None
    code, out, _ = run(capsys, "gauss", "5")
    recs = records(out)
    assert [r["j"] for r in recs] == [0, 1, 2, 3]
    assert recs[2]["float"][0] == pytest.approx(-5 ** 0.5)


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "nFm", "--field", "5", "--num", "0", "--x", "2")
    assert code == 0 and records(out)[0]["float"] == pytest.approx([1.0, 0.0])
    code, out, _ = run(capsys, "eval", "kdf", "--field", "5", "--a", "1", "--b", "2", "--x", "0", "--y", "3")
    assert records(out)[0]["value"]["coeffs"] == [["0", "1"]] * 8
    assert run(capsys, "eval", "F", "--field", "5", "--num", "1,,")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "BASE-01", "--field", "3", "--field", "5", "--field", "7")
    recs = records(out)
    assert code == 0 and [r["field"] for r in recs] == ["3", "5", "7"]
    assert all(r["ms"] is None and r["counterexample"] is None for r in recs)
    assert run(capsys, "verify", "NOPE")[0] == 2
    assert run(capsys, "verify", "FIX-PERTURBED", "--field", "5")[0] == 2
    code, out, _ = run(capsys, "verify", "FIX-PERTURBED", "--field", "5", "--with-fixtures")
    assert code == 1 and records(out)[0]["counterexample"]["case"] == 0


def test_suite_filter_and_csv(capsys):
    code, out, _ = run(capsys, "suite", "--ids", "BASE-1*", "--field", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [r["id"] for r in rows] == ["BASE-10", "BASE-11", "BASE-12", "BASE-13", "BASE-14", "BASE-15"]


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and len(records(out)) == 49
    code, out, _ = run(capsys, "list", "--format", "pretty")
    assert out.startswith("id=BASE-01")


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "suite", "--cap", "0")[0] == 2
    assert run(capsys, "suite", "--seed", "-1")[0] == 2


def test_cache(capsys, tmp_path):
    d = tmp_path / "c"
    assert run(capsys, "cache", "stat", "--cache-dir", str(d))[0] == 3
    assert run(capsys, "cache", "stat")[0] == 3
    code, out, _ = run(capsys, "cache", "warm", "--cache-dir", str(d), "--field", "5", "--field", "2^3")
    assert code == 0 and len(records(out)) == 2
    code, out, _ = run(capsys, "cache", "stat", "--cache-dir", str(d))
    head, *tables = records(out)
    assert head["entries"] == 4 + 7 and sorted(t["entries"] for t in tables) == [4, 7]
    assert run(capsys, "gauss", "5", "--cache-dir", str(d))[0] == 0
    code, out, _ = run(capsys, "cache", "clear", "--cache-dir", str(d))
    assert records(out)[0]["removed"] == 2
    code, out, _ = run(capsys, "cache", "stat", "--cache-dir", str(d))
    assert records(out)[0]["entries"] == 0

"""End-to-end runs of the bitrev-bench command line."""

import pytest

from bitrev.bench import read_csv
from bitrev.cli import main


def test_run_writes_csv(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    code = main([
        "run", "--methods", "bitwise,xor", "--bits", "8..9",
        "--replicates", "2", "--warmup", "1", "--out", str(out),
    ])
    assert code == 0
    records = read_csv(out)
    assert len(records) == 2 * 2 * 2
    assert "8 records" in capsys.readouterr().out


def test_run_single_size_with_verify(tmp_path):
    out = tmp_path / "v.csv"
    code = main([
        "run", "--methods", "semirecursive", "--bits", "10",
        "--replicates", "1", "--warmup", "0", "--verify",
        "--cobra-q", "2", "--threads", "2", "--out", str(out),
    ])
    assert code == 0
    assert len(read_csv(out)) == 1


def test_run_rejects_unknown_method(tmp_path):
    with pytest.raises(ValueError):
        main(["run", "--methods", "na", "--out", str(tmp_path / "x.csv")])


def test_bad_bits_string():
    with pytest.raises(SystemExit):
        main(["run", "--bits", "8..x"])


def test_tune_cobra_prints_best(capsys, tmp_path):
    out = tmp_path / "tune.csv"
    code = main([
        "tune-cobra", "--bits", "8", "--q", "1..3",
        "--replicates", "2", "--out", str(out),
    ])
    assert code == 0
    printed = capsys.readouterr().out
    assert "<- best" in printed
    assert len(read_csv(out)) == 3 * 2


def test_verify_command(capsys):
    code = main(["verify", "--bits", "6"])
    assert code == 0
    printed = capsys.readouterr().out
    assert "swap counts" in printed
    assert "FAIL" not in printed

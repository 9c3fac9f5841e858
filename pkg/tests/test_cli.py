import json
import subprocess
import sys

import pytest

from strangeroot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sr_table(capsys):
    code, out, _ = run(capsys, "sr", "--range", "1", "20", "--format", "table")
    assert code == 0
    top, bottom = out.splitlines()
    assert top.split()[1:] == [str(n) for n in range(1, 21)]
    assert bottom.split()[1:] == "1 2 3 3 4 4 5 5 5 5 6 6 7 7 7 7 7 7 8 8".split()


def test_t_bfile(capsys):
    code, out, _ = run(capsys, "t", "--range", "1", "14", "--format", "bfile")
    assert code == 0
    assert out == "".join(f"{k} {v}\n" for k, v in enumerate(
        [1, 2, 4, 6, 10, 12, 18, 22, 30, 34, 42, 48, 58, 60], start=1))
    code, out2, _ = run(capsys, "t", "--range", "1", "14", "--format", "bfile", "--method", "scan")
    assert out2 == out


def test_single_values(capsys):
    assert run(capsys, "cf", "30", "--format", "bfile")[1] == "30 14\n"
    assert run(capsys, "sr", "10", "--format", "jsonl")[1] == '{"n":10,"sr":5}\n'
    assert run(capsys, "alist", "8")[1] == "<1,8> -> <2,5> -> <3,5> -> <4,5> -> <5,5>\n"
    assert run(capsys, "alist", "8", "--format", "bfile")[1] == "1 8\n2 5\n3 5\n4 5\n5 5\n"
    assert run(capsys, "fagan-seq", "4")[1] == "(2,8) -> (3,7) -> (4,6) -> (5,5)\n"
    assert run(capsys, "tchouk", "10")[1] == "(0,1,1,3,5)\n"
    assert run(capsys, "tchouk", "12", "--method", "recursive")[1] == "(0,0,0,2,4,6)\n"
    assert run(capsys, "inverse", "1", "5")[1] == "7 8\n"


@pytest.mark.parametrize("method", ["formula", "board", "play"])
def test_movevec_methods(capsys, method):
    assert run(capsys, "movevec", "12", "--method", method)[1] == "(6,2,1,1,1,1)\n"


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "1,2")
    assert code == 0
    assert out.splitlines() == ["(1,2)", "hole 1 -> (0,2)", "hole 2 -> (1)", "hole 1 -> ()"]
    assert run(capsys, "solve", "2,1")[1] == "LOSS\n"
    rec = json.loads(run(capsys, "solve", "0,1,1,3,5", "--format", "jsonl")[1])
    assert rec["won"] and rec["selections"] == [5, 1, 2, 1, 4, 1, 3, 1, 2, 1]


def test_xseq(capsys):
    rec = json.loads(run(capsys, "xseq", "14", "--format", "jsonl")[1])
    assert rec["values"][-1] == 60 and not any(rec["divisible"].values())
    lines = run(capsys, "xseq", "5")[1].splitlines()
    assert lines[1].split()[1:] == ["5", "5", "5", "6", "10"]
    assert "*" in lines[2]


def test_scan_output_and_progress(capsys):
    code, out, err = run(capsys, "scan", "2000", "--format", "jsonl", "--progress-interval", "0.0001")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["r"] for r in recs] == [2, 3, 4, 6, 14, 1760]
    assert recs[-1]["preimages"] == [986159, 986160]
    checkpoints = [json.loads(line) for line in err.splitlines()]
    assert checkpoints and all(c["checkpoint"] for c in checkpoints)


def test_scan_deterministic_across_jobs(capsys):
    outs = {run(capsys, "scan", "1500", "--jobs", str(j), "--progress-interval", "0")[1] for j in (1, 2)}
    assert len(outs) == 1


def test_scan_all_with_cap(capsys):
    out = run(capsys, "scan", "9", "--all", "--preimage-cap", "3", "--progress-interval", "0")[1]
    lines = out.splitlines()
    assert lines[4] == "5 4 7..10"
    assert lines[5] == "6 2 11,12 unique"
    recs = [json.loads(x) for x in run(capsys, "scan", "9", "--all", "--preimage-cap", "3", "--format", "jsonl",
                                       "--progress-interval", "0")[1].splitlines()]
    assert recs[4]["preimages"] == {"from": 7, "to": 10}


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.txt"
    code, out, _ = run(capsys, "t", "--range", "1", "5", "--format", "bfile", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "1 1\n2 2\n3 4\n4 6\n5 10\n"


def test_argument_errors(capsys):
    assert run(capsys, "sr")[0] == 2
    assert run(capsys, "sr", "--range", "5", "2")[0] == 2
    assert run(capsys, "solve", "1,a")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["sr", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nosuch"])
    assert exc.value.code == 2


def test_range_error_exit(capsys):
    code, out, err = run(capsys, "scan", str(2**31), "--progress-interval", "0")
    assert code == 1 and out == "" and "range error" in err


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--level", "quick")
    assert code == 0
    assert "FAIL" not in out
    assert "(6,2,2,1,1)" in out and "(6,2,1,1,1,1)" in out
    assert out.splitlines()[-1].endswith("suites passed")


def test_verify_failure_exit(capsys, monkeypatch):
    from strangeroot import verify

    def broken(_):
        raise verify.VerificationError("boom")

    monkeypatch.setattr(verify, "SUITES", [("broken", broken, 0, 0)])
    code, out, _ = run(capsys, "verify")
    assert code == 1 and "FAIL broken" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "strangeroot", "sr", "19"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.split()[-1] == "8"

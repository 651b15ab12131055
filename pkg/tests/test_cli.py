import subprocess
import sys

import pytest

from rootwalk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_positive(capsys):
    code, out, _ = run(capsys, "table", "--kind", "positive", "--rows", "9")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "kind=positive\tt=0\trows=9"
    assert lines[-1] == "14\t28\t20\t7\t1"


def test_table_trinomial(capsys):
    code, out, _ = run(capsys, "table", "--kind", "trinomial", "--rows", "8")
    assert code == 0
    assert out.splitlines()[-1] == "1\t7\t28\t77\t161\t266\t357\t393\t357\t266\t161\t77\t28\t7\t1"
    code, out, _ = run(capsys, "table", "--kind", "trinomial-positive", "--rows", "8")
    assert out.splitlines()[-1] == "127\t196\t189\t133\t70\t27\t7\t1"


def test_identity_eq1(capsys):
    code, out, _ = run(capsys, "identity", "--which", "eq1", "--max", "20")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 21
    assert lines[0] == "eq1\tn=0\tOK"
    assert all(line.endswith("\tOK") for line in lines)


@pytest.mark.parametrize("which", ["eq2", "eq3", "eq4", "ballot", "t2"])
def test_identity_others(capsys, which):
    code, out, _ = run(capsys, "identity", "--which", which, "--max", "8")
    assert code == 0
    assert out and "FAIL" not in out


def test_stats_end(capsys):
    code, out, _ = run(capsys, "stats", "--stat", "end", "--len", "8", "--population", "positive")
    assert code == 0
    assert out == "value\tcount\n0\t14\n2\t28\n4\t20\n6\t7\n8\t1\n"


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["--op", "theorem1", "--walk", "DDUU"], "UUUU"),
        (["--op", "raise", "--walk", "DU"], "UU"),
        (["--op", "lower", "--walk", "DUUU"], "DDUU"),
        (["--op", "theorem1-inv", "--walk", "UUU"], "DUU"),
        (["--op", "theorem1", "--walk", "DN0U"], "UNU"),
        (["--op", "andre", "--seq", "ABBAA"], "BBAAA"),
        (["--op", "reflect-first", "--seq", "ABBAA"], "BABAA"),
        (["--op", "reflect-k", "--seq", "ABBAA", "--k", "2"], "BAABA"),
        (["--op", "lift:andre", "--seq", "ABBAA"], "AAAAA (2 iterations)"),
        (["--op", "lift:andre", "--seq", "AAB"], "AAB (0 iterations)"),
        (["--op", "footnote", "--seq", "ABA"], "BA"),
        (["--op", "theorem2", "--walk=-+.+0"], "++.+0"),
        (["--op", "concat", "--walk", "DU", "--suffix", "UD"], "DUUUD"),
        (["--op", "split", "--walk", "DUUUD"], "DU\tUD"),
    ],
)
def test_apply_examples(capsys, argv, expected):
    code, out, _ = run(capsys, "apply", *argv)
    assert code == 0
    assert out == expected + "\n"


def test_apply_theorem2_with_step_set_file(capsys, tmp_path):
    path = tmp_path / "diag.txt"
    path.write_text("# diagonal\n++\n+-\n-+\n--\n")
    code, out, _ = run(capsys, "apply", "--op", "theorem2", "--walk=--.++", "--step-set", str(path))
    assert code == 0 and out == "++.++\n"


def test_lift_singular(capsys):
    code, out, _ = run(capsys, "apply", "--op", "lift:raise-ballot", "--seq", "ABA")
    assert out == "AAA (1 iteration)\n"


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "--what", "theorem1", "--max-len", "10")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 11
    assert all("\tOK\t" in line for line in lines)
    assert lines[8].startswith("theorem1\tlength=8\tOK\tdomain=70\tcodomain=70")


def test_verify_andre_and_extras(capsys):
    for what in ("andre", "corollary", "stats-equalities", "theorem2"):
        code, out, _ = run(capsys, "verify", "--what", what, "--max-len", "4")
        assert code == 0, what
        assert "FAIL" not in out


@pytest.mark.parametrize(
    "argv,code,name",
    [
        (["verify", "--what", "theorem1", "--max-len", "99"], 2, "CapExceeded"),
        (["verify", "--what", "nope", "--max-len", "3"], 2, "UnknownMap"),
        (["apply", "--op", "raise", "--walk", "UD"], 1, "MinimumIsZero"),
        (["apply", "--op", "lower", "--walk", "UD"], 1, "NotInImage"),
        (["apply", "--op", "andre", "--seq", "AAB"], 1, "NotUgly"),
        (["apply", "--op", "theorem1", "--walk", "UX"], 2, "ParseError"),
        (["apply", "--op", "bogus", "--walk", "U"], 2, "UsageError"),
        (["apply", "--op", "raise"], 2, "UsageError"),
        (["apply", "--op", "raise", "--walk", "U" * 64], 2, "UsageError"),
        (["apply", "--op", "theorem2", "--walk", "+0", "--step-set", "/nonexistent/x"], 2, ""),
        (["stats", "--stat", "height", "--len", "3"], 2, "UnknownStat"),
        (["identity", "--which", "ballot", "--max", "99"], 2, "CapExceeded"),
    ],
)
def test_exit_codes(capsys, argv, code, name):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error: ")
    assert name in err


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--kind", "nope", "--rows", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rootwalk", "apply", "--op", "theorem1", "--walk", "DDUU"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "UUUU\n"

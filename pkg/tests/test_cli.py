import csv
import io
import itertools
import json

import pytest

from spehred import InductionProblem
from spehred.cli import (
    SWEEP_COLUMNS,
    certify_report,
    classify_report,
    factors_report,
    main,
)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def pargs(a, b, c, d):
    return ["--a", str(a), "--b", str(b), "--c", str(c), "--d", str(d)]


def test_factors_text():
    code, out = run("factors", *pargs(1, 1, 1, 1), "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert "alpha = L(w)" in lines
    assert "beta = L(w+1)" in lines
    assert "gamma = L(w)/L(w+1)" in lines


def test_factors_json():
    code, out = run("factors", *pargs(3, 3, 3, 3), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["poles"]["beta"] == {"-5": 1, "-4": 2, "-3": 3, "-2": 2, "-1": 1}
    assert data == json.loads(json.dumps(factors_report(InductionProblem(3, 3, 3, 3))))
    assert any(f["mirrored"] for f in data["c_psi"]["factors"])


def test_factors_rejects_zero(capsys):
    code, _ = run("factors", *pargs(0, 1, 1, 1))
    assert code == 2
    assert "parameters must be ≥ 1" in capsys.readouterr().err


def test_bad_flag_is_usage_error():
    assert run("factors", "--a", "1")[0] == 2
    assert run("certify", "--bogus")[0] == 2
    assert run("nonsense")[0] == 2


def test_classify_trivial():
    code, out = run("classify", *pargs(1, 1, 1, 1))
    assert code == 0
    rows = out.splitlines()[1:-1]
    assert [r.split()[0] for r in rows] == ["-1", "1"]
    assert all(r.split()[-1] == "GCD_TRIVIAL_I" for r in rows)
    code, out = run("classify", *pargs(1, 1, 1, 1), "--coords", "s")
    assert [r.split()[0] for r in out.splitlines()[1:-1]] == ["-1/2", "1/2"]


@pytest.mark.parametrize(
    "params, expected",
    [((4, 4, 4, 4), ["-2", "-1", "1", "2"]), ((3, 3, 5, 5), ["-1", "1"])],
)
def test_classify_exceptional(params, expected):
    code, out = run("classify", *pargs(*params), "--format", "json")
    assert code == 0
    assert json.loads(out)["exceptional"] == expected
    _, text = run("classify", *pargs(*params))
    assert text.splitlines()[-1] == "exceptional (2s): {" + ", ".join(expected) + "}"


def test_matrix_alpha_3333():
    code, out = run("matrix", *pargs(3, 3, 3, 3), "--which", "alpha")
    assert code == 0
    assert out.splitlines() == [
        "[    0 *-1* *-2* ]",
        "[    1    0 *-1* ]",
        "[    2    1    0 ]",
    ]


def test_matrix_beta_and_latex():
    _, out = run("matrix", *pargs(3, 3, 3, 3), "--which", "beta")
    assert out.count("*") == 6
    _, out = run("matrix", *pargs(1, 1, 1, 1), "--which", "alpha")
    assert out.strip() == "[ 0 ]"
    _, out = run("matrix", *pargs(3, 3, 3, 3), "--which", "beta", "--format", "latex")
    assert r"\begin{array}" in out and r"\mathbf{-1}" in out


def test_certify_exit_codes():
    code, out = run("certify", *pargs(2, 2, 3, 1))
    assert code == 0
    assert json.loads(out)["verdict"] is True
    code, out = run("certify", *pargs(1, 1, 7, 4))
    assert code == 0
    data = json.loads(out)
    assert data["supercuspidal_distinctness"] is True
    assert data["supercuspidal"]["verdict"] is True
    assert run("certify", *pargs(1, 1, 0, 4))[0] == 2


def _read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_sweep_csv(tmp_path):
    path = tmp_path / "s.csv"
    code, _ = run("sweep", "--max", "4", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[0] == ",".join(SWEEP_COLUMNS)
    rows = _read_csv(text)
    assert len(rows) == 256
    keys = [tuple(int(r[k]) for k in "abcd") for r in rows]
    assert keys == sorted(keys)
    assert all(r["coprime_closed"] == r["coprime_brute"] for r in rows)
    assert all(r["certified"] == "true" for r in rows)


def test_sweep_rows_match_single_commands():
    code, out = run("sweep", "--max", "4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    for row in rows:
        p = InductionProblem(row["a"], row["b"], row["c"], row["d"])
        cls = classify_report(p)
        assert row["candidates"] == len(cls["verdicts"])
        assert row["theorem_only"] == len(cls["exceptional"])
        assert row["certified"] == certify_report(p)[0]["verdict"]


def test_sweep_parallel_is_deterministic():
    _, serial = run("sweep", "--max", "3")
    _, parallel = run("sweep", "--max", "3", "--jobs", "2")
    assert serial == parallel


def test_sweep_only_noncoprime():
    _, out = run("sweep", "--max", "4", "--only-noncoprime")
    rows = _read_csv(out)
    expected = [
        (a, b, c, d)
        for a, b, c, d in itertools.product(range(1, 5), repeat=4)
        if abs(c - d) < min(a - 1, b - 1)
    ]
    assert [tuple(int(r[k]) for k in "abcd") for r in rows] == expected


def test_sweep_only_exceptional():
    _, out = run("sweep", "--a-range", "3:4", "--b-range", "3:4", "--c-range", "3:4", "--d-range", "3:4", "--only-exceptional")
    rows = _read_csv(out)
    assert rows and all(int(r["theorem_only"]) > 0 for r in rows)


def test_sweep_usage_errors():
    assert run("sweep", "--a-range", "3:2", "--max", "2")[0] == 2
    assert run("sweep", "--max", "65")[0] == 2
    assert run("sweep")[0] == 2


def test_sweep_io_error(tmp_path):
    target = tmp_path / "missing" / "s.csv"
    assert run("sweep", "--max", "1", "--out", str(target))[0] == 3


def test_eval():
    code, out = run("eval", *pargs(1, 1, 1, 1), "--q", "2", "--s", "0.5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == 2.0
    assert data["relative_discrepancy"] < 1e-10
    code, out = run("eval", *pargs(1, 1, 1, 1), "--q", "3", "--s", "1", "--format", "json")
    assert json.loads(out)["gamma"] == pytest.approx(13 / 12, rel=1e-15)


def test_eval_at_pole(capsys):
    code, _ = run("eval", *pargs(1, 1, 1, 1), "--q", "2", "--s", "0")
    assert code == 1
    assert "alpha" in capsys.readouterr().err


def test_eval_usage():
    assert run("eval", *pargs(1, 1, 1, 1), "--q", "1", "--s", "0.3")[0] == 2
    assert run("eval", *pargs(1, 1, 1, 1), "--q", "x", "--s", "0.3")[0] == 2


@pytest.mark.parametrize("params", [(1, 1, 1, 1), (2, 3, 4, 4), (3, 3, 3, 3), (1, 2, 5, 2)])
def test_json_outputs_are_stable(params):
    for argv in (["factors", "--format", "json"], ["classify", "--format", "json"], ["certify"]):
        _, first = run(*argv, *pargs(*params))
        _, second = run(*argv, *pargs(*params))
        assert first == second
        assert json.dumps(json.loads(first), indent=2) + "\n" == first

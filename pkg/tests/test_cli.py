import json
import subprocess
import sys

import pytest

from artifact.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gw_single_constant(capsys):
    code, out, _ = run(["gw", "--shape", "2,4", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,2"], capsys)
    assert code == 0
    assert json.loads(out) == {"((2,2),0)": "T1^2 - 2*T1*T4 + T4^2"}


def test_product_expansion(capsys):
    code, out, _ = run(["product", "--shape", "2,4", "--lambda", "2,1", "--mu", "2,2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["((2,1),1)"] == "1"
    assert len(data) == 5


def test_routes_agree_on_cli(capsys):
    args = ["gw", "--shape", "2,4", "--lambda", "2,1", "--mu", "1", "--nu", "2,1"]
    _, a, _ = run(args, capsys)
    _, b, _ = run(args + ["--route", "det-cramer"], capsys)
    assert a == b


def test_zfun_text_format(capsys):
    code, out, _ = run(["--format", "text", "zfun", "--shape", "2,4", "--lambda", "1,1", "--mu", "2,1"], capsys)
    assert code == 0 and out.startswith("Z: ")


def test_output_is_deterministic(capsys):
    args = ["table", "--shape", "2,4"]
    _, a, _ = run(args, capsys)
    _, b, _ = run(args, capsys)
    assert a == b


def test_out_file(tmp_path, capsys):
    path = tmp_path / "k.json"
    code, out, _ = run(["kostka", "--shape", "2,4", "--alpha", "1,1", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert json.loads(path.read_text())


def test_bad_shape_exit_2(capsys):
    code, _, err = run(["pieri", "--shape", "5,3", "--lambda", "1"], capsys)
    assert code == 2 and "shape" in err


def test_bad_partition_exit_2(capsys):
    code, _, _ = run(["pieri", "--shape", "2,4", "--lambda", "3,1"], capsys)
    assert code == 2


def test_cap_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("SW_MAX_N", "4")
    code, _, _ = run(["table", "--shape", "2,5"], capsys)
    assert code == 3


def test_bethe_report(capsys):
    code, out, _ = run(["bethe", "--shape", "2,4", "--seed", "1"], capsys)
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize("suite", ["ybe", "ring"])
def test_verify_suites(suite, capsys):
    code, out, _ = run(["verify", "--suite", suite], capsys)
    assert code == 0
    assert all(json.loads(line)["status"] == "pass" for line in out.splitlines())


def test_verify_mutation_is_caught(capsys):
    code, _, _ = run(["verify", "--suite", "ybe", "--mutate"], capsys)
    assert code == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "artifact", "pieri", "--shape", "1,2", "--lambda", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)

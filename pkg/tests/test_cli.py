import json
import subprocess
import sys

import pytest

from jackmaps.algebra import parse_poly
from jackmaps.cli import main, run_command


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


TOP3 = (
    "p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2 + 3*p1*p2*q1*q2"
    " + 3*p1*p2*q2^2 + 3*p2^2*q2^2 + p2*q2^3 + 3*p1^2*q1*g + 3*p1*q1^2*g + 6*p1*p2*q2*g"
    " + 3*p2^2*q2*g + 3*p2*q2^2*g + 2*p1*q1*g^2 + 2*p2*q2*g^2"
)


def test_ch_top_text(capsys):
    code, out, _ = run(capsys, "ch-top", "--n", "3", "--rects", "2", "--format", "text", "--jobs", "1")
    assert code == 0
    assert parse_poly(out.strip()) == -parse_poly(TOP3)
    assert out.strip() == str(-parse_poly(TOP3))


def test_oracle_ch(capsys):
    assert run(capsys, "oracle", "ch", "--mu", "3", "--lambda", "2,1")[:2] == (0, "-3\n")


def test_verify_two_sided_count(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem22", "--max-n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "ok"
    text = json.dumps(data)
    for v in ("1", "6", "78"):
        assert v in text


def test_json_and_csv(capsys):
    code, out, _ = run(capsys, "maps", "enumerate", "--n", "2", "--format", "json", "--jobs", "1")
    assert code == 0 and json.loads(out)["status"] == "ok"
    code, out, _ = run(capsys, "maps", "enumerate", "--n", "2", "--format", "csv", "--jobs", "1")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4


def test_global_format_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "oracle", "ch", "--mu", "2", "--lambda", "2")
    assert code == 0 and json.loads(out)["status"] == "ok"


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "ch-top")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "ch-top", "--n", "0")[0] == 2


def test_domain_errors_exit_2(capsys):
    assert run(capsys, "ch-top", "--n", "9", "--jobs", "1")[0] == 2
    assert run(capsys, "maps", "stats", "--sigma", "1,2", "--tau", "1,2")[0] == 2


def test_map_stats(capsys):
    code, out, _ = run(capsys, "maps", "stats", "--map", '{"n":3,"sigma":[2,3,1],"tau":[2,3,1]}', "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["genus"] == 1


def test_structure_constants(capsys):
    code, out, _ = run(capsys, "structure-constants", "--mu", "3", "--nu", "3")
    assert code == 0 and "6*d^2 + 3" in out


def test_jobs_do_not_change_output(capsys):
    a = run(capsys, "ch-top", "--n", "4", "--rects", "2", "--jobs", "1")[1]
    b = run(capsys, "ch-top", "--n", "4", "--rects", "2", "--jobs", "3")[1]
    assert a == b


def test_run_command_result():
    res, code, fmt = run_command(["stanley", "--n", "2", "--rects", "1"])
    assert code == 0 and fmt == "text" and res.status == "ok"
    assert res.render("text").strip() == "-p1^2*q1 - p1*q1^2 - p1*q1*g"


@pytest.mark.parametrize("argv", [
    ["stanley", "--n", "3", "--format", "json"],
    ["verify", "--suite", "eq11", "--format", "json"],
])
def test_byte_determinism(argv, tmp_path):
    cmd = [sys.executable, "-m", "jackmaps.cli", *argv, "--cache-dir", str(tmp_path)]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first

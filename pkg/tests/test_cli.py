import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagbound import __version__
from flagbound.cli import format_point, format_rational, main, parse_point, parse_rational

GOLDENS = [
    (["polygon", "--group", "gl:3", "--point", "1,0,0", "--at", "2"], '{"value":"2"}\n'),
    (["hodge-check", "--d", "3", "--g", "8", "--chi-top-bar", "-56", "--chi-o-bar", "-7",
      "--symmetric"], '{"verdict":false,"case":"56"}\n'),
    (["n0", "--family", "gl:2", "--point", "1,0", "--n", "3"], '{"n0":5}\n'),
]


def run(argv, stdin=None):
    return subprocess.run([sys.executable, "-m", "flagbound", *argv], input=stdin,
                          capture_output=True, text=True, timeout=60)


@pytest.mark.parametrize("argv, expected", GOLDENS, ids=["polygon", "hodge-check", "n0"])
def test_goldens_byte_exact(argv, expected):
    proc = run(["--quiet", *argv])
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == expected


def test_full_document(capsys):
    assert main(["n0", "--family", "gl:2", "--point", "1,0", "--n", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc) == ["command", "input", "result", "provenance"]
    assert doc["command"] == "n0"
    assert doc["result"] == {"n0": 5}
    assert doc["input"]["point"] == "1,0"
    assert doc["provenance"]["version"] == __version__


def test_output_is_deterministic(capsys):
    argv = ["bruhat", "--group", "gsp:4", "--point", "2,1", "--q", "1"]
    outs = []
    for _ in range(3):
        assert main(argv) == 0
        outs.append(capsys.readouterr().out)
    assert len(set(outs)) == 1


def test_pretty(capsys):
    assert main(["--pretty", "--quiet", "stats", "--group", "gl:3", "--point", "1,0,0"]) == 0
    out = capsys.readouterr().out
    assert "\n  " in out
    assert json.loads(out)["dim_flag"] == 2


@pytest.mark.parametrize("argv, field", [
    (["polygon", "--group", "gl:3", "--point", "1,0"], "--point"),
    (["polygon", "--group", "gl:3", "--point", "1,x,0"], "--point"),
    (["polygon", "--group", "gsp:3", "--point", "1"], "--group"),
    (["fiber-codim", "--group", "gl:2", "--point=0,1"], None),
    (["hodge-check", "--d", "3", "--g", "8"], None),
    (["lv-pipeline", "--d", "2", "--h", "1,4,2"], None),
])
def test_malformed_input_exits_2(argv, field, capsys):
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert err.strip()
    if field:
        assert json.loads(err)["field"] == field


def test_problem_file(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"command": "n0", "family": "gl:2", "point": [1, 0], "n": 3}))
    assert main(["--quiet", "--problem", str(path)]) == 0
    assert capsys.readouterr().out == '{"n0":5}\n'

    path.write_text(json.dumps({"command": "n0", "family": "gl:2", "point": "1,0", "colour": 1}))
    assert main(["--problem", str(path)]) == 2
    assert json.loads(capsys.readouterr().err)["field"] == "colour"
    assert main(["--quiet", "--no-strict", "--problem", str(path)]) == 0
    assert json.loads(capsys.readouterr().out) == {"n0": 1}

    path.write_text('{"command": "n0",\n "n": }')
    assert main(["--problem", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_problem_from_stdin():
    doc = {"command": "hodge-check", "d": 3, "g": 8, "chi_top_bar": -56, "chi_o_bar": -7,
           "symmetric": True}
    proc = run(["--quiet", "--problem", "-"], stdin=json.dumps(doc))
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == GOLDENS[1][1]


def test_version():
    proc = run(["--version"])
    assert proc.returncode == 0
    assert proc.stdout.strip() == __version__


def test_no_command_exits_2(capsys):
    assert main([]) == 2


@given(st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**9))
def test_rational_round_trip(q):
    text = format_rational(q)
    assert parse_rational(text) == q
    assert format_rational(parse_rational(text)) == text


@given(st.lists(st.fractions(min_value=-100, max_value=100, max_denominator=50), min_size=1,
                max_size=8))
def test_point_round_trip(xs):
    x = tuple(xs)
    assert parse_point(format_point(x)) == x


def test_rational_canonical_form():
    assert format_rational(Fraction(4, -6)) == "-2/3"
    assert format_rational(Fraction(6, 3)) == "2"
    assert parse_rational("+3/6") == Fraction(1, 2)
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ValueError):
        parse_rational("1/0")

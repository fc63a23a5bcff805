import os
import subprocess
import sys

import pytest

from rmc.automata import language_equal
from rmc.builders import initial_token_ring
from rmc.cli import main
from rmc.textio import parse_model


def rmc(*argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    return info.value.code


@pytest.fixture
def ring(tmp_path):
    assert rmc("examples", "token-ring", "--out", str(tmp_path)) == 0
    return tmp_path / "token_ring.txt", tmp_path / "token_ring_initial.txt"


def test_examples_write_files(tmp_path, capsys):
    assert rmc("examples", "affine:-3", "--msb-first", "--out", str(tmp_path)) == 0
    f = tmp_path / "affine_-3_msb.txt"
    assert capsys.readouterr().out.strip() == str(f)
    assert parse_model(f).base.symbols == ("0", "1")


def test_reach_exact(ring, tmp_path, capsys):
    t, a = ring
    out = tmp_path / "result.txt"
    assert rmc("reach", "--transducer", str(t), "--initial", str(a), "--out", str(out)) == 0
    text = capsys.readouterr().out
    assert text.startswith("ExactClosure states=2\n")
    assert "check safety-reach\nverdict CriterionHolds" in text
    assert "check preciseness-reach\nverdict CriterionHolds" in text
    res = parse_model(out)
    assert res.n == 2 and out.read_text().startswith("# ExactClosure after 3 samples")


def test_closure_exact_with_dot(tmp_path, capsys):
    rmc("examples", "affine:1", "--msb-first", "--out", str(tmp_path))
    dots = tmp_path / "dots"
    code = rmc("closure", "--transducer", str(tmp_path / "affine_1_msb.txt"), "--sampling", "exp:2",
               "--emit-dot", str(dots))
    assert code == 0
    names = sorted(p.name for p in dots.iterdir())
    assert names == ["added_edges.txt", "decomposition.dot", "decomposition.txt", "result.dot",
                     "sample_16.dot", "sample_2.dot", "sample_4.dot", "sample_8.dot"]
    assert (dots / "decomposition.txt").read_text().startswith("grow states=9 ")


def test_safe_only_exits_2(ring, capsys):
    t, a = ring
    assert rmc("reach", "--transducer", str(t), "--initial", str(a), "--sampling", "explicit:1,2,3,4,5,6") == 2
    assert capsys.readouterr().out.startswith("SafeOverApproximation")


def test_gave_up_exits_3(ring, capsys):
    t, a = ring
    assert rmc("reach", "--transducer", str(t), "--initial", str(a), "--max-samples", "2") == 3
    assert capsys.readouterr().out.startswith("GaveUp (sample cap 2 reached)")


@pytest.mark.parametrize("args", [
    ["closure"],
    ["closure", "--transducer", "missing.txt"],
    ["closure", "--transducer", "{ring}", "--sampling", "exp:1"],
    ["closure", "--transducer", "{ring}", "--max-samples", "0"],
    ["closure", "--transducer", "{initial}"],
    ["reach", "--transducer", "{ring}", "--initial", "{ring}"],
    ["examples", "mutex"],
    ["examples", "affine:x"],
    ["frobnicate"],
])
def test_usage_errors_exit_1(args, ring, capsys):
    t, a = ring
    argv = [x.format(ring=t, initial=a) for x in args]
    assert rmc(*argv) == 1
    assert capsys.readouterr().err


def test_parse_error_names_the_line(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("kind nfa\narity 2\nalphabet a/a\nstates one\n")
    assert rmc("closure", "--transducer", str(f)) == 1
    assert "line 4" in capsys.readouterr().err


def test_help_exits_0(capsys):
    assert rmc("--help") == 0
    assert "closure" in capsys.readouterr().out


def run_cli(*argv, **env):
    return subprocess.run([sys.executable, "-m", "rmc.cli", *argv], capture_output=True, text=True,
                          env={**os.environ, **env})


def test_log_levels(ring):
    t, a = ring
    quiet = run_cli("reach", "--transducer", str(t), "--initial", str(a))
    assert quiet.returncode == 0 and quiet.stderr == ""
    chatty = run_cli("reach", "--transducer", str(t), "--initial", str(a), RMC_LOG="info")
    assert chatty.returncode == 0
    assert "rmc INFO sample 0 (exponent 1): 3 states" in chatty.stderr
    debug = run_cli("reach", "--transducer", str(t), "--initial", str(a), RMC_LOG="DEBUG")
    assert "rmc DEBUG" in debug.stderr
    bad = run_cli("reach", "--transducer", str(t), "--initial", str(a), RMC_LOG="loud")
    assert bad.returncode == 1 and "RMC_LOG" in bad.stderr


def test_written_initial_matches_builder(ring):
    _, a = ring
    assert language_equal(parse_model(a), initial_token_ring())

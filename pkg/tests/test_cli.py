"""Front-end behaviour: pinned outputs, exit codes, determinism."""

import json

import pytest

from grothpoly import cli
from grothpoly.grothendieck import grothendieck_double
from grothpoly.polynomials import from_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_double_pin(capsys):
    code, out, _ = run(capsys, "compute", "double", "--perm", "2,1", "--n", "1")
    assert code == 0
    assert out == "x1 + y1 + x1*y1\n"


def test_compute_single_identity_pin(capsys):
    code, out, _ = run(capsys, "compute", "single", "--perm", "1,2", "--n", "1")
    assert code == 0
    assert out == "1\n"


def test_compute_qschur_json_pin(capsys):
    code, out, _ = run(
        capsys, "compute", "qschur", "--perm", "3,1,2,5,4", "--degree", "4", "--json"
    )
    assert code == 0
    assert out == '{"[4]":6,"[3,1]":4}\n'


def test_compute_qschur_text(capsys):
    code, out, _ = run(
        capsys, "compute", "qschur", "--perm", "3,1,2,5,4", "--degree", "3"
    )
    assert code == 0
    assert out == "2*Q[3] + Q[2,1]\n"
    code, out, _ = run(capsys, "compute", "qschur", "--perm", "1,2", "--degree", "2")
    assert code == 0
    assert out == "0\n"


def test_compute_stable_models(capsys):
    code, out, _ = run(
        capsys, "compute", "stable-single", "--perm", "2,1", "--m", "2", "--degree", "2"
    )
    assert code == 0
    assert out == "x1 + x2 + x1*x2\n"
    code, out, _ = run(
        capsys, "compute", "halfweak", "--perm", "2,1", "--m", "1", "--degree", "2"
    )
    assert code == 0
    assert out == "x1 + y1 + x1^2 + x1*y1\n"


def test_compute_json_round_trips(capsys):
    code, out, _ = run(capsys, "compute", "double", "--perm", "3,1,2", "--json")
    assert code == 0
    assert from_json(json.loads(out)) == grothendieck_double((3, 1, 2))


def test_window_flag_widens_and_restricts(capsys):
    _, narrow, _ = run(capsys, "compute", "single", "--perm", "2,1,3", "--n", "1")
    assert narrow == "x1\n"
    code, wide, _ = run(
        capsys, "compute", "single", "--perm", "2,1", "--n", "3", "--json"
    )
    assert code == 0
    assert json.loads(wide)["m"] == 3


def test_malformed_permutation_exits_two(capsys):
    for perm in ("2,0", "1,1", "", "a,b"):
        code, out, err = run(capsys, "compute", "single", "--perm", perm)
        assert code == 2
        assert out == ""
        assert "not a permutation" in err


def test_unknown_target_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["compute", "cube", "--perm", "1"])
    assert info.value.code == 2


def test_verify_single_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "stability")
    assert code == 0
    lines = out.splitlines()
    assert lines == [
        "ok stability.models_are_stable_in_wide_windows",
        "ok stability.weak_model_detects_a_narrow_window",
    ]


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "tabtopi", "--json", "--n", "2")
    assert code == 0
    report = json.loads(out)
    assert report == [
        {
            "suite": "tabtopi",
            "check": "two_letter_columns_match_the_operator_image",
            "ok": True,
            "detail": "",
        }
    ]


def test_verify_failure_exits_three(capsys, monkeypatch):
    monkeypatch.setitem(
        cli.SUITES, "tabtopi", lambda b: [("rigged", False, "w=(2, 1)")]
    )
    code, out, _ = run(capsys, "verify", "tabtopi")
    assert code == 3
    assert out == "FAIL tabtopi.rigged: w=(2, 1)\n"


def test_verify_suite_flag_and_positional_must_agree(capsys):
    code, _, err = run(capsys, "verify", "qp", "--suite", "cauchy")
    assert code == 2
    assert "twice" in err
    code, out, _ = run(capsys, "verify", "qp", "--suite", "qp")
    assert code == 0
    assert out.startswith("ok qp.")


def test_verify_order_is_fixed_and_threads_change_nothing(capsys, monkeypatch):
    quick = {
        name: (lambda nm: (lambda b: [(f"{nm}_probe", True, "")]))(name)
        for name in cli.SUITE_ORDER
    }
    for name, fn in quick.items():
        monkeypatch.setitem(cli.SUITES, name, fn)
    code, sequential, _ = run(capsys, "verify")
    assert code == 0
    monkeypatch.setenv("GROTH_THREADS", "4")
    code, threaded, _ = run(capsys, "verify")
    assert code == 0
    assert threaded == sequential
    assert [line.split()[1] for line in sequential.splitlines()] == [
        f"{name}.{name}_probe" for name in cli.SUITE_ORDER
    ]


def test_thread_cap_tolerates_garbage(monkeypatch):
    monkeypatch.setenv("GROTH_THREADS", "many")
    assert cli._thread_cap() == 1
    monkeypatch.setenv("GROTH_THREADS", "0")
    assert cli._thread_cap() == 1
    monkeypatch.setenv("GROTH_THREADS", "6")
    assert cli._thread_cap() == 6


def test_internal_errors_exit_one(capsys, monkeypatch):
    def boom(b):
        raise RuntimeError("rigged")

    monkeypatch.setitem(cli.SUITES, "tabtopi", boom)
    code, _, err = run(capsys, "verify", "tabtopi")
    assert code == 1
    assert "internal error" in err


def test_every_suite_passes_at_default_bounds(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 30
    assert all(line.startswith("ok ") for line in lines)
    suites = {line.split()[1].split(".")[0] for line in lines}
    assert suites == set(cli.SUITE_ORDER)

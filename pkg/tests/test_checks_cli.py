"""Verification registry semantics and the command-line surface."""

import json

import numpy as np
import pytest

from ga41.checks import (
    EXPECTED_CHECK_NAMES,
    check_definitions,
    check_names,
    report_dict,
    report_json,
    run_checks,
)
from ga41.cli import main


def test_registry_complete_and_ordered():
    assert check_names() == EXPECTED_CHECK_NAMES
    assert len(EXPECTED_CHECK_NAMES) == 31
    assert len(set(EXPECTED_CHECK_NAMES)) == 31
    for d in check_definitions():
        assert d.anchor
        assert d.tolerance >= 0.0


def test_full_run_passes():
    results = run_checks(seed=0)
    assert len(results) == 31
    assert [r.name for r in results] == list(EXPECTED_CHECK_NAMES)
    for r in results:
        assert r.status == "pass", (r.name, r.residual, r.tolerance)
        assert r.residual <= r.tolerance


def test_rng_keyed_per_check():
    # a check sees the same stream whether run alone or with the others
    alone = run_checks(names=["dirac_spectrum"], seed=7)[0]
    together = next(r for r in run_checks(seed=7) if r.name == "dirac_spectrum")
    assert alone.residual == together.residual


def test_seed_changes_randomized_residuals():
    a = next(r for r in run_checks(names=["phi_homomorphism"], seed=0))
    b = next(r for r in run_checks(names=["phi_homomorphism"], seed=1))
    assert a.status == b.status == "pass"
    assert a.residual != b.residual


def test_run_checks_validation():
    with pytest.raises(ValueError):
        run_checks(names=["no_such_check"])
    with pytest.raises(ValueError):
        run_checks(tolerances={"no_such_check": 1.0})
    with pytest.raises(ValueError):
        run_checks(step_h=0.0)


def test_tolerance_override_forces_failure():
    results = run_checks(
        names=["monogenic_residual"], tolerances={"monogenic_residual": 1e-20}
    )
    assert results[0].status == "fail"
    assert results[0].residual > 1e-20


def test_step_h_feeds_derivative_checks():
    # the tolerance is anchored at the default step; a much larger step
    # must push the truncation error past it
    coarse = run_checks(names=["monogenic_residual"], seed=3, step_h=2e-3)[0]
    fine = run_checks(names=["monogenic_residual"], seed=3, step_h=1e-3)[0]
    assert coarse.status == fine.status == "pass"
    assert coarse.residual != fine.residual
    huge = run_checks(names=["monogenic_residual"], seed=3, step_h=1e-2)[0]
    assert huge.status == "fail"


def test_report_shape_and_summary():
    results = run_checks(names=["blade_squares", "anticommutation"], seed=0)
    d = report_dict(results, seed=0)
    assert d["version"] == 1
    assert d["seed"] == 0
    assert d["summary"] == {"pass": 2, "fail": 0, "skip": 29}
    assert all("elapsed_ms" in row for row in d["results"])
    trimmed = report_dict(results, seed=0, omit_timings=True)
    assert all("elapsed_ms" not in row for row in trimmed["results"])


def test_report_json_deterministic_for_fixed_seed():
    subset = ["blade_squares", "vector_decomposition", "null_annihilation"]
    first = report_json(run_checks(names=subset, seed=42), seed=42, omit_timings=True)
    second = report_json(run_checks(names=subset, seed=42), seed=42, omit_timings=True)
    assert first == second
    parsed = json.loads(first)
    assert [row["name"] for row in parsed["results"]] == subset


def test_cli_verify_exit_codes(capsys):
    assert main(["verify", "--check", "blade_squares"]) == 0
    capsys.readouterr()
    assert main(["verify", "--check", "no_such_check"]) == 2
    assert "no_such_check" in capsys.readouterr().err
    code = main(
        ["verify", "--check", "monogenic_residual",
         "--tolerance", "monogenic_residual=1e-20"]
    )
    assert code == 1
    capsys.readouterr()


def test_cli_verify_json_output(capsys):
    assert main(["verify", "--seed", "5", "--output", "json",
                 "--check", "blade_squares", "--check", "triblade_squares"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["seed"] == 5
    assert [row["name"] for row in payload["results"]] == [
        "blade_squares", "triblade_squares"
    ]
    assert payload["summary"]["fail"] == 0


def test_cli_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    for name in EXPECTED_CHECK_NAMES:
        assert name in out


def test_cli_bad_tolerance_usage(capsys):
    assert main(["verify", "--tolerance", "not-a-pair"]) == 2
    capsys.readouterr()
    assert main(["verify", "--tolerance", "blade_squares=abc"]) == 2
    capsys.readouterr()


def test_cli_table(capsys):
    assert main(["table"]) == 0
    out = capsys.readouterr().out
    lines = [line for line in out.splitlines() if line.strip()]
    # the signed product table covers all 32 blades plus the header
    assert any(line.lstrip().startswith("e01234") for line in lines)
    assert "-1" in out


def test_cli_planewave_derives_energy(capsys):
    assert main(["planewave", "3", "0", "0", "4"]) == 0
    out = " ".join(capsys.readouterr().out.split())
    assert "energy: 5" in out
    assert "5 + 3*e01 + 4*e04" in out
    assert "5*e0 + 3*e1 + 4*e4" in out


def test_cli_planewave_five_numbers_and_grid(capsys):
    assert main(["planewave", "5", "3", "0", "0", "4", "--grid", "2"]) == 0
    out = capsys.readouterr().out
    assert "|" in out
    assert main(["planewave", "3", "0", "0", "4", "--negative-energy"]) == 0
    assert "energy: -5" in " ".join(capsys.readouterr().out.split())


def test_cli_planewave_usage_errors(capsys):
    assert main(["planewave", "1", "2"]) == 2
    capsys.readouterr()
    # non-null quadruple: E^2 != p^2 + m^2
    assert main(["planewave", "5", "3", "0", "0", "3"]) == 2
    capsys.readouterr()


def test_cli_eigen(capsys):
    assert main(["eigen", "0", "0", "2", "1.5"]) == 0
    out = capsys.readouterr().out
    assert "2.5" in out
    start = out.index("{")
    payload = json.loads(out[start:])
    assert payload["spectrum"] == [2.5, 2.5, -2.5, -2.5]
    for key, value in payload.items():
        if key.endswith("residual"):
            assert value <= 1e-10, key


def test_cli_projectors(capsys):
    assert main(["projectors"]) == 0
    out = capsys.readouterr().out
    assert "0.25" in out
    start = out.index("{")
    payload = json.loads(out[start:])
    assert payload["ok"] is True


def test_cli_frame_em(capsys):
    code = main(
        ["frame", "--em", "--potential", "0.7", "0", "0", "0",
         "--charge", "-1", "--mass", "1"]
    )
    assert code == 0
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert payload["reciprocal"][4] == "0.7*e0 + e4"
    assert payload["inverse_metric"][4][4] == pytest.approx(0.51)


def test_cli_frame_matrix_and_default(capsys):
    assert main(["frame"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["reciprocal"][0] == "-e0"
    numbers = " ".join(str(v) for v in np.eye(5).flatten())
    assert main(["frame", "--matrix", numbers]) == 0
    capsys.readouterr()
    assert main(["frame", "--matrix", "1 2 3"]) == 2
    capsys.readouterr()


def test_cli_requires_subcommand(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["bogus"]) == 2
    capsys.readouterr()
